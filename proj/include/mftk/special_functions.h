#ifndef MFTK_SPECIAL_FUNCTIONS_H_
#define MFTK_SPECIAL_FUNCTIONS_H_

namespace mftk {

// Standard normal CDF, computed as erfc(-x/sqrt 2)/2 so the lower tail keeps
// full relative precision.
double NormalCdf(double x);

// Regularized upper incomplete gamma Q(a, x) for a > 0, x >= 0. Series for
// x < a + 1, Lentz continued fraction otherwise; relative accuracy ~1e-14.
double RegularizedGammaQ(double a, double x);

// P(X > x) for X ~ chi-square with `dof` degrees of freedom.
double ChiSquareSurvival(double x, double dof);

}  // namespace mftk

#endif  // MFTK_SPECIAL_FUNCTIONS_H_
