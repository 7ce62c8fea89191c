#include "mftk/foundation.h"

#include <bit>

namespace mftk {

std::string_view FoundationName(Foundation f) {
  switch (f) {
    case Foundation::kAuthority: return "authority";
    case Foundation::kCare: return "care";
    case Foundation::kFairness: return "fairness";
    case Foundation::kLoyalty: return "loyalty";
    case Foundation::kSanctity: return "sanctity";
  }
  return "";
}

std::optional<Foundation> ParseFoundation(std::string_view name) {
  for (Foundation f : kAllFoundations) {
    if (FoundationName(f) == name) return f;
  }
  return std::nullopt;
}

std::size_t FoundationSet::Size() const {
  return static_cast<std::size_t>(std::popcount(bits_));
}

bool FoundationLabels::HasMissing() const {
  for (const auto& v : values_) {
    if (!v.has_value()) return true;
  }
  return false;
}

FoundationSet FoundationLabels::Positives() const {
  FoundationSet out;
  for (Foundation f : kAllFoundations) {
    if ((*this)[f].value_or(false)) out.Insert(f);
  }
  return out;
}

FoundationLabels FoundationLabels::FromSet(FoundationSet positives) {
  FoundationLabels out;
  for (Foundation f : kAllFoundations) out[f] = positives.Contains(f);
  return out;
}

}  // namespace mftk
