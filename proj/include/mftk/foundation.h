#ifndef MFTK_FOUNDATION_H_
#define MFTK_FOUNDATION_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace mftk {

// The five moral foundations, in canonical (alphabetical) order.
enum class Foundation : std::uint8_t {
  kAuthority = 0,
  kCare = 1,
  kFairness = 2,
  kLoyalty = 3,
  kSanctity = 4,
};

inline constexpr std::size_t kNumFoundations = 5;

inline constexpr std::array<Foundation, kNumFoundations> kAllFoundations = {
    Foundation::kAuthority, Foundation::kCare, Foundation::kFairness,
    Foundation::kLoyalty, Foundation::kSanctity};

constexpr std::size_t Index(Foundation f) { return static_cast<std::size_t>(f); }

// Lowercase canonical name ("authority", "care", ...).
std::string_view FoundationName(Foundation f);

// Accepts only the canonical lowercase names.
std::optional<Foundation> ParseFoundation(std::string_view name);

// A small bitset over foundations.
class FoundationSet {
 public:
  constexpr FoundationSet() = default;

  constexpr void Insert(Foundation f) { bits_ |= Bit(f); }
  constexpr bool Contains(Foundation f) const { return (bits_ & Bit(f)) != 0; }
  constexpr bool Empty() const { return bits_ == 0; }
  constexpr std::uint8_t bits() const { return bits_; }
  std::size_t Size() const;

  constexpr FoundationSet& operator|=(FoundationSet other) {
    bits_ |= other.bits_;
    return *this;
  }
  friend constexpr FoundationSet operator|(FoundationSet a, FoundationSet b) {
    a |= b;
    return a;
  }
  friend constexpr bool operator==(FoundationSet, FoundationSet) = default;

 private:
  static constexpr std::uint8_t Bit(Foundation f) {
    return static_cast<std::uint8_t>(1u << Index(f));
  }
  std::uint8_t bits_ = 0;
};

// One score per foundation.
class FoundationScores {
 public:
  constexpr FoundationScores() = default;
  explicit constexpr FoundationScores(std::array<double, kNumFoundations> v)
      : values_(v) {}

  constexpr double& operator[](Foundation f) { return values_[Index(f)]; }
  constexpr double operator[](Foundation f) const { return values_[Index(f)]; }
  constexpr const std::array<double, kNumFoundations>& values() const {
    return values_;
  }
  friend constexpr bool operator==(const FoundationScores&,
                                   const FoundationScores&) = default;

 private:
  std::array<double, kNumFoundations> values_{};
};

// Binary label that may be missing (a foundation nobody was asked to annotate).
using BinaryLabel = std::optional<bool>;

class FoundationLabels {
 public:
  constexpr FoundationLabels() = default;

  constexpr BinaryLabel& operator[](Foundation f) { return values_[Index(f)]; }
  constexpr const BinaryLabel& operator[](Foundation f) const {
    return values_[Index(f)];
  }
  bool HasMissing() const;
  // Foundations labeled 1; missing counts as absent.
  FoundationSet Positives() const;
  friend bool operator==(const FoundationLabels&,
                         const FoundationLabels&) = default;

  static FoundationLabels FromSet(FoundationSet positives);

 private:
  std::array<BinaryLabel, kNumFoundations> values_{};
};

}  // namespace mftk

#endif  // MFTK_FOUNDATION_H_
