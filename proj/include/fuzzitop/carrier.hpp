#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fuzzitop/errors.hpp"

namespace fuzzitop {

// A subset of a carrier, one membership bit per point (point i at bit i).
// Equal sets compare equal; the numeric order of the word is the canonical
// enumeration order, so the empty set comes first and the full set last.
struct Subset {
  std::uint32_t bits = 0;

  constexpr bool contains(int i) const { return (bits >> i) & 1u; }
  constexpr bool empty() const { return bits == 0; }

  friend constexpr bool operator==(Subset, Subset) = default;
  friend constexpr auto operator<=>(Subset, Subset) = default;
};

constexpr Subset intersect(Subset a, Subset b) { return {a.bits & b.bits}; }
constexpr Subset unite(Subset a, Subset b) { return {a.bits | b.bits}; }
constexpr Subset difference(Subset a, Subset b) { return {a.bits & ~b.bits}; }
constexpr bool is_subset(Subset a, Subset b) { return (a.bits & ~b.bits) == 0; }
constexpr bool are_disjoint(Subset a, Subset b) { return (a.bits & b.bits) == 0; }
int popcount(Subset s);

// Cost caps. Subset streams and powerset scans refuse carriers above the
// enumeration cap (default 12, FUZZITOP_MAX_POINTS overrides); operations
// quantifying over fuzzy families grow like g^(2^n) and cap at 5 points.
int enumeration_cap();
int family_quantifier_cap();
void require_enumeration_cap(int n, std::string_view op);
void require_family_cap(int n, std::string_view op);

class Carrier {
 public:
  Carrier() = default;  // empty carrier; only the empty subset exists
  explicit Carrier(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_[static_cast<size_t>(i)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> find(std::string_view label) const;
  int require(std::string_view label) const;

  Subset full() const { return {static_cast<std::uint32_t>((1u << labels_.size()) - 1u)}; }
  Subset complement(Subset a) const { return {full().bits & ~a.bits}; }
  std::uint32_t subset_count() const { return 1u << labels_.size(); }

  // All 2^n subsets in ascending word order; cap-checked (cost 2^n).
  std::vector<Subset> subsets() const;
  // All ordered pairs (A,B) with A and B disjoint; cap-checked (cost 3^n).
  std::vector<std::pair<Subset, Subset>> disjoint_pairs() const;

  Subset from_labels(const std::vector<std::string>& labels) const;
  std::vector<std::string> to_labels(Subset s) const;
  std::string set_str(Subset s) const;  // "{a,c}" in point order

  friend bool operator==(const Carrier&, const Carrier&) = default;

 private:
  std::vector<std::string> labels_;
};

}  // namespace fuzzitop
