#include "fuzzitop/carrier.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <unordered_set>

namespace fuzzitop {

int popcount(Subset s) { return std::popcount(s.bits); }

namespace {

// Hard representation limit: membership words are 32-bit and enumeration
// costs explode well before that.
constexpr int kHardLimit = 20;

int read_enumeration_cap() {
  if (const char* env = std::getenv("FUZZITOP_MAX_POINTS")) {
    const int v = std::atoi(env);
    if (v >= 1) return std::min(v, kHardLimit);
  }
  return 12;
}

}  // namespace

int enumeration_cap() {
  static const int cap = read_enumeration_cap();
  return cap;
}

int family_quantifier_cap() { return std::min(5, enumeration_cap()); }

void require_enumeration_cap(int n, std::string_view op) {
  if (n > enumeration_cap())
    throw CapExceeded(std::string(op) + ": carrier has " + std::to_string(n) +
                      " points, enumeration cap is " +
                      std::to_string(enumeration_cap()) +
                      " (cost class 2^n..4^n; override with FUZZITOP_MAX_POINTS)");
}

void require_family_cap(int n, std::string_view op) {
  if (n > family_quantifier_cap())
    throw CapExceeded(std::string(op) + ": carrier has " + std::to_string(n) +
                      " points, family-quantifier cap is " +
                      std::to_string(family_quantifier_cap()) +
                      " (cost class g^(2^n))");
}

Carrier::Carrier(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (static_cast<int>(labels_.size()) > kHardLimit)
    throw CapExceeded("carrier exceeds the representation limit of " +
                      std::to_string(kHardLimit) + " points");
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw StructuralError("empty point label");
    if (!seen.insert(l).second)
      throw StructuralError("duplicate point label '" + l + "'");
  }
}

std::optional<int> Carrier::find(std::string_view label) const {
  for (size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  return std::nullopt;
}

int Carrier::require(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw StructuralError("unknown point '" + std::string(label) + "'");
}

std::vector<Subset> Carrier::subsets() const {
  require_enumeration_cap(size(), "subsets");
  std::vector<Subset> out;
  out.reserve(subset_count());
  for (std::uint32_t m = 0; m < subset_count(); ++m) out.push_back({m});
  return out;
}

std::vector<std::pair<Subset, Subset>> Carrier::disjoint_pairs() const {
  require_enumeration_cap(size(), "disjoint_pairs");
  std::vector<std::pair<Subset, Subset>> out;
  for (std::uint32_t a = 0; a < subset_count(); ++a) {
    const std::uint32_t rest = full().bits & ~a;
    // enumerate submasks of rest, ascending
    std::uint32_t b = 0;
    while (true) {
      out.push_back({Subset{a}, Subset{b}});
      if (b == rest) break;
      b = (b - rest) & rest;
    }
  }
  return out;
}

Subset Carrier::from_labels(const std::vector<std::string>& labels) const {
  Subset s;
  for (const auto& l : labels) s.bits |= 1u << require(l);
  return s;
}

std::vector<std::string> Carrier::to_labels(Subset s) const {
  std::vector<std::string> out;
  for (int i = 0; i < size(); ++i)
    if (s.contains(i)) out.push_back(labels_[static_cast<size_t>(i)]);
  return out;
}

std::string Carrier::set_str(Subset s) const {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < size(); ++i) {
    if (!s.contains(i)) continue;
    if (!first) out += ",";
    out += labels_[static_cast<size_t>(i)];
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace fuzzitop
