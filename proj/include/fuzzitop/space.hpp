#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fuzzitop/family.hpp"
#include "fuzzitop/point_map.hpp"

namespace fuzzitop {

// A fuzzifying topological space: each crisp subset carries a degree of
// openness. Validity means tau(empty) = tau(X) = 1, pairwise-intersection
// monotonicity, and every level cut closed under unions (equivalent, on a
// finite carrier, to the arbitrary-union axiom).
class FuzzySpace {
 public:
  explicit FuzzySpace(FuzzyFamily tau) : tau_(std::move(tau)) {}

  const Carrier& carrier() const { return tau_.carrier(); }
  const FuzzyFamily& tau() const { return tau_; }
  FuzzyFamily& tau() { return tau_; }

  friend bool operator==(const FuzzySpace&, const FuzzySpace&) = default;

 private:
  FuzzyFamily tau_;
};

struct ValidationIssue {
  std::string axiom;   // "tau(empty)=1", "tau(X)=1", "intersection", "union-cut"
  std::string detail;  // the witnessing instance
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool level_cuts_are_topologies = true;
  bool valid() const { return issues.empty(); }
  std::string summary() const;
};

ValidationReport validate(const FuzzySpace& s);

// N_x(A): sup of tau(B) over B with x in B inside A; 0 when x is outside A.
Degree nbhd(const FuzzySpace& s, int x, Subset a);
Degree nbhd(const FuzzySpace& s, std::string_view x, Subset a);

// Cl(A)(x) = 1 - N_x(X - A).
FuzzyPointSet closure(const FuzzySpace& s, Subset a);

// Int(mu)(x) = sup over B with x in B of min(tau(B), inf over B of mu).
FuzzyPointSet interior_fuzzy(const FuzzySpace& s, const FuzzyPointSet& mu);

// Subspace (A, tau/A) by the trace construction; A must be nonempty.
FuzzySpace subspace(const FuzzySpace& s, Subset a);
Carrier subcarrier(const Carrier& c, Subset a);

// The 0/1-valued space of a crisp topology; opens must contain empty and X
// and be closed under intersections and unions.
FuzzySpace crisp_embed(const Carrier& c, const std::vector<Subset>& opens);

// Seeded generator. Builds an ascending chain of crisp topologies with
// strictly descending grid-valued levels v1 = 1 > v2 > ...; tau(A) is the
// largest level whose stage contains A. Every output is valid (each level
// cut is one of the chain's crisp topologies) and every valid space on a
// finite carrier arises this way. Deterministic in the seed.
FuzzySpace random_space(int points, int grid, std::uint64_t seed);

// Product pre-open structure of two or more spaces: the pre-base of
// cylinder intersections (each graded by the min of its factors' pre-open
// degrees) and the family it generates under unions.
struct ProductStructure {
  Carrier carrier;           // labels are factor labels joined by "|"
  FuzzyFamily prebase;       // beta_P over the product carrier
  FuzzyFamily preopen;       // beta_P^(u) — the product of the (tau_P)_s
  std::vector<PointMap> projections;
};

ProductStructure product(const std::vector<FuzzySpace>& factors);

}  // namespace fuzzitop
