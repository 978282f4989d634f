#pragma once

#include <optional>
#include <vector>

#include "fuzzitop/preopen.hpp"

namespace fuzzitop {

// Discretization of the family quantifier "for all R in Im(P(X))". The
// formulas below are lattice polynomials with Lukasiewicz affine pieces in
// the family values, so extrema sit at breakpoints generated by the
// pre-open degrees and their complements; a uniform refinement i/r can be
// unioned in to probe grid sensitivity.
class FamilyGrid {
 public:
  static FamilyGrid for_space(const Preopen& pre, int refine = 1);
  static FamilyGrid for_family(const FuzzyFamily& fam, int refine = 1);
  FamilyGrid with_values(const FuzzyFamily& fam) const;

  const std::vector<Degree>& values() const { return values_; }

 private:
  explicit FamilyGrid(std::vector<Degree> values);
  std::vector<Degree> values_;  // ascending, contains 0 and 1
};

// Analytic: closed-form value (on a finite carrier the optimal subfamily
// of a cover is the cover itself, which collapses every compactness degree
// to exactly 1). Generic: literal inf over grid-valued families; must
// reproduce the analytic value and exists to keep the evaluators honest.
enum class EvalPath { Analytic, Generic };

// Order used for "p <= R" inside the finite-intersection property: crisp
// pointwise comparison (the default), or the graded inclusion degree.
enum class SubfamilyOrder { Crisp, Graded };

struct CoverOptions {
  EvalPath path = EvalPath::Analytic;
  int refine = 1;
  SubfamilyOrder order = SubfamilyOrder::Crisp;
};

// K(R,A) = inf over x in A of sup over B containing x of R(B).
Degree k_degree(const FuzzyFamily& r, Subset a);

// [R ⊆ T] = inf over B of (R(B) -> T(B)).
Degree family_subset_degree(const FuzzyFamily& r, const FuzzyFamily& t);

struct CoverDegrees {
  Degree k;                      // plain covering degree
  Degree k_open;                 // K ⊗ [R ⊆ tau]
  Degree k_pre;                  // K ⊗ [R ⊆ tau_P]
  std::optional<Degree> k_sub;   // K ⊗ [R ⊆ phi], when a subbase is given
};
CoverDegrees cover_degrees(const FuzzyFamily& r, Subset a, const Preopen& pre,
                           const FuzzyFamily* subbase = nullptr);

// 1 - inf of the deltas whose cut is finite; every cut of a family on a
// finite carrier is finite, so the scan bottoms out at delta = 0.
Degree ff_degree(const FuzzyFamily& p);

// Fuzzy finite intersection property:
//   inf over grid-valued p <= R of ((p<=R) ∧ FF(p) -> sup_x inf over B
//   not containing x of 1 - p(B)).
Degree fi_degree(const FuzzyFamily& r, const FamilyGrid& grid,
                 SubfamilyOrder order = SubfamilyOrder::Crisp);

// Compactness family. gamma uses open covers, gamma_p pre-open covers;
// gamma_p_subset evaluates on the subspace (A, tau_P/A).
Degree gamma(const Preopen& pre, const CoverOptions& opts = {});
Degree gamma_p(const Preopen& pre, const CoverOptions& opts = {});
Degree gamma_p_subset(const Preopen& pre, Subset a, const CoverOptions& opts = {});
// Plain compactness of an arbitrary degree family over a carrier (used for
// the identity gamma_p(X,tau) = gamma(X,tau_P) and for subspace traces).
Degree gamma_of_family(const Carrier& c, const FuzzyFamily& fam,
                       const CoverOptions& opts = {});

// Pre-subbase / pre-closed-family characterizations of strong compactness.
Degree beta1_degree(const Preopen& pre, const FuzzyFamily& phi,
                    const CoverOptions& opts = {});
Degree beta5_degree(const Preopen& pre, const CoverOptions& opts = {});

// Local compactness: inf over x of sup over B of
// (x in Int(B)) ⊗ Gamma(B, tau/B), with the pre-open variants for lpc.
Degree lc_degree(const FuzzySpace& s, const CoverOptions& opts = {});
Degree lpc_degree(const Preopen& pre, const CoverOptions& opts = {});
// Locally-strong-compactness of the subspace (A, tau/A), with subspace
// pre-neighborhoods taken from the trace of tau_P.
Degree lpc_subset(const Preopen& pre, Subset a, const CoverOptions& opts = {});

}  // namespace fuzzitop
