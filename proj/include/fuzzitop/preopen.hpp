#pragma once

#include <utility>
#include <vector>

#include "fuzzitop/space.hpp"

namespace fuzzitop {

// The pre-open structure derived from a space. tau_P(A) is the degree to
// which A sits inside the interior of its closure:
//
//   tau_P(A) = inf over x in A of Int(Cl(A))(x)
//
// The table is memoized once here; every downstream degree (covers,
// compactness, nets, separation) reads it instead of recomputing closures.
class Preopen {
 public:
  explicit Preopen(FuzzySpace space);

  const FuzzySpace& space() const { return space_; }
  const Carrier& carrier() const { return space_.carrier(); }

  const FuzzyFamily& tau_p() const { return tau_p_; }
  Degree tau_p(Subset a) const { return tau_p_.at(a); }

  // Pre-closed degree: f_p(A) = tau_P(X - A).
  Degree f_p(Subset a) const { return tau_p_.at(carrier().complement(a)); }
  FuzzyFamily f_p_family() const;

  // N_x^P(A) = sup of tau_P(B) over B with x in B inside A.
  Degree nbhd_p(int x, Subset a) const {
    return nbhd_p_[static_cast<size_t>(x)][a.bits];
  }

  // Cl_P(A)(x) = 1 - N_x^P(X - A).
  Degree cl_p(Subset a, int x) const;
  FuzzyPointSet cl_p(Subset a) const;

  // inf over A,B of (min(tau_P(A),tau_P(B)) -> tau_P(A∩B)); 1 iff the
  // space is P-topological.
  Degree p_topological_degree() const;

 private:
  FuzzySpace space_;
  FuzzyFamily tau_p_;
  std::vector<std::vector<Degree>> nbhd_p_;  // [x][mask]
};

// beta^(u): for each A, the sup over covers of A of the cover's inf degree.
// Computed by threshold sweep: the best cover at level t is the family of
// all subsets of A with degree >= t, so only the family's own values need
// to be tried (O(4^n log) overall instead of 2^(2^n) covers).
FuzzyFamily union_closure(const FuzzyFamily& beta);

// phi^(cap): sup over finite subfamilies intersecting to A of their inf
// degree; the empty subfamily has intersection X and inf 1. Same threshold
// sweep, with intersections of supersets of A.
FuzzyFamily finite_intersection_closure(const FuzzyFamily& phi);

// Degree to which beta is a pre-base of tau_P:
//   inf over x,A of (N_x^P(A) -> sup over x in B inside A of beta(B)).
// beta must sit below tau_P pointwise; a violation is a precondition
// failure, not a low degree.
Degree is_prebase_degree(const FuzzyFamily& beta, const Preopen& pre);

// The two pre-base axioms: (1) beta^(u)(X); (2) inf over A,B and x in A∩B
// of (min(beta(A),beta(B)) -> sup over x in C inside A∩B of beta(C)).
std::pair<Degree, Degree> prebase_axiom_degrees(const FuzzyFamily& beta);

// Pre-subbase qualification degree: union_closure(phi)(X).
Degree subbase_condition_degree(const FuzzyFamily& phi);

// A reduced pre-base of tau_P: drops every set coverable at its own degree
// by strictly smaller sets. union_closure of the result equals tau_P.
FuzzyFamily prebase_core(const Preopen& pre);

}  // namespace fuzzitop
