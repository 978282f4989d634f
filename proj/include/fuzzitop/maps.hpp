#pragma once

#include "fuzzitop/point_map.hpp"
#include "fuzzitop/preopen.hpp"

namespace fuzzitop {

// inf over B in the codomain of (cod_side(B) -> dom_side(f^-1(B))).
// Instantiates fuzzifying continuity and its pre-open variants.
Degree preimage_continuity_degree(const PointMap& f, const FuzzyFamily& cod_side,
                                  const FuzzyFamily& dom_side);

// inf over U in the domain of (dom_side(U) -> cod_side(f(U))).
// Instantiates fuzzifying openness and pre-openness.
Degree image_openness_degree(const PointMap& f, const FuzzyFamily& dom_side,
                             const FuzzyFamily& cod_side);

struct ContinuityDegrees {
  Degree c;    // sigma -> tau
  Degree c_p;  // sigma -> tau_P   (pre-continuity)
  Degree i_p;  // sigma_P -> tau_P (pre-irresoluteness)
};
ContinuityDegrees continuity_degrees(const PointMap& f, const Preopen& dom,
                                     const Preopen& cod);

struct OpennessDegrees {
  Degree o;    // tau -> sigma
  Degree o_p;  // tau_P -> sigma_P (pre-openness)
};
OpennessDegrees openness_degrees(const PointMap& f, const Preopen& dom,
                                 const Preopen& cod);

// Pre-openness computed against a pre-base of the domain's tau_P instead of
// tau_P itself; equals openness_degrees(...).o_p whenever beta is a
// pre-base. The pre-base requirement is a precondition, checked here.
Degree openness_via_prebase(const PointMap& f, const FuzzyFamily& beta,
                            const Preopen& dom, const Preopen& cod);

// Pre-Hausdorff degree: inf over pairs x != y of the best disjoint pair of
// pre-neighborhoods, sup over disjoint (B,C) of min(N_x^P(B), N_y^P(C)).
// Computed from any pre-open family (so subspace traces plug in directly).
Degree t2p_of_family(const FuzzyFamily& preopen_family);
Degree t2p(const Preopen& pre);

// Pre-normality: inf over disjoint (A,B) of
//   min(tau_P(A^c), tau_P(B^c)) -> sup over disjoint U >= A, V >= B of
//   min(tau_P(U), tau_P(V)).
Degree t4p(const Preopen& pre);

// Pre-regularity as the singleton specialization of t4p (A = {x}).
Degree t3p(const Preopen& pre);

// Alternate neighborhood-shaped pre-regularity, kept for cross-comparison:
//   inf over x and W containing x of tau_P(W) -> sup over B inside W of
//   min(N_x^P(B), inf over y outside W of N_y^P(B^c)).
Degree t3p_nbhd(const Preopen& pre);

}  // namespace fuzzitop
