#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "fuzzitop/preopen.hpp"

namespace fuzzitop {

// A net on a finite carrier, reduced to its kernel: the eventual-set family
// of any net is a principal filter, and its kernel E (also the set of
// cofinal values) determines both crisp tail predicates:
//   almost in A  <=>  E inside A
//   often in A   <=>  A meets E
// This collapses the class of all nets to the 2^n - 1 nonempty kernels.
struct NetKernel {
  Subset kernel;  // nonempty
};

// [S pre-converges to x]: inf over A the net is not almost-in of 1 - N_x^P(A).
Degree pre_converges(const Preopen& pre, NetKernel net, int x);
// [x pre-accumulates S]: inf over A the net is not often-in of 1 - N_x^P(A).
Degree pre_accumulates(const Preopen& pre, NetKernel net, int x);
// adh_P S: the pointwise pre-accumulation degrees.
FuzzyPointSet adh_p(const Preopen& pre, NetKernel net);

// Universal = eventually in A or in its complement for every A; on a finite
// carrier that forces an eventually constant net.
bool is_universal(const Carrier& c, NetKernel net);

// All subnet representatives: the nonempty sub-kernels.
std::vector<NetKernel> subnet_reps(NetKernel net);

// Net characterizations of strong compactness. beta2 quantifies universal
// nets, beta3 subnets, beta4 adherence points.
Degree beta2_degree(const Preopen& pre);
Degree beta3_degree(const Preopen& pre);
Degree beta4_degree(const Preopen& pre);

// An explicit net: finitely many stages carrying a directed preorder,
// values extended by an eventually-periodic tail (the last `period` stages
// repeat forever, ordered above every finite stage). Exists so the kernel
// reduction can be checked against literal tail semantics.
class ExplicitNet {
 public:
  // Stages 0..k-1 ordered by stage index; period must be >= 1 and <= k.
  static ExplicitNet sequence(std::vector<int> values, size_t period);
  // Arbitrary preorder given as <=-pairs (closed reflexively/transitively
  // here); throws unless the preorder is directed.
  ExplicitNet(std::vector<int> values, size_t period,
              std::vector<std::pair<int, int>> order);

  size_t stages() const { return values_.size(); }
  size_t period() const { return period_; }
  int value(size_t stage) const { return values_[stage]; }

  bool almost_in(Subset a) const;  // eventually in A
  bool often_in(Subset a) const;   // cofinally in A
  Subset cofinal_values() const;   // = the kernel of the reduction

 private:
  std::vector<int> values_;
  size_t period_;
};

// Literal tail evaluation of pre-convergence / pre-accumulation; used as
// the independent oracle for the kernel reduction.
std::pair<Degree, Degree> oracle_net_predicates(const Preopen& pre,
                                                const ExplicitNet& net, int x);

}  // namespace fuzzitop
