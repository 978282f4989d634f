#pragma once

#include <vector>

#include "fuzzitop/carrier.hpp"

namespace fuzzitop {

// A total function between two carriers; images and preimages are setwise.
struct PointMap {
  Carrier domain;
  Carrier codomain;
  std::vector<int> assign;  // assign[x] = f(x), indexed by domain point

  static PointMap identity(const Carrier& c);

  int apply(int x) const { return assign[static_cast<size_t>(x)]; }
  Subset image(Subset u) const;
  Subset preimage(Subset b) const;
  bool surjective() const;
  void check() const;  // totality and range
};

}  // namespace fuzzitop
