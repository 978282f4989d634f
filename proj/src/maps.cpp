#include "fuzzitop/maps.hpp"

namespace fuzzitop {

namespace {

void check_map(const PointMap& f, const Carrier& dom, const Carrier& cod) {
  f.check();
  if (f.domain != dom || f.codomain != cod)
    throw StructuralError("map carriers do not match the given spaces");
}

}  // namespace

Degree preimage_continuity_degree(const PointMap& f, const FuzzyFamily& cod_side,
                                  const FuzzyFamily& dom_side) {
  Degree acc = Degree::one();
  for (std::uint32_t b = 0; b < f.codomain.subset_count(); ++b)
    acc = meet(acc, implies(cod_side.at(Subset{b}), dom_side.at(f.preimage(Subset{b}))));
  return acc;
}

Degree image_openness_degree(const PointMap& f, const FuzzyFamily& dom_side,
                             const FuzzyFamily& cod_side) {
  Degree acc = Degree::one();
  for (std::uint32_t u = 0; u < f.domain.subset_count(); ++u)
    acc = meet(acc, implies(dom_side.at(Subset{u}), cod_side.at(f.image(Subset{u}))));
  return acc;
}

ContinuityDegrees continuity_degrees(const PointMap& f, const Preopen& dom,
                                     const Preopen& cod) {
  check_map(f, dom.carrier(), cod.carrier());
  return {preimage_continuity_degree(f, cod.space().tau(), dom.space().tau()),
          preimage_continuity_degree(f, cod.space().tau(), dom.tau_p()),
          preimage_continuity_degree(f, cod.tau_p(), dom.tau_p())};
}

OpennessDegrees openness_degrees(const PointMap& f, const Preopen& dom,
                                 const Preopen& cod) {
  check_map(f, dom.carrier(), cod.carrier());
  return {image_openness_degree(f, dom.space().tau(), cod.space().tau()),
          image_openness_degree(f, dom.tau_p(), cod.tau_p())};
}

Degree openness_via_prebase(const PointMap& f, const FuzzyFamily& beta,
                            const Preopen& dom, const Preopen& cod) {
  check_map(f, dom.carrier(), cod.carrier());
  if (is_prebase_degree(beta, dom) != Degree::one())
    throw PreconditionError("openness_via_prebase: family is not a pre-base");
  return image_openness_degree(f, beta, cod.tau_p());
}

Degree t2p_of_family(const FuzzyFamily& preopen_family) {
  const Carrier& c = preopen_family.carrier();
  const auto nb = nbhd_tables(preopen_family);
  Degree acc = Degree::one();
  for (int x = 0; x < c.size(); ++x)
    for (int y = x + 1; y < c.size(); ++y) {
      // symmetric in (x,y); unordered pairs suffice
      Degree best = Degree::zero();
      for (std::uint32_t b = 0; b < c.subset_count(); ++b) {
        const Degree nx = nb[static_cast<size_t>(x)][b];
        if (nx <= best) continue;
        const std::uint32_t rest = c.full().bits & ~b;
        std::uint32_t v = 0;
        while (true) {
          best = join(best, meet(nx, nb[static_cast<size_t>(y)][v]));
          if (v == rest) break;
          v = (v - rest) & rest;
        }
      }
      acc = meet(acc, best);
    }
  return acc;
}

Degree t2p(const Preopen& pre) { return t2p_of_family(pre.tau_p()); }

namespace {

// sup over disjoint U >= a, V >= b of min(tau_P(U), tau_P(V))
Degree best_separation(const Preopen& pre, Subset a, Subset b) {
  const Carrier& c = pre.carrier();
  Degree best = Degree::zero();
  const std::uint32_t rest = c.full().bits & ~(a.bits | b.bits);
  std::uint32_t s = 0;
  while (true) {
    const std::uint32_t u = a.bits | s;
    const Degree du = pre.tau_p(Subset{u});
    if (du > best) {
      const std::uint32_t rest2 = rest & ~s;
      std::uint32_t t = 0;
      while (true) {
        best = join(best, meet(du, pre.tau_p(Subset{b.bits | t})));
        if (t == rest2) break;
        t = (t - rest2) & rest2;
      }
    }
    if (s == rest) break;
    s = (s - rest) & rest;
  }
  return best;
}

}  // namespace

Degree t4p(const Preopen& pre) {
  const Carrier& c = pre.carrier();
  Degree acc = Degree::one();
  for (const auto& [a, b] : c.disjoint_pairs()) {
    const Degree lhs = meet(pre.tau_p(c.complement(a)), pre.tau_p(c.complement(b)));
    acc = meet(acc, implies(lhs, best_separation(pre, a, b)));
  }
  return acc;
}

Degree t3p(const Preopen& pre) {
  const Carrier& c = pre.carrier();
  Degree acc = Degree::one();
  for (int x = 0; x < c.size(); ++x) {
    const Subset point{1u << x};
    for (std::uint32_t b = 0; b < c.subset_count(); ++b) {
      if (Subset{b}.contains(x)) continue;
      const Degree lhs = meet(pre.tau_p(c.complement(point)),
                              pre.tau_p(c.complement(Subset{b})));
      acc = meet(acc, implies(lhs, best_separation(pre, point, Subset{b})));
    }
  }
  return acc;
}

Degree t3p_nbhd(const Preopen& pre) {
  const Carrier& c = pre.carrier();
  Degree acc = Degree::one();
  for (int x = 0; x < c.size(); ++x)
    for (std::uint32_t w = 0; w < c.subset_count(); ++w) {
      if (!Subset{w}.contains(x)) continue;
      Degree best = Degree::zero();
      std::uint32_t b = 0;
      while (true) {
        Degree inner = pre.nbhd_p(x, Subset{b});
        const Subset bc = c.complement(Subset{b});
        for (int y = 0; y < c.size(); ++y)
          if (!Subset{w}.contains(y)) inner = meet(inner, pre.nbhd_p(y, bc));
        best = join(best, inner);
        if (b == w) break;
        b = (b - w) & w;
      }
      acc = meet(acc, implies(pre.tau_p(Subset{w}), best));
    }
  return acc;
}

}  // namespace fuzzitop
