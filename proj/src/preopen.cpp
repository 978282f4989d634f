#include "fuzzitop/preopen.hpp"

#include <algorithm>

namespace fuzzitop {

Preopen::Preopen(FuzzySpace space)
    : space_(std::move(space)), tau_p_(space_.carrier()) {
  const Carrier& c = space_.carrier();
  require_enumeration_cap(c.size(), "pre-open structure");
  for (std::uint32_t a = 0; a < c.subset_count(); ++a) {
    const FuzzyPointSet int_cl = interior_fuzzy(space_, closure(space_, Subset{a}));
    tau_p_.set(Subset{a}, int_cl.inf_on(Subset{a}));
  }
  nbhd_p_ = nbhd_tables(tau_p_);
}

FuzzyFamily Preopen::f_p_family() const {
  FuzzyFamily out(carrier());
  for (std::uint32_t a = 0; a < carrier().subset_count(); ++a)
    out.set(Subset{a}, f_p(Subset{a}));
  return out;
}

Degree Preopen::cl_p(Subset a, int x) const {
  return neg(nbhd_p(x, carrier().complement(a)));
}

FuzzyPointSet Preopen::cl_p(Subset a) const {
  FuzzyPointSet out(carrier());
  for (int x = 0; x < carrier().size(); ++x) out.set(x, cl_p(a, x));
  return out;
}

Degree Preopen::p_topological_degree() const {
  const std::uint32_t count = carrier().subset_count();
  Degree acc = Degree::one();
  for (std::uint32_t a = 0; a < count; ++a)
    for (std::uint32_t b = a; b < count; ++b) {
      const Degree lhs = meet(tau_p_.at(Subset{a}), tau_p_.at(Subset{b}));
      acc = meet(acc, implies(lhs, tau_p_.at(intersect(Subset{a}, Subset{b}))));
    }
  return acc;
}

FuzzyFamily union_closure(const FuzzyFamily& beta) {
  const Carrier& c = beta.carrier();
  FuzzyFamily out(c);
  out.set(Subset{}, Degree::one());  // covered by the empty family
  std::vector<std::pair<Degree, std::uint32_t>> members;
  for (std::uint32_t a = 1; a < c.subset_count(); ++a) {
    members.clear();
    // subsets of A, descending by degree
    std::uint32_t sub = 0;
    while (true) {
      members.push_back({beta.at(Subset{sub}), sub});
      if (sub == a) break;
      sub = (sub - a) & a;
    }
    std::sort(members.begin(), members.end(),
              [](const auto& l, const auto& r) { return l.first > r.first; });
    Degree best = Degree::zero();
    std::uint32_t covered = 0;
    for (size_t i = 0; i < members.size();) {
      const Degree t = members[i].first;
      while (i < members.size() && members[i].first == t) covered |= members[i++].second;
      if (covered == a) {
        best = t;
        break;
      }
    }
    out.set(Subset{a}, best);
  }
  return out;
}

FuzzyFamily finite_intersection_closure(const FuzzyFamily& phi) {
  const Carrier& c = phi.carrier();
  FuzzyFamily out(c);
  out.set(c.full(), Degree::one());  // intersection of the empty subfamily
  for (std::uint32_t a = 0; a < c.subset_count(); ++a) {
    std::vector<std::pair<Degree, std::uint32_t>> members;
    // supersets of A, i.e. A united with any subset of its complement
    const std::uint32_t rest = c.full().bits & ~a;
    std::uint32_t extra = 0;
    while (true) {
      members.push_back({phi.at(Subset{a | extra}), a | extra});
      if (extra == rest) break;
      extra = (extra - rest) & rest;
    }
    std::sort(members.begin(), members.end(),
              [](const auto& l, const auto& r) { return l.first > r.first; });
    Degree best = out.at(Subset{a});
    std::uint32_t met = c.full().bits;
    for (size_t i = 0; i < members.size();) {
      const Degree t = members[i].first;
      while (i < members.size() && members[i].first == t) met &= members[i++].second;
      if (met == a) {
        best = join(best, t);
        break;
      }
    }
    out.set(Subset{a}, best);
  }
  return out;
}

Degree is_prebase_degree(const FuzzyFamily& beta, const Preopen& pre) {
  const Carrier& c = pre.carrier();
  if (beta.carrier() != c) throw StructuralError("is_prebase_degree: carrier mismatch");
  for (std::uint32_t a = 0; a < c.subset_count(); ++a)
    if (beta.at(Subset{a}) > pre.tau_p(Subset{a}))
      throw PreconditionError("is_prebase_degree: beta(" + c.set_str(Subset{a}) +
                              ") = " + beta.at(Subset{a}).str() +
                              " exceeds tau_P = " + pre.tau_p(Subset{a}).str());
  const auto base_nbhd = nbhd_tables(beta);
  Degree acc = Degree::one();
  for (int x = 0; x < c.size(); ++x)
    for (std::uint32_t a = 0; a < c.subset_count(); ++a)
      acc = meet(acc, implies(pre.nbhd_p(x, Subset{a}),
                              base_nbhd[static_cast<size_t>(x)][a]));
  return acc;
}

std::pair<Degree, Degree> prebase_axiom_degrees(const FuzzyFamily& beta) {
  const Carrier& c = beta.carrier();
  const Degree first = union_closure(beta).at(c.full());
  const auto base_nbhd = nbhd_tables(beta);
  Degree second = Degree::one();
  for (std::uint32_t a = 0; a < c.subset_count(); ++a)
    for (std::uint32_t b = 0; b < c.subset_count(); ++b) {
      const Degree lhs = meet(beta.at(Subset{a}), beta.at(Subset{b}));
      const std::uint32_t cap = a & b;
      for (int x = 0; x < c.size(); ++x)
        if (Subset{cap}.contains(x))
          second = meet(second, implies(lhs, base_nbhd[static_cast<size_t>(x)][cap]));
    }
  return {first, second};
}

Degree subbase_condition_degree(const FuzzyFamily& phi) {
  return union_closure(phi).at(phi.carrier().full());
}

FuzzyFamily prebase_core(const Preopen& pre) {
  const Carrier& c = pre.carrier();
  FuzzyFamily core(c);
  for (std::uint32_t a = 1; a < c.subset_count(); ++a) {
    const Degree d = pre.tau_p(Subset{a});
    if (d == Degree::zero()) continue;
    // redundant iff the strictly smaller sets of degree >= d already cover A
    std::uint32_t covered = 0;
    std::uint32_t sub = 0;
    while (true) {
      if (sub != a && pre.tau_p(Subset{sub}) >= d) covered |= sub;
      if (sub == a) break;
      sub = (sub - a) & a;
    }
    if (covered != a) core.set(Subset{a}, d);
  }
  return core;
}

}  // namespace fuzzitop
