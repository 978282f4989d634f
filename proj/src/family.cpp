#include "fuzzitop/family.hpp"

#include <algorithm>

namespace fuzzitop {

FuzzyFamily::FuzzyFamily(Carrier carrier) : carrier_(std::move(carrier)) {
  require_enumeration_cap(carrier_.size(), "fuzzy family");
  deg_.assign(carrier_.subset_count(), Degree::zero());
}

std::vector<Degree> FuzzyFamily::value_set() const {
  std::vector<Degree> vs = deg_;
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

FuzzyPointSet::FuzzyPointSet(Carrier carrier, Degree fill)
    : carrier_(std::move(carrier)) {
  mu_.assign(static_cast<size_t>(carrier_.size()), fill);
}

Degree FuzzyPointSet::inf_on(Subset s) const {
  Degree acc = Degree::one();
  for (int x = 0; x < carrier_.size(); ++x)
    if (s.contains(x)) acc = meet(acc, mu_[static_cast<size_t>(x)]);
  return acc;
}

Degree FuzzyPointSet::sup_all() const {
  Degree acc = Degree::zero();
  for (const Degree& d : mu_) acc = join(acc, d);
  return acc;
}

std::vector<std::vector<Degree>> nbhd_tables(const FuzzyFamily& fam) {
  const Carrier& c = fam.carrier();
  const int n = c.size();
  const std::uint32_t count = c.subset_count();
  std::vector<std::vector<Degree>> table(
      static_cast<size_t>(n), std::vector<Degree>(count, Degree::zero()));
  // Every B with x in B inside A and B != A lies inside A minus one point,
  // so the sup satisfies N[x][A] = max(fam(A), max_i N[x][A \ {i}]).
  for (int x = 0; x < n; ++x) {
    auto& row = table[static_cast<size_t>(x)];
    for (std::uint32_t a = 0; a < count; ++a) {
      if (!Subset{a}.contains(x)) continue;
      Degree best = fam.at(Subset{a});
      for (int i = 0; i < n; ++i) {
        if (i == x || !Subset{a}.contains(i)) continue;
        best = join(best, row[a & ~(1u << i)]);
      }
      row[a] = best;
    }
  }
  return table;
}

FuzzyFamily trace_family(const FuzzyFamily& fam, Subset a, const Carrier& sub) {
  const Carrier& c = fam.carrier();
  // map bit positions of the base carrier into the subcarrier
  std::vector<int> pos(static_cast<size_t>(c.size()), -1);
  int j = 0;
  for (int i = 0; i < c.size(); ++i)
    if (a.contains(i)) pos[static_cast<size_t>(i)] = j++;
  if (j != sub.size())
    throw StructuralError("trace_family: subcarrier size mismatch");

  FuzzyFamily out(sub);
  for (std::uint32_t v = 0; v < c.subset_count(); ++v) {
    std::uint32_t b = 0;
    for (int i = 0; i < c.size(); ++i)
      if (a.contains(i) && (v >> i & 1u)) b |= 1u << pos[static_cast<size_t>(i)];
    out.set(Subset{b}, join(out.at(Subset{b}), fam.at(Subset{v})));
  }
  return out;
}

}  // namespace fuzzitop
