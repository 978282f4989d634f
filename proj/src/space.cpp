#include "fuzzitop/space.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "fuzzitop/preopen.hpp"

namespace fuzzitop {

std::string ValidationReport::summary() const {
  if (valid()) return "valid";
  std::string out = "invalid:";
  for (const auto& i : issues) out += "\n  " + i.axiom + ": " + i.detail;
  return out;
}

ValidationReport validate(const FuzzySpace& s) {
  const Carrier& c = s.carrier();
  const FuzzyFamily& tau = s.tau();
  ValidationReport report;

  if (tau.at(Subset{}) != Degree::one())
    report.issues.push_back({"tau(empty)=1", "tau(empty) = " + tau.at(Subset{}).str()});
  if (tau.at(c.full()) != Degree::one())
    report.issues.push_back({"tau(X)=1", "tau(X) = " + tau.at(c.full()).str()});

  for (std::uint32_t a = 0; a < c.subset_count(); ++a)
    for (std::uint32_t b = a; b < c.subset_count(); ++b) {
      const Degree lhs = meet(tau.at(Subset{a}), tau.at(Subset{b}));
      if (tau.at(intersect(Subset{a}, Subset{b})) < lhs)
        report.issues.push_back(
            {"intersection", "tau(A∩B) < min(tau(A),tau(B)) for A=" + c.set_str(Subset{a}) +
                                 " B=" + c.set_str(Subset{b})});
    }

  // Arbitrary-union axiom via level cuts: for each degree delta taken by
  // tau, the cut {A : tau(A) >= delta} must be closed under unions.
  for (const Degree& delta : tau.value_set()) {
    if (delta == Degree::zero()) continue;
    std::vector<std::uint32_t> cut;
    for (std::uint32_t a = 0; a < c.subset_count(); ++a)
      if (tau.at(Subset{a}) >= delta) cut.push_back(a);
    for (size_t i = 0; i < cut.size(); ++i)
      for (size_t j = i + 1; j < cut.size(); ++j) {
        const Subset u = unite(Subset{cut[i]}, Subset{cut[j]});
        if (tau.at(u) < delta) {
          report.issues.push_back(
              {"union-cut", "cut at " + delta.str() + " not union-closed: " +
                                c.set_str(Subset{cut[i]}) + " ∪ " + c.set_str(Subset{cut[j]})});
          report.level_cuts_are_topologies = false;
        }
      }
  }
  // A cut is a topology when it is union-closed (above) and meet-closed
  // (already implied by the intersection axiom when that one holds).
  for (const auto& issue : report.issues)
    if (issue.axiom == "intersection" || issue.axiom == "tau(empty)=1" ||
        issue.axiom == "tau(X)=1")
      report.level_cuts_are_topologies = false;
  return report;
}

Degree nbhd(const FuzzySpace& s, int x, Subset a) {
  if (x < 0 || x >= s.carrier().size()) throw StructuralError("point index out of range");
  if (!a.contains(x)) return Degree::zero();
  // sup over B with x in B inside A
  Degree best = Degree::zero();
  const std::uint32_t xbit = 1u << x;
  const std::uint32_t rest = a.bits & ~xbit;
  std::uint32_t sub = 0;
  while (true) {
    best = join(best, s.tau().at(Subset{sub | xbit}));
    if (sub == rest) break;
    sub = (sub - rest) & rest;
  }
  return best;
}

Degree nbhd(const FuzzySpace& s, std::string_view x, Subset a) {
  return nbhd(s, s.carrier().require(x), a);
}

FuzzyPointSet closure(const FuzzySpace& s, Subset a) {
  const Carrier& c = s.carrier();
  FuzzyPointSet cl(c);
  const Subset comp = c.complement(a);
  for (int x = 0; x < c.size(); ++x) cl.set(x, neg(nbhd(s, x, comp)));
  return cl;
}

FuzzyPointSet interior_fuzzy(const FuzzySpace& s, const FuzzyPointSet& mu) {
  const Carrier& c = s.carrier();
  if (mu.carrier() != c) throw StructuralError("interior_fuzzy: carrier mismatch");
  const std::uint32_t count = c.subset_count();
  // m[B] = inf over points of B of mu
  std::vector<Degree> m(count, Degree::one());
  for (std::uint32_t b = 1; b < count; ++b) {
    const int low = std::countr_zero(b);
    m[b] = meet(m[b & (b - 1)], mu.at(low));
  }
  FuzzyPointSet out(c);
  for (int x = 0; x < c.size(); ++x) {
    Degree best = Degree::zero();
    for (std::uint32_t b = 0; b < count; ++b)
      if (Subset{b}.contains(x)) best = join(best, meet(s.tau().at(Subset{b}), m[b]));
    out.set(x, best);
  }
  return out;
}

Carrier subcarrier(const Carrier& c, Subset a) {
  std::vector<std::string> labels;
  for (int i = 0; i < c.size(); ++i)
    if (a.contains(i)) labels.push_back(c.label(i));
  return Carrier(std::move(labels));
}

FuzzySpace subspace(const FuzzySpace& s, Subset a) {
  if (a.empty()) throw StructuralError("subspace: empty carrier subset");
  const Carrier sub = subcarrier(s.carrier(), a);
  return FuzzySpace(trace_family(s.tau(), a, sub));
}

FuzzySpace crisp_embed(const Carrier& c, const std::vector<Subset>& opens) {
  std::set<std::uint32_t> t;
  for (Subset s : opens) {
    if (!is_subset(s, c.full())) throw StructuralError("crisp_embed: set outside carrier");
    t.insert(s.bits);
  }
  if (!t.count(0) || !t.count(c.full().bits))
    throw StructuralError("crisp_embed: topology must contain empty and X");
  for (std::uint32_t a : t)
    for (std::uint32_t b : t) {
      if (!t.count(a & b)) throw StructuralError("crisp_embed: not closed under intersection");
      if (!t.count(a | b)) throw StructuralError("crisp_embed: not closed under union");
    }
  FuzzyFamily tau(c);
  for (std::uint32_t a : t) tau.set(Subset{a}, Degree::one());
  return FuzzySpace(std::move(tau));
}

namespace {

// Smallest crisp topology containing the given sets.
std::set<std::uint32_t> close_topology(std::set<std::uint32_t> t, std::uint32_t full) {
  t.insert(0);
  t.insert(full);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::uint32_t> members(t.begin(), t.end());
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = i + 1; j < members.size(); ++j) {
        if (t.insert(members[i] & members[j]).second) changed = true;
        if (t.insert(members[i] | members[j]).second) changed = true;
      }
  }
  return t;
}

}  // namespace

FuzzySpace random_space(int points, int grid, std::uint64_t seed) {
  if (points < 1) throw StructuralError("random_space: need at least one point");
  if (grid < 1) throw StructuralError("random_space: grid must be >= 1");
  require_enumeration_cap(points, "random_space");

  std::vector<std::string> labels;
  for (int i = 0; i < points; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i % 26)) +
                                                    (i >= 26 ? std::to_string(i / 26) : ""));
  Carrier c(std::move(labels));
  std::mt19937_64 rng(seed);

  // Descending level values: v1 = 1, then distinct smaller grid values.
  const int stages = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(grid));
  std::vector<int> below;  // numerators of candidate lower levels
  for (int i = 1; i < grid; ++i) below.push_back(i);
  // deterministic shuffle by repeated draws
  for (size_t i = below.size(); i > 1; --i)
    std::swap(below[i - 1], below[rng() % i]);
  std::vector<Degree> levels = {Degree::one()};
  for (int k = 1; k < stages && static_cast<size_t>(k - 1) < below.size(); ++k)
    levels.push_back(Degree(below[static_cast<size_t>(k - 1)], grid));
  std::sort(levels.begin(), levels.end(), [](const Degree& a, const Degree& b) { return a > b; });

  FuzzyFamily tau(c);
  std::set<std::uint32_t> chain;
  for (const Degree& level : levels) {
    std::set<std::uint32_t> gens = chain;
    const int extra = static_cast<int>(rng() % static_cast<std::uint64_t>(points + 1));
    for (int k = 0; k < extra; ++k)
      gens.insert(static_cast<std::uint32_t>(rng()) & c.full().bits);
    chain = close_topology(std::move(gens), c.full().bits);
    for (std::uint32_t a : chain)
      if (tau.at(Subset{a}) == Degree::zero()) tau.set(Subset{a}, level);
  }
  // force the required units even if the first stage drew no extra sets
  tau.set(Subset{}, Degree::one());
  tau.set(c.full(), Degree::one());
  return FuzzySpace(std::move(tau));
}

ProductStructure product(const std::vector<FuzzySpace>& factors) {
  if (factors.size() < 2) throw StructuralError("product: need at least two factors");
  long long total = 1;
  for (const auto& f : factors) total *= f.carrier().size();
  if (total > enumeration_cap())
    throw CapExceeded("product: carrier of " + std::to_string(total) +
                      " points exceeds the enumeration cap");

  // product points = tuples in lexicographic order, first factor slowest
  std::vector<std::string> labels;
  std::vector<std::vector<int>> tuples;
  {
    std::vector<int> idx(factors.size(), 0);
    while (true) {
      std::string lab;
      for (size_t s = 0; s < factors.size(); ++s) {
        if (s) lab += "|";
        lab += factors[s].carrier().label(idx[s]);
      }
      labels.push_back(lab);
      tuples.push_back(idx);
      size_t s = factors.size();
      while (s > 0) {
        --s;
        if (++idx[s] < factors[s].carrier().size()) break;
        idx[s] = 0;
        if (s == 0) goto done;
      }
    }
  done:;
  }
  Carrier pc(labels);

  std::vector<PointMap> projections;
  for (size_t s = 0; s < factors.size(); ++s) {
    PointMap p{pc, factors[s].carrier(), {}};
    for (const auto& t : tuples) p.assign.push_back(t[s]);
    projections.push_back(std::move(p));
  }

  // Indexed cylinders (s, U) with their factor pre-open degree.
  struct Cylinder {
    Subset preimage;
    Degree degree;
  };
  std::vector<Cylinder> cyl;
  for (size_t s = 0; s < factors.size(); ++s) {
    const Preopen pre(factors[s]);
    for (Subset u : factors[s].carrier().subsets())
      cyl.push_back({projections[s].preimage(u), pre.tau_p(u)});
  }
  if (cyl.size() > 22)
    throw CapExceeded("product: too many cylinder generators");

  // beta_P(V) = sup over finite cylinder families intersecting to V of the
  // min of their degrees; the empty family has intersection X and min 1.
  FuzzyFamily prebase(pc);
  for (std::uint32_t phi = 0; phi < (1u << cyl.size()); ++phi) {
    Subset v = pc.full();
    Degree d = Degree::one();
    for (size_t i = 0; i < cyl.size(); ++i)
      if (phi >> i & 1u) {
        v = intersect(v, cyl[i].preimage);
        d = meet(d, cyl[i].degree);
      }
    prebase.set(v, join(prebase.at(v), d));
  }
  FuzzyFamily preopen = union_closure(prebase);
  return ProductStructure{pc, std::move(prebase), std::move(preopen),
                          std::move(projections)};
}

}  // namespace fuzzitop
