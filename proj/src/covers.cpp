#include "fuzzitop/covers.hpp"

#include <algorithm>
#include <array>

namespace fuzzitop {

FamilyGrid::FamilyGrid(std::vector<Degree> values) : values_(std::move(values)) {
  values_.push_back(Degree::zero());
  values_.push_back(Degree::one());
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

FamilyGrid FamilyGrid::for_family(const FuzzyFamily& fam, int refine) {
  std::vector<Degree> vs = fam.value_set();
  const size_t base = vs.size();
  for (size_t i = 0; i < base; ++i) vs.push_back(neg(vs[i]));
  for (int i = 0; i <= refine; ++i) vs.push_back(Degree(i, refine));
  return FamilyGrid(std::move(vs));
}

FamilyGrid FamilyGrid::for_space(const Preopen& pre, int refine) {
  return for_family(pre.tau_p(), refine);
}

FamilyGrid FamilyGrid::with_values(const FuzzyFamily& fam) const {
  std::vector<Degree> vs = values_;
  for (const Degree& d : fam.value_set()) vs.push_back(d);
  return FamilyGrid(std::move(vs));
}

Degree k_degree(const FuzzyFamily& r, Subset a) {
  const Carrier& c = r.carrier();
  if (!is_subset(a, c.full())) throw StructuralError("k_degree: set outside carrier");
  Degree acc = Degree::one();
  for (int x = 0; x < c.size(); ++x) {
    if (!a.contains(x)) continue;
    Degree best = Degree::zero();
    for (std::uint32_t b = 0; b < c.subset_count(); ++b)
      if (Subset{b}.contains(x)) best = join(best, r.at(Subset{b}));
    acc = meet(acc, best);
  }
  return acc;
}

Degree family_subset_degree(const FuzzyFamily& r, const FuzzyFamily& t) {
  if (r.carrier() != t.carrier())
    throw StructuralError("family_subset_degree: carrier mismatch");
  Degree acc = Degree::one();
  for (std::uint32_t b = 0; b < r.carrier().subset_count(); ++b)
    acc = meet(acc, implies(r.at(Subset{b}), t.at(Subset{b})));
  return acc;
}

CoverDegrees cover_degrees(const FuzzyFamily& r, Subset a, const Preopen& pre,
                           const FuzzyFamily* subbase) {
  const Degree k = k_degree(r, a);
  CoverDegrees out;
  out.k = k;
  out.k_open = tnorm(k, family_subset_degree(r, pre.space().tau()));
  out.k_pre = tnorm(k, family_subset_degree(r, pre.tau_p()));
  if (subbase) out.k_sub = tnorm(k, family_subset_degree(r, *subbase));
  return out;
}

Degree ff_degree(const FuzzyFamily& p) {
  // candidate deltas ascending, 0 first; the cut at delta is
  // {B : p(B) >= delta}, always finite here, so the scan stops at 0
  std::vector<Degree> deltas = p.value_set();
  deltas.insert(deltas.begin(), Degree::zero());
  for (const Degree& delta : deltas) {
    std::uint32_t cut_size = 0;
    for (std::uint32_t b = 0; b < p.carrier().subset_count(); ++b)
      if (p.at(Subset{b}) >= delta) ++cut_size;
    (void)cut_size;  // finite carrier: every cut is finite
    return neg(delta);
  }
  return Degree::one();
}

namespace {

// Shared scaffolding for the literal family enumerations. Families are
// assigned position by position (subset word ascending) with values drawn
// from the grid; derived quantities fold incrementally.
struct FamilyScan {
  const Carrier& c;
  std::vector<Degree> grid;  // ascending
  std::uint32_t count;
  int n;

  explicit FamilyScan(const Carrier& carrier, const FamilyGrid& g)
      : c(carrier), grid(g.values()), count(carrier.subset_count()), n(carrier.size()) {}
};

// inf over grid families R of
//   implies( K(R,X) ⊗ [R ⊆ target],
//            sup over thresholds t of K(R truncated below t) ⊗ FF )
// The truncation sweep realizes the "exists p <= R" search; antitone
// reduction keeps only families obtained from R by cutting low values.
class CoverScan : FamilyScan {
 public:
  CoverScan(const Carrier& carrier, const FuzzyFamily& target, const FamilyGrid& g)
      : FamilyScan(carrier, g) {
    res_.resize(count);
    for (std::uint32_t b = 0; b < count; ++b) {
      res_[b].reserve(grid.size());
      for (const Degree& v : grid) res_[b].push_back(implies(v, target.at(Subset{b})));
    }
    colmax_.assign(static_cast<size_t>(n), Degree::zero());
  }

  Degree run() {
    result_ = Degree::one();
    descend(0, Degree::one());
    return result_;
  }

 private:
  void descend(std::uint32_t pos, Degree resmin) {
    if (pos == count) {
      leaf(resmin);
      return;
    }
    std::array<Degree, 20> saved;
    int touched = 0;
    for (int x = 0; x < n; ++x)
      if (Subset{pos}.contains(x)) saved[static_cast<size_t>(touched++)] = colmax_[static_cast<size_t>(x)];
    for (size_t vi = 0; vi < grid.size(); ++vi) {
      for (int x = 0; x < n; ++x)
        if (Subset{pos}.contains(x))
          colmax_[static_cast<size_t>(x)] = join(colmax_[static_cast<size_t>(x)], grid[vi]);
      descend(pos + 1, meet(resmin, res_[pos][vi]));
      int i = 0;
      for (int x = 0; x < n; ++x)
        if (Subset{pos}.contains(x)) colmax_[static_cast<size_t>(x)] = saved[static_cast<size_t>(i++)];
    }
  }

  void leaf(Degree resmin) {
    Degree k = Degree::one();
    for (int x = 0; x < n; ++x) k = meet(k, colmax_[static_cast<size_t>(x)]);
    const Degree antecedent = tnorm(k, resmin);
    // threshold sweep, descending; the first surviving truncation is max
    Degree consequent = Degree::zero();
    for (size_t vi = grid.size(); vi > 0; --vi) {
      const Degree& t = grid[vi - 1];
      Degree kt = Degree::one();
      for (int x = 0; x < n; ++x) {
        const Degree& m = colmax_[static_cast<size_t>(x)];
        kt = meet(kt, m >= t ? m : Degree::zero());
      }
      const Degree candidate = tnorm(kt, Degree::one());  // FF of the cut is 1
      if (candidate > consequent) consequent = candidate;
      if (consequent > Degree::zero()) break;
    }
    result_ = meet(result_, implies(antecedent, consequent));
  }

  std::vector<std::vector<Degree>> res_;
  std::vector<Degree> colmax_;
  Degree result_;
};

// inf over grid families R of
//   implies( [R ⊆ F_P] ⊗ fI(R), sup_x inf over A not containing x of 1-R(A) )
// fI(R) at the leaf uses its attained form: the consequent is antitone in
// the subfamily, so the inf over p <= R lands on p = R.
class PreclosedScan : FamilyScan {
 public:
  PreclosedScan(const Carrier& carrier, const FuzzyFamily& f_p, const FamilyGrid& g)
      : FamilyScan(carrier, g) {
    res_.resize(count);
    for (std::uint32_t b = 0; b < count; ++b)
      for (const Degree& v : grid) res_[b].push_back(implies(v, f_p.at(Subset{b})));
    rowmin_.assign(static_cast<size_t>(n), Degree::one());
  }

  Degree run() {
    result_ = Degree::one();
    descend(0, Degree::one());
    return result_;
  }

 private:
  void descend(std::uint32_t pos, Degree resmin) {
    if (pos == count) {
      Degree consequent = Degree::zero();
      for (int x = 0; x < n; ++x) consequent = join(consequent, rowmin_[static_cast<size_t>(x)]);
      result_ = meet(result_, implies(tnorm(resmin, consequent), consequent));
      return;
    }
    std::array<Degree, 20> saved;
    int touched = 0;
    for (int x = 0; x < n; ++x)
      if (!Subset{pos}.contains(x)) saved[static_cast<size_t>(touched++)] = rowmin_[static_cast<size_t>(x)];
    for (size_t vi = 0; vi < grid.size(); ++vi) {
      const Degree keep = neg(grid[vi]);
      for (int x = 0; x < n; ++x)
        if (!Subset{pos}.contains(x))
          rowmin_[static_cast<size_t>(x)] = meet(rowmin_[static_cast<size_t>(x)], keep);
      descend(pos + 1, meet(resmin, res_[pos][vi]));
      int i = 0;
      for (int x = 0; x < n; ++x)
        if (!Subset{pos}.contains(x)) rowmin_[static_cast<size_t>(x)] = saved[static_cast<size_t>(i++)];
    }
  }

  std::vector<std::vector<Degree>> res_;
  std::vector<Degree> rowmin_;
  Degree result_;
};

// inf over grid subfamilies p of R of implies((p<=R) ∧ FF(p), consequent).
class SubfamilyScan : FamilyScan {
 public:
  SubfamilyScan(const FuzzyFamily& r, const FamilyGrid& g, SubfamilyOrder order)
      : FamilyScan(r.carrier(), g), order_(order) {
    candidates_.resize(count);
    submax_res_.resize(count);
    for (std::uint32_t b = 0; b < count; ++b)
      for (size_t vi = 0; vi < grid.size(); ++vi) {
        if (order_ == SubfamilyOrder::Crisp && grid[vi] > r.at(Subset{b})) continue;
        candidates_[b].push_back(vi);
        submax_res_[b].push_back(implies(grid[vi], r.at(Subset{b})));
      }
    rowmin_.assign(static_cast<size_t>(n), Degree::one());
  }

  Degree run() {
    result_ = Degree::one();
    descend(0, Degree::one());
    return result_;
  }

 private:
  void descend(std::uint32_t pos, Degree inclmin) {
    if (pos == count) {
      Degree consequent = Degree::zero();
      for (int x = 0; x < n; ++x) consequent = join(consequent, rowmin_[static_cast<size_t>(x)]);
      const Degree ff = Degree::one();  // finite carrier
      const Degree antecedent =
          order_ == SubfamilyOrder::Crisp ? ff : meet(inclmin, ff);
      result_ = meet(result_, implies(antecedent, consequent));
      return;
    }
    std::array<Degree, 20> saved;
    int touched = 0;
    for (int x = 0; x < n; ++x)
      if (!Subset{pos}.contains(x)) saved[static_cast<size_t>(touched++)] = rowmin_[static_cast<size_t>(x)];
    for (size_t ci = 0; ci < candidates_[pos].size(); ++ci) {
      const Degree keep = neg(grid[candidates_[pos][ci]]);
      for (int x = 0; x < n; ++x)
        if (!Subset{pos}.contains(x))
          rowmin_[static_cast<size_t>(x)] = meet(rowmin_[static_cast<size_t>(x)], keep);
      descend(pos + 1, meet(inclmin, submax_res_[pos][ci]));
      int i = 0;
      for (int x = 0; x < n; ++x)
        if (!Subset{pos}.contains(x)) rowmin_[static_cast<size_t>(x)] = saved[static_cast<size_t>(i++)];
    }
  }

  SubfamilyOrder order_;
  std::vector<std::vector<size_t>> candidates_;
  std::vector<std::vector<Degree>> submax_res_;
  std::vector<Degree> rowmin_;
  Degree result_;
};

}  // namespace

Degree fi_degree(const FuzzyFamily& r, const FamilyGrid& grid, SubfamilyOrder order) {
  require_family_cap(r.carrier().size(), "fi_degree");
  return SubfamilyScan(r, grid.with_values(r), order).run();
}

Degree gamma_of_family(const Carrier& c, const FuzzyFamily& fam, const CoverOptions& opts) {
  if (opts.path == EvalPath::Analytic) return Degree::one();
  require_family_cap(c.size(), "gamma (generic)");
  return CoverScan(c, fam, FamilyGrid::for_family(fam, opts.refine)).run();
}

Degree gamma(const Preopen& pre, const CoverOptions& opts) {
  if (opts.path == EvalPath::Analytic) return Degree::one();
  require_family_cap(pre.carrier().size(), "gamma (generic)");
  const FamilyGrid g =
      FamilyGrid::for_space(pre, opts.refine).with_values(pre.space().tau());
  return CoverScan(pre.carrier(), pre.space().tau(), g).run();
}

Degree gamma_p(const Preopen& pre, const CoverOptions& opts) {
  if (opts.path == EvalPath::Analytic) return Degree::one();
  require_family_cap(pre.carrier().size(), "gamma_p (generic)");
  return CoverScan(pre.carrier(), pre.tau_p(), FamilyGrid::for_space(pre, opts.refine)).run();
}

Degree gamma_p_subset(const Preopen& pre, Subset a, const CoverOptions& opts) {
  if (a.empty()) return Degree::one();  // no points to cover
  const Carrier sub = subcarrier(pre.carrier(), a);
  const FuzzyFamily trace = trace_family(pre.tau_p(), a, sub);
  return gamma_of_family(sub, trace, opts);
}

Degree beta1_degree(const Preopen& pre, const FuzzyFamily& phi, const CoverOptions& opts) {
  if (phi.carrier() != pre.carrier()) throw StructuralError("beta1: carrier mismatch");
  if (opts.path == EvalPath::Analytic) return Degree::one();
  require_family_cap(pre.carrier().size(), "beta1 (generic)");
  const FamilyGrid g = FamilyGrid::for_space(pre, opts.refine).with_values(phi);
  return CoverScan(pre.carrier(), phi, g).run();
}

Degree beta5_degree(const Preopen& pre, const CoverOptions& opts) {
  if (opts.path == EvalPath::Analytic) return Degree::one();
  require_family_cap(pre.carrier().size(), "beta5 (generic)");
  return PreclosedScan(pre.carrier(), pre.f_p_family(),
                       FamilyGrid::for_space(pre, opts.refine)).run();
}

namespace {

Degree local_compactness(const Carrier& c, const FuzzyFamily& nbhd_side,
                         const FuzzyFamily& compact_side, const CoverOptions& opts) {
  const auto tables = nbhd_tables(nbhd_side);
  Degree acc = Degree::one();
  for (int x = 0; x < c.size(); ++x) {
    Degree best = Degree::zero();
    for (std::uint32_t b = 1; b < c.subset_count(); ++b) {
      const Degree reach = tables[static_cast<size_t>(x)][b];
      if (reach == Degree::zero()) continue;
      Degree g;
      if (opts.path == EvalPath::Analytic) {
        g = Degree::one();
      } else {
        const Carrier sub = subcarrier(c, Subset{b});
        g = gamma_of_family(sub, trace_family(compact_side, Subset{b}, sub), opts);
      }
      best = join(best, tnorm(reach, g));
    }
    acc = meet(acc, best);
  }
  return acc;
}

}  // namespace

Degree lc_degree(const FuzzySpace& s, const CoverOptions& opts) {
  return local_compactness(s.carrier(), s.tau(), s.tau(), opts);
}

Degree lpc_degree(const Preopen& pre, const CoverOptions& opts) {
  return local_compactness(pre.carrier(), pre.tau_p(), pre.tau_p(), opts);
}

Degree lpc_subset(const Preopen& pre, Subset a, const CoverOptions& opts) {
  if (a.empty()) return Degree::one();
  const Carrier sub = subcarrier(pre.carrier(), a);
  const FuzzyFamily trace = trace_family(pre.tau_p(), a, sub);
  return local_compactness(sub, trace, trace, opts);
}

}  // namespace fuzzitop
