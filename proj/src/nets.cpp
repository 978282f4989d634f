#include "fuzzitop/nets.hpp"

namespace fuzzitop {

namespace {

void check_net(const Preopen& pre, NetKernel net, int x) {
  if (net.kernel.empty()) throw StructuralError("net kernel must be nonempty");
  if (!is_subset(net.kernel, pre.carrier().full()))
    throw StructuralError("net kernel outside carrier");
  if (x < 0 || x >= pre.carrier().size())
    throw StructuralError("point index out of range");
}

}  // namespace

Degree pre_converges(const Preopen& pre, NetKernel net, int x) {
  check_net(pre, net, x);
  const Carrier& c = pre.carrier();
  Degree acc = Degree::one();
  for (std::uint32_t a = 0; a < c.subset_count(); ++a)
    if (!is_subset(net.kernel, Subset{a}))
      acc = meet(acc, neg(pre.nbhd_p(x, Subset{a})));
  return acc;
}

Degree pre_accumulates(const Preopen& pre, NetKernel net, int x) {
  check_net(pre, net, x);
  const Carrier& c = pre.carrier();
  Degree acc = Degree::one();
  for (std::uint32_t a = 0; a < c.subset_count(); ++a)
    if (are_disjoint(Subset{a}, net.kernel))
      acc = meet(acc, neg(pre.nbhd_p(x, Subset{a})));
  return acc;
}

FuzzyPointSet adh_p(const Preopen& pre, NetKernel net) {
  FuzzyPointSet out(pre.carrier());
  for (int x = 0; x < pre.carrier().size(); ++x)
    out.set(x, pre_accumulates(pre, net, x));
  return out;
}

bool is_universal(const Carrier& c, NetKernel net) {
  if (net.kernel.empty() || !is_subset(net.kernel, c.full()))
    throw StructuralError("net kernel must be a nonempty carrier subset");
  return popcount(net.kernel) == 1;
}

std::vector<NetKernel> subnet_reps(NetKernel net) {
  if (net.kernel.empty()) throw StructuralError("net kernel must be nonempty");
  std::vector<NetKernel> out;
  const std::uint32_t k = net.kernel.bits;
  std::uint32_t sub = 0;
  while (true) {
    sub = (sub - k) & k;  // next nonempty submask (starts past 0)
    out.push_back({Subset{sub}});
    if (sub == k) break;
  }
  return out;
}

Degree beta2_degree(const Preopen& pre) {
  const Carrier& c = pre.carrier();
  Degree acc = Degree::one();
  for (int y = 0; y < c.size(); ++y) {
    const NetKernel constant{Subset{1u << y}};
    Degree best = Degree::zero();
    for (int x = 0; x < c.size(); ++x) best = join(best, pre_converges(pre, constant, x));
    acc = meet(acc, best);
  }
  return acc;
}

Degree beta3_degree(const Preopen& pre) {
  const Carrier& c = pre.carrier();
  Degree acc = Degree::one();
  for (std::uint32_t k = 1; k < c.subset_count(); ++k) {
    Degree best = Degree::zero();
    for (const NetKernel& sub : subnet_reps({Subset{k}}))
      for (int x = 0; x < c.size(); ++x) best = join(best, pre_converges(pre, sub, x));
    acc = meet(acc, best);
  }
  return acc;
}

Degree beta4_degree(const Preopen& pre) {
  const Carrier& c = pre.carrier();
  Degree acc = Degree::one();
  for (std::uint32_t k = 1; k < c.subset_count(); ++k) {
    const FuzzyPointSet adherence = adh_p(pre, {Subset{k}});
    acc = meet(acc, adherence.sup_all());
  }
  return acc;
}

ExplicitNet ExplicitNet::sequence(std::vector<int> values, size_t period) {
  std::vector<std::pair<int, int>> order;
  for (size_t i = 0; i + 1 < values.size(); ++i)
    order.push_back({static_cast<int>(i), static_cast<int>(i + 1)});
  return ExplicitNet(std::move(values), period, std::move(order));
}

ExplicitNet::ExplicitNet(std::vector<int> values, size_t period,
                         std::vector<std::pair<int, int>> order)
    : values_(std::move(values)), period_(period) {
  const size_t k = values_.size();
  if (k == 0 || period_ == 0 || period_ > k)
    throw StructuralError("explicit net needs a nonempty periodic tail");
  // reflexive-transitive closure of the given pairs
  std::vector<std::vector<bool>> le(k, std::vector<bool>(k, false));
  for (size_t i = 0; i < k; ++i) le[i][i] = true;
  for (auto [a, b] : order) {
    if (a < 0 || b < 0 || static_cast<size_t>(a) >= k || static_cast<size_t>(b) >= k)
      throw StructuralError("explicit net order stage out of range");
    le[static_cast<size_t>(a)][static_cast<size_t>(b)] = true;
  }
  for (size_t m = 0; m < k; ++m)
    for (size_t i = 0; i < k; ++i)
      if (le[i][m])
        for (size_t j = 0; j < k; ++j)
          if (le[m][j]) le[i][j] = true;
  auto bounded = [&](size_t i, size_t j) {
    for (size_t m = 0; m < k; ++m)
      if (le[i][m] && le[j][m]) return true;
    return false;
  };
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j)
      if (!bounded(i, j))
        throw StructuralError("explicit net domain is not directed");
}

bool ExplicitNet::almost_in(Subset a) const {
  // eventually in A: every value of the repeating tail lies in A
  for (size_t i = values_.size() - period_; i < values_.size(); ++i)
    if (!a.contains(values_[i])) return false;
  return true;
}

bool ExplicitNet::often_in(Subset a) const {
  for (size_t i = values_.size() - period_; i < values_.size(); ++i)
    if (a.contains(values_[i])) return true;
  return false;
}

Subset ExplicitNet::cofinal_values() const {
  Subset e;
  for (size_t i = values_.size() - period_; i < values_.size(); ++i)
    e.bits |= 1u << values_[i];
  return e;
}

std::pair<Degree, Degree> oracle_net_predicates(const Preopen& pre,
                                                const ExplicitNet& net, int x) {
  const Carrier& c = pre.carrier();
  if (x < 0 || x >= c.size()) throw StructuralError("point index out of range");
  Degree conv = Degree::one();
  Degree accum = Degree::one();
  for (std::uint32_t a = 0; a < c.subset_count(); ++a) {
    const Degree penalty = neg(pre.nbhd_p(x, Subset{a}));
    if (!net.almost_in(Subset{a})) conv = meet(conv, penalty);
    if (!net.often_in(Subset{a})) accum = meet(accum, penalty);
  }
  return {conv, accum};
}

}  // namespace fuzzitop
