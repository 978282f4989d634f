#pragma once

#include <vector>

#include "fuzzitop/carrier.hpp"
#include "fuzzitop/degree.hpp"

namespace fuzzitop {

// A total map P(X) -> [0,1], indexed by membership word. Houses the
// topology tau itself as well as covers, pre-bases and pre-subbases.
class FuzzyFamily {
 public:
  explicit FuzzyFamily(Carrier carrier);

  const Carrier& carrier() const { return carrier_; }
  Degree at(Subset s) const { return deg_[s.bits]; }
  void set(Subset s, Degree d) { deg_[s.bits] = d; }

  // Distinct degrees taken by the family, ascending.
  std::vector<Degree> value_set() const;

  friend bool operator==(const FuzzyFamily&, const FuzzyFamily&) = default;

 private:
  Carrier carrier_;
  std::vector<Degree> deg_;
};

// A fuzzy subset of the carrier: one degree per point.
class FuzzyPointSet {
 public:
  explicit FuzzyPointSet(Carrier carrier, Degree fill = Degree::zero());

  const Carrier& carrier() const { return carrier_; }
  Degree at(int x) const { return mu_[static_cast<size_t>(x)]; }
  void set(int x, Degree d) { mu_[static_cast<size_t>(x)] = d; }

  Degree inf_on(Subset s) const;  // inf over points of s; 1 when s is empty
  Degree sup_all() const;

  friend bool operator==(const FuzzyPointSet&, const FuzzyPointSet&) = default;

 private:
  Carrier carrier_;
  std::vector<Degree> mu_;
};

// N[x][A] = sup of fam(B) over B with x in B and B inside A.
// The generic pre-neighborhood construction; applied to tau it gives N_x,
// applied to tau_P it gives N_x^P, applied to a trace family it gives the
// subspace pre-neighborhoods.
std::vector<std::vector<Degree>> nbhd_tables(const FuzzyFamily& fam);

// Trace of a family onto A: (fam/A)(B) = sup over V with V∩A = B of fam(V).
// sub must list exactly the points of A, in carrier order.
FuzzyFamily trace_family(const FuzzyFamily& fam, Subset a, const Carrier& sub);

}  // namespace fuzzitop
