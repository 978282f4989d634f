#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fuzzitop {

struct DegreeError : std::domain_error {
  using std::domain_error::domain_error;
};

// Exact rational truth value in [0,1], stored reduced with den > 0.
// The Lukasiewicz connectives below are closed over the unit interval and
// never leave the rational lattice, so every comparison downstream is exact.
class Degree {
 public:
  constexpr Degree() = default;  // zero
  Degree(long long num, long long den);

  static Degree zero() { return Degree(); }
  static Degree one() {
    Degree d;
    d.num_ = 1;
    return d;
  }

  long long num() const { return num_; }
  long long den() const { return den_; }

  // Canonical form "p/q", reduced, q > 0 (so zero prints as "0/1").
  std::string str() const;
  // Accepts "p/q" or a decimal literal ("0.75"); value must lie in [0,1].
  static Degree parse(std::string_view text);

  friend bool operator==(const Degree& a, const Degree& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // Reduces and range-checks a raw fraction; used by the connectives.
  static Degree make(__int128 num, __int128 den);

 private:
  long long num_ = 0;
  long long den_ = 1;
};

// a (*) b = max(0, a + b - 1)
Degree tnorm(const Degree& a, const Degree& b);
// a -> b = min(1, 1 - a + b); equals 1 iff a <= b
Degree implies(const Degree& a, const Degree& b);
// min / max / 1 - a / 1 - |a - b|
Degree meet(const Degree& a, const Degree& b);
Degree join(const Degree& a, const Degree& b);
Degree neg(const Degree& a);
Degree iff(const Degree& a, const Degree& b);

// Quantifier folds: inf over nothing is 1, sup over nothing is 0.
template <typename Range>
Degree inf_over(const Range& items) {
  Degree acc = Degree::one();
  for (const Degree& d : items) acc = meet(acc, d);
  return acc;
}

template <typename Range>
Degree sup_over(const Range& items) {
  Degree acc = Degree::zero();
  for (const Degree& d : items) acc = join(acc, d);
  return acc;
}

inline Degree inf_over(std::initializer_list<Degree> items) {
  return inf_over<std::initializer_list<Degree>>(items);
}
inline Degree sup_over(std::initializer_list<Degree> items) {
  return sup_over<std::initializer_list<Degree>>(items);
}

}  // namespace fuzzitop
