#include "fuzzitop/degree.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>

namespace fuzzitop {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Degree Degree::make(__int128 num, __int128 den) {
  if (den == 0) throw DegreeError("degree with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num < 0 || num > den) throw DegreeError("degree outside [0,1]");
  const __int128 g = num == 0 ? den : gcd128(num, den);
  num /= g;
  den /= g;
  constexpr __int128 kMax = std::numeric_limits<long long>::max();
  if (num > kMax || den > kMax) throw DegreeError("degree denominator overflow");
  Degree d;
  d.num_ = static_cast<long long>(num);
  d.den_ = static_cast<long long>(den);
  return d;
}

Degree::Degree(long long num, long long den) { *this = make(num, den); }

std::string Degree::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Degree Degree::parse(std::string_view text) {
  size_t begin = 0, end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  text = text.substr(begin, end - begin);
  if (text.empty()) throw DegreeError("empty degree literal");

  auto parse_digits = [](std::string_view s) -> long long {
    if (s.empty() || s.size() > 18) throw DegreeError("bad degree literal");
    long long v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') throw DegreeError("bad degree literal");
      v = v * 10 + (c - '0');
    }
    return v;
  };

  const size_t slash = text.find('/');
  if (slash != std::string_view::npos) {
    const long long p = parse_digits(text.substr(0, slash));
    const long long q = parse_digits(text.substr(slash + 1));
    if (q == 0) throw DegreeError("zero denominator in degree literal");
    return make(p, q);
  }
  const size_t dot = text.find('.');
  if (dot != std::string_view::npos) {
    const long long whole = dot == 0 ? 0 : parse_digits(text.substr(0, dot));
    const std::string_view frac = text.substr(dot + 1);
    long long scale = 1;
    const long long digits = frac.empty() ? 0 : parse_digits(frac);
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    return make(static_cast<__int128>(whole) * scale + digits, scale);
  }
  return make(parse_digits(text), 1);
}

Degree tnorm(const Degree& a, const Degree& b) {
  const __int128 den = static_cast<__int128>(a.den()) * b.den();
  const __int128 num = static_cast<__int128>(a.num()) * b.den() +
                       static_cast<__int128>(b.num()) * a.den() - den;
  if (num <= 0) return Degree::zero();
  return Degree::make(num, den);
}

Degree implies(const Degree& a, const Degree& b) {
  const __int128 den = static_cast<__int128>(a.den()) * b.den();
  const __int128 num = den - static_cast<__int128>(a.num()) * b.den() +
                       static_cast<__int128>(b.num()) * a.den();
  if (num >= den) return Degree::one();
  return Degree::make(num, den);
}

Degree meet(const Degree& a, const Degree& b) { return a <= b ? a : b; }

Degree join(const Degree& a, const Degree& b) { return a >= b ? a : b; }

Degree neg(const Degree& a) { return Degree(a.den() - a.num(), a.den()); }

Degree iff(const Degree& a, const Degree& b) {
  return a <= b ? implies(b, a) : implies(a, b);
}

}  // namespace fuzzitop
