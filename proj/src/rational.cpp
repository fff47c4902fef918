#include "coincide/rational.hpp"

#include "coincide/error.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace coincide {

namespace {

__int128 abs128(__int128 v) { return v < 0 ? -v : v; }

__int128 gcd128(__int128 a, __int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(__int128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

std::optional<std::int64_t> isqrt_exact(std::int64_t v) {
  if (v < 0)
    return std::nullopt;
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<long double>(v))));
  for (std::int64_t c = std::max<std::int64_t>(0, r - 2); c <= r + 2; ++c)
    if (static_cast<__int128>(c) * c == v)
      return c;
  return std::nullopt;
}

} // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0)
    throw DomainError("rational with zero denominator");
  auto r = from(n, d);
  if (!r)
    throw DomainError("rational out of range");
  *this = *r;
}

std::optional<Rational> Rational::from(__int128 n, __int128 d) {
  if (d == 0)
    return std::nullopt;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const __int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (!fits(n) || !fits(d))
    return std::nullopt;
  Rational r;
  r.num_ = static_cast<std::int64_t>(n);
  r.den_ = static_cast<std::int64_t>(d);
  return r;
}

std::string Rational::str() const {
  if (den_ == 1)
    return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::optional<Rational> Rational::sqrt() const {
  auto n = isqrt_exact(num_);
  auto d = isqrt_exact(den_);
  if (!n || !d)
    return std::nullopt;
  return from(*n, *d);
}

std::optional<Rational> add(const Rational& a, const Rational& b) {
  return Rational::from(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                        static_cast<__int128>(a.den_) * b.den_);
}

std::optional<Rational> sub(const Rational& a, const Rational& b) {
  return Rational::from(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                        static_cast<__int128>(a.den_) * b.den_);
}

std::optional<Rational> mul(const Rational& a, const Rational& b) {
  return Rational::from(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

std::optional<Rational> div(const Rational& a, const Rational& b) {
  if (b.num_ == 0)
    return std::nullopt;
  return Rational::from(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
}

std::string Real::str() const {
  if (exact)
    return exact->str();
  std::ostringstream os;
  os.precision(17);
  os << value;
  return os.str();
}

namespace {

template <class ExactOp, class FloatOp>
Real combine(const Real& a, const Real& b, ExactOp exact_op, FloatOp float_op) {
  if (a.exact && b.exact)
    if (auto q = exact_op(*a.exact, *b.exact))
      return Real(*q);
  return Real::approx(float_op(a.value, b.value));
}

} // namespace

Real operator+(const Real& a, const Real& b) {
  return combine(a, b, [](auto& x, auto& y) { return add(x, y); }, [](double x, double y) { return x + y; });
}

Real operator-(const Real& a, const Real& b) {
  return combine(a, b, [](auto& x, auto& y) { return sub(x, y); }, [](double x, double y) { return x - y; });
}

Real operator*(const Real& a, const Real& b) {
  return combine(a, b, [](auto& x, auto& y) { return mul(x, y); }, [](double x, double y) { return x * y; });
}

Real operator/(const Real& a, const Real& b) {
  if (b.exact ? b.exact->num() == 0 : b.value == 0.0)
    throw DomainError("division by zero");
  return combine(a, b, [](auto& x, auto& y) { return div(x, y); }, [](double x, double y) { return x / y; });
}

Real abs(const Real& a) {
  if (a.exact)
    return a.exact->num() < 0 ? Real(*sub(Rational(0), *a.exact)) : a;
  return Real::approx(std::abs(a.value));
}

Real sqrt(const Real& a) {
  if (a.exact ? a.exact->num() < 0 : a.value < 0.0)
    throw DomainError("square root of a negative number");
  if (a.exact)
    if (auto q = a.exact->sqrt())
      return Real(*q);
  return Real::approx(std::sqrt(a.value));
}

bool operator==(const Real& a, const Real& b) {
  if (a.exact && b.exact)
    return *a.exact == *b.exact;
  return a.value == b.value;
}

bool less_equal(const Real& a, const Real& b) {
  if (a.exact && b.exact)
    return *a.exact <= *b.exact;
  return a.value <= b.value;
}

} // namespace coincide
