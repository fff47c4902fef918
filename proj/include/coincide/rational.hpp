#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace coincide {

/// Reduced fraction num/den with den > 0, held in 64-bit integers.
/// Arithmetic is checked: results that do not fit come back empty.
class Rational {
public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {} // NOLINT(google-explicit-constructor)
  /// Throws DomainError for a zero denominator.
  Rational(std::int64_t n, std::int64_t d);

  /// Reduced n/d when it fits in 64 bits.
  static std::optional<Rational> from(__int128 n, __int128 d);

  [[nodiscard]] constexpr std::int64_t num() const noexcept { return num_; }
  [[nodiscard]] constexpr std::int64_t den() const noexcept { return den_; }
  [[nodiscard]] double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  [[nodiscard]] std::string str() const;

  /// Exact square root when num and den are perfect squares.
  [[nodiscard]] std::optional<Rational> sqrt() const;

  friend std::optional<Rational> add(const Rational& a, const Rational& b);
  friend std::optional<Rational> sub(const Rational& a, const Rational& b);
  friend std::optional<Rational> mul(const Rational& a, const Rational& b);
  friend std::optional<Rational> div(const Rational& a, const Rational& b);

  friend constexpr bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// A real number as a double, tagged with its exact rational value when one
/// is known. Arithmetic keeps the tag while every operand is exact and the
/// result fits; otherwise only the floating value survives.
struct Real {
  double value = 0.0;
  std::optional<Rational> exact;

  constexpr Real() = default;
  Real(const Rational& q) : value(q.to_double()), exact(q) {} // NOLINT(google-explicit-constructor)
  static Real approx(double v) {
    Real r;
    r.value = v;
    return r;
  }

  [[nodiscard]] bool is_rational() const noexcept { return exact.has_value(); }
  [[nodiscard]] std::string str() const;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real abs(const Real& a);
/// Exact when the radicand is an exact perfect square. Negative radicands
/// are a DomainError.
Real sqrt(const Real& a);

/// Exact comparison when both sides are exact, floating otherwise.
bool operator==(const Real& a, const Real& b);
bool less_equal(const Real& a, const Real& b);

} // namespace coincide
