#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace quadlab {

enum class Mode { Approximate, Exact };

/// A number that is either a binary64 value or an exact rational p/q.
///
/// Every geometric routine is written once against this type. The mode is
/// fixed when a value is created and propagates through arithmetic; combining
/// an approximate and an exact operand throws ModeMismatch. Exact values are
/// always kept in lowest terms with a positive denominator.
class Scalar {
 public:
  Scalar() : value_(0.0) {}
  Scalar(double v) : value_(v) {}  // NOLINT: approximate literals read naturally
  explicit Scalar(mpq_class q);

  static Scalar from_int(long v, Mode mode);
  static Scalar ratio(long num, long den);  // exact
  static Scalar zero(Mode mode) { return from_int(0, mode); }
  static Scalar one(Mode mode) { return from_int(1, mode); }

  /// Parses "p/q", an integer, or a decimal literal. In exact mode decimals
  /// are converted digit-for-digit ("0.37" -> 37/100). Throws
  /// std::invalid_argument on malformed text.
  static Scalar parse(std::string_view text, Mode mode);

  Mode mode() const { return value_.index() == 0 ? Mode::Approximate : Mode::Exact; }
  bool is_exact() const { return mode() == Mode::Exact; }

  double to_double() const;
  /// Exact value; throws ModeMismatch in approximate mode.
  const mpq_class& rational() const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  Scalar abs() const;

  /// Square root. Approximate mode uses std::sqrt; exact mode succeeds only
  /// when the value is the square of a rational and throws NonPythagorean
  /// otherwise.
  Scalar sqrt() const;
  /// Exact square root if it exists, std::nullopt otherwise (exact mode only).
  std::optional<Scalar> exact_sqrt() const;

  /// "p/q" in exact mode, shortest round-trip decimal otherwise.
  std::string to_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  // Integer operands adopt the mode of the scalar they meet.
  template <std::integral I>
  friend Scalar operator*(const Scalar& a, I k) { return a * from_int(static_cast<long>(k), a.mode()); }
  template <std::integral I>
  friend Scalar operator*(I k, const Scalar& a) { return a * k; }
  template <std::integral I>
  friend Scalar operator/(const Scalar& a, I k) { return a / from_int(static_cast<long>(k), a.mode()); }
  template <std::integral I>
  friend Scalar operator+(const Scalar& a, I k) { return a + from_int(static_cast<long>(k), a.mode()); }
  template <std::integral I>
  friend Scalar operator-(const Scalar& a, I k) { return a - from_int(static_cast<long>(k), a.mode()); }
  template <std::integral I>
  friend Scalar operator-(I k, const Scalar& a) { return from_int(static_cast<long>(k), a.mode()) - a; }

  /// Exact comparison in exact mode, IEEE comparison otherwise.
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::partial_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  std::variant<double, mpq_class> value_;
};

Scalar abs(const Scalar& s);
Scalar sqrt(const Scalar& s);
Scalar max_abs(const Scalar& a, const Scalar& b);

/// |a - b| <= max(rel * max(|a|, |b|), abs_floor) for approximate values;
/// exact equality in exact mode.
bool approx_equal(const Scalar& a, const Scalar& b, double rel, double abs_floor);

/// Throws ModeMismatch unless a and b share a mode.
void require_same_mode(const Scalar& a, const Scalar& b);

}  // namespace quadlab
