#include "quadlab/scalar.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include "quadlab/errors.hpp"

namespace quadlab {

namespace {

mpq_class canonical(mpq_class q) {
  q.canonicalize();
  return q;
}

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

// Accepts [+-]digits[.digits] and [+-]digits/digits.
mpq_class parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  mpq_class q;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den)) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    q = mpq_class(mpz_class(std::string(num), 10), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((!whole.empty() && !is_digits(whole)) || !is_digits(frac))
      throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class digits(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    q = mpq_class(digits, scale);
  } else {
    if (!is_digits(body)) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    q = mpq_class(mpz_class(std::string(body), 10));
  }
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

}  // namespace

Scalar::Scalar(mpq_class q) : value_(canonical(std::move(q))) {}

Scalar Scalar::from_int(long v, Mode mode) {
  if (mode == Mode::Exact) return Scalar(mpq_class(v));
  return Scalar(static_cast<double>(v));
}

Scalar Scalar::ratio(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Scalar(mpq_class(num, den));
}

Scalar Scalar::parse(std::string_view text, Mode mode) {
  if (mode == Mode::Exact) return Scalar(parse_rational(text));
  if (text.find('/') != std::string_view::npos) return Scalar(parse_rational(text).get_d());
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v))
    throw std::invalid_argument("malformed number '" + std::string(text) + "'");
  return Scalar(v);
}

double Scalar::to_double() const {
  if (auto* d = std::get_if<double>(&value_)) return *d;
  return std::get<mpq_class>(value_).get_d();
}

const mpq_class& Scalar::rational() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw ModeMismatch("rational() requested from an approximate scalar");
}

int Scalar::sign() const {
  if (auto* d = std::get_if<double>(&value_)) return (*d > 0) - (*d < 0);
  return sgn(std::get<mpq_class>(value_));
}

Scalar Scalar::abs() const { return sign() < 0 ? -*this : *this; }

std::optional<Scalar> Scalar::exact_sqrt() const {
  const mpq_class& q = rational();
  if (sgn(q) < 0) return std::nullopt;
  mpz_class n = q.get_num();
  mpz_class d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Scalar(mpq_class(rn, rd));
}

Scalar Scalar::sqrt() const {
  if (auto* d = std::get_if<double>(&value_)) return Scalar(std::sqrt(*d));
  if (auto r = exact_sqrt()) return *r;
  throw NonPythagorean("no rational square root of " + to_string());
}

std::string Scalar::to_string() const {
  if (auto* d = std::get_if<double>(&value_)) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), *d);
    return std::string(buf, ptr);
  }
  const mpq_class& q = std::get<mpq_class>(value_);
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Scalar Scalar::operator-() const {
  if (auto* d = std::get_if<double>(&value_)) return Scalar(-*d);
  return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

void require_same_mode(const Scalar& a, const Scalar& b) {
  if (a.mode() != b.mode()) throw ModeMismatch("cannot combine approximate and exact scalars");
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_mode(*this, o);
  if (auto* d = std::get_if<double>(&value_)) *d += std::get<double>(o.value_);
  else std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_mode(*this, o);
  if (auto* d = std::get_if<double>(&value_)) *d -= std::get<double>(o.value_);
  else std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_mode(*this, o);
  if (auto* d = std::get_if<double>(&value_)) *d *= std::get<double>(o.value_);
  else std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same_mode(*this, o);
  if (auto* d = std::get_if<double>(&value_)) {
    *d /= std::get<double>(o.value_);
  } else {
    const mpq_class& den = std::get<mpq_class>(o.value_);
    if (sgn(den) == 0) throw std::domain_error("exact division by zero");
    std::get<mpq_class>(value_) /= den;
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  require_same_mode(a, b);
  if (auto* d = std::get_if<double>(&a.value_)) return *d == std::get<double>(b.value_);
  return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

std::partial_ordering operator<=>(const Scalar& a, const Scalar& b) {
  require_same_mode(a, b);
  if (auto* d = std::get_if<double>(&a.value_)) return *d <=> std::get<double>(b.value_);
  int c = cmp(std::get<mpq_class>(a.value_), std::get<mpq_class>(b.value_));
  return c < 0 ? std::partial_ordering::less : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
}

Scalar abs(const Scalar& s) { return s.abs(); }
Scalar sqrt(const Scalar& s) { return s.sqrt(); }

Scalar max_abs(const Scalar& a, const Scalar& b) {
  Scalar x = a.abs();
  Scalar y = b.abs();
  return x < y ? y : x;
}

bool approx_equal(const Scalar& a, const Scalar& b, double rel, double abs_floor) {
  require_same_mode(a, b);
  if (a.is_exact()) return a == b;
  double x = a.to_double();
  double y = b.to_double();
  double scale = std::max(std::abs(x), std::abs(y));
  return std::abs(x - y) <= std::max(rel * scale, abs_floor);
}

}  // namespace quadlab
