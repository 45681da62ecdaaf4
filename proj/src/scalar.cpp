#include "incalg/scalar.hpp"

#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "incalg/errors.hpp"

namespace incalg {

namespace {

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();

bool fits(const mpz_class& z) {
  // Excludes INT64_MIN so that negation never overflows.
  return mpz_sizeinbase(z.get_mpz_t(), 2) <= 63;
}

std::int64_t to_i64(const mpz_class& z) {
  // mpz_get_si is long; long is 64-bit on every supported target.
  return static_cast<std::int64_t>(mpz_get_si(z.get_mpz_t()));
}

mpz_class from_i64(std::int64_t v) {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
  return z;
}

bool mul_ok(std::int64_t a, std::int64_t b, std::int64_t& out) {
  return !__builtin_mul_overflow(a, b, &out) && out != kMin;
}

bool add_ok(std::int64_t a, std::int64_t b, std::int64_t& out) {
  return !__builtin_add_overflow(a, b, &out) && out != kMin;
}

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------- Rational

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw Error("rational with zero denominator");
  if (n == kMin || d == kMin) {
    *this = from_mpq(mpq_class(from_i64(n), from_i64(d)));
    return;
  }
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const std::int64_t g = std::gcd(n, d);
  num_ = n / g;
  den_ = d / g;
}

Rational::Rational(mpq_class q) { *this = from_mpq(std::move(q)); }

Rational::Rational(const Rational& other)
    : num_(other.num_),
      den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
  if (this != &other) {
    num_ = other.num_;
    den_ = other.den_;
    big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
  }
  return *this;
}

Rational Rational::from_mpq(mpq_class q) {
  q.canonicalize();
  Rational r;
  if (fits(q.get_num()) && fits(q.get_den())) {
    r.num_ = to_i64(q.get_num());
    r.den_ = to_i64(q.get_den());
  } else {
    r.big_ = std::make_unique<mpq_class>(std::move(q));
  }
  return r;
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(from_i64(num_), from_i64(den_));
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    std::int64_t n = 0;
    if (a.den_ == 1 && b.den_ == 1) {
      if (add_ok(a.num_, b.num_, n)) return Rational(n);
    } else {
      const std::int64_t g = std::gcd(a.den_, b.den_);
      const std::int64_t ad = a.den_ / g;
      const std::int64_t bd = b.den_ / g;
      std::int64_t x = 0;
      std::int64_t y = 0;
      std::int64_t d = 0;
      if (mul_ok(a.num_, bd, x) && mul_ok(b.num_, ad, y) && add_ok(x, y, n) && mul_ok(a.den_, bd, d)) {
        return Rational(n, d);
      }
    }
  }
  return Rational::from_mpq(a.to_mpq() + b.to_mpq());
}

Rational Rational::operator-() const {
  if (big_) return from_mpq(-*big_);
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rational(0);
    const std::int64_t g1 = std::gcd(a.num_, b.den_);
    const std::int64_t g2 = std::gcd(b.num_, a.den_);
    std::int64_t n = 0;
    std::int64_t d = 0;
    if (mul_ok(a.num_ / g1, b.num_ / g2, n) && mul_ok(a.den_ / g2, b.den_ / g1, d)) {
      Rational r;
      r.num_ = n;
      r.den_ = d;
      return r;
    }
  }
  return Rational::from_mpq(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw Error("division by zero");
  if (!b.big_) {
    Rational inv;
    inv.num_ = b.num_ < 0 ? -b.den_ : b.den_;
    inv.den_ = b.num_ < 0 ? -b.num_ : b.num_;
    return a * inv;
  }
  return Rational::from_mpq(a.to_mpq() / b.to_mpq());
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  // Canonical forms never store a small value as big.
  if (!a.big_ || !b.big_) return false;
  return *a.big_ == *b.big_;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

// ---------------------------------------------------------------- Field

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw Error("field characteristic " + std::to_string(p) + " is not prime");
  return Field(p);
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(std::int64_t v, Field f) : p_(f.characteristic()) {
  if (p_ == 0) {
    q_ = Rational(v);
  } else {
    const auto p = static_cast<std::int64_t>(p_);
    r_ = static_cast<std::uint32_t>(((v % p) + p) % p);
  }
}

Scalar::Scalar(const Rational& q, Field f) : p_(f.characteristic()) {
  if (p_ == 0) {
    q_ = q;
    return;
  }
  const mpq_class m = q.to_mpq();
  const mpz_class pz(p_);
  mpz_class num = m.get_num() % pz;
  mpz_class den = m.get_den() % pz;
  if (num < 0) num += pz;
  if (den == 0) throw Error("denominator vanishes in " + f.name());
  const std::uint64_t n = num.get_ui();
  const std::uint64_t d = den.get_ui();
  r_ = static_cast<std::uint32_t>(n * mod_pow(d, p_ - 2, p_) % p_);
}

bool Scalar::is_one() const {
  if (p_ == 0) return q_.is_small() && q_.numerator() == 1 && q_.denominator() == 1;
  return r_ == 1;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("inverse of zero");
  Scalar s;
  s.p_ = p_;
  if (p_ == 0) {
    s.q_ = Rational(1) / q_;
  } else {
    s.r_ = mod_pow(r_, p_ - 2, p_);
  }
  return s;
}

std::string Scalar::to_string() const { return p_ == 0 ? q_.to_string() : std::to_string(r_); }

namespace {
void require_same_field(const Scalar& a, const Scalar& b) {
  if (!(a.field() == b.field())) throw InternalInconsistency("scalar field mismatch");
}
}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  Scalar s;
  s.p_ = a.p_;
  if (a.p_ == 0) {
    s.q_ = a.q_ + b.q_;
  } else {
    s.r_ = static_cast<std::uint32_t>((std::uint64_t{a.r_} + b.r_) % a.p_);
  }
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s;
  s.p_ = p_;
  if (p_ == 0) {
    s.q_ = -q_;
  } else {
    s.r_ = r_ == 0 ? 0 : p_ - r_;
  }
  return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  Scalar s;
  s.p_ = a.p_;
  if (a.p_ == 0) {
    s.q_ = a.q_ * b.q_;
  } else {
    s.r_ = static_cast<std::uint32_t>(std::uint64_t{a.r_} * b.r_ % a.p_);
  }
  return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) return false;
  return a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace incalg
