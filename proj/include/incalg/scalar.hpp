#pragma once

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace incalg {

/// Arbitrary-precision rational. Values that fit in a pair of int64 are kept
/// inline; anything larger spills into a GMP rational.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit by design of the literal API
  Rational(std::int64_t n, std::int64_t d);
  explicit Rational(mpq_class q);

  Rational(const Rational& other);
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  [[nodiscard]] bool is_zero() const { return !big_ && num_ == 0; }
  [[nodiscard]] int sign() const;
  [[nodiscard]] bool is_small() const { return !big_; }
  // Only meaningful when is_small().
  [[nodiscard]] std::int64_t numerator() const { return num_; }
  [[nodiscard]] std::int64_t denominator() const { return den_; }
  [[nodiscard]] mpq_class to_mpq() const;
  [[nodiscard]] std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;
  friend bool operator==(const Rational& a, const Rational& b);

 private:
  static Rational from_mpq(mpq_class q);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

/// The coefficient field: exact rationals, or Z/p for a prime p.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p);

  [[nodiscard]] bool is_rational() const { return p_ == 0; }
  [[nodiscard]] std::uint32_t characteristic() const { return p_; }
  [[nodiscard]] std::string name() const;
  friend bool operator==(Field a, Field b) { return a.p_ == b.p_; }

 private:
  friend class Scalar;
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

inline constexpr std::uint32_t kDefaultPrime = 32003;

/// A tagged exact field element: a Rational when the field is Q, a residue
/// in [0, p) otherwise. Mixing fields in one operation is a logic error.
class Scalar {
 public:
  Scalar() = default;
  Scalar(std::int64_t v, Field f);
  Scalar(const Rational& q, Field f);

  static Scalar zero(Field f) { return Scalar(0, f); }
  static Scalar one(Field f) { return Scalar(1, f); }

  [[nodiscard]] Field field() const { return Field(p_); }
  [[nodiscard]] bool is_zero() const { return p_ == 0 ? q_.is_zero() : r_ == 0; }
  [[nodiscard]] bool is_one() const;
  [[nodiscard]] const Rational& rational() const { return q_; }
  [[nodiscard]] std::uint32_t residue() const { return r_; }
  [[nodiscard]] Scalar inverse() const;
  [[nodiscard]] std::string to_string() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  Rational q_;
  std::uint32_t r_ = 0;
  std::uint32_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);
std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace incalg
