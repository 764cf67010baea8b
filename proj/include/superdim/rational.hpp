#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalars and the Eigen vector types built on them.
 *
 * Rational is a thin value type over GMP's mpq_class. It is always kept in
 * canonical form: gcd(|num|, den) = 1, den >= 1, and zero is 0/1. Every
 * pairing, mark, ρ-coordinate and series coefficient in the library is a
 * Rational, so nothing in the computation ever rounds.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include <Eigen/Core>

namespace superdim {

using BigInt = mpz_class;

class Rational {
 public:
  Rational() = default;
  Rational(int v) : q_(v) {}                  // NOLINT(google-explicit-constructor)
  Rational(long v) : q_(v) {}                 // NOLINT(google-explicit-constructor)
  Rational(long long v) : q_(BigInt(std::to_string(v))) {}  // NOLINT
  Rational(const BigInt& v) : q_(v) {}        // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Parses "p", "-p", "p/q" (optionally surrounded by whitespace).
  static Rational parse(std::string_view text);
  static std::optional<Rational> try_parse(std::string_view text);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  const mpq_class& value() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// Integer value; throws std::domain_error when the value is not integral.
  BigInt to_integer() const;
  /// Checked narrowing of an integral value.
  std::optional<long> to_long() const;

  /// Canonical "p/q" form, "p" for integers.
  std::string str() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }
  friend Rational operator+(const Rational& a) { return a; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class q_{0};
};

Rational abs(const Rational& r);
/// x^e for e >= 0.
Rational pow(const Rational& x, unsigned e);
BigInt factorial(unsigned n);
BigInt binomial(long n, long k);
/// Decimal string of a big integer.
std::string to_string(const BigInt& v);

using Vec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

Vec zero_vec(Eigen::Index n);
Vec unit_vec(Eigen::Index n, Eigen::Index i, const Rational& scale = 1);
/// Solves A x = b exactly by Gauss-Jordan elimination. Returns nullopt when A
/// is not of full column rank or the system is inconsistent.
std::optional<Vec> solve_exact(const Mat& a, const Vec& b);

}  // namespace superdim

namespace Eigen {

template <>
struct NumTraits<superdim::Rational> : GenericNumTraits<superdim::Rational> {
  using Real = superdim::Rational;
  using NonInteger = superdim::Rational;
  using Literal = superdim::Rational;
  using Nested = superdim::Rational;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
