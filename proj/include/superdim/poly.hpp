#pragma once

/// @file poly.hpp
/// Dense univariate polynomials over an exact scalar field.

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "superdim/rational.hpp"

namespace superdim {

/// Coefficients are stored low degree first with trailing zeros stripped, so
/// the zero polynomial has no coefficients and degree() == -1.
template <class Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(const Scalar& c) { return Polynomial(std::vector<Scalar>{c}); }
  static Polynomial monomial(const Scalar& c, int degree) {
    std::vector<Scalar> v(static_cast<std::size_t>(degree) + 1, Scalar(0));
    v.back() = c;
    return Polynomial(std::move(v));
  }
  /// c0 + c1·t
  static Polynomial affine(const Scalar& c0, const Scalar& c1) { return Polynomial({c0, c1}); }
  /// (1 - t)^e
  static Polynomial one_minus_t_pow(int e) {
    Polynomial p = constant(Scalar(1));
    const Polynomial f = affine(Scalar(1), Scalar(-1));
    for (int i = 0; i < e; ++i) p *= f;
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coefficients() const { return c_; }
  Scalar operator[](int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : Scalar(0);
  }
  Scalar leading() const { return c_.empty() ? Scalar(0) : c_.back(); }

  Scalar eval(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    std::vector<Scalar> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Scalar(static_cast<long>(i)));
    return Polynomial(std::move(d));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) { return *this += -o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const Scalar& s) {
    for (auto& x : c_) x *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Divides by (1 - t) when t = 1 is a root; returns false and leaves the
  /// polynomial untouched otherwise.
  bool divide_by_one_minus_t() {
    if (is_zero() || !(eval(Scalar(1)) == Scalar(0))) return false;
    // p(t) = (t - 1) s(t) by synthetic division, then negate.
    const std::size_t n = c_.size();
    std::vector<Scalar> s(n - 1, Scalar(0));
    Scalar carry(0);
    for (std::size_t i = n - 1; i >= 1; --i) {
      carry = c_[i] + carry;
      s[i - 1] = carry;
    }
    for (auto& x : s) x = -x;
    c_ = std::move(s);
    trim();
    return true;
  }

  /// Human-readable form with descending powers, e.g. "9q^2+38q+1".
  std::string str(const std::string& var = "q") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      const Scalar& c = c_[static_cast<std::size_t>(i)];
      if (c == Scalar(0)) continue;
      const bool neg = c < Scalar(0);
      const Scalar mag = neg ? -c : c;
      if (first) {
        if (neg) os << '-';
      } else {
        os << (neg ? '-' : '+');
      }
      first = false;
      const bool unit = mag == Scalar(1);
      if (i == 0 || !unit) os << mag;
      if (i >= 1) os << var;
      if (i >= 2) os << '^' << i;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == Scalar(0)) c_.pop_back();
  }

  std::vector<Scalar> c_;
};

using Poly = Polynomial<Rational>;

}  // namespace superdim
