#pragma once

/**
 * @file series.hpp
 * @brief Rational functions P(q)/(1-q)^m and their Taylor expansion at q = 0.
 *
 * Every generating function in this library has all of its poles at q = 1,
 * so the denominator is always a power of (1 - q). Normal form: the
 * numerator is not divisible by (1 - q) unless the pole order is already 0.
 * Under that normal form structural equality is equality of functions.
 */

#include <string>
#include <vector>

#include "superdim/poly.hpp"

namespace superdim {

class RationalSeries {
 public:
  /// The zero series.
  RationalSeries() = default;

  const Poly& numerator() const { return num_; }
  int pole_order() const { return pole_; }
  bool is_zero() const { return num_.is_zero(); }

  /// 1/(1-q)
  static RationalSeries geometric();
  static RationalSeries polynomial(const Poly& p);

  friend RationalSeries normalize(Poly numer, int pole_order);
  friend bool operator==(const RationalSeries&, const RationalSeries&) = default;

  std::string str(const std::string& var = "q") const;

 private:
  Poly num_;
  int pole_ = 0;
};

/// Cancels common (1-q) factors. A negative pole order is rejected; when the
/// numerator carries more (1-q) factors than the pole order the result is a
/// polynomial with pole order 0.
RationalSeries normalize(Poly numer, int pole_order);

RationalSeries operator+(const RationalSeries& a, const RationalSeries& b);
RationalSeries operator*(const Rational& s, const RationalSeries& a);

/// q·d/dq, i.e. multiplies the k-th Taylor coefficient by k.
RationalSeries apply_q_ddq(const RationalSeries& s);

/// First n_terms Taylor coefficients at q = 0, by long division of the
/// numerator by the expanded (1-q)^m.
std::vector<Rational> expand(const RationalSeries& s, int n_terms);

}  // namespace superdim
