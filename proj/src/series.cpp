#include "superdim/series.hpp"

#include <stdexcept>

namespace superdim {

RationalSeries RationalSeries::geometric() { return normalize(Poly::constant(1), 1); }

RationalSeries RationalSeries::polynomial(const Poly& p) { return normalize(p, 0); }

RationalSeries normalize(Poly numer, int pole_order) {
  if (pole_order < 0) throw std::invalid_argument("normalize: negative pole order");
  RationalSeries s;
  if (numer.is_zero()) return s;
  while (pole_order > 0 && numer.divide_by_one_minus_t()) --pole_order;
  s.num_ = std::move(numer);
  s.pole_ = pole_order;
  return s;
}

RationalSeries operator+(const RationalSeries& a, const RationalSeries& b) {
  const int m = std::max(a.pole_order(), b.pole_order());
  Poly n = a.numerator() * Poly::one_minus_t_pow(m - a.pole_order()) +
           b.numerator() * Poly::one_minus_t_pow(m - b.pole_order());
  return normalize(std::move(n), m);
}

RationalSeries operator*(const Rational& s, const RationalSeries& a) {
  return normalize(a.numerator() * s, a.pole_order());
}

RationalSeries apply_q_ddq(const RationalSeries& s) {
  // q d/dq [P (1-q)^-m] = q [P'(1-q) + m P] / (1-q)^(m+1)
  const Poly& p = s.numerator();
  const int m = s.pole_order();
  Poly inner = p.derivative() * Poly::affine(1, -1) + p * Rational(m);
  return normalize(Poly::monomial(1, 1) * inner, m + 1);
}

std::vector<Rational> expand(const RationalSeries& s, int n_terms) {
  if (n_terms < 1) throw std::invalid_argument("expand: n_terms must be >= 1");
  const Poly den = Poly::one_minus_t_pow(s.pole_order());
  const Poly& num = s.numerator();
  std::vector<Rational> c(static_cast<std::size_t>(n_terms), Rational(0));
  // den[0] == 1, so each step needs no division.
  for (int k = 0; k < n_terms; ++k) {
    Rational acc = num[k];
    for (int j = 1; j <= std::min(k, den.degree()); ++j)
      acc -= den[j] * c[static_cast<std::size_t>(k - j)];
    c[static_cast<std::size_t>(k)] = acc;
  }
  return c;
}

std::string RationalSeries::str(const std::string& var) const {
  if (pole_ == 0) return num_.str(var);
  std::string d = "(1-" + var + ")";
  if (pole_ > 1) d += "^" + std::to_string(pole_);
  return "(" + num_.str(var) + ")/" + d;
}

}  // namespace superdim
