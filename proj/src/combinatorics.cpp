#include "superdim/combinatorics.hpp"

#include <stdexcept>
#include <string>

namespace superdim {

std::vector<std::vector<BigInt>> eulerian_triangle(int max_n) {
  if (max_n < 0) throw std::out_of_range("eulerian_triangle: negative size");
  std::vector<std::vector<BigInt>> rows;
  rows.push_back({BigInt(1)});
  if (max_n >= 1) rows.push_back({BigInt(1)});
  for (int n = 2; n <= max_n; ++n) {
    const auto& prev = rows.back();
    std::vector<BigInt> row(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      BigInt v = 0;
      if (k <= n - 2) v += BigInt(k + 1) * prev[static_cast<std::size_t>(k)];
      if (k >= 1) v += BigInt(n - k) * prev[static_cast<std::size_t>(k - 1)];
      row[static_cast<std::size_t>(k)] = v;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

void check_eulerian_range(int n, int k) {
  if (n < 1 || k < 0 || k > n - 1)
    throw std::out_of_range("Eulerian number A(" + std::to_string(n) + "," + std::to_string(k) +
                            ") is out of range");
}

}  // namespace

BigInt eulerian_number(int n, int k) {
  check_eulerian_range(n, k);
  return eulerian_triangle(n)[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

BigInt eulerian_number_explicit(int n, int k) {
  check_eulerian_range(n, k);
  BigInt sum = 0;
  for (int r = 0; r <= k; ++r) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(k + 1 - r), static_cast<unsigned long>(n));
    BigInt term = binomial(n + 1, r) * p;
    if (r % 2 == 0) sum += term;
    else sum -= term;
  }
  return sum;
}

Poly eulerian_polynomial(int j) {
  if (j < 0) throw std::out_of_range("eulerian_polynomial: negative index");
  const auto rows = eulerian_triangle(j);
  std::vector<Rational> c;
  for (const auto& a : rows[static_cast<std::size_t>(j)]) c.emplace_back(a);
  return Poly(std::move(c));
}

std::vector<Rational> elementary_symmetric_all(std::span<const Rational> values) {
  std::vector<Rational> e{Rational(1)};
  for (const auto& x : values) {
    e.push_back(Rational(0));
    for (std::size_t j = e.size() - 1; j >= 1; --j) e[j] += x * e[j - 1];
  }
  return e;
}

Rational bernoulli(int i) {
  if (i < 0) throw std::out_of_range("bernoulli: negative index");
  // Standard recurrence Σ_{j=0}^{m} C(m+1,j) B_j = 0 (gives B_1 = -1/2).
  std::vector<Rational> b{Rational(1)};
  for (int m = 1; m <= i; ++m) {
    Rational acc(0);
    for (int j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * b[static_cast<std::size_t>(j)];
    b.push_back(-acc / Rational(m + 1));
  }
  Rational r = b[static_cast<std::size_t>(i)];
  return i == 1 ? -r : r;
}

std::vector<Rational> c_coefficients(int n) {
  if (n < 0) throw std::out_of_range("c_coefficients: negative order");
  const auto len = static_cast<std::size_t>(n) + 1;
  // exp(t) truncated; numerator 2·exp(t), denominator 1 + exp(t).
  std::vector<Rational> ex(len);
  for (std::size_t i = 0; i < len; ++i) ex[i] = Rational(BigInt(1), factorial(static_cast<unsigned>(i)));
  std::vector<Rational> num(len), den(len);
  for (std::size_t i = 0; i < len; ++i) {
    num[i] = Rational(2) * ex[i];
    den[i] = ex[i];
  }
  den[0] += Rational(1);

  std::vector<Rational> q(len);
  for (std::size_t k = 0; k < len; ++k) {
    Rational acc = num[k];
    for (std::size_t j = 1; j <= k; ++j) acc -= den[j] * q[k - j];
    q[k] = acc / den[0];
  }
  for (std::size_t i = 0; i < len; ++i) q[i] *= Rational(factorial(static_cast<unsigned>(i)));
  return q;
}

std::vector<Rational> c_coefficients_bernoulli(int n) {
  if (n < 0) throw std::out_of_range("c_coefficients_bernoulli: negative order");
  std::vector<Rational> c;
  for (int i = 0; i <= n; ++i) {
    BigInt two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(i + 1));
    c.push_back(Rational(BigInt(2 * (two_pow - 1))) * bernoulli(i + 1) / Rational(i + 1));
  }
  return c;
}

}  // namespace superdim
