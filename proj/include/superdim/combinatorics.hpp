#pragma once

/// @file combinatorics.hpp
/// Eulerian numbers and polynomials, elementary symmetric polynomials,
/// Bernoulli numbers and the coefficients of 2e^t/(1+e^t).

#include <span>
#include <vector>

#include "superdim/poly.hpp"
#include "superdim/rational.hpp"

namespace superdim {

/// Rows 0..max_n of Euler's triangle. Row 0 is [1] (A_0(t) = 1), row n >= 1
/// holds A(n,0..n-1). Built with A(n,k) = (k+1)A(n-1,k) + (n-k)A(n-1,k-1).
std::vector<std::vector<BigInt>> eulerian_triangle(int max_n);

/// A(n,k): permutations of 1..n with exactly k ascents. Requires n >= 1 and
/// 0 <= k <= n-1; throws std::out_of_range otherwise.
BigInt eulerian_number(int n, int k);

/// A(n,k) from the alternating sum Σ_{r=0}^{k} (-1)^r C(n+1,r) (k+1-r)^n.
/// Independent of the recurrence used by eulerian_number.
BigInt eulerian_number_explicit(int n, int k);

/// A_j(t) = Σ_k A(j,k) t^k with A_0(t) = 1.
Poly eulerian_polynomial(int j);

/// [e_0, ..., e_d] of the given values, read off ∏(1 + x_i t).
std::vector<Rational> elementary_symmetric_all(std::span<const Rational> values);

/// Bernoulli number with B_1 = +1/2, the sign under which
/// C_i = 2(2^{i+1}-1) B_{i+1}/(i+1) holds for every i >= 0.
Rational bernoulli(int i);

/// [C_0, ..., C_n] where 2e^t/(1+e^t) = Σ C_i t^i / i!, computed by exact
/// power-series division of the exponential series.
std::vector<Rational> c_coefficients(int n);

/// [C_0, ..., C_n] from the Bernoulli closed form.
std::vector<Rational> c_coefficients_bernoulli(int n);

}  // namespace superdim
