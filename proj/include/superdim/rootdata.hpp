#pragma once

/**
 * @file rootdata.hpp
 * @brief Distinguished positive root systems of the basic classical Lie
 * superalgebras in exact rational coordinates.
 *
 * Coordinates and forms per family (e-coordinates always precede
 * d-coordinates):
 *
 *   A(m,n) = sl(m+1|n+1)  e1..e_{m+1}, d1..d_{n+1};  (e,e) = 1, (d,d) = -1
 *   B(m,n) = osp(2m+1|2n) e1..en carry sp(2n), d1..dm carry o(2m+1)
 *   C(n)   = osp(2|2n-2)  e1 carries o(2),  d1..d_{n-1} carry sp(2n-2)
 *   D(m,n) = osp(2m|2n)   e1..en carry sp(2n), d1..dm carry o(2m)
 *   D(2,1;α)              ε1,ε2,ε3 with form diag((1+α)/2, -1/2, -α/2)
 *   F(4)                  ε1,ε2,ε3,δ with form diag(-2,-2,-2,6)
 *   G(3)                  ε1,ε2,δ (ε3 = -ε1-ε2), (εi,εj) = 1-3δij, (δ,δ) = 2
 *
 * For the classical families the form is (e_i,e_j) = δij, (d_i,d_j) = -δij.
 * The assignment of the symplectic block to the e-coordinates for B and D
 * and the scaling of the exceptional forms fix the sign and scale of the
 * odd numerical mark; both are pinned by requiring the per-family mark
 * criteria to agree with the definitional typicality test.
 *
 * Simple roots are listed in distinguished order with exactly one odd
 * simple root:
 *   A: e_i-e_{i+1}, e_{m+1}-d_1, d_j-d_{j+1}        (odd mark a_{m+1})
 *   B: e_i-e_{i+1}, e_n-d_1, d_j-d_{j+1}, d_m        (odd mark a_n)
 *      B(0,n): e_i-e_{i+1}, e_n                      (odd, non-isotropic)
 *   C: e_1-d_1, d_j-d_{j+1}, 2d_{n-1}                (odd mark a_1)
 *   D: e_i-e_{i+1}, e_n-d_1, d_j-d_{j+1}, d_{m-1}+d_m (odd mark a_n)
 *   D(2,1;α): ε1-ε2-ε3, 2ε2, 2ε3
 *   F(4): (δ-ε1-ε2-ε3)/2, ε3, ε2-ε3, ε1-ε2
 *   G(3): δ+ε3, ε1, ε2-ε1
 */

#include <string>
#include <vector>

#include "superdim/rational.hpp"

namespace superdim {

enum class Family { A, B, C, D, D21Alpha, F4, G3 };

struct AlgebraSpec {
  Family family = Family::A;
  int m = 0;
  int n = 0;
  Rational alpha;  // only meaningful for D(2,1;α)

  static AlgebraSpec a(int m, int n) { return {Family::A, m, n, {}}; }
  static AlgebraSpec b(int m, int n) { return {Family::B, m, n, {}}; }
  static AlgebraSpec c(int n) { return {Family::C, 0, n, {}}; }
  static AlgebraSpec d(int m, int n) { return {Family::D, m, n, {}}; }
  static AlgebraSpec d21(const Rational& alpha) { return {Family::D21Alpha, 2, 1, alpha}; }
  static AlgebraSpec f4() { return {Family::F4, 0, 0, {}}; }
  static AlgebraSpec g3() { return {Family::G3, 0, 0, {}}; }

  /// Throws std::invalid_argument when the parameters are outside the
  /// supported range.
  void validate() const;

  /// Kac name, e.g. "A(1,0)", "D(2,1;1/2)".
  std::string kac_name() const;
  /// Matrix name, e.g. "sl(2|1)", "osp(3|2)"; same as kac_name for the
  /// exceptional families.
  std::string name() const;

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

enum class Parity { Even, Odd };

struct Root {
  Vec coords;
  Parity parity = Parity::Even;
};

struct RootDatum {
  AlgebraSpec spec;
  std::vector<std::string> labels;  // coordinate names, e.g. "e1", "d2"
  Mat form;                         // Gram matrix of the invariant form

  std::vector<Root> delta0_plus;
  std::vector<Root> delta1_plus;
  std::vector<Root> delta1_bar_plus;
  std::vector<Root> simple_roots;

  Vec rho0;
  Vec rho1;
  Vec rho;

  Eigen::Index dim() const { return form.rows(); }
  int rank() const { return static_cast<int>(simple_roots.size()); }
  int d0() const { return static_cast<int>(delta0_plus.size()); }
  int d1() const { return static_cast<int>(delta1_plus.size()); }

  /// Index of the distinguished odd simple root within simple_roots.
  int odd_simple_index() const;
  bool is_isotropic(const Vec& v) const;
};

RootDatum build_root_datum(const AlgebraSpec& spec);

/// (x, y) under the datum's form. Throws std::invalid_argument on a
/// dimension mismatch.
Rational pairing(const RootDatum& datum, const Vec& x, const Vec& y);

/// Linear combination rendered with the datum's labels, e.g. "2e1+e2-d2".
std::string format_vector(const RootDatum& datum, const Vec& v);

}  // namespace superdim
