#pragma once

/**
 * @file hilbert.hpp
 * @brief Kac's typical dimension formula and the Hilbert series
 * H_Λ(q) = Σ_{k>=0} h_Λ(k) q^k in closed form.
 *
 * With c₁(α) = (ρ₁,α)/(ρ₀,α) and c_Λ(α) = (Λ,α)/(ρ₀,α),
 *
 *   h_Λ(t) = 2^{|Δ₁⁺|} ∏_{α∈Δ₀⁺} (1 - c₁(α) + c_Λ(α) t)
 *
 * and H_Λ is produced two ways: by applying h_Λ(q d/dq) to 1/(1-q)
 * (series_via_operator), and by expanding h_Λ in elementary symmetric
 * functions of c_Λ/(1-c₁) against the Eulerian closed forms of
 * Σ k^j q^k (series_via_theorem). The k = 0 coefficient is the formula
 * value h_Λ(0), not the dimension of the trivial module.
 */

#include <stdexcept>
#include <string>
#include <vector>

#include "superdim/series.hpp"
#include "superdim/weights.hpp"

namespace superdim {

struct AffineFactor {
  Rational constant;  // 1 - c₁(α)
  Rational slope;     // c_Λ(α)
};

struct HilbertPolynomial {
  Rational prefactor;                // 2^{d₁}
  std::vector<AffineFactor> factors;  // one per α ∈ Δ₀⁺, in Δ₀⁺ order
  Poly expanded;

  Rational operator()(const Rational& t) const { return expanded.eval(t); }
  /// e.g. "16(1+(1/3)t)(1+(1/2)t)^2(1+t)"; constant factors are folded into the
  /// leading coefficient and repeated factors are grouped.
  std::string str(const std::string& var = "t") const;
};

Rational c1(const RootDatum& datum, const Vec& alpha);
Rational c_lambda(const RootDatum& datum, const Weight& w, const Vec& alpha);

/// 2^{d₁} ∏_{α∈Δ₀⁺} (kΛ+ρ, α)/(ρ₀, α), evaluated directly from the pairings.
Rational dim_typical(const RootDatum& datum, const Weight& w, long k);

HilbertPolynomial hilbert_polynomial(const RootDatum& datum, const Weight& w);

/// Raised when some 1 - c₁(α) vanishes, so the theorem-form factorisation
/// ∏(1-c₁)·∏(1 + k c_Λ/(1-c₁)) does not exist.
struct DegenerateTheoremForm : std::runtime_error {
  using std::runtime_error::runtime_error;
};

RationalSeries series_via_theorem(const RootDatum& datum, const Weight& w);
RationalSeries series_via_operator(const RootDatum& datum, const Weight& w);
/// h(q d/dq) 1/(1-q) for an arbitrary polynomial h.
RationalSeries apply_polynomial_operator(const Poly& h);

struct ConsistencyError : std::runtime_error {
  ConsistencyError(const std::string& what, long k) : std::runtime_error(what), offending_k(k) {}
  long offending_k;  // -1 when the two closed forms differ as functions
};

struct ConsistencyReport {
  RationalSeries series;              // canonical (operator) form
  std::vector<Rational> coefficients;  // first n_terms coefficients
  bool theorem_form_degenerate = false;
  bool integrality_asserted = false;
};

/// Differential check: both closed forms agree, the expansion matches
/// dim_typical term by term, and, for ℕ-typical weights that pass the
/// dominance check, every coefficient with k >= 1 is a positive integer.
/// Throws ConsistencyError on any mismatch.
ConsistencyReport verify_consistency(const RootDatum& datum, const Weight& w, int n_terms);

/// Coefficient of q^1, i.e. d/dq at q = 0.
Rational dim_from_series(const RationalSeries& s);

}  // namespace superdim
