#pragma once

/**
 * @file atypical.hpp
 * @brief Singly atypical weights of sl(m|n) and their dimensions.
 *
 * Here m and n count the e- and d-coordinates (sl(4|1) has m = 4, n = 1).
 * If β_{kℓ} = e_k - d_ℓ is the only root of Δ̄₁⁺ with (Λ+ρ, β) = 0 then
 *
 *   dim V(Λ) = 2^{mn-1} ∏_{i<j; i,j≠k} (λ_i-λ_j+j-i)/(j-i)
 *                      ∏_{i<j; i,j≠ℓ} (μ_i-μ_j+j-i)/(j-i)
 *              · (-1)^{n-k-ℓ-1} / ((m-k)!(k-1)!(n-ℓ)!(ℓ-1)!)
 *              · Σ_{r=0}^{m+n-2} C_{m+n-2-r} e_r(x_1..x_{m-1}, y_1..y_{n-1})
 *
 * with x_i = λ_k - λ_i + i - k (i ≠ k), y_j = μ_j - μ_ℓ + ℓ - j (j ≠ ℓ) and
 * 2e^t/(1+e^t) = Σ C_i t^i/i!.
 */

#include <optional>
#include <stdexcept>
#include <vector>

#include "superdim/typicality.hpp"

namespace superdim {

struct AtypicalitySite {
  int k = 0;  // 1-based index of the e-coordinate
  int l = 0;  // 1-based index of the d-coordinate
  Root root;  // e_k - d_l
};

enum class AtypicalityKind { Typical, SinglyAtypical, MultiplyAtypical };

struct Atypicality {
  AtypicalityKind kind = AtypicalityKind::Typical;
  int count = 0;                        // roots of Δ̄₁⁺ with (Λ+ρ, α) = 0
  std::optional<AtypicalitySite> site;  // set when singly atypical
};

struct AuxVariables {
  std::vector<Rational> xs;
  std::vector<Rational> ys;
};

/// Counts the atypical roots of Λ. Throws std::invalid_argument for
/// families other than A.
Atypicality classify_atypicality(const RootDatum& datum, const Weight& w);

AuxVariables aux_variables(const RootDatum& datum, const Weight& w, const AtypicalitySite& site);

enum class CSource { SeriesDivision, Bernoulli };

struct NotSinglyAtypical : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Dimension of V(Λ) for a singly atypical Λ. Throws NotSinglyAtypical when
/// the precondition fails and std::runtime_error if the formula does not
/// produce a positive integer.
BigInt dim_singly_atypical(const RootDatum& datum, const Weight& w, CSource source = CSource::SeriesDivision);

/// [1, dim V(Λ), dim V(2Λ), ...]; the k = 0 entry is the trivial module.
/// Throws NotSinglyAtypical naming the first multiple that is not singly
/// atypical.
std::vector<BigInt> atypical_dim_sequence(const RootDatum& datum, const Weight& w, int n_terms);

}  // namespace superdim
