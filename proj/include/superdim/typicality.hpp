#pragma once

/**
 * @file typicality.hpp
 * @brief Typicality and ℕ-typicality of highest weights.
 *
 * Λ is typical when (Λ+ρ, α) ≠ 0 for every α in Δ̄₁⁺, and ℕ-typical when kΛ
 * is typical for every k = 1, 2, 3, .... Since (kΛ+ρ, α) = k(Λ,α) + (ρ,α)
 * the quantifier over k is eliminated exactly: the pairing vanishes for
 * some k >= 1 iff (Λ,α) = (ρ,α) = 0, or (Λ,α) ≠ 0 and -(ρ,α)/(Λ,α) is a
 * positive integer.
 */

#include <optional>
#include <vector>

#include "superdim/weights.hpp"

namespace superdim {

struct AtypicalRoot {
  Root root;
  /// Smallest k >= 1 with (kΛ+ρ, root) = 0.
  BigInt k;
};

struct TypicalityReport {
  bool typical = true;
  bool n_typical = true;
  std::vector<AtypicalRoot> atypical_roots;
};

/// Smallest k >= 1 with k·lambda_pair + rho_pair = 0, if any.
std::optional<BigInt> first_vanishing_multiple(const Rational& lambda_pair, const Rational& rho_pair);

bool is_typical(const RootDatum& datum, const Weight& w);
TypicalityReport is_n_typical(const RootDatum& datum, const Weight& w);

/// One condition "L ≠ R + c/k for all k >= 1", stored as difference = L - R
/// and offset = c.
struct KCondition {
  Rational difference;
  Rational offset;

  bool fails_for_some_k() const;
};

struct CriteriaOptions {
  /// D(m,n), third condition: use the constant -2m/k instead of the
  /// (2-2m)/k required by the root data. The uncorrected constant disagrees
  /// with the definitional test and with the D(2,1;1) conditions; it is
  /// kept selectable so tests can exhibit the discrepancy.
  bool uncorrected_dmn_offset = false;
};

/// The per-family list of mark conditions, all quantified over k >= 1.
/// Empty sums Σ_{t=r}^{s} a_t with s < r are 0. Throws std::invalid_argument
/// if the number of marks does not match the family.
std::vector<KCondition> family_conditions(const AlgebraSpec& spec, const Marks& marks,
                                          const CriteriaOptions& options = {});

/// ℕ-typicality decided purely from the marks.
bool family_criteria_n_typical(const AlgebraSpec& spec, const Marks& marks, const CriteriaOptions& options = {});

/// Number of marks (simple roots) for the family.
int family_rank(const AlgebraSpec& spec);

}  // namespace superdim
