#pragma once

/// @file weights.hpp
/// Weights, numerical marks, and the conversions between them.

#include <stdexcept>
#include <string>

#include "superdim/rootdata.hpp"

namespace superdim {

/// Λ = Σ λ_i e_i + Σ μ_j d_j in the datum's coordinate basis.
struct Weight {
  Vec coords;

  friend Weight operator+(const Weight& a, const Weight& b) { return {a.coords + b.coords}; }
  friend Weight operator*(const Rational& k, const Weight& w) { return {w.coords * k}; }
  friend bool operator==(const Weight& a, const Weight& b) { return a.coords == b.coords; }
};

/// Numerical marks a_1..a_r, in the simple-root order of the datum.
struct Marks {
  Vec values;

  friend bool operator==(const Marks& a, const Marks& b) { return a.values == b.values; }
};

/// a_i = 2(Λ,α_i)/(α_i,α_i) for non-isotropic α_i and a_i = (Λ,α_i) for the
/// isotropic odd simple root.
Marks marks_of(const RootDatum& datum, const Weight& w);

/// Inverse of marks_of. For A(m,n) the supertrace direction Σe_i - Σd_j is
/// in the kernel of marks_of and is fixed by the gauge μ_1 = 0; every other
/// family has a square system. Throws SingularSystem if no unique solution
/// exists.
Weight weight_from_marks(const RootDatum& datum, const Marks& marks);

struct SingularSystem : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class DominanceStatus { Pass, Fail, Unknown };

struct DominanceCheck {
  DominanceStatus status = DominanceStatus::Unknown;
  std::string reason;
};

/// Necessary part of the finite-dimensionality conditions: every even simple
/// mark must be a nonnegative integer. Families of type I (A and C) have no
/// further conditions and report Pass; the others report Unknown when the
/// necessary part holds, since their remaining conditions are not checked.
DominanceCheck is_dominant_integral_partial(const RootDatum& datum, const Weight& w);

/// Parses "2e1+2e2+e3-1d2", "e1 - 1/2 d1", "(3/2)e1" against the datum's
/// coordinate labels. Throws std::invalid_argument on error.
Weight parse_weight_coords(const RootDatum& datum, const std::string& text);
/// Parses a comma separated list of rationals, "0,1,1,1" or "0,-1/2".
Marks parse_marks(const RootDatum& datum, const std::string& text);

std::string format_weight(const RootDatum& datum, const Weight& w);
std::string format_marks(const Marks& m);

}  // namespace superdim
