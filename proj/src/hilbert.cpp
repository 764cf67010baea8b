#include "superdim/hilbert.hpp"

#include <map>
#include <sstream>

#include "superdim/combinatorics.hpp"
#include "superdim/typicality.hpp"

namespace superdim {

namespace {

Rational two_pow(int e) { return pow(Rational(2), static_cast<unsigned>(e)); }

}  // namespace

Rational c1(const RootDatum& datum, const Vec& alpha) {
  return pairing(datum, datum.rho1, alpha) / pairing(datum, datum.rho0, alpha);
}

Rational c_lambda(const RootDatum& datum, const Weight& w, const Vec& alpha) {
  return pairing(datum, w.coords, alpha) / pairing(datum, datum.rho0, alpha);
}

Rational dim_typical(const RootDatum& datum, const Weight& w, long k) {
  const Vec shifted = w.coords * Rational(k) + datum.rho;
  Rational d = two_pow(datum.d1());
  for (const auto& a : datum.delta0_plus)
    d *= pairing(datum, shifted, a.coords) / pairing(datum, datum.rho0, a.coords);
  return d;
}

HilbertPolynomial hilbert_polynomial(const RootDatum& datum, const Weight& w) {
  HilbertPolynomial h;
  h.prefactor = two_pow(datum.d1());
  h.expanded = Poly::constant(h.prefactor);
  for (const auto& a : datum.delta0_plus) {
    AffineFactor f{Rational(1) - c1(datum, a.coords), c_lambda(datum, w, a.coords)};
    h.expanded *= Poly::affine(f.constant, f.slope);
    h.factors.push_back(std::move(f));
  }
  return h;
}

std::string HilbertPolynomial::str(const std::string& var) const {
  Rational lead = prefactor;
  // Factors (1 + s t) keyed by s; factors with no constant term count as bare t.
  std::map<Rational, int> grouped;
  int bare = 0;
  for (const auto& f : factors) {
    if (f.slope.is_zero()) {
      lead *= f.constant;
    } else if (f.constant.is_zero()) {
      lead *= f.slope;
      ++bare;
    } else {
      lead *= f.constant;
      ++grouped[f.slope / f.constant];
    }
  }
  std::ostringstream os;
  os << (lead.is_integer() ? lead.str() : "(" + lead.str() + ")");
  if (lead.is_zero()) return os.str();
  if (bare > 0) os << var << (bare > 1 ? "^" + std::to_string(bare) : "");
  for (const auto& [s, count] : grouped) {
    os << "(1";
    if (s.sign() < 0) os << "-";
    else os << "+";
    const Rational mag = abs(s);
    if (mag != Rational(1)) os << (mag.is_integer() ? mag.str() : "(" + mag.str() + ")");
    os << var << ")";
    if (count > 1) os << "^" << count;
  }
  return os.str();
}

RationalSeries apply_polynomial_operator(const Poly& h) {
  RationalSeries acc;
  RationalSeries power = RationalSeries::geometric();  // (q d/dq)^j 1/(1-q)
  for (int j = 0; j <= h.degree(); ++j) {
    if (!h[j].is_zero()) acc = acc + h[j] * power;
    if (j < h.degree()) power = apply_q_ddq(power);
  }
  return acc;
}

RationalSeries series_via_operator(const RootDatum& datum, const Weight& w) {
  return apply_polynomial_operator(hilbert_polynomial(datum, w).expanded);
}

RationalSeries series_via_theorem(const RootDatum& datum, const Weight& w) {
  Rational scale = two_pow(datum.d1());
  std::vector<Rational> ratios;
  for (const auto& a : datum.delta0_plus) {
    const Rational one_minus_c1 = Rational(1) - c1(datum, a.coords);
    if (one_minus_c1.is_zero())
      throw DegenerateTheoremForm("1 - c1(alpha) vanishes for alpha = " + format_vector(datum, a.coords));
    scale *= one_minus_c1;
    ratios.push_back(c_lambda(datum, w, a.coords) / one_minus_c1);
  }
  const auto e = elementary_symmetric_all(ratios);

  RationalSeries sum;
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e[j].is_zero()) continue;
    // Σ_k k^j q^k: 1/(1-q) for j = 0, A_j(q) q/(1-q)^{j+1} for j >= 1.
    const int jj = static_cast<int>(j);
    const RationalSeries f = jj == 0 ? RationalSeries::geometric()
                                     : normalize(eulerian_polynomial(jj) * Poly::monomial(1, 1), jj + 1);
    sum = sum + e[j] * f;
  }
  return scale * sum;
}

ConsistencyReport verify_consistency(const RootDatum& datum, const Weight& w, int n_terms) {
  if (n_terms < 3) throw std::invalid_argument("verify_consistency: n_terms must be >= 3");
  ConsistencyReport rep;
  rep.series = series_via_operator(datum, w);
  try {
    if (!(series_via_theorem(datum, w) == rep.series))
      throw ConsistencyError("closed forms disagree: operator form " + rep.series.str(), -1);
  } catch (const DegenerateTheoremForm&) {
    rep.theorem_form_degenerate = true;
  }

  rep.coefficients = expand(rep.series, n_terms);
  for (int k = 0; k < n_terms; ++k) {
    const Rational direct = dim_typical(datum, w, k);
    if (!(rep.coefficients[static_cast<std::size_t>(k)] == direct))
      throw ConsistencyError("coefficient of q^" + std::to_string(k) + " is " +
                                 rep.coefficients[static_cast<std::size_t>(k)].str() + ", dimension formula gives " +
                                 direct.str(),
                             k);
  }

  if (is_n_typical(datum, w).n_typical &&
      is_dominant_integral_partial(datum, w).status == DominanceStatus::Pass) {
    rep.integrality_asserted = true;
    for (int k = 1; k < n_terms; ++k) {
      const Rational& c = rep.coefficients[static_cast<std::size_t>(k)];
      if (!c.is_integer() || c.sign() <= 0)
        throw ConsistencyError("coefficient of q^" + std::to_string(k) + " = " + c.str() +
                                   " is not a positive integer for an N-typical dominant weight",
                               k);
    }
  }
  return rep;
}

Rational dim_from_series(const RationalSeries& s) { return expand(s, 2)[1]; }

}  // namespace superdim
