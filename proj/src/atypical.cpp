#include "superdim/atypical.hpp"

#include "superdim/combinatorics.hpp"

namespace superdim {

namespace {

void require_a_family(const RootDatum& datum) {
  if (datum.spec.family != Family::A)
    throw std::invalid_argument("singly atypical dimensions are only available for sl(m|n), got " + datum.spec.name());
}

}  // namespace

Atypicality classify_atypicality(const RootDatum& datum, const Weight& w) {
  require_a_family(datum);
  const int p = datum.spec.m + 1;
  const int q = datum.spec.n + 1;
  const Vec shifted = w.coords + datum.rho;
  Atypicality out;
  // Δ̄₁⁺ for sl(p|q) is {e_i - d_j}; locate the pair from the root's support.
  for (const auto& a : datum.delta1_bar_plus) {
    if (!pairing(datum, shifted, a.coords).is_zero()) continue;
    ++out.count;
    int k = 0, l = 0;
    for (int i = 0; i < p; ++i)
      if (a.coords[i] == Rational(1)) k = i + 1;
    for (int j = 0; j < q; ++j)
      if (a.coords[p + j] == Rational(-1)) l = j + 1;
    out.site = AtypicalitySite{k, l, a};
  }
  if (out.count == 0) {
    out.kind = AtypicalityKind::Typical;
    out.site.reset();
  } else if (out.count == 1) {
    out.kind = AtypicalityKind::SinglyAtypical;
  } else {
    out.kind = AtypicalityKind::MultiplyAtypical;
    out.site.reset();
  }
  return out;
}

AuxVariables aux_variables(const RootDatum& datum, const Weight& w, const AtypicalitySite& site) {
  require_a_family(datum);
  const int m = datum.spec.m + 1;
  const int n = datum.spec.n + 1;
  auto lambda = [&](int i) { return w.coords[i - 1]; };
  auto mu = [&](int j) { return w.coords[m + j - 1]; };
  AuxVariables aux;
  for (int i = 1; i <= m; ++i)
    if (i != site.k) aux.xs.push_back(lambda(site.k) - lambda(i) + Rational(i - site.k));
  for (int j = 1; j <= n; ++j)
    if (j != site.l) aux.ys.push_back(mu(j) - mu(site.l) + Rational(site.l - j));
  return aux;
}

BigInt dim_singly_atypical(const RootDatum& datum, const Weight& w, CSource source) {
  const Atypicality cls = classify_atypicality(datum, w);
  if (cls.kind != AtypicalityKind::SinglyAtypical)
    throw NotSinglyAtypical("weight " + format_weight(datum, w) + " is not singly atypical (" +
                            std::to_string(cls.count) + " atypical roots)");
  const AtypicalitySite& site = *cls.site;
  const int m = datum.spec.m + 1;
  const int n = datum.spec.n + 1;
  const int k = site.k, l = site.l;
  auto lambda = [&](int i) { return w.coords[i - 1]; };
  auto mu = [&](int j) { return w.coords[m + j - 1]; };

  Rational dim = pow(Rational(2), static_cast<unsigned>(m * n - 1));
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      if (i != k && j != k) dim *= (lambda(i) - lambda(j) + Rational(j - i)) / Rational(j - i);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (i != l && j != l) dim *= (mu(i) - mu(j) + Rational(j - i)) / Rational(j - i);

  const int sign_exp = n - k - l - 1;
  const Rational sign = (sign_exp % 2 == 0) ? Rational(1) : Rational(-1);
  const BigInt denom = factorial(static_cast<unsigned>(m - k)) * factorial(static_cast<unsigned>(k - 1)) *
                       factorial(static_cast<unsigned>(n - l)) * factorial(static_cast<unsigned>(l - 1));
  dim *= sign / Rational(denom);

  const AuxVariables aux = aux_variables(datum, w, site);
  std::vector<Rational> vars = aux.xs;
  vars.insert(vars.end(), aux.ys.begin(), aux.ys.end());
  const auto e = elementary_symmetric_all(vars);
  const int top = m + n - 2;
  const auto c = source == CSource::Bernoulli ? c_coefficients_bernoulli(top) : c_coefficients(top);
  Rational sum(0);
  for (int r = 0; r <= top; ++r)
    sum += c[static_cast<std::size_t>(top - r)] * e[static_cast<std::size_t>(r)];
  dim *= sum;

  if (!dim.is_integer() || dim.sign() <= 0)
    throw std::runtime_error("singly atypical dimension formula gave " + dim.str() + " for " +
                             format_weight(datum, w));
  return dim.to_integer();
}

std::vector<BigInt> atypical_dim_sequence(const RootDatum& datum, const Weight& w, int n_terms) {
  if (n_terms < 1) throw std::invalid_argument("atypical_dim_sequence: n_terms must be >= 1");
  std::vector<BigInt> out{BigInt(1)};
  for (int k = 1; k < n_terms; ++k) {
    const Weight kw = Rational(k) * w;
    const Atypicality cls = classify_atypicality(datum, kw);
    if (cls.kind != AtypicalityKind::SinglyAtypical)
      throw NotSinglyAtypical(std::to_string(k) + "*Lambda is not singly atypical (" + std::to_string(cls.count) +
                              " atypical roots)");
    out.push_back(dim_singly_atypical(datum, kw));
  }
  return out;
}

}  // namespace superdim
