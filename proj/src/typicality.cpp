#include "superdim/typicality.hpp"

#include <stdexcept>

namespace superdim {

std::optional<BigInt> first_vanishing_multiple(const Rational& lambda_pair, const Rational& rho_pair) {
  if (lambda_pair.is_zero()) {
    if (rho_pair.is_zero()) return BigInt(1);
    return std::nullopt;
  }
  const Rational k = -rho_pair / lambda_pair;
  if (k.is_integer() && k.sign() > 0) return k.to_integer();
  return std::nullopt;
}

bool is_typical(const RootDatum& datum, const Weight& w) {
  const Vec shifted = w.coords + datum.rho;
  for (const auto& a : datum.delta1_bar_plus)
    if (pairing(datum, shifted, a.coords).is_zero()) return false;
  return true;
}

TypicalityReport is_n_typical(const RootDatum& datum, const Weight& w) {
  TypicalityReport rep;
  for (const auto& a : datum.delta1_bar_plus) {
    auto k = first_vanishing_multiple(pairing(datum, w.coords, a.coords), pairing(datum, datum.rho, a.coords));
    if (!k) continue;
    if (*k == 1) rep.typical = false;
    rep.atypical_roots.push_back({a, *k});
  }
  rep.n_typical = rep.atypical_roots.empty();
  return rep;
}

bool KCondition::fails_for_some_k() const {
  if (difference.is_zero()) return offset.is_zero();
  const Rational k = offset / difference;
  return k.is_integer() && k.sign() > 0;
}

int family_rank(const AlgebraSpec& spec) {
  switch (spec.family) {
    case Family::A: return spec.m + spec.n + 1;
    case Family::B:
    case Family::D: return spec.m + spec.n;
    case Family::C: return spec.n;
    case Family::D21Alpha:
    case Family::G3: return 3;
    case Family::F4: return 4;
  }
  return 0;
}

namespace {

// 1-based mark access with the empty-sum convention.
class MarkView {
 public:
  explicit MarkView(const Marks& m) : m_(m) {}
  Rational operator()(int t) const { return m_.values[t - 1]; }
  Rational sum(int r, int s) const {
    Rational acc(0);
    for (int t = r; t <= s; ++t) acc += (*this)(t);
    return acc;
  }

 private:
  const Marks& m_;
};

// "X + c/k ≠ 0" rewritten as "X ≠ -c/k".
KCondition nonzero(const Rational& x, const Rational& c) { return {x, -c}; }

}  // namespace

std::vector<KCondition> family_conditions(const AlgebraSpec& spec, const Marks& marks, const CriteriaOptions& options) {
  spec.validate();
  if (marks.values.size() != family_rank(spec))
    throw std::invalid_argument(spec.kac_name() + ": expected " + std::to_string(family_rank(spec)) + " marks");
  const MarkView a(marks);
  const int m = spec.m, n = spec.n;
  std::vector<KCondition> out;

  switch (spec.family) {
    case Family::A:
      for (int i = 1; i <= m + 1; ++i)
        for (int j = m + 1; j <= m + n + 1; ++j)
          out.push_back({a(m + 1) - (a.sum(m + 2, j) - a.sum(i, m)), Rational(-2 * m - 2 + i + j)});
      break;

    case Family::C:
      for (int i = 1; i <= n - 1; ++i) {
        out.push_back({a(1) - a.sum(2, i), Rational(i - 1)});
        out.push_back({a(1) - a.sum(2, i) - 2 * a.sum(i + 1, n), Rational(2 * n - i - 1)});
      }
      break;

    case Family::B:
      if (m == 0) break;  // every weight of B(0,n) is ℕ-typical
      for (int i = 1; i <= n; ++i) {
        for (int j = n; j <= m + n - 1; ++j) {
          const Rational head = a.sum(i, n) - a.sum(n + 1, j);
          out.push_back(nonzero(head, Rational(2 * n - i - j)));
          out.push_back(nonzero(head - 2 * a.sum(j + 1, m + n - 1) - a(m + n), Rational(-i + j - 2 * m + 1)));
        }
      }
      break;

    case Family::D: {
      for (int i = 1; i <= n; ++i)
        for (int j = n; j <= m + n - 1; ++j)
          out.push_back(nonzero(a.sum(i, n) - a.sum(n + 1, j), Rational(2 * n - i - j)));
      for (int i = 1; i <= n; ++i)
        out.push_back(nonzero(a.sum(i, n) - a.sum(n + 1, m + n - 2) - a(m + n), Rational(n - m - i + 1)));
      const int shift = options.uncorrected_dmn_offset ? 0 : 2;
      for (int i = 1; i <= n; ++i)
        for (int j = n; j <= m + n - 2; ++j)
          out.push_back(nonzero(a.sum(i, n) - a.sum(n + 1, j) - 2 * a.sum(j + 1, m + n - 2) - a(m + n - 1) - a(m + n),
                                Rational(-i + j - 2 * m + shift)));
      break;
    }

    case Family::D21Alpha: {
      const Rational& al = spec.alpha;
      out.push_back({a(1), 0});
      out.push_back({a(1) - a(2), 1});
      out.push_back({a(1) - al * a(3), al});
      out.push_back({a(1) - a(2) - al * a(3), al + 1});
      break;
    }

    case Family::G3:
      out.push_back({a(1), 0});
      out.push_back({a(1) - a(2), 1});
      out.push_back({a(1) - a(2) - 3 * a(3), 4});
      out.push_back({a(1) - 3 * a(2) - 3 * a(3), 6});
      out.push_back({a(1) - 3 * a(2) - 6 * a(3), 9});
      out.push_back({a(1) - 4 * a(2) - 6 * a(3), 10});
      break;

    case Family::F4:
      out.push_back({a(1), 0});
      out.push_back({a(1) - a(2), 1});
      out.push_back({a(1) - a(2) - 2 * a(3), 3});
      out.push_back({a(1) - 2 * a(2) - 2 * a(3), 4});
      out.push_back({a(1) - a(2) - 2 * a(3) - 2 * a(4), 5});
      out.push_back({a(1) - 2 * a(2) - 2 * a(3) - 2 * a(4), 6});
      out.push_back({a(1) - 2 * a(2) - 4 * a(3) - 2 * a(4), 8});
      out.push_back({a(1) - 3 * a(2) - 4 * a(3) - 2 * a(4), 9});
      break;
  }
  return out;
}

bool family_criteria_n_typical(const AlgebraSpec& spec, const Marks& marks, const CriteriaOptions& options) {
  for (const auto& c : family_conditions(spec, marks, options))
    if (c.fails_for_some_k()) return false;
  return true;
}

}  // namespace superdim
