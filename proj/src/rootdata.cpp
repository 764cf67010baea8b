#include "superdim/rootdata.hpp"

#include <sstream>
#include <stdexcept>

namespace superdim {

void AlgebraSpec::validate() const {
  auto fail = [this](const std::string& why) {
    throw std::invalid_argument(kac_name() + ": " + why);
  };
  switch (family) {
    case Family::A:
      if (m < 0 || n < 0) fail("parameters must be nonnegative");
      if (m == n) fail("A(m,n) requires m != n");
      break;
    case Family::B:
      if (m < 0 || n < 1) fail("B(m,n) requires m >= 0 and n >= 1");
      break;
    case Family::C:
      if (n < 2) fail("C(n) requires n >= 2");
      break;
    case Family::D:
      if (m < 2 || n < 1) fail("D(m,n) requires m >= 2 and n >= 1");
      break;
    case Family::D21Alpha:
      if (alpha.is_zero() || alpha == Rational(-1)) fail("alpha must not be 0 or -1");
      break;
    case Family::F4:
    case Family::G3:
      break;
  }
}

std::string AlgebraSpec::kac_name() const {
  switch (family) {
    case Family::A: return "A(" + std::to_string(m) + "," + std::to_string(n) + ")";
    case Family::B: return "B(" + std::to_string(m) + "," + std::to_string(n) + ")";
    case Family::C: return "C(" + std::to_string(n) + ")";
    case Family::D: return "D(" + std::to_string(m) + "," + std::to_string(n) + ")";
    case Family::D21Alpha: return "D(2,1;" + alpha.str() + ")";
    case Family::F4: return "F(4)";
    case Family::G3: return "G(3)";
  }
  return "?";
}

std::string AlgebraSpec::name() const {
  switch (family) {
    case Family::A: return "sl(" + std::to_string(m + 1) + "|" + std::to_string(n + 1) + ")";
    case Family::B: return "osp(" + std::to_string(2 * m + 1) + "|" + std::to_string(2 * n) + ")";
    case Family::C: return "osp(2|" + std::to_string(2 * n - 2) + ")";
    case Family::D: return "osp(" + std::to_string(2 * m) + "|" + std::to_string(2 * n) + ")";
    default: return kac_name();
  }
}

int RootDatum::odd_simple_index() const {
  for (int i = 0; i < rank(); ++i)
    if (simple_roots[static_cast<std::size_t>(i)].parity == Parity::Odd) return i;
  throw std::logic_error("root datum without odd simple root");
}

bool RootDatum::is_isotropic(const Vec& v) const { return pairing(*this, v, v).is_zero(); }

Rational pairing(const RootDatum& datum, const Vec& x, const Vec& y) {
  if (x.size() != datum.dim() || y.size() != datum.dim())
    throw std::invalid_argument("pairing: vector dimension does not match the root datum");
  return x.dot(datum.form * y);
}

namespace {

// Incrementally assembles a datum in a fixed coordinate layout.
class Builder {
 public:
  Builder(std::vector<std::string> labels, Mat form) {
    d_.labels = std::move(labels);
    d_.form = std::move(form);
  }

  Eigen::Index dim() const { return d_.form.rows(); }

  Vec v(std::initializer_list<std::pair<int, Rational>> terms) const {
    Vec out = zero_vec(dim());
    for (const auto& [i, c] : terms) out[i] += c;
    return out;
  }

  void even(Vec r) { d_.delta0_plus.push_back({std::move(r), Parity::Even}); }
  void odd(Vec r) { d_.delta1_plus.push_back({std::move(r), Parity::Odd}); }
  void simple(Vec r, Parity p) { d_.simple_roots.push_back({std::move(r), p}); }

  RootDatum finish(const AlgebraSpec& spec) && {
    d_.spec = spec;
    for (const auto& a : d_.delta1_plus) {
      const Vec twice = a.coords * Rational(2);
      bool doubled_is_even = false;
      for (const auto& b : d_.delta0_plus)
        if (b.coords == twice || b.coords == -twice) doubled_is_even = true;
      if (!doubled_is_even) d_.delta1_bar_plus.push_back(a);
    }
    d_.rho0 = zero_vec(dim());
    d_.rho1 = zero_vec(dim());
    for (const auto& a : d_.delta0_plus) d_.rho0 += a.coords;
    for (const auto& a : d_.delta1_plus) d_.rho1 += a.coords;
    d_.rho0 *= Rational(1, 2);
    d_.rho1 *= Rational(1, 2);
    d_.rho = d_.rho0 - d_.rho1;
    return std::move(d_);
  }

 private:
  RootDatum d_;
};

Mat diagonal(const std::vector<Rational>& entries) {
  const auto n = static_cast<Eigen::Index>(entries.size());
  Mat g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = i == j ? entries[static_cast<std::size_t>(i)] : Rational(0);
  return g;
}

std::vector<std::string> numbered(const std::string& prefix, int count) {
  std::vector<std::string> out;
  for (int i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

// Layout with p positive-norm e-coordinates followed by q negative-norm
// d-coordinates.
Builder classical_builder(int p, int q) {
  auto labels = numbered("e", p);
  for (auto& l : numbered("d", q)) labels.push_back(std::move(l));
  std::vector<Rational> diag(static_cast<std::size_t>(p), Rational(1));
  diag.insert(diag.end(), static_cast<std::size_t>(q), Rational(-1));
  return Builder(std::move(labels), diagonal(diag));
}

RootDatum build_a(const AlgebraSpec& s) {
  const int p = s.m + 1, q = s.n + 1;
  Builder b = classical_builder(p, q);
  auto e = [&](int i) { return b.v({{i, 1}}); };
  auto d = [&](int j) { return b.v({{p + j, 1}}); };
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) b.even(e(i) - e(j));
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j) b.even(d(i) - d(j));
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) b.odd(e(i) - d(j));
  for (int i = 0; i + 1 < p; ++i) b.simple(e(i) - e(i + 1), Parity::Even);
  b.simple(e(p - 1) - d(0), Parity::Odd);
  for (int j = 0; j + 1 < q; ++j) b.simple(d(j) - d(j + 1), Parity::Even);
  return std::move(b).finish(s);
}

// B(m,n) and D(m,n) share the layout e1..en (sp(2n)), d1..dm (orthogonal).
RootDatum build_bd(const AlgebraSpec& s) {
  const bool is_b = s.family == Family::B;
  const int n = s.n, m = s.m;
  Builder b = classical_builder(n, m);
  auto e = [&](int i) { return b.v({{i, 1}}); };
  auto d = [&](int j) { return b.v({{n + j, 1}}); };

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      b.even(e(i) - e(j));
      b.even(e(i) + e(j));
    }
    b.even(e(i) * Rational(2));
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      b.even(d(i) - d(j));
      b.even(d(i) + d(j));
    }
    if (is_b) b.even(d(i));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      b.odd(e(i) - d(j));
      b.odd(e(i) + d(j));
    }
    if (is_b) b.odd(e(i));
  }

  for (int i = 0; i + 1 < n; ++i) b.simple(e(i) - e(i + 1), Parity::Even);
  if (m == 0) {
    b.simple(e(n - 1), Parity::Odd);  // B(0,n)
  } else {
    b.simple(e(n - 1) - d(0), Parity::Odd);
    for (int j = 0; j + 1 < m; ++j) b.simple(d(j) - d(j + 1), Parity::Even);
    if (is_b) b.simple(d(m - 1), Parity::Even);
    else b.simple(d(m - 2) + d(m - 1), Parity::Even);
  }
  return std::move(b).finish(s);
}

RootDatum build_c(const AlgebraSpec& s) {
  const int r = s.n - 1;  // rank of the symplectic block
  Builder b = classical_builder(1, r);
  const Vec eps = b.v({{0, 1}});
  auto d = [&](int j) { return b.v({{1 + j, 1}}); };
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      b.even(d(i) - d(j));
      b.even(d(i) + d(j));
    }
    b.even(d(i) * Rational(2));
  }
  for (int i = 0; i < r; ++i) {
    b.odd(eps - d(i));
    b.odd(eps + d(i));
  }
  b.simple(eps - d(0), Parity::Odd);
  for (int j = 0; j + 1 < r; ++j) b.simple(d(j) - d(j + 1), Parity::Even);
  b.simple(d(r - 1) * Rational(2), Parity::Even);
  return std::move(b).finish(s);
}

RootDatum build_d21(const AlgebraSpec& s) {
  const Rational& a = s.alpha;
  Builder b({"e1", "e2", "e3"}, diagonal({(1 + a) / 2, Rational(-1, 2), -a / 2}));
  for (int i = 0; i < 3; ++i) b.even(b.v({{i, 2}}));
  for (int s2 : {-1, 1})
    for (int s3 : {-1, 1}) b.odd(b.v({{0, 1}, {1, s2}, {2, s3}}));
  b.simple(b.v({{0, 1}, {1, -1}, {2, -1}}), Parity::Odd);
  b.simple(b.v({{1, 2}}), Parity::Even);
  b.simple(b.v({{2, 2}}), Parity::Even);
  return std::move(b).finish(s);
}

RootDatum build_f4(const AlgebraSpec& s) {
  Builder b({"e1", "e2", "e3", "d1"}, diagonal({-2, -2, -2, 6}));
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      b.even(b.v({{i, 1}, {j, -1}}));
      b.even(b.v({{i, 1}, {j, 1}}));
    }
    b.even(b.v({{i, 1}}));
  }
  b.even(b.v({{3, 1}}));
  const Rational h(1, 2);
  for (int s1 : {-1, 1})
    for (int s2 : {-1, 1})
      for (int s3 : {-1, 1}) b.odd(b.v({{0, h * s1}, {1, h * s2}, {2, h * s3}, {3, h}}));
  b.simple(b.v({{0, -h}, {1, -h}, {2, -h}, {3, h}}), Parity::Odd);
  b.simple(b.v({{2, 1}}), Parity::Even);
  b.simple(b.v({{1, 1}, {2, -1}}), Parity::Even);
  b.simple(b.v({{0, 1}, {1, -1}}), Parity::Even);
  return std::move(b).finish(s);
}

RootDatum build_g3(const AlgebraSpec& s) {
  Mat g(3, 3);
  g << Rational(-2), Rational(1), Rational(0),
       Rational(1), Rational(-2), Rational(0),
       Rational(0), Rational(0), Rational(2);
  Builder b({"e1", "e2", "d1"}, g);
  const Vec e1 = b.v({{0, 1}}), e2 = b.v({{1, 1}}), dl = b.v({{2, 1}});
  const Vec e3 = -e1 - e2;
  // Positive roots of G2 for the simple system {ε1, ε2-ε1}.
  for (const Vec& r : {Vec(e1), Vec(e2), Vec(e1 + e2), Vec(e2 - e1), Vec(e1 * Rational(2) + e2),
                       Vec(e1 + e2 * Rational(2))})
    b.even(r);
  b.even(dl * Rational(2));
  b.odd(dl);
  for (const Vec& eps : {e1, e2, e3}) {
    b.odd(dl + eps);
    b.odd(dl - eps);
  }
  b.simple(dl + e3, Parity::Odd);
  b.simple(e1, Parity::Even);
  b.simple(e2 - e1, Parity::Even);
  return std::move(b).finish(s);
}

}  // namespace

RootDatum build_root_datum(const AlgebraSpec& spec) {
  spec.validate();
  switch (spec.family) {
    case Family::A: return build_a(spec);
    case Family::B:
    case Family::D: return build_bd(spec);
    case Family::C: return build_c(spec);
    case Family::D21Alpha: return build_d21(spec);
    case Family::F4: return build_f4(spec);
    case Family::G3: return build_g3(spec);
  }
  throw std::logic_error("unknown family");
}

std::string format_vector(const RootDatum& datum, const Vec& v) {
  std::ostringstream os;
  bool first = true;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const Rational& c = v[i];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const Rational mag = neg ? -c : c;
    if (neg) os << '-';
    else if (!first) os << '+';
    first = false;
    if (mag != Rational(1)) {
      if (mag.is_integer()) os << mag;
      else os << '(' << mag << ')';
    }
    os << datum.labels[static_cast<std::size_t>(i)];
  }
  return first ? "0" : os.str();
}

}  // namespace superdim
