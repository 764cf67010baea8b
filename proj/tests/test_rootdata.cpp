#include <doctest.h>

#include <algorithm>
#include <set>

#include "generators.hpp"
#include "superdim/rootdata.hpp"

using namespace superdim;

namespace {

Vec v(std::initializer_list<long> xs) {
  Vec out(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long x : xs) out[i++] = Rational(x);
  return out;
}

std::set<std::string> names(const RootDatum& d, const std::vector<Root>& roots) {
  std::set<std::string> out;
  for (const auto& r : roots) out.insert(format_vector(d, r.coords));
  return out;
}

Vec half_sum(const RootDatum& d, const std::vector<Root>& roots) {
  Vec s = zero_vec(d.dim());
  for (const auto& r : roots) s += r.coords;
  return s * Rational(1, 2);
}

bool contains(const std::vector<Root>& roots, const Vec& x) {
  return std::any_of(roots.begin(), roots.end(), [&](const Root& r) { return r.coords == x; });
}

}  // namespace

TEST_CASE("sl(2|1) root data") {
  const RootDatum d = build_root_datum(AlgebraSpec::a(1, 0));
  CHECK(d.labels == std::vector<std::string>{"e1", "e2", "d1"});
  CHECK(names(d, d.simple_roots) == std::set<std::string>{"e1-e2", "e2-d1"});
  CHECK(names(d, d.delta0_plus) == std::set<std::string>{"e1-e2"});
  CHECK(names(d, d.delta1_plus) == std::set<std::string>{"e1-d1", "e2-d1"});
  CHECK(d.d0() == 1);
  CHECK(d.d1() == 2);
  CHECK(d.odd_simple_index() == 1);
}

TEST_CASE("sl(4|1) half sums") {
  const RootDatum d = build_root_datum(AlgebraSpec::a(3, 0));
  CHECK(d.d0() == 6);
  CHECK(names(d, d.delta1_plus) == std::set<std::string>{"e1-d1", "e2-d1", "e3-d1", "e4-d1"});
  CHECK(d.rho0 == v({3, 1, -1, -3, 0}) * Rational(1, 2));
  CHECK(d.rho1 == v({1, 1, 1, 1, -4}) * Rational(1, 2));
  CHECK(format_vector(d, d.rho0) == "(3/2)e1+(1/2)e2-(1/2)e3-(3/2)e4");
}

TEST_CASE("sl(3|2) root counts") {
  const RootDatum d = build_root_datum(AlgebraSpec::a(2, 1));
  CHECK(d.d0() == 4);
  CHECK(d.d1() == 6);
}

TEST_CASE("pairing") {
  const RootDatum d = build_root_datum(AlgebraSpec::a(1, 0));
  CHECK(pairing(d, v({1, 0, 0}), v({1, 0, 0})) == Rational(1));
  CHECK(pairing(d, v({0, 0, 1}), v({0, 0, 1})) == Rational(-1));
  CHECK(pairing(d, v({0, 1, -1}), v({0, 1, -1})).is_zero());
  CHECK(d.is_isotropic(v({0, 1, -1})));
  CHECK_THROWS_AS(pairing(d, v({1, 0}), v({1, 0, 0})), std::invalid_argument);
}

TEST_CASE("algebra names") {
  CHECK(AlgebraSpec::a(1, 0).name() == "sl(2|1)");
  CHECK(AlgebraSpec::b(1, 2).name() == "osp(3|4)");
  CHECK(AlgebraSpec::c(3).name() == "osp(2|4)");
  CHECK(AlgebraSpec::d(2, 1).name() == "osp(4|2)");
  CHECK(AlgebraSpec::d21(Rational(1, 2)).name() == "D(2,1;1/2)");
  CHECK(AlgebraSpec::f4().name() == "F(4)");
  CHECK(AlgebraSpec::g3().kac_name() == "G(3)");
  CHECK(AlgebraSpec::a(3, 0).kac_name() == "A(3,0)");
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(build_root_datum(AlgebraSpec::a(1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(build_root_datum(AlgebraSpec::b(1, 0)), std::invalid_argument);
  CHECK_THROWS_AS(build_root_datum(AlgebraSpec::c(1)), std::invalid_argument);
  CHECK_THROWS_AS(build_root_datum(AlgebraSpec::d(1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(build_root_datum(AlgebraSpec::d21(Rational(0))), std::invalid_argument);
  CHECK_THROWS_AS(build_root_datum(AlgebraSpec::d21(Rational(-1))), std::invalid_argument);
}

TEST_CASE("format_vector") {
  const RootDatum d = build_root_datum(AlgebraSpec::a(2, 1));
  CHECK(format_vector(d, v({2, 2, 1, 0, -1})) == "2e1+2e2+e3-d2");
  CHECK(format_vector(d, zero_vec(5)) == "0");
  CHECK(format_vector(d, v({0, 0, 0, -1, 0}) * Rational(1, 2)) == "-(1/2)d1");
}

TEST_CASE("root counts per family") {
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) {
      if (m == n) continue;
      const RootDatum d = build_root_datum(AlgebraSpec::a(m, n));
      CHECK(d.d1() == (m + 1) * (n + 1));
      CHECK(d.d0() == m * (m + 1) / 2 + n * (n + 1) / 2);
      CHECK(d.delta1_bar_plus.size() == d.delta1_plus.size());
    }
  for (int m = 0; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      const RootDatum d = build_root_datum(AlgebraSpec::b(m, n));
      CHECK(static_cast<int>(d.delta1_bar_plus.size()) == 2 * m * n);
      CHECK(d.d1() == 2 * m * n + n);
      CHECK(d.d0() == n * n + m * m);
    }
  for (int n = 2; n <= 5; ++n) {
    const RootDatum d = build_root_datum(AlgebraSpec::c(n));
    CHECK(d.d1() == 2 * (n - 1));
    CHECK(d.d0() == (n - 1) * (n - 1));
  }
  for (int m = 2; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      const RootDatum d = build_root_datum(AlgebraSpec::d(m, n));
      CHECK(d.d1() == 2 * m * n);
      CHECK(d.d0() == n * n + m * (m - 1));
    }
  const RootDatum d21 = build_root_datum(AlgebraSpec::d21(Rational(2)));
  CHECK(d21.d0() == 3);
  CHECK(d21.d1() == 4);
  const RootDatum f4 = build_root_datum(AlgebraSpec::f4());
  CHECK(f4.d0() == 10);
  CHECK(f4.d1() == 8);
  const RootDatum g3 = build_root_datum(AlgebraSpec::g3());
  CHECK(g3.d0() == 7);
  CHECK(g3.d1() == 7);
  CHECK(g3.delta1_bar_plus.size() == 6);
}

TEST_CASE("root datum invariants for every family") {
  std::vector<AlgebraSpec> specs = gen::small_algebras(4);
  for (const Rational a : {Rational(-1, 2), Rational(3), Rational(-5, 3)}) specs.push_back(AlgebraSpec::d21(a));

  for (const auto& spec : specs) {
    CAPTURE(spec.kac_name());
    const RootDatum d = build_root_datum(spec);

    // Form is symmetric and non-degenerate.
    CHECK(d.form == d.form.transpose());
    CHECK(solve_exact(d.form, unit_vec(d.dim(), 0)));

    CHECK(d.rho0 == half_sum(d, d.delta0_plus));
    CHECK(d.rho1 == half_sum(d, d.delta1_plus));
    CHECK(d.rho == d.rho0 - d.rho1);

    // Exactly one odd simple root; simple roots are positive.
    const auto odd_count = std::count_if(d.simple_roots.begin(), d.simple_roots.end(),
                                         [](const Root& r) { return r.parity == Parity::Odd; });
    CHECK(odd_count == 1);
    for (const auto& s : d.simple_roots) {
      CHECK(contains(s.parity == Parity::Even ? d.delta0_plus : d.delta1_plus, s.coords));
      CHECK(pairing(d, d.rho, s.coords) * Rational(2) == pairing(d, s.coords, s.coords));
    }

    // Positive roots are nonnegative integer combinations of simple roots.
    Mat basis(d.dim(), d.rank());
    for (int i = 0; i < d.rank(); ++i) basis.col(i) = d.simple_roots[static_cast<std::size_t>(i)].coords;
    std::vector<Root> all = d.delta0_plus;
    all.insert(all.end(), d.delta1_plus.begin(), d.delta1_plus.end());
    const Mat normal = basis.transpose() * basis;
    std::set<std::string> seen;
    for (const auto& r : all) {
      CHECK_FALSE(r.coords.isZero());
      CHECK(seen.insert(format_vector(d, r.coords)).second);
      auto c = solve_exact(normal, basis.transpose() * r.coords);
      REQUIRE(c);
      CHECK(basis * *c == r.coords);
      for (Eigen::Index i = 0; i < c->size(); ++i) {
        CHECK((*c)[i].is_integer());
        CHECK((*c)[i].sign() >= 0);
      }
    }

    // No simple root is a sum of two positive roots.
    for (const auto& s : d.simple_roots)
      for (const auto& a : all)
        CHECK_FALSE(contains(all, s.coords - a.coords));

    // Odd roots outside the barred set have their double among the even roots.
    for (const auto& a : d.delta1_plus) {
      const bool barred = contains(d.delta1_bar_plus, a.coords);
      CHECK(barred != contains(d.delta0_plus, a.coords * Rational(2)));
    }
    if (spec.family == Family::A || spec.family == Family::C || spec.family == Family::D)
      for (const auto& a : d.delta1_bar_plus) CHECK(d.is_isotropic(a.coords));
  }
}

TEST_CASE("B(0,n) has no barred odd roots") {
  for (int n = 1; n <= 4; ++n) CHECK(build_root_datum(AlgebraSpec::b(0, n)).delta1_bar_plus.empty());
}
