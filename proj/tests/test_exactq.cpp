#include <doctest.h>

#include <sstream>

#include "generators.hpp"
#include "superdim/poly.hpp"
#include "superdim/rational.hpp"
#include "superdim/series.hpp"

using namespace superdim;

TEST_CASE("rational parsing and printing") {
  CHECK(Rational::parse("3") == Rational(3));
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK(Rational::parse(" 2/-4 ").str() == "-1/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational(0, 5).is_zero());
  CHECK_FALSE(Rational::try_parse("1/0"));
  CHECK_FALSE(Rational::try_parse(""));
  CHECK_FALSE(Rational::try_parse("1.5"));
  CHECK_FALSE(Rational::try_parse("abc"));
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS(Rational(1, 0));

  std::ostringstream os;
  os << Rational(-7, 3);
  CHECK(os.str() == "-7/3");
}

TEST_CASE("rational arithmetic") {
  const Rational a(1, 2), b(-2, 3);
  CHECK(a + b == Rational(-1, 6));
  CHECK(a - b == Rational(7, 6));
  CHECK(a * b == Rational(-1, 3));
  CHECK(a / b == Rational(-3, 4));
  CHECK_THROWS(a / Rational(0));
  CHECK(b < a);
  CHECK(abs(b) == Rational(2, 3));
  CHECK(b.sign() == -1);
  CHECK(Rational(0).sign() == 0);
  CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(pow(Rational(5), 0) == Rational(1));
  CHECK(Rational(12, 4).is_integer());
  CHECK(Rational(12, 4).to_integer() == 3);
  CHECK_THROWS(Rational(1, 2).to_integer());
}

TEST_CASE("factorial and binomial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(to_string(factorial(25)) == "15511210043330985984000000");
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(40, 20) == BigInt("137846528820"));
}

TEST_CASE("field axioms on random rationals") {
  gen::Gen g(1);
  for (int trial = 0; trial < 500; ++trial) {
    const Rational x = g.rational(50, 30), y = g.rational(50, 30), z = g.rational(50, 30);
    CHECK(x + y == y + x);
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x + y) - y == x);
    if (!y.is_zero()) CHECK((x / y) * y == x);
    CHECK(Rational::parse(x.str()) == x);
    CHECK(((x < y) || (y < x) || (x == y)));
  }
}

TEST_CASE("exact linear solve") {
  Mat a(2, 2);
  a << Rational(2), Rational(1), Rational(1), Rational(3);
  Vec b(2);
  b << Rational(3), Rational(5);
  auto x = solve_exact(a, b);
  REQUIRE(x);
  CHECK((*x)[0] == Rational(4, 5));
  CHECK((*x)[1] == Rational(7, 5));

  Mat singular(2, 2);
  singular << Rational(1), Rational(2), Rational(2), Rational(4);
  CHECK_FALSE(solve_exact(singular, b));

  gen::Gen g(2);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(g.integer(1, 5));
    Mat m(n, n);
    Vec x0(n);
    for (int i = 0; i < n; ++i) {
      x0[i] = g.rational();
      for (int j = 0; j < n; ++j) m(i, j) = g.rational(4, 3);
    }
    const Vec rhs = m * x0;
    auto sol = solve_exact(m, rhs);
    if (sol) CHECK(m * *sol == rhs);
  }
}

TEST_CASE("eigen vectors over rationals") {
  const Vec u = unit_vec(3, 1, Rational(1, 2));
  CHECK(u[0].is_zero());
  CHECK(u[1] == Rational(1, 2));
  CHECK(zero_vec(4).size() == 4);
  CHECK(u.dot(u) == Rational(1, 4));
}

TEST_CASE("polynomial basics") {
  const Poly p{Rational(1), Rational(2)};  // 1 + 2t
  const Poly q{Rational(-1), Rational(0), Rational(1)};
  CHECK(p.degree() == 1);
  CHECK(Poly().degree() == -1);
  CHECK((p * q).coefficients() == std::vector<Rational>{-1, -2, 1, 2});
  CHECK(p.eval(Rational(3)) == Rational(7));
  CHECK(q.derivative() == Poly{Rational(0), Rational(2)});
  CHECK((p - p).is_zero());
  CHECK(Poly::one_minus_t_pow(3) == Poly{1, -3, 3, -1});
  CHECK(Poly{1, 38, 9}.str() == "9q^2+38q+1");
  CHECK(Poly{0, -1}.str("t") == "-t");
  CHECK(Poly().str() == "0");

  Poly r = Poly{1, -1} * Poly{2, 5};
  CHECK(r.divide_by_one_minus_t());
  CHECK(r == Poly{2, 5});
  CHECK_FALSE(r.divide_by_one_minus_t());
}

TEST_CASE("polynomial over integers") {
  using IntPoly = Polynomial<long>;
  IntPoly a{1, 1};
  IntPoly b = a * a * a;
  CHECK(b.coefficients() == std::vector<long>{1, 3, 3, 1});
  CHECK(b.eval(2) == 27);
}

TEST_CASE("series normal form") {
  const RationalSeries g = RationalSeries::geometric();
  CHECK(g.pole_order() == 1);
  CHECK(g.str() == "(1)/(1-q)");
  CHECK(normalize(Poly{4, 8}, 2).str() == "(8q+4)/(1-q)^2");
  // (1-q)^2 / (1-q)^3 = 1/(1-q)
  CHECK(normalize(Poly::one_minus_t_pow(2), 3) == g);
  // (1-q)^3 / (1-q) is a polynomial
  const RationalSeries p = normalize(Poly::one_minus_t_pow(3), 1);
  CHECK(p.pole_order() == 0);
  CHECK(p.numerator() == Poly::one_minus_t_pow(2));
  CHECK_THROWS(normalize(Poly{1}, -1));
  CHECK(normalize(Poly(), 4).is_zero());
}

TEST_CASE("series expansion") {
  CHECK(expand(RationalSeries::geometric(), 4) == std::vector<Rational>{1, 1, 1, 1});
  // 4(2q+1)/(1-q)^2
  const RationalSeries s = normalize(Poly{4, 8}, 2);
  CHECK(expand(s, 5) == std::vector<Rational>{4, 16, 28, 40, 52});
  CHECK(expand(RationalSeries::polynomial(Poly{1, 2}), 4) == std::vector<Rational>{1, 2, 0, 0});
  CHECK_THROWS_AS(expand(s, 0), std::invalid_argument);
}

TEST_CASE("q d/dq multiplies coefficients by their index") {
  gen::Gen g(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> c;
    const int deg = static_cast<int>(g.integer(0, 4));
    for (int i = 0; i <= deg; ++i) c.push_back(g.rational());
    const int pole = static_cast<int>(g.integer(0, 4));
    const RationalSeries s = normalize(Poly(c), pole);
    const auto before = expand(s, 10);
    const auto after = expand(apply_q_ddq(s), 10);
    for (int k = 0; k < 10; ++k) CHECK(after[k] == before[k] * Rational(k));
  }
}

TEST_CASE("series addition and scaling are linear on coefficients") {
  gen::Gen g(4);
  for (int trial = 0; trial < 100; ++trial) {
    auto random_series = [&] {
      std::vector<Rational> c;
      for (int i = 0, deg = static_cast<int>(g.integer(0, 3)); i <= deg; ++i) c.push_back(g.rational());
      return normalize(Poly(c), static_cast<int>(g.integer(0, 4)));
    };
    const RationalSeries a = random_series(), b = random_series();
    const Rational k = g.rational();
    const auto ea = expand(a, 8), eb = expand(b, 8), sum = expand(a + b, 8), scaled = expand(k * a, 8);
    for (int i = 0; i < 8; ++i) {
      CHECK(sum[i] == ea[i] + eb[i]);
      CHECK(scaled[i] == k * ea[i]);
    }
  }
}
