#include "superdim/rational.hpp"

#include <cctype>
#include <ostream>

namespace superdim {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<BigInt> parse_int(std::string_view s) {
  s = trim(s);
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) return std::nullopt;
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  std::string str(s);
  if (str.front() == '+') str.erase(0, 1);
  return BigInt(str, 10);
}

}  // namespace

std::optional<Rational> Rational::try_parse(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto n = parse_int(text);
    if (!n) return std::nullopt;
    return Rational(*n);
  }
  auto n = parse_int(text.substr(0, slash));
  auto d = parse_int(text.substr(slash + 1));
  if (!n || !d || *d == 0) return std::nullopt;
  return Rational(*n, *d);
}

Rational Rational::parse(std::string_view text) {
  auto r = try_parse(text);
  if (!r) throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  return *r;
}

BigInt Rational::to_integer() const {
  if (!is_integer()) throw std::domain_error("Rational " + str() + " is not an integer");
  return q_.get_num();
}

std::optional<long> Rational::to_long() const {
  if (!is_integer() || !q_.get_num().fits_slong_p()) return std::nullopt;
  return q_.get_num().get_si();
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& x, unsigned e) {
  Rational result(1);
  for (unsigned i = 0; i < e; ++i) result *= x;
  return result;
}

BigInt factorial(unsigned n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

std::string to_string(const BigInt& v) { return v.get_str(); }

Vec zero_vec(Eigen::Index n) {
  Vec v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = Rational(0);
  return v;
}

Vec unit_vec(Eigen::Index n, Eigen::Index i, const Rational& scale) {
  Vec v = zero_vec(n);
  v[i] = scale;
  return v;
}

std::optional<Vec> solve_exact(const Mat& a, const Vec& b) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Mat aug(rows, cols + 1);
  aug.leftCols(cols) = a;
  aug.col(cols) = b;

  Eigen::Index pivot_row = 0;
  for (Eigen::Index c = 0; c < cols; ++c) {
    Eigen::Index p = pivot_row;
    while (p < rows && aug(p, c).is_zero()) ++p;
    if (p == rows) return std::nullopt;  // rank deficient
    aug.row(p).swap(aug.row(pivot_row));
    const Rational inv = Rational(1) / aug(pivot_row, c);
    for (Eigen::Index k = 0; k <= cols; ++k) aug(pivot_row, k) *= inv;
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == pivot_row || aug(r, c).is_zero()) continue;
      const Rational f = aug(r, c);
      for (Eigen::Index k = 0; k <= cols; ++k) aug(r, k) -= f * aug(pivot_row, k);
    }
    ++pivot_row;
  }
  // Remaining rows must read 0 = 0.
  for (Eigen::Index r = pivot_row; r < rows; ++r)
    if (!aug(r, cols).is_zero()) return std::nullopt;

  Vec x(cols);
  for (Eigen::Index c = 0; c < cols; ++c) x[c] = aug(c, cols);
  return x;
}

}  // namespace superdim
