#include "superdim/weights.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace superdim {

namespace {

// Row functional for mark i: a_i = row · Λ.
Vec mark_functional(const RootDatum& datum, const Root& simple) {
  const Vec g = datum.form * simple.coords;
  const Rational norm = simple.coords.dot(g);
  if (norm.is_zero()) return g;
  return g * (Rational(2) / norm);
}

}  // namespace

Marks marks_of(const RootDatum& datum, const Weight& w) {
  if (w.coords.size() != datum.dim())
    throw std::invalid_argument("marks_of: weight dimension does not match the root datum");
  Marks m{Vec(datum.rank())};
  for (int i = 0; i < datum.rank(); ++i)
    m.values[i] = mark_functional(datum, datum.simple_roots[static_cast<std::size_t>(i)]).dot(w.coords);
  return m;
}

Weight weight_from_marks(const RootDatum& datum, const Marks& marks) {
  if (marks.values.size() != datum.rank())
    throw std::invalid_argument("weight_from_marks: expected " + std::to_string(datum.rank()) +
                                " marks, got " + std::to_string(marks.values.size()));
  const bool gauge = datum.spec.family == Family::A;
  const Eigen::Index rows = datum.rank() + (gauge ? 1 : 0);
  Mat a(rows, datum.dim());
  Vec b(rows);
  for (int i = 0; i < datum.rank(); ++i) {
    a.row(i) = mark_functional(datum, datum.simple_roots[static_cast<std::size_t>(i)]).transpose();
    b[i] = marks.values[i];
  }
  if (gauge) {
    // μ_1 = 0: the first d-coordinate sits right after the m+1 e-coordinates.
    a.row(rows - 1) = unit_vec(datum.dim(), datum.spec.m + 1).transpose();
    b[rows - 1] = Rational(0);
  }
  auto x = solve_exact(a, b);
  if (!x) throw SingularSystem("weight_from_marks: mark system has no unique solution for " + datum.spec.name());
  return {*x};
}

DominanceCheck is_dominant_integral_partial(const RootDatum& datum, const Weight& w) {
  const Marks m = marks_of(datum, w);
  for (int i = 0; i < datum.rank(); ++i) {
    if (datum.simple_roots[static_cast<std::size_t>(i)].parity != Parity::Even) continue;
    const Rational& a = m.values[i];
    if (!a.is_integer() || a.sign() < 0)
      return {DominanceStatus::Fail,
              "even mark a" + std::to_string(i + 1) + " = " + a.str() + " is not a nonnegative integer"};
  }
  const Family f = datum.spec.family;
  if (f == Family::A || f == Family::C) return {DominanceStatus::Pass, "even marks are nonnegative integers"};
  return {DominanceStatus::Unknown,
          "even simple marks are nonnegative integers; remaining finite-dimensionality conditions for " +
              datum.spec.kac_name() + " are not checked"};
}

namespace {

class CoordParser {
 public:
  CoordParser(const RootDatum& datum, const std::string& text) : datum_(datum), s_(text) {}

  Weight run() {
    Vec v = zero_vec(datum_.dim());
    skip_ws();
    if (pos_ == s_.size()) fail("empty weight");
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Rational coeff(1);
      if (peek() == '(') {
        ++pos_;
        const auto close = s_.find(')', pos_);
        if (close == std::string::npos) fail("unbalanced '('");
        auto r = Rational::try_parse(s_.substr(pos_, close - pos_));
        if (!r) fail("bad coefficient");
        coeff = *r;
        pos_ = close + 1;
      } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
        auto r = Rational::try_parse(s_.substr(start, pos_ - start));
        if (!r) fail("bad coefficient");
        coeff = *r;
      }
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
      }
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string label = s_.substr(start, pos_ - start);
      const auto it = std::find(datum_.labels.begin(), datum_.labels.end(), label);
      if (label.empty() || it == datum_.labels.end()) {
        pos_ = start;
        fail("unknown coordinate '" + label + "'");
      }
      v[it - datum_.labels.begin()] += coeff * Rational(sign);
      skip_ws();
    }
    return {v};
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("weight coordinates, position " + std::to_string(pos_ + 1) + ": " + what);
  }

  const RootDatum& datum_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

Weight parse_weight_coords(const RootDatum& datum, const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  const auto last = text.find_last_not_of(" \t");
  if (first != std::string::npos && text.substr(first, last - first + 1) == "0") return Weight{zero_vec(datum.dim())};
  return CoordParser(datum, text).run();
}

Marks parse_marks(const RootDatum& datum, const std::string& text) {
  std::vector<Rational> vals;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto r = Rational::try_parse(item);
    if (!r) throw std::invalid_argument("marks: '" + item + "' is not a rational number");
    vals.push_back(*r);
  }
  if (static_cast<int>(vals.size()) != datum.rank())
    throw std::invalid_argument(datum.spec.name() + " has " + std::to_string(datum.rank()) + " marks, got " +
                                std::to_string(vals.size()));
  Marks m{Vec(datum.rank())};
  for (int i = 0; i < datum.rank(); ++i) m.values[i] = vals[static_cast<std::size_t>(i)];
  return m;
}

std::string format_weight(const RootDatum& datum, const Weight& w) { return format_vector(datum, w.coords); }

std::string format_marks(const Marks& m) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < m.values.size(); ++i) {
    if (i) out += ",";
    out += m.values[i].str();
  }
  return out + ")";
}

}  // namespace superdim
