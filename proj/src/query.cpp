#include "superdim/query.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace superdim {

// ---------------------------------------------------------------------------
// Parsing

namespace {

class AlgebraParser {
 public:
  explicit AlgebraParser(std::string_view s) : s_(s) {}

  AlgebraSpec run() {
    skip_ws();
    const std::size_t name_pos = pos_;
    std::string name;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) name += s_[pos_++];
    if (name.empty()) throw ParseError("expected an algebra name", name_pos);
    skip_ws();
    expect('(');

    AlgebraSpec spec;
    if (name == "sl") {
      const int p = integer();
      separator("|,");
      const int q = integer();
      close();
      if (p < 1 || q < 1) throw ParseError("sl(p|q) needs p, q >= 1", name_pos);
      spec = AlgebraSpec::a(p - 1, q - 1);
    } else if (name == "osp") {
      const std::size_t a_pos = pos_;
      const int a = integer();
      separator("|,");
      const std::size_t b_pos = pos_;
      const int b = integer();
      close();
      if (b < 2 || b % 2 != 0) throw ParseError("osp(a|b) needs an even b >= 2", b_pos);
      if (a < 1) throw ParseError("osp(a|b) needs a >= 1", a_pos);
      if (a % 2 == 1) spec = AlgebraSpec::b((a - 1) / 2, b / 2);
      else if (a == 2) spec = AlgebraSpec::c(b / 2 + 1);
      else spec = AlgebraSpec::d(a / 2, b / 2);
    } else if (name == "A" || name == "B") {
      const int m = integer();
      separator(",");
      const int n = integer();
      close();
      spec = name == "A" ? AlgebraSpec::a(m, n) : AlgebraSpec::b(m, n);
    } else if (name == "C") {
      const int n = integer();
      close();
      spec = AlgebraSpec::c(n);
    } else if (name == "D") {
      const int m = integer();
      separator(",");
      const int n = integer();
      skip_ws();
      if (peek() == ';') {
        ++pos_;
        if (m != 2 || n != 1) throw ParseError("only D(2,1;alpha) takes a parameter", pos_ - 1);
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && s_[pos_] != ')') ++pos_;
        auto alpha = Rational::try_parse(s_.substr(start, pos_ - start));
        if (!alpha) throw ParseError("alpha must be a rational number", start);
        close();
        spec = AlgebraSpec::d21(*alpha);
      } else {
        close();
        spec = AlgebraSpec::d(m, n);
      }
    } else if (name == "F" || name == "G") {
      const std::size_t arg_pos = pos_;
      const int k = integer();
      close();
      if (name == "F" && k != 4) throw ParseError("the only F-type superalgebra is F(4)", arg_pos);
      if (name == "G" && k != 3) throw ParseError("the only G-type superalgebra is G(3)", arg_pos);
      spec = name == "F" ? AlgebraSpec::f4() : AlgebraSpec::g3();
    } else {
      throw ParseError("unknown algebra '" + name + "'", name_pos);
    }
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("trailing characters", pos_);
    spec.validate();
    return spec;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip_ws();
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  void separator(std::string_view allowed) {
    skip_ws();
    if (allowed.find(peek()) == std::string_view::npos || peek() == '\0')
      throw ParseError("expected one of '" + std::string(allowed) + "'", pos_);
    ++pos_;
  }
  void close() {
    expect(')');
  }
  int integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected a nonnegative integer", start);
    if (pos_ - start > 6) throw ParseError("parameter too large", start);
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

AlgebraSpec parse_algebra(std::string_view text) { return AlgebraParser(text).run(); }

Weight parse_weight_spec(const RootDatum& datum, const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw std::invalid_argument("weight must be 'marks=...' or 'coords=...'");
  const std::string kind = text.substr(0, eq);
  const std::string body = text.substr(eq + 1);
  if (kind == "marks") return weight_from_marks(datum, parse_marks(datum, body));
  if (kind == "coords") return parse_weight_coords(datum, body);
  throw std::invalid_argument("unknown weight kind '" + kind + "'");
}

OutputFormat parse_format(const std::string& name) {
  const std::string n = lower(name);
  if (n == "text") return OutputFormat::Text;
  if (n == "json") return OutputFormat::Json;
  if (n == "latex") return OutputFormat::Latex;
  throw std::invalid_argument("unknown format '" + name + "' (expected text, json or latex)");
}

// ---------------------------------------------------------------------------
// Series content

SplitSeries split_content(const RationalSeries& s) {
  SplitSeries out;
  out.pole_order = s.pole_order();
  const auto& c = s.numerator().coefficients();
  if (c.empty()) {
    out.common_factor = Rational(0);
    return out;
  }
  BigInt g = 0, l = 1;
  for (const auto& x : c) {
    if (x.is_zero()) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.numerator().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
  }
  Rational content(g, l);
  const auto first = std::find_if(c.begin(), c.end(), [](const Rational& x) { return !x.is_zero(); });
  if (first->sign() < 0) content = -content;
  out.common_factor = content;
  for (const auto& x : c) out.coefficients.push_back((x / content).to_integer());
  return out;
}

RationalSeries join_content(const SplitSeries& s) {
  std::vector<Rational> c;
  for (const auto& x : s.coefficients) c.emplace_back(x);
  return normalize(Poly(std::move(c)) * s.common_factor, s.pole_order);
}

namespace {

Poly integer_poly(const std::vector<BigInt>& coeffs) {
  std::vector<Rational> c;
  for (const auto& x : coeffs) c.emplace_back(x);
  return Poly(std::move(c));
}

std::string latex_poly(const Poly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational c = p[i];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const Rational mag = abs(c);
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    if (i == 0 || mag != Rational(1)) {
      if (mag.is_integer()) os << mag;
      else os << "\\frac{" << mag.numerator().get_str() << "}{" << mag.denominator().get_str() << "}";
      if (i > 0) os << " ";
    }
    if (i >= 1) os << var;
    if (i >= 2) os << "^{" << i << "}";
  }
  return os.str();
}

std::string factor_prefix(const Rational& f) {
  if (f == Rational(1)) return "";
  if (f == Rational(-1)) return "-";
  return f.is_integer() ? f.str() : "(" + f.str() + ")";
}

}  // namespace

std::string SplitSeries::str(const std::string& var) const {
  if (coefficients.empty()) return "0";
  const Poly p = integer_poly(coefficients);
  std::string num;
  if (p.degree() == 0 && p[0] == Rational(1)) {
    num = common_factor.is_integer() ? common_factor.str() : "(" + common_factor.str() + ")";
  } else {
    const bool wrap = p.degree() > 0 || common_factor != Rational(1);
    num = factor_prefix(common_factor) + (wrap ? "(" + p.str(var) + ")" : p.str(var));
  }
  if (pole_order == 0) return num;
  std::string den = "(1-" + var + ")";
  if (pole_order > 1) den += "^" + std::to_string(pole_order);
  return num + "/" + den;
}

std::string SplitSeries::latex(const std::string& var) const {
  if (coefficients.empty()) return "0";
  const Poly p = integer_poly(coefficients);
  std::string cf;
  if (common_factor != Rational(1)) {
    cf = common_factor.is_integer()
             ? common_factor.str()
             : "\\frac{" + common_factor.numerator().get_str() + "}{" + common_factor.denominator().get_str() + "}";
  }
  std::string num;
  if (p.degree() == 0 && p[0] == Rational(1)) num = cf.empty() ? "1" : cf;
  else num = cf.empty() ? latex_poly(p, var) : cf + " \\, \\left(" + latex_poly(p, var) + "\\right)";
  if (pole_order == 0) return num;
  std::string den = "\\left(1 - " + var + "\\right)";
  if (pole_order > 1) den += "^{" + std::to_string(pole_order) + "}";
  return "\\frac{" + num + "}{" + den + "}";
}

// ---------------------------------------------------------------------------
// Queries

QueryResult run_series_query(const RootDatum& datum, const Weight& w, int terms) {
  QueryResult r;
  r.algebra = datum.spec.name();
  r.datum = datum;
  r.weight = w;
  r.marks = marks_of(datum, w);
  r.typicality = is_n_typical(datum, w);
  r.dominance = is_dominant_integral_partial(datum, w);

  const ConsistencyReport check = verify_consistency(datum, w, std::max(terms, 3));
  r.hilbert = split_content(check.series);
  r.h_polynomial = hilbert_polynomial(datum, w).str();
  r.expansion.assign(check.coefficients.begin(), check.coefficients.begin() + terms);
  r.theorem_form_degenerate = check.theorem_form_degenerate;

  if (!r.typicality.n_typical) {
    std::string roots;
    for (const auto& a : r.typicality.atypical_roots) {
      if (!roots.empty()) roots += ", ";
      roots += format_vector(datum, a.root.coords) + " (k=" + a.k.get_str() + ")";
    }
    r.warnings.push_back("weight is not N-typical: atypical root " + roots +
                         "; coefficients are formula values, upper bounds for atypical multiples");
  }
  if (r.dominance.status == DominanceStatus::Fail)
    r.warnings.push_back("not dominant integral: " + r.dominance.reason);
  else if (r.dominance.status == DominanceStatus::Unknown)
    r.warnings.push_back("finite-dimensionality only partially checked: " + r.dominance.reason);
  if (r.theorem_form_degenerate)
    r.warnings.push_back("elementary-symmetric form is degenerate (1 - c1 vanishes); operator form used alone");
  return r;
}

ordered_json rational_json(const Rational& r) {
  if (r.is_integer()) {
    const BigInt n = r.numerator();
    if (n.fits_slong_p()) return static_cast<std::int64_t>(n.get_si());
  }
  return r.str();
}

namespace {

ordered_json bigint_json(const BigInt& v) { return rational_json(Rational(v)); }

ordered_json vec_json(const Vec& v) {
  ordered_json a = ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(rational_json(v[i]));
  return a;
}

ordered_json typicality_json(const RootDatum& datum, const TypicalityReport& t) {
  ordered_json roots = ordered_json::array();
  for (const auto& a : t.atypical_roots)
    roots.push_back({{"root", format_vector(datum, a.root.coords)}, {"k", bigint_json(a.k)}});
  return {{"typical", t.typical}, {"n_typical", t.n_typical}, {"atypical_roots", roots}};
}

std::string dominance_name(DominanceStatus s) {
  switch (s) {
    case DominanceStatus::Pass: return "pass";
    case DominanceStatus::Fail: return "fail";
    case DominanceStatus::Unknown: return "unknown";
  }
  return "?";
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

template <class T>
std::string join_values(const std::vector<T>& items, const std::string& sep) {
  std::vector<std::string> s;
  for (const auto& x : items) {
    if constexpr (std::is_same_v<T, BigInt>) s.push_back(x.get_str());
    else s.push_back(x.str());
  }
  return join(s, sep);
}

std::string latex_vector(const RootDatum& datum, const Vec& v) {
  std::string plain = format_vector(datum, v);
  // e12 -> e_{12}
  std::string out;
  for (std::size_t i = 0; i < plain.size(); ++i) {
    const char c = plain[i];
    if ((c == 'e' || c == 'd') && i + 1 < plain.size() && std::isdigit(static_cast<unsigned char>(plain[i + 1]))) {
      out += c;
      out += "_{";
      ++i;
      while (i < plain.size() && std::isdigit(static_cast<unsigned char>(plain[i]))) out += plain[i++];
      out += "}";
      --i;
    } else if (c == '+' || c == '-') {
      out += i == 0 ? std::string(1, c) : std::string(" ") + c + " ";
    } else {
      out += c;
    }
  }
  return out;
}

std::string latex_expansion(const std::vector<Rational>& c) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    const bool neg = c[i].sign() < 0;
    const Rational mag = abs(c[i]);
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    if (i == 0 || mag != Rational(1)) os << (mag.is_integer() ? mag.str() : "\\frac{" + mag.numerator().get_str() + "}{" + mag.denominator().get_str() + "}") << (i ? " " : "");
    if (i >= 1) os << "q";
    if (i >= 2) os << "^{" << i << "}";
  }
  if (first) os << "0";
  os << " + \\mathcal{O}\\left(q^{" << c.size() << "}\\right)";
  return os.str();
}

}  // namespace

ordered_json to_json(const QueryResult& r) {
  ordered_json hilbert = {{"common_factor", rational_json(r.hilbert.common_factor)},
                          {"numerator", ordered_json::array()},
                          {"pole_order", r.hilbert.pole_order},
                          {"text", r.hilbert.str()}};
  for (const auto& c : r.hilbert.coefficients) hilbert["numerator"].push_back(bigint_json(c));
  ordered_json expansion = ordered_json::array();
  for (const auto& c : r.expansion) expansion.push_back(rational_json(c));
  return {{"algebra", r.algebra},
          {"weight", format_weight(r.datum, r.weight)},
          {"weight_coords", vec_json(r.weight.coords)},
          {"marks", vec_json(r.marks.values)},
          {"typicality", typicality_json(r.datum, r.typicality)},
          {"dominance", {{"status", dominance_name(r.dominance.status)}, {"reason", r.dominance.reason}}},
          {"hilbert", hilbert},
          {"h_polynomial", r.h_polynomial},
          {"expansion", expansion},
          {"warnings", r.warnings}};
}

std::string to_text(const QueryResult& r) {
  std::ostringstream os;
  os << "algebra:    " << r.algebra << " = " << r.datum.spec.kac_name() << "\n";
  os << "weight:     " << format_weight(r.datum, r.weight) << "\n";
  os << "marks:      " << format_marks(r.marks) << "\n";
  os << "typical:    " << (r.typicality.typical ? "yes" : "no") << "\n";
  os << "N-typical:  " << (r.typicality.n_typical ? "yes" : "no") << "\n";
  os << "h(t)      = " << r.h_polynomial << "\n";
  os << "H(q)      = " << r.hilbert.str() << "\n";
  os << "expansion:  " << join_values(r.expansion, ", ") << "\n";
  for (const auto& w : r.warnings) os << "warning: " << w << "\n";
  return os.str();
}

std::string to_latex_row(const QueryResult& r) {
  std::ostringstream os;
  os << "$\\begin{tabular}{l} $" << latex_vector(r.datum, r.weight.coords) << "$ \\\\ $\\left("
     << join_values(std::vector<Rational>(r.marks.values.data(), r.marks.values.data() + r.marks.values.size()), ", ")
     << "\\right)$ \\end{tabular}$ & $" << r.hilbert.latex() << "$ & $" << latex_expansion(r.expansion) << "$ \\\\";
  return os.str();
}

std::string latex_table(const std::vector<QueryResult>& rows) {
  std::ostringstream os;
  os << "\\begin{tabular}{lll}\n$\\Lambda, (a_1, \\ldots)$ & Hilbert Series & \\\\ \\hline\n";
  for (const auto& r : rows) os << to_latex_row(r) << "\n";
  os << "\\end{tabular}\n";
  return os.str();
}

std::string render(const QueryResult& r, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::Text: return to_text(r);
    case OutputFormat::Json: return to_json(r).dump(2) + "\n";
    case OutputFormat::Latex: {
      std::string out = latex_table({r});
      for (const auto& w : r.warnings) out += "% warning: " + w + "\n";
      return out;
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Scan

MarkRange parse_mark_assignment(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq < 2 || text[0] != 'a')
    throw std::invalid_argument("mark assignment must look like a1=0..2 or a3=1: '" + text + "'");
  const std::string idx = text.substr(1, eq - 1);
  if (!std::all_of(idx.begin(), idx.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
      idx.size() > 4)
    throw std::invalid_argument("bad mark index in '" + text + "'");
  MarkRange r;
  r.index = std::stoi(idx) - 1;
  if (r.index < 0) throw std::invalid_argument("mark indices start at a1");
  const std::string body = text.substr(eq + 1);
  const auto dots = body.find("..");
  if (dots == std::string::npos) {
    r.values.push_back(Rational::parse(body));
    return r;
  }
  const Rational lo = Rational::parse(body.substr(0, dots));
  const Rational hi = Rational::parse(body.substr(dots + 2));
  if (!lo.is_integer() || !hi.is_integer()) throw std::invalid_argument("range bounds must be integers: '" + text + "'");
  for (Rational v = lo; v <= hi; v += Rational(1)) r.values.push_back(v);
  return r;
}

std::vector<QueryResult> run_scan(const RootDatum& datum, const std::vector<MarkRange>& ranges, int terms) {
  std::vector<const MarkRange*> by_index(static_cast<std::size_t>(datum.rank()), nullptr);
  for (const auto& r : ranges) {
    if (r.index >= datum.rank())
      throw std::invalid_argument("mark a" + std::to_string(r.index + 1) + " does not exist for " + datum.spec.name());
    if (by_index[static_cast<std::size_t>(r.index)])
      throw std::invalid_argument("mark a" + std::to_string(r.index + 1) + " is assigned twice");
    by_index[static_cast<std::size_t>(r.index)] = &r;
  }
  for (int i = 0; i < datum.rank(); ++i)
    if (!by_index[static_cast<std::size_t>(i)])
      throw std::invalid_argument("mark a" + std::to_string(i + 1) + " needs --range or --fix");

  std::vector<QueryResult> rows;
  for (const auto* r : by_index)
    if (r->values.empty()) return rows;

  std::vector<std::size_t> odo(by_index.size(), 0);
  while (true) {
    Marks marks{Vec(datum.rank())};
    for (int i = 0; i < datum.rank(); ++i)
      marks.values[i] = by_index[static_cast<std::size_t>(i)]->values[odo[static_cast<std::size_t>(i)]];
    const Weight w = weight_from_marks(datum, marks);
    if (is_n_typical(datum, w).n_typical) rows.push_back(run_series_query(datum, w, terms));

    int pos = datum.rank() - 1;
    while (pos >= 0) {
      auto& digit = odo[static_cast<std::size_t>(pos)];
      if (++digit < by_index[static_cast<std::size_t>(pos)]->values.size()) break;
      digit = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return rows;
}

std::string render_scan(const std::vector<QueryResult>& rows, OutputFormat fmt) {
  if (fmt == OutputFormat::Json) {
    ordered_json a = ordered_json::array();
    for (const auto& r : rows) a.push_back(to_json(r));
    return a.dump(2) + "\n";
  }
  if (fmt == OutputFormat::Latex) return latex_table(rows);

  std::vector<std::array<std::string, 4>> cells;
  cells.push_back({"weight", "marks", "H(q)", "expansion"});
  for (const auto& r : rows)
    cells.push_back({format_weight(r.datum, r.weight), format_marks(r.marks), r.hilbert.str(),
                     join_values(r.expansion, ", ")});
  std::array<std::size_t, 4> width{};
  for (const auto& row : cells)
    for (std::size_t c = 0; c < 4; ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < 4; ++c) {
      os << row[c];
      if (c + 1 < 4) os << std::string(width[c] - row[c].size() + 2, ' ');
    }
    os << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Atypical dimensions

AtypicalResult run_atypical_query(const RootDatum& datum, const Weight& w, int terms) {
  const Atypicality cls = classify_atypicality(datum, w);
  if (cls.kind == AtypicalityKind::Typical)
    throw std::invalid_argument("weight is typical; use the series command");
  if (cls.kind == AtypicalityKind::MultiplyAtypical)
    throw std::invalid_argument("weight is multiply atypical (" + std::to_string(cls.count) + " atypical roots)");
  AtypicalResult r;
  r.algebra = datum.spec.name();
  r.datum = datum;
  r.weight = w;
  r.site = *cls.site;
  r.dims = atypical_dim_sequence(datum, w, terms);
  r.bounds = expand(series_via_operator(datum, w), terms);
  return r;
}

std::string render(const AtypicalResult& r, OutputFormat fmt) {
  const std::string root = format_vector(r.datum, r.site.root.coords);
  if (fmt == OutputFormat::Json) {
    ordered_json dims = ordered_json::array(), bounds = ordered_json::array();
    for (const auto& d : r.dims) dims.push_back(bigint_json(d));
    for (const auto& b : r.bounds) bounds.push_back(rational_json(b));
    ordered_json j = {{"algebra", r.algebra},
                      {"weight", format_weight(r.datum, r.weight)},
                      {"weight_coords", vec_json(r.weight.coords)},
                      {"atypical_root", root},
                      {"site", {{"k", r.site.k}, {"l", r.site.l}}},
                      {"dims", dims},
                      {"typical_bounds", bounds}};
    return j.dump(2) + "\n";
  }
  if (fmt == OutputFormat::Latex) {
    std::ostringstream os;
    os << "\\begin{tabular}{rl}\n";
    for (std::size_t k = 1; k < r.dims.size(); ++k)
      os << "$\\dim V(" << (k == 1 ? "" : std::to_string(k)) << "\\Lambda)$ & $=" << r.dims[k].get_str()
         << "$ \\\\\n";
    os << "\\end{tabular}\n";
    return os.str();
  }
  std::ostringstream os;
  os << "algebra:        " << r.algebra << "\n";
  os << "weight:         " << format_weight(r.datum, r.weight) << "\n";
  os << "atypical root:  " << root << " (k=" << r.site.k << ", l=" << r.site.l << ")\n";
  os << "dimensions:     " << join_values(r.dims, ", ") << "\n";
  os << "typical bounds: " << join_values(r.bounds, ", ") << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Info

std::string render_info(const RootDatum& datum, OutputFormat fmt) {
  auto roots = [&](const std::vector<Root>& rs) {
    std::vector<std::string> out;
    for (const auto& r : rs) out.push_back(format_vector(datum, r.coords));
    return out;
  };
  std::vector<std::string> form_rows;
  for (Eigen::Index i = 0; i < datum.form.rows(); ++i) {
    std::vector<std::string> row;
    for (Eigen::Index j = 0; j < datum.form.cols(); ++j) row.push_back(datum.form(i, j).str());
    form_rows.push_back("[" + join(row, ", ") + "]");
  }
  std::vector<std::string> simple;
  for (const auto& r : datum.simple_roots)
    simple.push_back(format_vector(datum, r.coords) + (r.parity == Parity::Odd ? " (odd)" : " (even)"));

  if (fmt == OutputFormat::Json) {
    ordered_json form = ordered_json::array();
    for (Eigen::Index i = 0; i < datum.form.rows(); ++i) {
      ordered_json row = ordered_json::array();
      for (Eigen::Index j = 0; j < datum.form.cols(); ++j) row.push_back(rational_json(datum.form(i, j)));
      form.push_back(row);
    }
    ordered_json simple_json = ordered_json::array();
    for (const auto& r : datum.simple_roots)
      simple_json.push_back({{"root", format_vector(datum, r.coords)}, {"parity", r.parity == Parity::Odd ? "odd" : "even"}});
    ordered_json j = {{"algebra", datum.spec.name()},
                      {"kac_name", datum.spec.kac_name()},
                      {"coordinates", datum.labels},
                      {"form", form},
                      {"simple_roots", simple_json},
                      {"delta0_plus", roots(datum.delta0_plus)},
                      {"delta1_plus", roots(datum.delta1_plus)},
                      {"delta1_bar_plus", roots(datum.delta1_bar_plus)},
                      {"d0", datum.d0()},
                      {"d1", datum.d1()},
                      {"rho0", format_vector(datum, datum.rho0)},
                      {"rho1", format_vector(datum, datum.rho1)},
                      {"rho", format_vector(datum, datum.rho)}};
    return j.dump(2) + "\n";
  }

  std::ostringstream os;
  os << "algebra:        " << datum.spec.name() << " = " << datum.spec.kac_name() << "\n";
  os << "coordinates:    " << join(datum.labels, " ") << "\n";
  os << "form:           " << join(form_rows, " ") << "\n";
  os << "simple roots:   " << join(simple, ", ") << "\n";
  os << "even positive:  " << join(roots(datum.delta0_plus), ", ") << "\n";
  os << "odd positive:   " << join(roots(datum.delta1_plus), ", ") << "\n";
  os << "odd, 2a not even: " << join(roots(datum.delta1_bar_plus), ", ") << "\n";
  os << "d0 = " << datum.d0() << ", d1 = " << datum.d1() << "\n";
  os << "rho0 = " << format_vector(datum, datum.rho0) << "\n";
  os << "rho1 = " << format_vector(datum, datum.rho1) << "\n";
  os << "rho  = " << format_vector(datum, datum.rho) << "\n";
  std::string out = os.str();
  if (fmt == OutputFormat::Latex) {
    std::string tex = "\\begin{verbatim}\n" + out + "\\end{verbatim}\n";
    return tex;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Batch

ordered_json run_batch(const nlohmann::json& batch) {
  const nlohmann::json& queries = batch.is_object() ? batch.at("queries") : batch;
  if (!queries.is_array()) throw std::invalid_argument("batch must be an array of queries");
  ordered_json out = ordered_json::array();
  for (const auto& q : queries) {
    try {
      const std::string command = q.value("command", "series");
      const RootDatum datum = build_root_datum(parse_algebra(q.at("algebra").get<std::string>()));
      if (command == "info") {
        out.push_back(ordered_json::parse(render_info(datum, OutputFormat::Json)));
        continue;
      }
      const int terms = q.value("terms", command == "atypical" ? 6 : 5);
      const Weight w = parse_weight_spec(datum, q.at("weight").get<std::string>());
      if (command == "series") out.push_back(to_json(run_series_query(datum, w, terms)));
      else if (command == "atypical")
        out.push_back(ordered_json::parse(render(run_atypical_query(datum, w, terms), OutputFormat::Json)));
      else throw std::invalid_argument("unknown command '" + command + "'");
    } catch (const ConsistencyError&) {
      throw;
    } catch (const std::exception& e) {
      out.push_back({{"error", e.what()}});
    }
  }
  return out;
}

}  // namespace superdim
