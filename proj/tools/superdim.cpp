// Command-line front end: info, series, scan, atypical, batch.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "superdim/query.hpp"

namespace {

using namespace superdim;

constexpr int kExitUsage = 1;
constexpr int kExitInconsistent = 2;

Weight weight_from_options(const RootDatum& datum, const std::string& marks, const std::string& coords) {
  if (!marks.empty() && !coords.empty()) throw std::invalid_argument("give either --marks or --coords, not both");
  if (!marks.empty()) return weight_from_marks(datum, parse_marks(datum, marks));
  if (!coords.empty()) return parse_weight_coords(datum, coords);
  throw std::invalid_argument("a weight is required (--marks or --coords)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact dimensions and Hilbert series for basic classical Lie superalgebras"};
  app.require_subcommand(1);

  std::string algebra, marks, coords, format = "text", batch_file;
  int terms = 5;
  std::vector<std::string> ranges, fixes;

  auto* info = app.add_subcommand("info", "List the root datum");
  info->add_option("algebra", algebra, "e.g. sl(4|1), osp(3|2), D(2,1;1/2), F(4)")->required();
  info->add_option("--format", format, "text, json or latex");

  auto* series = app.add_subcommand("series", "Hilbert series of the dimensions of V(kΛ)");
  series->add_option("algebra", algebra)->required();
  series->add_option("--marks", marks, "Kac-Dynkin marks, comma separated");
  series->add_option("--coords", coords, "weight in coordinates, e.g. 2e1+e2-d1");
  series->add_option("--terms", terms, "number of expansion coefficients")->check(CLI::Range(1, 1000));
  series->add_option("--format", format, "text, json or latex");

  auto* scan = app.add_subcommand("scan", "Table of series over a grid of marks");
  scan->add_option("algebra", algebra)->required();
  scan->add_option("--range", ranges, "a1=0..2 (inclusive)");
  scan->add_option("--fix", fixes, "a3=1");
  scan->add_option("--terms", terms)->check(CLI::Range(1, 1000));
  scan->add_option("--format", format, "text, json or latex");

  auto* atyp = app.add_subcommand("atypical", "Dimensions of V(kΛ) for singly atypical Λ of sl(m|n)");
  atyp->add_option("algebra", algebra)->required();
  atyp->add_option("--marks", marks);
  atyp->add_option("--coords", coords);
  atyp->add_option("--terms", terms)->check(CLI::Range(1, 1000));
  atyp->add_option("--format", format, "text, json or latex");

  auto* batch = app.add_subcommand("batch", "Run a JSON file of queries");
  batch->add_option("file", batch_file)->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*batch) {
      std::ifstream in(batch_file);
      const auto doc = nlohmann::json::parse(in);
      std::cout << run_batch(doc).dump(2) << "\n";
      return 0;
    }

    const OutputFormat fmt = parse_format(format);
    const RootDatum datum = build_root_datum(parse_algebra(algebra));

    if (*info) {
      std::cout << render_info(datum, fmt);
    } else if (*series) {
      const Weight w = weight_from_options(datum, marks, coords);
      std::cout << render(run_series_query(datum, w, terms), fmt);
    } else if (*scan) {
      std::vector<MarkRange> grid;
      for (const auto& r : ranges) grid.push_back(parse_mark_assignment(r));
      for (const auto& f : fixes) {
        MarkRange m = parse_mark_assignment(f);
        if (m.values.size() != 1) throw std::invalid_argument("--fix takes a single value: '" + f + "'");
        grid.push_back(std::move(m));
      }
      const int scan_terms = scan->count("--terms") ? terms : 4;
      std::cout << render_scan(run_scan(datum, grid, scan_terms), fmt);
    } else if (*atyp) {
      const Weight w = weight_from_options(datum, marks, coords);
      const int n = atyp->count("--terms") ? terms : 6;
      std::cout << render(run_atypical_query(datum, w, n), fmt);
    }
  } catch (const ConsistencyError& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
