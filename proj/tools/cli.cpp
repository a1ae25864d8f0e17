#include "cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "knotcalc/cache.hpp"
#include "knotcalc/errors.hpp"
#include "knotcalc/report.hpp"
#include "knotcalc/spectral.hpp"
#include "knotcalc/vassiliev.hpp"

namespace knotcalc::cli {

namespace {

using nlohmann::json;

struct CacheOptions {
  std::string directory;
  bool disabled = false;

  std::unique_ptr<CellCache> open() const {
    if (disabled) return nullptr;
    std::string dir = directory;
    if (dir.empty())
      if (const char* env = std::getenv("KNOTCALC_CACHE")) dir = env;
    if (dir.empty()) return nullptr;
    return std::make_unique<CellCache>(dir);
  }
};

void add_cache_flags(CLI::App* cmd, CacheOptions& options) {
  cmd->add_option("--cache-dir", options.directory, "Cell cache directory (default: $KNOTCALC_CACHE)");
  cmd->add_flag("--no-cache", options.disabled, "Ignore the cell cache");
}

void require_dimension(int n) {
  if (n < 3) throw UnsupportedError("n = " + std::to_string(n) + " is below 3");
}

std::string join_cells(const BettiResult& result) {
  if (result.cells.empty()) return "none";
  std::string out;
  for (const auto& c : result.cells) {
    if (!out.empty()) out += ", ";
    out += "p=" + std::to_string(c.p) + " k=" + std::to_string(c.k);
  }
  return out;
}

int cohomology_command(int points, int chords, int n, bool as_json, const CacheOptions& cache_options,
                       std::ostream& out) {
  require_dimension(n);
  if (points < 0 || chords < 0) throw InputError("--points and --chords must be non-negative");
  auto cache = cache_options.open();
  const Parity parity = parity_of(n);

  std::size_t dim = 0;
  std::vector<std::string> basis;
  std::optional<json> hit;
  if (cache) hit = cache->load({points, chords, parity, CellKind::cohomology});
  if (hit) {
    dim = hit->at("dim").get<std::size_t>();
    basis = hit->at("basis").get<std::vector<std::string>>();
  } else {
    SpectralEngine engine(parity, cache.get());
    auto space = engine.cohomology(points, chords);
    dim = space->dim();
    for (const Monomial& m : space->basis) basis.push_back(format(m));
  }

  if (as_json) {
    json doc = {{"engine_version", kEngineVersion}, {"n", n},   {"parity", to_string(parity)},
                {"p", points},                      {"k", chords}, {"q", chords * (n - 1)},
                {"dim", dim},                       {"basis", basis}};
    out << doc.dump(2) << "\n";
  } else {
    out << "dim " << dim << "\n";
    for (const auto& b : basis) out << b << "\n";
  }
  return kSuccess;
}

int e2_command(int n, int k_max, bool as_json, const CacheOptions& cache_options, std::ostream& out) {
  auto cache = cache_options.open();
  const PageReport report = e2_page(n, k_max, cache.get());
  if (as_json) {
    out << emit_report(report);
    return kSuccess;
  }
  out << "E2 page, n=" << n << " (" << to_string(report.parity) << "), k <= " << k_max << "\n";
  out << std::setw(4) << "p" << std::setw(4) << "k" << std::setw(6) << "q" << std::setw(8) << "degree" << std::setw(6)
      << "dim" << "  exact\n";
  for (const PageCell& c : report.cells) {
    if (c.dim == 0) continue;
    out << std::setw(4) << c.p << std::setw(4) << c.k << std::setw(6) << c.q << std::setw(8) << c.total_degree
        << std::setw(6) << c.dim << "  " << (c.exact ? "yes" : "no") << "\n";
  }
  out << "betti:\n";
  for (const BettiEntry& b : report.betti) {
    if (b.dim == 0 && !b.exact) continue;
    out << "  b_" << b.degree << " = " << b.dim << (b.exact ? "" : "  (lower bound)") << "\n";
  }
  return kSuccess;
}

int betti_command(int n, int degree, const CacheOptions& cache_options, std::ostream& out) {
  auto cache = cache_options.open();
  const BettiResult result = betti_detail(n, degree, cache.get());
  out << result.dim << " (cells: " << join_cells(result) << ")\n";
  return kSuccess;
}

int diagonal_command(int order, int n, const CacheOptions& cache_options, std::ostream& out) {
  require_dimension(n);
  auto cache = cache_options.open();
  SpectralEngine engine(parity_of(n), cache.get());
  const DiagonalCell cell = diagonal_cell(order, engine);
  out << cell.dim << "\n";
  for (const LinearCombo& z : cell.kernel) out << "  " << format(z) << "\n";
  return kSuccess;
}

int reduce_command(const std::string& diagram, int n, const CacheOptions& cache_options, std::ostream& out) {
  require_dimension(n);
  const Parity parity = parity_of(n);
  const ParsedDiagram parsed = parse(diagram, parity);
  if (parsed.value.is_zero()) {
    out << "0 (diagram vanishes)\n";
    return kSuccess;
  }
  const Monomial& m = parsed.value.monomial();
  auto cache = cache_options.open();
  SpectralEngine engine(parity, cache.get());
  auto cell = engine.e1(m.points(), static_cast<int>(m.degree()));
  LinearCombo v(m.points(), static_cast<int>(m.degree()));
  v.add(parsed.value, Rational(1));
  const SparseRow coords = cell->coordinates(v);

  out << (parsed.value.sign() > 0 ? "+" : "-") << "[" << parsed.canonical << "] in E1(p=" << m.points()
      << ", k=" << m.degree() << "), dim " << cell->dim() << "\n";
  if (coords.empty()) out << "0\n";
  for (const auto& e : coords) out << to_string(e.value) << "\t" << format(cell->basis[e.col]) << "\n";
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact E1/E2 pages and Betti numbers for spaces of long knots", "knotcalc"};
  app.require_subcommand(1);

  CacheOptions cache_options;
  int n = 0, points = 0, chords = 0, k_max = 0, degree = 0, order = 0;
  bool as_json = false;
  std::string diagram;

  auto* cohomology = app.add_subcommand("cohomology", "Cohomology of the configuration space of P points in degree K(N-1)");
  cohomology->add_option("--points", points, "Number of points")->required();
  cohomology->add_option("--chords", chords, "Number of chords")->required();
  cohomology->add_option("--n", n, "Ambient dimension")->required();
  cohomology->add_flag("--json", as_json, "Emit JSON");
  add_cache_flags(cohomology, cache_options);

  auto* e2 = app.add_subcommand("e2", "E2 page with exactness flags");
  e2->add_option("--n", n, "Ambient dimension (>= 4)")->required();
  e2->add_option("--kmax", k_max, "Largest number of chords")->required();
  e2->add_flag("--json", as_json, "Emit JSON");
  add_cache_flags(e2, cache_options);

  auto* betti_cmd = app.add_subcommand("betti", "Exact rational Betti number");
  betti_cmd->add_option("--n", n, "Ambient dimension (>= 4)")->required();
  betti_cmd->add_option("--degree", degree, "Cohomological degree")->required();
  add_cache_flags(betti_cmd, cache_options);

  auto* diagonal = app.add_subcommand("diagonal", "Kernel of d1 on the diagonal cell E1(2M, M)");
  diagonal->add_option("--order", order, "Number of chords M")->required();
  diagonal->add_option("--n", n, "Ambient dimension")->required();
  add_cache_flags(diagonal, cache_options);

  auto* reduce = app.add_subcommand("reduce", "Coordinates of a diagram class in the E1 basis");
  reduce->add_option("diagram", diagram, "Diagram, e.g. \"4: 1-3 2-4\"")->required();
  reduce->add_option("--n", n, "Ambient dimension")->required();
  add_cache_flags(reduce, cache_options);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kUsage;
  }

  try {
    if (*cohomology) return cohomology_command(points, chords, n, as_json, cache_options, out);
    if (*e2) return e2_command(n, k_max, as_json, cache_options, out);
    if (*betti_cmd) return betti_command(n, degree, cache_options, out);
    if (*diagonal) return diagonal_command(order, n, cache_options, out);
    if (*reduce) return reduce_command(diagram, n, cache_options, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << "\n";
    return kOutOfRange;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace knotcalc::cli
