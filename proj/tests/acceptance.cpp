// Acceptance suite.  Every check prints one line:
//
//   [PASS] C<n> <what> : got <value>, expected <value> (exact)
//
// All quantities are integers or exact rationals, so every tolerance is
// zero.  Exit status is 0 when every check of the selected criterion passes.

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "knotcalc/conf_cohomology.hpp"
#include "knotcalc/spectral.hpp"
#include "knotcalc/vassiliev.hpp"

using namespace knotcalc;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok, const std::string& got, const std::string& expected) {
  if (!ok) ++failures;
  std::cout << (ok ? "[PASS] C" : "[FAIL] C") << criterion << " " << what << " : got " << got << ", expected "
            << expected << " (exact)\n";
}

void check_eq(int criterion, const std::string& what, long long got, long long expected) {
  report(criterion, what, got == expected, std::to_string(got), std::to_string(expected));
}

void info(int criterion, const std::string& what) { std::cout << "[INFO] C" << criterion << " " << what << "\n"; }

const Parity kParities[] = {Parity::even, Parity::odd};

Monomial mono(int p, std::vector<Chord> chords) { return Monomial(p, std::move(chords)); }

// Oracle for the configuration-space dimensions: prod_{m=1}^{p-1} (1 + m t).
std::vector<long long> poincare_coefficients(int p) {
  std::vector<long long> poly{1};
  for (int m = 1; m <= p - 1; ++m) {
    std::vector<long long> next(poly.size() + 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i];
      next[i + 1] += poly[i] * m;
    }
    poly = next;
  }
  return poly;
}

void betti_check(int criterion, int n, int degree, long long expected) {
  const BettiResult r = betti_detail(n, degree);
  std::string cells;
  for (const auto& c : r.cells) cells += " (p=" + std::to_string(c.p) + ",k=" + std::to_string(c.k) + ")";
  check_eq(criterion, "betti(n=" + std::to_string(n) + ", degree " + std::to_string(degree) + ")" +
                          (cells.empty() ? "" : " from" + cells),
           static_cast<long long>(r.dim), expected);
}

void c1() {
  for (int n : {4, 5, 6}) betti_check(1, n, n - 3, 1);
}

void c2() {
  for (int n : {4, 5, 6}) betti_check(2, n, 2 * n - 6, 2);
}

void c3() {
  for (int n : {5, 6}) betti_check(3, n, 2 * n - 5, 1);
  info(3, "betti(n=4, degree 3) = " + std::to_string(betti(4, 3)) + " (reported, not asserted)");
}

void c4() {
  const Monomial parallel = mono(4, {{1, 2}, {3, 4}});
  const Monomial crossed = mono(4, {{1, 3}, {2, 4}});
  const Monomial nested = mono(4, {{1, 4}, {2, 3}});
  for (Parity parity : kParities) {
    const std::string tag = std::string(" [") + to_string(parity) + " n]";
    SpectralEngine engine(parity);
    check_eq(4, "dim E1(p=4,k=2)" + tag, static_cast<long long>(engine.e1(4, 2)->dim()), 3);
    check_eq(4, "rank d1 on E1(p=4,k=2)" + tag, static_cast<long long>(engine.d1(4, 2)->rank), 1);

    auto target = engine.e1(3, 2);
    LinearCombo a(4, 2), b(4, 2);
    a.add(crossed, 1);
    b.add(parallel, 1);
    b.add(nested, 1);
    const std::size_t da = target->coordinates(coface_sum(a, parity)).size();
    const std::size_t db = target->coordinates(coface_sum(b, parity)).size();
    report(4, "d1 class(a13 a24) = 0" + tag, da == 0, da == 0 ? "0" : "nonzero", "0");
    report(4, "d1 class(a12 a34 + a14 a23) = 0" + tag, db == 0, db == 0 ? "0" : "nonzero", "0");
  }
}

void c5() {
  for (Parity parity : kParities) {
    SpectralEngine engine(parity);
    std::size_t nonzero_products = 0, products = 0, escaped = 0, generators = 0;
    for (int k = 0; k <= 4; ++k) {
      for (int p = 2; p <= 7; ++p) {
        ++products;
        if (!(engine.d1(p - 1, k)->matrix * engine.d1(p, k)->matrix).is_zero()) ++nonzero_products;
      }
      for (int p = 1; p <= 7; ++p) {
        auto lower = engine.cohomology(p - 1, k);
        auto below = engine.e1(p - 1, k);
        for (int i = 1; i <= p; ++i)
          for (const Monomial& g : lower->basis) {
            LinearCombo v(p, k);
            v.add(codegeneracy(g, i, parity), 1);
            ++generators;
            if (!below->coordinates(coface_sum(v, parity)).empty()) ++escaped;
          }
      }
    }
    const std::string tag = std::string(" [") + to_string(parity) + "]";
    check_eq(5, "nonzero d1 o d1 products among " + std::to_string(products) + ", p<=7 k<=4" + tag,
             static_cast<long long>(nonzero_products), 0);
    check_eq(5, "degeneracy generators whose d1 leaves the degeneracy subspace, of " + std::to_string(generators) + tag,
             static_cast<long long>(escaped), 0);
  }
}

void c6() {
  std::size_t mismatches = 0, cells = 0;
  for (int p = 0; p <= 7; ++p) {
    const auto oracle = poincare_coefficients(p);
    // The product has degree p - 1.  Degree p is checked too, as a vanishing
    // test, except at p = 7 where that space has 116280 monomials.
    const int k_top = p <= 6 ? p : p - 1;
    for (int k = 0; k <= k_top; ++k) {
      const long long expected = k < static_cast<int>(oracle.size()) ? oracle[static_cast<std::size_t>(k)] : 0;
      for (Parity parity : kParities) {
        ++cells;
        const long long got = static_cast<long long>(cohomology_space(p, k, parity).dim());
        if (got != expected) {
          ++mismatches;
          report(6, "dim H(p=" + std::to_string(p) + ",k=" + std::to_string(k) + ") [" + to_string(parity) + "]",
                 false, std::to_string(got), std::to_string(expected));
        }
      }
    }
  }
  check_eq(6, "cells disagreeing with prod (1 + m t), of " + std::to_string(cells) + ", p<=7, k<=p",
           static_cast<long long>(mismatches), 0);
}

void c7() {
  std::size_t nonzero = 0, cells = 0;
  for (Parity parity : kParities) {
    SpectralEngine engine(parity);
    for (int p = 1; p <= 7; ++p)
      for (int k = 0; 2 * k < p; ++k) {
        ++cells;
        if (engine.e1(p, k)->dim() != 0) ++nonzero;
      }
  }
  check_eq(7, "nonzero E1 cells with p > 2k, p <= 7, of " + std::to_string(cells), static_cast<long long>(nonzero), 0);
}

void c8() {
  check_eq(8, "diagonal_cell(1, odd)", static_cast<long long>(diagonal_cell(1, Parity::odd).dim), 1);
  check_eq(8, "diagonal_cell(2, odd)", static_cast<long long>(diagonal_cell(2, Parity::odd).dim), 1);
  check_eq(8, "diagonal_cell(2, even)", static_cast<long long>(diagonal_cell(2, Parity::even).dim), 2);
  for (Parity parity : kParities) {
    SpectralEngine engine(parity);
    for (int m = 1; m <= 3; ++m)
      check_eq(8, "dim E1(p=" + std::to_string(2 * m + 1) + ",k=" + std::to_string(m) + ") [" + to_string(parity) + "]",
               static_cast<long long>(engine.e1(2 * m + 1, m)->dim()), 0);
  }
}

std::pair<int, std::string> run_cli(const std::string& cli, const std::string& args) {
  std::string out;
  FILE* pipe = ::popen((cli + " " + args).c_str(), "r");
  if (!pipe) return {-1, out};
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), n);
  const int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void c9(const std::string& cli) {
  if (cli.empty()) {
    report(9, "CLI binary given with --cli", false, "none", "a path");
    return;
  }
  const fs::path dir = fs::temp_directory_path() / ("knotcalc-acceptance-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  const std::string args = "e2 --n 5 --kmax 3 --json --cache-dir '" + dir.string() + "'";

  const auto t0 = std::chrono::steady_clock::now();
  const auto cold = run_cli(cli, args);
  const auto t1 = std::chrono::steady_clock::now();
  std::size_t entries = 0;
  if (fs::exists(dir))
    for ([[maybe_unused]] const auto& f : fs::directory_iterator(dir)) ++entries;
  const auto warm = run_cli(cli, args);
  const auto t2 = std::chrono::steady_clock::now();
  const auto uncached = run_cli(cli, "e2 --n 5 --kmax 3 --json --no-cache");
  fs::remove_all(dir);

  auto ms = [](auto d) { return std::to_string(std::chrono::duration_cast<std::chrono::milliseconds>(d).count()); };
  check_eq(9, "cold run exit code", cold.first, 0);
  check_eq(9, "warm run exit code", warm.first, 0);
  report(9, "cold run populated the cache", entries > 0, std::to_string(entries) + " entries", "> 0 entries");
  report(9, "warm JSON byte-identical to cold (" + std::to_string(cold.second.size()) + " bytes)",
         !cold.second.empty() && cold.second == warm.second, cold.second == warm.second ? "identical" : "different",
         "identical");
  report(9, "uncached JSON byte-identical to cold", cold.second == uncached.second,
         cold.second == uncached.second ? "identical" : "different", "identical");
  info(9, "cold " + ms(t1 - t0) + " ms, warm " + ms(t2 - t1) + " ms");
}

void c10() {
  for (auto [a, b] : {std::pair{4, 6}, std::pair{5, 7}}) {
    const std::string tag = "n=" + std::to_string(a) + " vs n=" + std::to_string(b);
    const PageReport ra = e2_page(a, 3), rb = e2_page(b, 3);
    std::size_t differ = ra.cells.size() == rb.cells.size() ? 0 : 1;
    for (std::size_t i = 0; differ == 0 && i < ra.cells.size(); ++i)
      if (ra.cells[i].p != rb.cells[i].p || ra.cells[i].k != rb.cells[i].k || ra.cells[i].dim != rb.cells[i].dim)
        ++differ;
    check_eq(10, "E2 page cells (k <= 3) differing, " + tag, static_cast<long long>(differ), 0);

    SpectralEngine ea(parity_of(a)), eb(parity_of(b));
    std::size_t cell_diff = 0, cells = 0;
    for (int k = 0; k <= 4; ++k)
      for (int p = 0; p <= 7; ++p) {
        ++cells;
        if (ea.e1_dim(p, k) != eb.e1_dim(p, k) || ea.e2_dim(p, k) != eb.e2_dim(p, k)) ++cell_diff;
      }
    check_eq(10, "E1/E2 cells (p <= 7, k <= 4) differing, of " + std::to_string(cells) + ", " + tag,
             static_cast<long long>(cell_diff), 0);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"knotcalc acceptance suite"};
  int criterion = 0;
  std::string cli;
  app.add_option("--criterion", criterion, "Criterion 1..10 (0 runs all)")->check(CLI::Range(0, 10));
  app.add_option("--cli", cli, "Path to the knotcalc binary (criterion 9)");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::function<void()>> suites = {c1, c2, c3, c4, c5, c6, c7, c8, [&] { c9(cli); }, c10};
  for (int c = 1; c <= 10; ++c) {
    if (criterion != 0 && criterion != c) continue;
    try {
      suites[static_cast<std::size_t>(c - 1)]();
    } catch (const std::exception& e) {
      report(c, "completed without exception", false, e.what(), "no exception");
    }
  }
  return failures == 0 ? 0 : 1;
}
