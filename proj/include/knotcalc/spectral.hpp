#pragma once

// E1 and E2 pages of the cohomology spectral sequence of the cosimplicial
// model for long knots, and the rational Betti numbers they determine.
//
// Cells are indexed by (p, k): p configuration points, k chords.  The
// cohomological grading is q = k(n-1) and the total degree is q - p.
//
//   E1(p, k) = H^{k(n-1)}(C'<p>) / sum_i image of (s^i)^*
//   d1       = sum_i (-1)^i (d^i)^* : E1(p, k) -> E1(p-1, k)
//
// The codegeneracy images are spanned by the monomials with an isolated
// point, so E1(p, k) is carried by diagrams in which every point meets a
// chord, and it vanishes for p > 2k.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "knotcalc/conf_cohomology.hpp"
#include "knotcalc/diagrams.hpp"
#include "knotcalc/exactla.hpp"

namespace knotcalc {

inline constexpr const char* kEngineVersion = "1.0.0";

class CellCache;

// Quotient of the ambient cohomology by the codegeneracy images.
//
// The codegeneracy subspace is reduced in a reordered copy of the ambient
// basis coordinates in which non-covering monomials come first, so that the
// surviving representatives are covering diagrams whenever possible.
struct E1Cell {
  int points = 0;
  int chords = 0;
  Parity parity = Parity::even;
  std::shared_ptr<const CohomologySpace> ambient;
  Subspace degeneracy;              // in reordered ambient-basis coordinates
  std::vector<std::size_t> order;   // reordered coordinate -> ambient basis index
  std::vector<Monomial> basis;      // representatives, one per E1 coordinate

  std::size_t dim() const { return basis.size(); }
  // E1 coordinates of a class given in ambient-basis coordinates.
  SparseRow from_ambient(const SparseRow& ambient_coordinates) const;
  SparseRow coordinates(const LinearCombo& v) const;
  LinearCombo combination(const SparseRow& e1_coordinates) const;

 private:
  friend E1Cell build_e1_cell(std::shared_ptr<const CohomologySpace>, const CohomologySpace&);
  std::vector<std::size_t> position_;                     // ambient basis index -> reordered coordinate
  std::vector<std::optional<std::size_t>> e1_position_;  // reordered coordinate -> E1 index
};

// Matrix of d1 : E1(p, k) -> E1(p-1, k); column j is the image of source
// basis element j.
struct D1Matrix {
  std::shared_ptr<const E1Cell> source;
  std::shared_ptr<const E1Cell> target;
  RationalMatrix matrix;
  std::size_t rank = 0;
};

struct E2Cell {
  int points = 0;
  int chords = 0;
  Parity parity = Parity::even;
  std::size_t dim = 0;
  std::size_t kernel_dim = 0;
  std::size_t incoming_rank = 0;
  // Cycles spanning a complement of the boundaries, in E1 representatives.
  std::vector<LinearCombo> representatives;
};

struct PageCell {
  int p = 0;
  int k = 0;
  int q = 0;
  int total_degree = 0;
  std::size_t dim = 0;
  bool exact = false;

  friend bool operator==(const PageCell&, const PageCell&) = default;
};

struct BettiEntry {
  int degree = 0;
  std::size_t dim = 0;
  bool exact = false;

  friend bool operator==(const BettiEntry&, const BettiEntry&) = default;
};

struct PageReport {
  std::string engine_version = kEngineVersion;
  int n = 0;
  Parity parity = Parity::even;
  std::vector<PageCell> cells;
  std::vector<BettiEntry> betti;

  friend bool operator==(const PageReport&, const PageReport&) = default;
};

struct BettiContribution {
  int p = 0;
  int k = 0;
  std::size_t dim = 0;
};

struct BettiResult {
  int n = 0;
  int degree = 0;
  std::size_t dim = 0;
  std::vector<BettiContribution> cells;  // nonzero contributions only
};

// Pullback along the i-th coface, 0 <= i <= p, from p points to p-1 points.
// Inner cofaces (1 <= i <= p-1) identify points i and i+1; a chord between
// them dies.  The outer cofaces 0 and p pull every chord at the first (last)
// point back to a constant direction, so they kill any monomial touching that
// point and otherwise delete it.
SignedMonomial coface(const Monomial& m, int i, Parity parity);
// sum_{i=0}^{p} (-1)^i coface(m, i).  On covering monomials only the inner
// terms survive.
LinearCombo coface_sum(const Monomial& m, Parity parity);
LinearCombo coface_sum(const LinearCombo& v, Parity parity);

// Image of the i-th codegeneracy (insert an isolated point at position i).
SignedMonomial codegeneracy(const Monomial& m, int i, Parity parity);

// Memoizing engine for one parity.  Not thread-safe; use one engine per
// thread.  With a cache attached, dimension and rank queries consult it
// before computing, and every computed cell is written back.
class SpectralEngine {
 public:
  explicit SpectralEngine(Parity parity, CellCache* cache = nullptr);

  Parity parity() const { return parity_; }

  std::shared_ptr<const CohomologySpace> cohomology(int p, int k);
  std::shared_ptr<const E1Cell> e1(int p, int k);
  std::shared_ptr<const D1Matrix> d1(int p, int k);
  E2Cell e2(int p, int k, bool with_representatives = false);

  std::size_t cohomology_dim(int p, int k);
  std::size_t e1_dim(int p, int k);
  std::size_t d1_rank(int p, int k);  // 0 when p < 1
  std::size_t e2_dim(int p, int k);

 private:
  std::size_t incoming_rank(int p, int k);

  Parity parity_;
  CellCache* cache_;
  std::map<std::pair<int, int>, std::shared_ptr<const CohomologySpace>> cohomology_;
  std::map<std::pair<int, int>, std::shared_ptr<const E1Cell>> e1_;
  std::map<std::pair<int, int>, std::shared_ptr<const D1Matrix>> d1_;
  std::map<std::pair<int, int>, std::size_t> e2_dims_;
};

// Codegeneracy subspace in ambient (cohomology basis) coordinates.
Subspace degeneracy_subspace(int p, int k, Parity parity);
E1Cell e1_cell(int p, int k, Parity parity);
D1Matrix d1_matrix(int p, int k, Parity parity);
E2Cell e2_cell(int p, int k, Parity parity, bool with_representatives = false);

// Rational Betti number of the space of long knots (modulo immersions) in
// R^n, n >= 4, in degree d.  Exact: only cells with k(n-3) <= d can reach
// total degree d.
std::size_t betti(int n, int degree);
BettiResult betti_detail(int n, int degree, CellCache* cache = nullptr);
BettiResult betti_detail(int n, int degree, SpectralEngine& engine);

// All cells with k <= k_max and p <= 2k.  A total degree d is exact when
// d <= k_max (n-3); beyond that, cells with more chords could still add to it.
PageReport e2_page(int n, int k_max, CellCache* cache = nullptr);

}  // namespace knotcalc
