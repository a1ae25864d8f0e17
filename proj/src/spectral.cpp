#include "knotcalc/spectral.hpp"

#include <algorithm>
#include <stdexcept>

#include "knotcalc/cache.hpp"
#include "knotcalc/errors.hpp"

namespace knotcalc {

namespace {

bool touches(const Monomial& m, int point) {
  return std::any_of(m.chords().begin(), m.chords().end(),
                     [point](const Chord& c) { return c.a == point || c.b == point; });
}

// Drops an isolated point, shifting the labels above it down by one.
SignedMonomial delete_point(const Monomial& m, int point, Parity parity) {
  std::vector<std::pair<int, int>> raw;
  raw.reserve(m.degree());
  auto shift = [point](int x) { return x > point ? x - 1 : x; };
  for (const Chord& c : m.chords()) raw.emplace_back(shift(c.a), shift(c.b));
  return normalize(m.points() - 1, raw, parity);
}

void check_cell(int p, int k) {
  if (p < 0 || k < 0) throw InputError("cell (" + std::to_string(p) + ", " + std::to_string(k) + ") has a negative index");
}

}  // namespace

SignedMonomial coface(const Monomial& m, int i, Parity parity) {
  const int p = m.points();
  if (p < 1) throw InputError("cofaces need at least one point");
  if (i < 0 || i > p) throw InputError("coface index " + std::to_string(i) + " outside 0.." + std::to_string(p));
  if (i == 0 || i == p) {
    const int end = i == 0 ? 1 : p;
    if (touches(m, end)) return SignedMonomial::zero();
    return delete_point(m, end, parity);
  }
  PointMap contract{p - 1, std::vector<int>(static_cast<std::size_t>(p))};
  for (int x = 1; x <= p; ++x) contract.image[static_cast<std::size_t>(x - 1)] = x <= i ? x : x - 1;
  return relabel(m, contract, parity);
}

LinearCombo coface_sum(const Monomial& m, Parity parity) {
  LinearCombo out(m.points() - 1, static_cast<int>(m.degree()));
  for (int i = 0; i <= m.points(); ++i) out.add(coface(m, i, parity), Rational(i % 2 == 0 ? 1 : -1));
  return out;
}

LinearCombo coface_sum(const LinearCombo& v, Parity parity) {
  LinearCombo out(v.points() - 1, v.chords());
  for (const auto& [m, c] : v.terms()) out.add(coface_sum(m, parity), c);
  return out;
}

SignedMonomial codegeneracy(const Monomial& m, int i, Parity parity) {
  const int p = m.points() + 1;
  if (i < 1 || i > p) throw InputError("codegeneracy index " + std::to_string(i) + " outside 1.." + std::to_string(p));
  PointMap insert{p, std::vector<int>(static_cast<std::size_t>(m.points()))};
  for (int x = 1; x <= m.points(); ++x) insert.image[static_cast<std::size_t>(x - 1)] = x < i ? x : x + 1;
  return relabel(m, insert, parity);
}

SparseRow E1Cell::from_ambient(const SparseRow& ambient_coordinates) const {
  std::vector<SparseEntry> reordered;
  reordered.reserve(ambient_coordinates.size());
  for (const auto& e : ambient_coordinates) reordered.push_back({position_.at(e.col), e.value});
  const SparseRow reduced = degeneracy.reduce(make_row(std::move(reordered)));
  std::vector<SparseEntry> out;
  out.reserve(reduced.size());
  for (const auto& e : reduced) out.push_back({*e1_position_[e.col], e.value});
  return make_row(std::move(out));
}

SparseRow E1Cell::coordinates(const LinearCombo& v) const { return from_ambient(ambient->coordinates(v)); }

LinearCombo E1Cell::combination(const SparseRow& e1_coordinates) const {
  LinearCombo out(points, chords);
  for (const auto& e : e1_coordinates) out.add(basis.at(e.col), e.value);
  return out;
}

// `lower` is the cohomology on p-1 points (ignored when p = 0).
E1Cell build_e1_cell(std::shared_ptr<const CohomologySpace> ambient, const CohomologySpace& lower) {
  E1Cell cell;
  cell.points = ambient->points;
  cell.chords = ambient->chords;
  cell.parity = ambient->parity;

  const std::size_t n = ambient->dim();
  for (std::size_t j = 0; j < n; ++j)
    if (!covers(ambient->basis[j])) cell.order.push_back(j);
  for (std::size_t j = 0; j < n; ++j)
    if (covers(ambient->basis[j])) cell.order.push_back(j);
  cell.position_.assign(n, 0);
  for (std::size_t r = 0; r < n; ++r) cell.position_[cell.order[r]] = r;

  std::vector<SparseRow> generators;
  if (cell.points >= 1) {
    for (int i = 1; i <= cell.points; ++i) {
      for (const Monomial& b : lower.basis) {
        const SparseRow in_ambient = ambient->coordinates(codegeneracy(b, i, cell.parity));
        std::vector<SparseEntry> reordered;
        for (const auto& e : in_ambient) reordered.push_back({cell.position_[e.col], e.value});
        generators.push_back(make_row(std::move(reordered)));
      }
    }
  }
  cell.degeneracy = row_space(n, generators);

  cell.e1_position_.assign(n, std::nullopt);
  for (std::size_t r : quotient_basis(n, cell.degeneracy)) {
    cell.e1_position_[r] = cell.basis.size();
    cell.basis.push_back(ambient->basis[cell.order[r]]);
  }
  cell.ambient = std::move(ambient);

  // k chords touch at most 2k points.
  if (cell.points > 2 * cell.chords && cell.dim() != 0)
    throw std::logic_error("E1(" + std::to_string(cell.points) + ", " + std::to_string(cell.chords) +
                           ") violates the vanishing line");
  return cell;
}

SpectralEngine::SpectralEngine(Parity parity, CellCache* cache) : parity_(parity), cache_(cache) {}

std::shared_ptr<const CohomologySpace> SpectralEngine::cohomology(int p, int k) {
  check_cell(p, k);
  auto& slot = cohomology_[{p, k}];
  if (!slot) {
    slot = std::make_shared<const CohomologySpace>(cohomology_space(p, k, parity_));
    if (cache_) cache_->store({p, k, parity_, CellKind::cohomology}, cohomology_payload(*slot));
  }
  return slot;
}

std::shared_ptr<const E1Cell> SpectralEngine::e1(int p, int k) {
  check_cell(p, k);
  auto& slot = e1_[{p, k}];
  if (!slot) {
    auto ambient = cohomology(p, k);
    std::shared_ptr<const CohomologySpace> lower = p >= 1 ? cohomology(p - 1, k) : ambient;
    slot = std::make_shared<const E1Cell>(build_e1_cell(ambient, *lower));
    if (cache_) cache_->store({p, k, parity_, CellKind::e1}, e1_payload(*slot));
  }
  return slot;
}

std::shared_ptr<const D1Matrix> SpectralEngine::d1(int p, int k) {
  check_cell(p, k);
  if (p < 1) throw InputError("d1 needs at least one point");
  auto& slot = d1_[{p, k}];
  if (!slot) {
    auto d = std::make_shared<D1Matrix>();
    d->source = e1(p, k);
    d->target = e1(p - 1, k);
    std::vector<std::vector<SparseEntry>> rows(d->target->dim());
    for (std::size_t j = 0; j < d->source->dim(); ++j) {
      const LinearCombo image = coface_sum(d->source->basis[j], parity_);
      for (const auto& e : d->target->coordinates(image)) rows[e.col].push_back({j, e.value});
    }
    d->matrix = RationalMatrix(0, d->source->dim());
    for (auto& r : rows) d->matrix.append_row(make_row(std::move(r)));
    d->rank = rank(d->matrix);
    slot = d;
    if (cache_) cache_->store({p, k, parity_, CellKind::d1}, d1_payload(*slot));
  }
  return slot;
}

std::size_t SpectralEngine::cohomology_dim(int p, int k) {
  check_cell(p, k);
  if (auto it = cohomology_.find({p, k}); it != cohomology_.end()) return it->second->dim();
  if (cache_)
    if (auto hit = cache_->load({p, k, parity_, CellKind::cohomology})) return hit->at("dim").get<std::size_t>();
  return cohomology(p, k)->dim();
}

std::size_t SpectralEngine::e1_dim(int p, int k) {
  check_cell(p, k);
  if (auto it = e1_.find({p, k}); it != e1_.end()) return it->second->dim();
  if (cache_)
    if (auto hit = cache_->load({p, k, parity_, CellKind::e1})) return hit->at("dim").get<std::size_t>();
  return e1(p, k)->dim();
}

std::size_t SpectralEngine::d1_rank(int p, int k) {
  check_cell(p, k);
  if (p < 1) return 0;
  if (auto it = d1_.find({p, k}); it != d1_.end()) return it->second->rank;
  if (cache_)
    if (auto hit = cache_->load({p, k, parity_, CellKind::d1})) return hit->at("rank").get<std::size_t>();
  if (e1_dim(p, k) == 0 || e1_dim(p - 1, k) == 0) return 0;
  return d1(p, k)->rank;
}

std::size_t SpectralEngine::incoming_rank(int p, int k) {
  // E1(p+1, k) = 0 beyond the vanishing line.
  if (p + 1 > 2 * k) return 0;
  return d1_rank(p + 1, k);
}

std::size_t SpectralEngine::e2_dim(int p, int k) {
  check_cell(p, k);
  if (auto it = e2_dims_.find({p, k}); it != e2_dims_.end()) return it->second;
  if (cache_) {
    if (auto hit = cache_->load({p, k, parity_, CellKind::e2})) {
      const auto dim = hit->at("dim").get<std::size_t>();
      e2_dims_[{p, k}] = dim;
      return dim;
    }
  }
  E2Cell cell;
  cell.points = p;
  cell.chords = k;
  cell.parity = parity_;
  const std::size_t source = e1_dim(p, k);
  if (source > 0) {
    cell.kernel_dim = source - d1_rank(p, k);
    cell.incoming_rank = incoming_rank(p, k);
    cell.dim = cell.kernel_dim - cell.incoming_rank;
  }
  e2_dims_[{p, k}] = cell.dim;
  if (cache_) cache_->store({p, k, parity_, CellKind::e2}, e2_payload(cell));
  return cell.dim;
}

E2Cell SpectralEngine::e2(int p, int k, bool with_representatives) {
  check_cell(p, k);
  E2Cell cell;
  cell.points = p;
  cell.chords = k;
  cell.parity = parity_;
  auto source = e1(p, k);
  if (source->dim() == 0) return cell;

  const Subspace cycles = p >= 1 ? kernel(d1(p, k)->matrix) : row_space(source->dim(), RationalMatrix::identity(source->dim()).row_data());
  cell.kernel_dim = cycles.dim();

  std::vector<SparseRow> boundaries;
  if (p + 1 <= 2 * k) {
    auto incoming = d1(p + 1, k);
    cell.incoming_rank = incoming->rank;
    if (with_representatives) {
      // Columns of the incoming matrix, as rows in E1(p, k) coordinates.
      std::vector<std::vector<SparseEntry>> columns(incoming->matrix.cols());
      for (std::size_t r = 0; r < incoming->matrix.rows(); ++r)
        for (const auto& e : incoming->matrix.row(r)) columns[e.col].push_back({r, e.value});
      for (auto& c : columns) boundaries.push_back(make_row(std::move(c)));
    }
  }
  cell.dim = cell.kernel_dim - cell.incoming_rank;

  if (with_representatives) {
    Subspace span = row_space(source->dim(), boundaries);
    for (const SparseRow& z : cycles.basis) {
      if (span.contains(z)) continue;
      cell.representatives.push_back(source->combination(z));
      boundaries.push_back(z);
      span = row_space(source->dim(), boundaries);
    }
    if (cell.representatives.size() != cell.dim) throw std::logic_error("E2 representatives do not match dimension");
  }
  e2_dims_[{p, k}] = cell.dim;
  return cell;
}

Subspace degeneracy_subspace(int p, int k, Parity parity) {
  check_cell(p, k);
  const CohomologySpace ambient = cohomology_space(p, k, parity);
  std::vector<SparseRow> generators;
  if (p >= 1) {
    const CohomologySpace lower = cohomology_space(p - 1, k, parity);
    for (int i = 1; i <= p; ++i)
      for (const Monomial& b : lower.basis) generators.push_back(ambient.coordinates(codegeneracy(b, i, parity)));
  }
  return row_space(ambient.dim(), generators);
}

E1Cell e1_cell(int p, int k, Parity parity) { return *SpectralEngine(parity).e1(p, k); }

D1Matrix d1_matrix(int p, int k, Parity parity) { return *SpectralEngine(parity).d1(p, k); }

E2Cell e2_cell(int p, int k, Parity parity, bool with_representatives) {
  return SpectralEngine(parity).e2(p, k, with_representatives);
}

namespace {

void check_convergent(int n) {
  if (n <= 3)
    throw UnsupportedError("n = " + std::to_string(n) +
                           " is outside the convergence range; Betti numbers are only computed for n >= 4");
}

}  // namespace

BettiResult betti_detail(int n, int degree, SpectralEngine& engine) {
  check_convergent(n);
  if (degree < 0) throw InputError("negative degree");
  if (engine.parity() != parity_of(n)) throw InputError("engine parity does not match n");

  BettiResult result{n, degree, 0, {}};
  if (degree == 0) {
    result.dim = 1;
    result.cells.push_back({0, 0, 1});
    return result;
  }
  for (int k = 1; k * (n - 3) <= degree; ++k) {
    const int p = k * (n - 1) - degree;
    if (p < 0) continue;
    const std::size_t dim = engine.e2_dim(p, k);
    if (dim == 0) continue;
    result.dim += dim;
    result.cells.push_back({p, k, dim});
  }
  return result;
}

BettiResult betti_detail(int n, int degree, CellCache* cache) {
  check_convergent(n);
  SpectralEngine engine(parity_of(n), cache);
  return betti_detail(n, degree, engine);
}

std::size_t betti(int n, int degree) { return betti_detail(n, degree).dim; }

PageReport e2_page(int n, int k_max, CellCache* cache) {
  check_convergent(n);
  if (k_max < 1) throw InputError("k_max must be at least 1");
  SpectralEngine engine(parity_of(n), cache);

  PageReport report;
  report.n = n;
  report.parity = parity_of(n);
  const int exact_limit = k_max * (n - 3);
  for (int k = 0; k <= k_max; ++k) {
    for (int p = 0; p <= 2 * k; ++p) {
      PageCell cell;
      cell.p = p;
      cell.k = k;
      cell.q = k * (n - 1);
      cell.total_degree = cell.q - p;
      cell.dim = engine.e2_dim(p, k);
      cell.exact = cell.total_degree <= exact_limit;
      report.cells.push_back(cell);
    }
  }

  std::map<int, std::size_t> by_degree;
  for (const PageCell& c : report.cells) by_degree[c.total_degree] += c.dim;
  for (const auto& [d, dim] : by_degree) report.betti.push_back({d, dim, d <= exact_limit});
  return report;
}

}  // namespace knotcalc
