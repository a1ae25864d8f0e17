#include "knotcalc/vassiliev.hpp"

#include <stdexcept>

#include "knotcalc/errors.hpp"

namespace knotcalc {

bool is_perfect_matching(const Monomial& m) {
  return covers(m) && static_cast<std::size_t>(m.points()) == 2 * m.degree();
}

DiagonalCell diagonal_cell(int order, SpectralEngine& engine) {
  if (order < 1) throw InputError("diagonal order must be at least 1");
  const int p = 2 * order;
  auto d1 = engine.d1(p, order);

  DiagonalCell cell;
  cell.order = order;
  cell.parity = engine.parity();
  cell.diagrams = d1->source->basis;
  for (const Monomial& m : cell.diagrams)
    if (!is_perfect_matching(m)) throw std::logic_error("diagonal E1 basis element " + format(m) + " is not a perfect matching");

  const Subspace cycles = kernel(d1->matrix);
  cell.dim = cycles.dim();
  for (const SparseRow& z : cycles.basis) cell.kernel.push_back(d1->source->combination(z));
  return cell;
}

DiagonalCell diagonal_cell(int order, Parity parity) {
  SpectralEngine engine(parity);
  return diagonal_cell(order, engine);
}

std::vector<std::pair<int, std::size_t>> diagonal_table(int max_order, Parity parity) {
  if (max_order < 1) throw InputError("diagonal table needs max order at least 1");
  SpectralEngine engine(parity);
  std::vector<std::pair<int, std::size_t>> out;
  for (int m = 1; m <= max_order; ++m) out.emplace_back(m, diagonal_cell(m, engine).dim);
  return out;
}

}  // namespace knotcalc
