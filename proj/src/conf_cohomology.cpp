#include "knotcalc/conf_cohomology.hpp"

#include <algorithm>

#include "knotcalc/errors.hpp"

namespace knotcalc {

namespace {

std::vector<Chord> all_chords(int points) {
  std::vector<Chord> out;
  for (int a = 1; a <= points; ++a)
    for (int b = a + 1; b <= points; ++b) out.push_back({a, b});
  return out;
}

}  // namespace

std::vector<Monomial> enumerate_monomials(int points, int chords) {
  if (points < 0 || chords < 0) throw InputError("negative points or chords");
  const std::vector<Chord> pool = all_chords(points);
  const auto k = static_cast<std::size_t>(chords);
  std::vector<Monomial> out;
  if (k > pool.size()) return out;

  // k-subsets of the chord pool in lexicographic order of index vectors,
  // which is lexicographic order of the resulting chord lists.
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    std::vector<Chord> selected;
    selected.reserve(k);
    for (std::size_t i : pick) selected.push_back(pool[i]);
    out.emplace_back(points, std::move(selected));

    std::size_t i = k;
    while (i > 0 && pick[i - 1] == pool.size() - k + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

std::vector<LinearCombo> three_term_relations(int points, int chords, Parity parity) {
  std::vector<LinearCombo> out;
  if (chords < 2) return out;
  const std::vector<Monomial> cofactors = enumerate_monomials(points, chords - 2);
  for (int a = 1; a <= points; ++a) {
    for (int b = a + 1; b <= points; ++b) {
      for (int c = b + 1; c <= points; ++c) {
        const std::pair<int, int> ab{a, b}, bc{b, c}, ca{c, a};
        for (const Monomial& cofactor : cofactors) {
          LinearCombo relation(points, chords);
          for (const auto& [first, second] : {std::pair{ab, bc}, std::pair{bc, ca}, std::pair{ca, ab}}) {
            std::vector<std::pair<int, int>> raw{first, second};
            for (const Chord& ch : cofactor.chords()) raw.emplace_back(ch.a, ch.b);
            relation.add(normalize(points, raw, parity), Rational(1));
          }
          if (!relation.is_zero()) out.push_back(std::move(relation));
        }
      }
    }
  }
  return out;
}

std::optional<std::size_t> CohomologySpace::index_of(const Monomial& m) const {
  auto it = std::lower_bound(all_monomials.begin(), all_monomials.end(), m);
  if (it == all_monomials.end() || *it != m) return std::nullopt;
  return static_cast<std::size_t>(it - all_monomials.begin());
}

SparseRow CohomologySpace::coordinates(const LinearCombo& v) const {
  if (v.points() != points || v.chords() != chords)
    throw InputError("class on (" + std::to_string(v.points()) + ", " + std::to_string(v.chords()) +
                     ") reduced in H(" + std::to_string(points) + ", " + std::to_string(chords) + ")");
  std::vector<SparseEntry> entries;
  entries.reserve(v.terms().size());
  for (const auto& [m, c] : v.terms()) entries.push_back({*index_of(m), c});
  const SparseRow reduced = relations.reduce(make_row(std::move(entries)));

  SparseRow out;
  out.reserve(reduced.size());
  for (const auto& e : reduced) out.push_back({*basis_position_[e.col], e.value});
  return out;
}

SparseRow CohomologySpace::coordinates(const SignedMonomial& m) const {
  LinearCombo v(points, chords);
  v.add(m, Rational(1));
  return coordinates(v);
}

CohomologySpace cohomology_space(int points, int chords, Parity parity) {
  CohomologySpace space;
  space.points = points;
  space.chords = chords;
  space.parity = parity;
  space.all_monomials = enumerate_monomials(points, chords);

  std::vector<SparseRow> rows;
  for (const LinearCombo& relation : three_term_relations(points, chords, parity)) {
    std::vector<SparseEntry> entries;
    for (const auto& [m, c] : relation.terms()) entries.push_back({*space.index_of(m), c});
    rows.push_back(make_row(std::move(entries)));
  }
  space.relations = row_space(space.all_monomials.size(), rows);

  space.basis_columns = quotient_basis(space.all_monomials.size(), space.relations);
  space.basis_position_.assign(space.all_monomials.size(), std::nullopt);
  for (std::size_t i = 0; i < space.basis_columns.size(); ++i) {
    space.basis_position_[space.basis_columns[i]] = i;
    space.basis.push_back(space.all_monomials[space.basis_columns[i]]);
  }
  return space;
}

std::vector<Rational> reduce_class(const CohomologySpace& space, const LinearCombo& v) {
  return sparse_to_dense(space.coordinates(v), space.dim());
}

}  // namespace knotcalc
