#pragma once

// Degree-k part of the cohomology of the configuration space of p points:
// the span of square-free k-chord monomials modulo the three-term relations
//
//   alpha_ab alpha_bc + alpha_bc alpha_ca + alpha_ca alpha_ab = 0
//
// multiplied by every (k-2)-chord cofactor.  The quotient is computed by row
// reduction over the full monomial span, in lexicographic monomial order;
// the basis is the set of non-pivot monomials.

#include <optional>
#include <vector>

#include "knotcalc/diagrams.hpp"
#include "knotcalc/exactla.hpp"

namespace knotcalc {

struct CohomologySpace {
  int points = 0;
  int chords = 0;
  Parity parity = Parity::even;
  std::vector<Monomial> all_monomials;  // lexicographic
  Subspace relations;                   // inside Q^{all_monomials}
  std::vector<std::size_t> basis_columns;
  std::vector<Monomial> basis;

  std::size_t dim() const { return basis.size(); }
  std::optional<std::size_t> index_of(const Monomial& m) const;
  // Sparse coordinates over `basis` of the class of v.
  SparseRow coordinates(const LinearCombo& v) const;
  SparseRow coordinates(const SignedMonomial& m) const;

 private:
  friend CohomologySpace cohomology_space(int, int, Parity);
  std::vector<std::optional<std::size_t>> basis_position_;  // monomial column -> basis index
};

std::vector<Monomial> enumerate_monomials(int points, int chords);
std::vector<LinearCombo> three_term_relations(int points, int chords, Parity parity);
CohomologySpace cohomology_space(int points, int chords, Parity parity);

// Dense coordinates of v over space.basis.  Throws InputError when v lives on
// a different (points, chords).
std::vector<Rational> reduce_class(const CohomologySpace& space, const LinearCombo& v);

}  // namespace knotcalc
