#pragma once

// Diagonal cells E1(2m, m): diagrams with m chords on 2m points in which
// every point lies on exactly one chord.  Nothing can hit them under d1,
// because m chords cannot cover 2m + 1 points, so their E2 is ker d1.  For
// n = 3 these are the chord diagrams of finite-type theory, and d1 imposes
// the four-term relation.

#include <cstddef>
#include <utility>
#include <vector>

#include "knotcalc/spectral.hpp"

namespace knotcalc {

struct DiagonalCell {
  int order = 0;
  Parity parity = Parity::even;
  std::size_t dim = 0;                 // dim ker d1 on E1(2m, m)
  std::vector<Monomial> diagrams;      // E1 basis, all perfect matchings
  std::vector<LinearCombo> kernel;     // basis of ker d1 over `diagrams`
};

bool is_perfect_matching(const Monomial& m);

DiagonalCell diagonal_cell(int order, Parity parity);
DiagonalCell diagonal_cell(int order, SpectralEngine& engine);

std::vector<std::pair<int, std::size_t>> diagonal_table(int max_order, Parity parity);

}  // namespace knotcalc
