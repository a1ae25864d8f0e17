#include <doctest.h>

#include <cstdint>
#include <random>

#include "knotcalc/conf_cohomology.hpp"
#include "knotcalc/errors.hpp"

using namespace knotcalc;

namespace {

// Oracle: coefficients of prod_{m=1}^{p-1} (1 + m t), expanded directly.
std::vector<std::int64_t> poincare_coefficients(int p) {
  std::vector<std::int64_t> poly{1};
  for (int m = 1; m <= p - 1; ++m) {
    std::vector<std::int64_t> next(poly.size() + 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i];
      next[i + 1] += poly[i] * m;
    }
    poly = next;
  }
  return poly;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Monomial mono(int p, std::vector<Chord> chords) { return Monomial(p, std::move(chords)); }

}  // namespace

TEST_CASE("enumerate_monomials") {
  const auto three = enumerate_monomials(3, 1);
  CHECK(three == std::vector<Monomial>{mono(3, {{1, 2}}), mono(3, {{1, 3}}), mono(3, {{2, 3}})});
  CHECK(enumerate_monomials(4, 2).size() == 15);
  CHECK(enumerate_monomials(2, 2).empty());
  CHECK(enumerate_monomials(0, 0) == std::vector<Monomial>{Monomial(0)});
  CHECK(enumerate_monomials(5, 0) == std::vector<Monomial>{Monomial(5)});
  for (int p = 0; p <= 7; ++p)
    for (int k = 0; k <= 4; ++k) {
      const auto all = enumerate_monomials(p, k);
      CHECK(static_cast<std::int64_t>(all.size()) == binomial(p * (p - 1) / 2, k));
      CHECK(std::is_sorted(all.begin(), all.end()));
    }
}

TEST_CASE("three-term relations") {
  for (Parity parity : {Parity::even, Parity::odd}) {
    const auto rels = three_term_relations(3, 2, parity);
    REQUIRE(rels.size() == 1);
    LinearCombo expected(3, 2);
    expected.add(mono(3, {{1, 2}, {2, 3}}), 1);
    expected.add(mono(3, {{1, 3}, {2, 3}}), -1);
    expected.add(mono(3, {{1, 2}, {1, 3}}), -1);
    CHECK(rels[0] == expected);
  }
  CHECK(three_term_relations(2, 2, Parity::even).empty());
  CHECK(three_term_relations(5, 1, Parity::even).empty());
}

TEST_CASE("cohomology dimensions") {
  for (Parity parity : {Parity::even, Parity::odd}) {
    CHECK(cohomology_space(3, 0, parity).dim() == 1);
    CHECK(cohomology_space(3, 1, parity).dim() == 3);
    CHECK(cohomology_space(3, 2, parity).dim() == 2);
    CHECK(cohomology_space(3, 3, parity).dim() == 0);
    CHECK(cohomology_space(4, 2, parity).dim() == 11);
    CHECK(cohomology_space(0, 0, parity).dim() == 1);
    CHECK(cohomology_space(6, 0, parity).dim() == 1);
  }
}

TEST_CASE("poincare polynomial oracle, p <= 7, both parities") {
  for (int p = 0; p <= 7; ++p) {
    const auto oracle = poincare_coefficients(p);
    for (int k = 0; k <= p; ++k) {
      const std::int64_t expected = k < static_cast<int>(oracle.size()) ? oracle[static_cast<std::size_t>(k)] : 0;
      if (binomial(p * (p - 1) / 2, k) > 7000) continue;  // beyond the desk-scale chord counts
      const auto even = cohomology_space(p, k, Parity::even);
      const auto odd = cohomology_space(p, k, Parity::odd);
      CAPTURE(p);
      CAPTURE(k);
      CHECK(static_cast<std::int64_t>(even.dim()) == expected);
      CHECK(even.dim() == odd.dim());
      CHECK(even.dim() == even.all_monomials.size() - even.relations.dim());
    }
  }
}

TEST_CASE("reduce_class") {
  const auto space = cohomology_space(3, 2, Parity::even);

  SUBCASE("relation reduces to zero") {
    for (const auto& r : three_term_relations(3, 2, Parity::even))
      CHECK(reduce_class(space, r) == std::vector<Rational>(space.dim()));
  }
  SUBCASE("a12 a23 = a12 a13 + a13 a23") {
    LinearCombo lhs(3, 2), rhs(3, 2);
    lhs.add(mono(3, {{1, 2}, {2, 3}}), 1);
    rhs.add(mono(3, {{1, 2}, {1, 3}}), 1);
    rhs.add(mono(3, {{1, 3}, {2, 3}}), 1);
    CHECK(reduce_class(space, lhs) == reduce_class(space, rhs));
  }
  SUBCASE("basis monomials are unit vectors") {
    for (std::size_t i = 0; i < space.dim(); ++i) {
      LinearCombo v(3, 2);
      v.add(space.basis[i], 1);
      std::vector<Rational> unit(space.dim());
      unit[i] = 1;
      CHECK(reduce_class(space, v) == unit);
    }
  }
  SUBCASE("shape mismatch") {
    CHECK_THROWS_AS(reduce_class(space, LinearCombo(3, 1)), InputError);
    CHECK_THROWS_AS(reduce_class(space, LinearCombo(4, 2)), InputError);
  }
}

TEST_CASE("property: relations times monomials vanish, in either order") {
  std::mt19937 rng(4242);
  for (Parity parity : {Parity::even, Parity::odd}) {
    for (int p = 3; p <= 6; ++p) {
      for (int k = 2; k <= 3; ++k) {
        const auto space = cohomology_space(p, k, parity);
        const auto cofactors = enumerate_monomials(p, k - 2);
        for (int trial = 0; trial < 40; ++trial) {
          std::vector<int> pts{1, 2, 3, 4, 5, 6};
          pts.resize(static_cast<std::size_t>(p));
          std::shuffle(pts.begin(), pts.end(), rng);
          const int a = pts[0], b = pts[1], c = pts[2];
          const Monomial& m = cofactors[std::uniform_int_distribution<std::size_t>(0, cofactors.size() - 1)(rng)];
          const SignedMonomial cofactor(1, m);
          LinearCombo left(p, k), right(p, k);
          for (auto [x, y] : {std::pair{std::pair{a, b}, std::pair{b, c}}, std::pair{std::pair{b, c}, std::pair{c, a}},
                              std::pair{std::pair{c, a}, std::pair{a, b}}}) {
            const SignedMonomial term = normalize(p, {x, y}, parity);
            left.add(product(cofactor, term, parity), 1);
            right.add(product(term, cofactor, parity), 1);
          }
          CHECK(reduce_class(space, left) == std::vector<Rational>(space.dim()));
          CHECK(reduce_class(space, right) == std::vector<Rational>(space.dim()));
        }
      }
    }
  }
}
