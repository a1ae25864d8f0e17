#pragma once

// Chord-diagram monomials in the cohomology of configuration spaces of
// points on a line in R^n.
//
// A monomial on p labelled points is a product of generators alpha_ab, one
// per chord.  The generators have degree n-1, so the only information about
// n entering the sign rules is its parity:
//
//   alpha_ba = (-1)^n alpha_ab,   alpha_ab alpha_cd = (-1)^(n+1) alpha_cd alpha_ab,
//   alpha_aa = 0,                 alpha_ab^2 = 0.
//
// Canonical form: every chord has a < b and the chord list is sorted
// lexicographically.  The text form "p: a-b a-b ..." is used everywhere
// diagrams are read or printed.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace knotcalc {

using Rational = mpq_class;

enum class Parity { even, odd };

Parity parity_of(int n);
const char* to_string(Parity parity);

// (-1)^n: sign picked up when a chord is written with its endpoints swapped.
int reversal_sign(Parity parity);
// (-1)^(n+1): sign picked up when two adjacent chords are transposed.
int transposition_sign(Parity parity);

struct Chord {
  int a = 0;
  int b = 0;

  friend auto operator<=>(const Chord&, const Chord&) = default;
};

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int points);
  // Throws InputError unless `chords` is already canonical on `points`.
  Monomial(int points, std::vector<Chord> chords);

  int points() const { return points_; }
  const std::vector<Chord>& chords() const { return chords_; }
  std::size_t degree() const { return chords_.size(); }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  int points_ = 0;
  std::vector<Chord> chords_;
};

// A monomial with a sign, or zero.
class SignedMonomial {
 public:
  static SignedMonomial zero() { return SignedMonomial(); }
  SignedMonomial(int sign, Monomial monomial);

  bool is_zero() const { return !monomial_.has_value(); }
  int sign() const { return sign_; }
  // Precondition: !is_zero().
  const Monomial& monomial() const { return *monomial_; }

  friend bool operator==(const SignedMonomial&, const SignedMonomial&) = default;

 private:
  SignedMonomial() = default;

  int sign_ = 0;
  std::optional<Monomial> monomial_;
};

// Finite rational combination of monomials that all live on the same number
// of points with the same number of chords.  Zero coefficients are never
// stored.
class LinearCombo {
 public:
  LinearCombo(int points, int chords) : points_(points), chords_(chords) {}

  int points() const { return points_; }
  int chords() const { return chords_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Monomial& m, const Rational& coefficient);
  void add(const SignedMonomial& m, const Rational& coefficient);
  void add(const LinearCombo& other, const Rational& coefficient);

  friend bool operator==(const LinearCombo&, const LinearCombo&) = default;

 private:
  int points_;
  int chords_;
  std::map<Monomial, Rational> terms_;
};

// Brings a raw list of (i, j) pairs on p points to canonical form, tracking
// the sign.  Loops and repeated chords give zero.  Indices outside 1..p throw
// InputError.
SignedMonomial normalize(int points, const std::vector<std::pair<int, int>>& raw, Parity parity);

SignedMonomial product(const SignedMonomial& lhs, const SignedMonomial& rhs, Parity parity);

// Map of point labels {1..p} -> {1..target_points}; image[i - 1] is the image
// of point i.
struct PointMap {
  int target_points = 0;
  std::vector<int> image;
};

PointMap identity_map(int points);

// Pulls back a monomial along a relabelling of points: every chord endpoint
// is replaced by its image and the result is renormalized on target_points.
SignedMonomial relabel(const Monomial& m, const PointMap& f, Parity parity);

// True when every point is the endpoint of some chord.
bool covers(const Monomial& m);

struct ParsedDiagram {
  SignedMonomial value;
  std::string canonical;  // empty when value is zero
};

// Parses "p: a-b a-b ...", routing the pairs through normalize.
ParsedDiagram parse(std::string_view text, Parity parity);
std::string format(const Monomial& m);
std::string format(const LinearCombo& combo);

}  // namespace knotcalc
