#include "knotcalc/diagrams.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "knotcalc/errors.hpp"

namespace knotcalc {

Parity parity_of(int n) { return n % 2 == 0 ? Parity::even : Parity::odd; }

const char* to_string(Parity parity) { return parity == Parity::even ? "even" : "odd"; }

int reversal_sign(Parity parity) { return parity == Parity::even ? 1 : -1; }

int transposition_sign(Parity parity) { return parity == Parity::even ? -1 : 1; }

Monomial::Monomial(int points) : points_(points) {
  if (points < 0) throw InputError("negative number of points");
}

Monomial::Monomial(int points, std::vector<Chord> chords) : points_(points), chords_(std::move(chords)) {
  if (points < 0) throw InputError("negative number of points");
  for (std::size_t i = 0; i < chords_.size(); ++i) {
    const Chord& c = chords_[i];
    if (c.a < 1 || c.b > points_ || c.a >= c.b)
      throw InputError("chord is not canonical on " + std::to_string(points_) + " points");
    if (i > 0 && !(chords_[i - 1] < c)) throw InputError("chords are not strictly sorted");
  }
}

SignedMonomial::SignedMonomial(int sign, Monomial monomial) : sign_(sign), monomial_(std::move(monomial)) {
  if (sign != 1 && sign != -1) throw InputError("sign must be +1 or -1");
}

void LinearCombo::add(const Monomial& m, const Rational& coefficient) {
  if (m.points() != points_ || static_cast<int>(m.degree()) != chords_)
    throw InputError("monomial " + format(m) + " does not match combination shape");
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

void LinearCombo::add(const SignedMonomial& m, const Rational& coefficient) {
  if (m.is_zero()) return;
  add(m.monomial(), coefficient * m.sign());
}

void LinearCombo::add(const LinearCombo& other, const Rational& coefficient) {
  for (const auto& [m, c] : other.terms()) add(m, c * coefficient);
}

SignedMonomial normalize(int points, const std::vector<std::pair<int, int>>& raw, Parity parity) {
  if (points < 0) throw InputError("negative number of points");
  for (const auto& [i, j] : raw) {
    if (i < 1 || i > points || j < 1 || j > points)
      throw InputError("chord " + std::to_string(i) + "-" + std::to_string(j) + " out of range 1.." +
                       std::to_string(points));
  }

  int sign = 1;
  std::vector<Chord> chords;
  chords.reserve(raw.size());
  for (auto [i, j] : raw) {
    if (i == j) return SignedMonomial::zero();
    if (i > j) {
      std::swap(i, j);
      sign *= reversal_sign(parity);
    }
    chords.push_back({i, j});
  }

  // Insertion sort, one sign per adjacent transposition.
  const int swap_sign = transposition_sign(parity);
  for (std::size_t i = 1; i < chords.size(); ++i) {
    for (std::size_t j = i; j > 0 && chords[j] < chords[j - 1]; --j) {
      std::swap(chords[j], chords[j - 1]);
      sign *= swap_sign;
    }
  }
  if (std::adjacent_find(chords.begin(), chords.end()) != chords.end()) return SignedMonomial::zero();
  return SignedMonomial(sign, Monomial(points, std::move(chords)));
}

namespace {

std::vector<std::pair<int, int>> as_pairs(const Monomial& m) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(m.degree());
  for (const Chord& c : m.chords()) pairs.emplace_back(c.a, c.b);
  return pairs;
}

}  // namespace

SignedMonomial product(const SignedMonomial& lhs, const SignedMonomial& rhs, Parity parity) {
  if (!lhs.is_zero() && !rhs.is_zero() && lhs.monomial().points() != rhs.monomial().points())
    throw InputError("product of monomials on different numbers of points");
  if (lhs.is_zero() || rhs.is_zero()) return SignedMonomial::zero();

  auto pairs = as_pairs(lhs.monomial());
  auto tail = as_pairs(rhs.monomial());
  pairs.insert(pairs.end(), tail.begin(), tail.end());
  SignedMonomial joined = normalize(lhs.monomial().points(), pairs, parity);
  if (joined.is_zero()) return joined;
  return SignedMonomial(lhs.sign() * rhs.sign() * joined.sign(), joined.monomial());
}

PointMap identity_map(int points) {
  PointMap f{points, std::vector<int>(static_cast<std::size_t>(points))};
  for (int i = 0; i < points; ++i) f.image[static_cast<std::size_t>(i)] = i + 1;
  return f;
}

SignedMonomial relabel(const Monomial& m, const PointMap& f, Parity parity) {
  if (static_cast<int>(f.image.size()) != m.points())
    throw InputError("point map is not defined on all " + std::to_string(m.points()) + " points");
  for (int v : f.image) {
    if (v < 1 || v > f.target_points)
      throw InputError("point map value " + std::to_string(v) + " outside 1.." + std::to_string(f.target_points));
  }
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(m.degree());
  for (const Chord& c : m.chords())
    pairs.emplace_back(f.image[static_cast<std::size_t>(c.a - 1)], f.image[static_cast<std::size_t>(c.b - 1)]);
  return normalize(f.target_points, pairs, parity);
}

bool covers(const Monomial& m) {
  std::vector<bool> touched(static_cast<std::size_t>(m.points()), false);
  for (const Chord& c : m.chords()) {
    touched[static_cast<std::size_t>(c.a - 1)] = true;
    touched[static_cast<std::size_t>(c.b - 1)] = true;
  }
  return std::all_of(touched.begin(), touched.end(), [](bool t) { return t; });
}

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ == text_.size();
  }
  int integer() {
    skip_space();
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc()) fail("expected an integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }
  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("malformed diagram \"" + std::string(text_) + "\" at offset " + std::to_string(pos_) + ": " +
                     what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ParsedDiagram parse(std::string_view text, Parity parity) {
  Scanner in(text);
  const int points = in.integer();
  if (points < 0) in.fail("negative number of points");
  in.skip_space();
  in.expect(':');
  std::vector<std::pair<int, int>> pairs;
  while (!in.done()) {
    const int a = in.integer();
    in.expect('-');
    // from_chars would otherwise accept "1--2" as 1 and -2.
    in.skip_space();
    const int b = in.integer();
    if (b < 0) in.fail("negative index");
    pairs.emplace_back(a, b);
  }
  ParsedDiagram out{normalize(points, pairs, parity), {}};
  if (!out.value.is_zero()) out.canonical = format(out.value.monomial());
  return out;
}

std::string format(const Monomial& m) {
  std::string out = std::to_string(m.points()) + ":";
  for (const Chord& c : m.chords()) out += " " + std::to_string(c.a) + "-" + std::to_string(c.b);
  return out;
}

std::string format(const LinearCombo& combo) {
  if (combo.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : combo.terms()) {
    if (!first) out << (c > 0 ? " + " : " - ");
    else if (c < 0) out << "-";
    first = false;
    Rational magnitude = abs(c);
    if (magnitude != 1) out << magnitude.get_str() << "*";
    out << "[" << format(m) << "]";
  }
  return out.str();
}

}  // namespace knotcalc
