#include "knotcalc/exactla.hpp"

#include <algorithm>
#include <map>

#include "knotcalc/errors.hpp"

namespace knotcalc {

namespace {

// lhs + factor * rhs, both sorted by column.  lhs is consumed so surviving
// entries move instead of being copied.
SparseRow axpy(SparseRow lhs, const Rational& factor, const SparseRow& rhs) {
  SparseRow out;
  out.reserve(lhs.size() + rhs.size());
  auto i = lhs.begin();
  auto j = rhs.begin();
  Rational term;
  while (i != lhs.end() || j != rhs.end()) {
    if (j == rhs.end() || (i != lhs.end() && i->col < j->col)) {
      out.push_back(std::move(*i++));
    } else if (i == lhs.end() || j->col < i->col) {
      out.push_back({j->col, factor * j->value});
      ++j;
    } else {
      term = factor * j->value;
      i->value += term;
      if (i->value != 0) out.push_back(std::move(*i));
      ++i;
      ++j;
    }
  }
  return out;
}

void scale(SparseRow& row, const Rational& factor) {
  for (auto& e : row) e.value *= factor;
}

SparseRow from_accumulator(const std::map<std::size_t, Rational>& acc) {
  SparseRow out;
  out.reserve(acc.size());
  for (const auto& [col, value] : acc)
    if (value != 0) out.push_back({col, value});
  return out;
}

}  // namespace

SparseRow make_row(std::vector<SparseEntry> entries) {
  std::map<std::size_t, Rational> acc;
  for (auto& e : entries) acc[e.col] += e.value;
  return from_accumulator(acc);
}

SparseRow dense_to_sparse(const std::vector<Rational>& dense) {
  SparseRow out;
  for (std::size_t c = 0; c < dense.size(); ++c)
    if (dense[c] != 0) out.push_back({c, dense[c]});
  return out;
}

std::vector<Rational> sparse_to_dense(const SparseRow& row, std::size_t size) {
  std::vector<Rational> out(size);
  for (const auto& e : row) {
    if (e.col >= size) throw InputError("sparse entry outside dense range");
    out[e.col] = e.value;
  }
  return out;
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

RationalMatrix RationalMatrix::from_dense(const std::vector<std::vector<Rational>>& dense) {
  const std::size_t cols = dense.empty() ? 0 : dense.front().size();
  RationalMatrix m(0, cols);
  for (const auto& r : dense) {
    if (r.size() != cols) throw InputError("ragged dense matrix");
    m.append_row(dense_to_sparse(r));
  }
  return m;
}

RationalMatrix RationalMatrix::identity(std::size_t size) {
  RationalMatrix m(size, size);
  for (std::size_t i = 0; i < size; ++i) m.data_[i].push_back({i, Rational(1)});
  return m;
}

void RationalMatrix::check_row(const SparseRow& row) const {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i].col >= cols_) throw InputError("column index out of range");
    if (row[i].value == 0) throw InputError("explicit zero in sparse row");
    if (i > 0 && row[i - 1].col >= row[i].col) throw InputError("sparse row not strictly sorted");
  }
}

Rational RationalMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw InputError("matrix index out of range");
  const SparseRow& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const SparseEntry& e, std::size_t col) { return e.col < col; });
  return (it != row.end() && it->col == c) ? it->value : Rational(0);
}

void RationalMatrix::set(std::size_t r, std::size_t c, const Rational& value) {
  if (r >= rows_ || c >= cols_) throw InputError("matrix index out of range");
  SparseRow& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const SparseEntry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) {
    if (value == 0) row.erase(it);
    else it->value = value;
  } else if (value != 0) {
    row.insert(it, {c, value});
  }
}

void RationalMatrix::set_row(std::size_t r, SparseRow row) {
  if (r >= rows_) throw InputError("row index out of range");
  check_row(row);
  data_[r] = std::move(row);
}

void RationalMatrix::append_row(SparseRow row) {
  check_row(row);
  data_.push_back(std::move(row));
  ++rows_;
}

std::size_t RationalMatrix::nonzeros() const {
  std::size_t total = 0;
  for (const auto& r : data_) total += r.size();
  return total;
}

std::vector<std::vector<Rational>> RationalMatrix::to_dense() const {
  std::vector<std::vector<Rational>> out;
  out.reserve(rows_);
  for (const auto& r : data_) out.push_back(sparse_to_dense(r, cols_));
  return out;
}

RationalMatrix operator*(const RationalMatrix& lhs, const RationalMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) throw InputError("matrix product shape mismatch");
  RationalMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t r = 0; r < lhs.rows(); ++r) {
    std::map<std::size_t, Rational> acc;
    for (const auto& e : lhs.row(r))
      for (const auto& f : rhs.row(e.col)) acc[f.col] += e.value * f.value;
    out.set_row(r, from_accumulator(acc));
  }
  return out;
}

SparseRow apply(const RationalMatrix& m, const SparseRow& column_vector) {
  SparseRow out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Rational sum;
    auto i = m.row(r).begin();
    auto j = column_vector.begin();
    while (i != m.row(r).end() && j != column_vector.end()) {
      if (i->col < j->col) ++i;
      else if (j->col < i->col) ++j;
      else sum += (i++)->value * (j++)->value;
    }
    if (sum != 0) out.push_back({r, sum});
  }
  return out;
}

SparseRow Subspace::reduce(const SparseRow& v) const {
  SparseRow out = v;
  for (const auto& e : v) {
    auto it = std::lower_bound(pivots.begin(), pivots.end(), e.col);
    if (it == pivots.end() || *it != e.col) continue;
    // basis rows vanish on each other's pivots, so v's own coefficient is the
    // right multiple.
    out = axpy(std::move(out), -e.value, basis[static_cast<std::size_t>(it - pivots.begin())]);
  }
  return out;
}

Subspace row_space(std::size_t ambient, const std::vector<SparseRow>& rows) {
  // Forward pass: echelon form keyed by leading column.
  // The reduced form does not depend on input order.  Feeding rows with
  // late leading columns first keeps fill-in low on relation matrices.
  std::vector<std::size_t> order;
  order.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (!rows[i].empty()) order.push_back(i);
  std::stable_sort(order.begin(), order.end(),
                   [&rows](std::size_t a, std::size_t b) { return rows[a].front().col > rows[b].front().col; });

  std::map<std::size_t, SparseRow> echelon;
  for (std::size_t index : order) {
    SparseRow row = rows[index];
    while (!row.empty()) {
      auto hit = echelon.find(row.front().col);
      if (hit == echelon.end()) break;
      Rational lead = row.front().value;
      row = axpy(std::move(row), -lead, hit->second);
    }
    if (row.empty()) continue;
    if (row.back().col >= ambient) throw InputError("row entry outside ambient dimension");
    Rational inverse = 1 / row.front().value;
    scale(row, inverse);
    echelon.emplace(row.front().col, std::move(row));
  }

  // Backward pass: clear entries above each pivot, largest pivot first.
  std::vector<std::size_t> pivots;
  pivots.reserve(echelon.size());
  for (const auto& [col, row] : echelon) pivots.push_back(col);
  for (auto it = echelon.rbegin(); it != echelon.rend(); ++it) {
    SparseRow& row = it->second;
    std::size_t i = 1;
    while (i < row.size()) {
      auto hit = echelon.find(row[i].col);
      if (hit == echelon.end()) {
        ++i;
        continue;
      }
      Rational factor = row[i].value;
      row = axpy(std::move(row), -factor, hit->second);
    }
  }

  Subspace s;
  s.ambient = ambient;
  s.pivots = std::move(pivots);
  s.basis.reserve(echelon.size());
  for (auto& [col, row] : echelon) s.basis.push_back(std::move(row));
  return s;
}

RrefResult rref(const RationalMatrix& m) {
  Subspace s = row_space(m.cols(), m.row_data());
  const std::size_t r = s.dim();
  return {std::move(s), r};
}

std::size_t rank(const RationalMatrix& m) { return rref(m).rank; }

Subspace kernel(const RationalMatrix& m) {
  const Subspace echelon = rref(m).space;
  std::vector<SparseRow> vectors;
  std::size_t next_pivot = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (next_pivot < echelon.pivots.size() && echelon.pivots[next_pivot] == free) {
      ++next_pivot;
      continue;
    }
    std::vector<SparseEntry> entries{{free, Rational(1)}};
    for (std::size_t i = 0; i < echelon.dim(); ++i) {
      const SparseRow& row = echelon.basis[i];
      auto it = std::lower_bound(row.begin(), row.end(), free,
                                 [](const SparseEntry& e, std::size_t col) { return e.col < col; });
      if (it != row.end() && it->col == free) entries.push_back({echelon.pivots[i], -it->value});
    }
    vectors.push_back(make_row(std::move(entries)));
  }
  return row_space(m.cols(), vectors);
}

std::vector<std::size_t> quotient_basis(std::size_t ambient, const Subspace& s) {
  std::vector<std::size_t> out;
  out.reserve(ambient - std::min(ambient, s.dim()));
  std::size_t next_pivot = 0;
  for (std::size_t c = 0; c < ambient; ++c) {
    if (next_pivot < s.pivots.size() && s.pivots[next_pivot] == c) {
      ++next_pivot;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) throw InputError("malformed rational \"" + text + "\"");
  if (q.get_den() == 0) throw InputError("zero denominator in \"" + text + "\"");
  q.canonicalize();
  return q;
}

}  // namespace knotcalc
