#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "csgin/poly.hpp"

namespace csgin {

/// All k-element subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

/// Dense matrix of polynomials, row major.
template <FieldElement K>
class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, Polynomial<K>(ring_)) {}

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Polynomial<K>& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Polynomial<K>& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Generic matrix whose (r, c) entry is the variable vars[r][c].
  static PolyMatrix generic(RingPtr ring, const std::vector<std::vector<std::size_t>>& vars) {
    PolyMatrix m(ring, vars.size(), vars.empty() ? 0 : vars.front().size());
    for (std::size_t r = 0; r < m.rows_; ++r)
      for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = Polynomial<K>::variable(ring, vars[r].at(c));
    return m;
  }

  /// Determinant of the square submatrix on `rows` x `cols`, by Laplace expansion
  /// along the first row with memoization on column subsets.
  Polynomial<K> minor(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    if (rows.size() != cols.size()) throw std::invalid_argument("minor needs a square selection");
    if (cols.size() > 32) throw std::invalid_argument("minor too large");
    std::unordered_map<std::uint32_t, Polynomial<K>> memo;
    return expand(rows, cols, 0, (cols.size() == 32 ? 0xffffffffu : (1u << cols.size()) - 1u), memo);
  }

  /// Nonzero t-minors, each listed once.
  std::vector<Polynomial<K>> minors(std::size_t t) const {
    std::vector<Polynomial<K>> out;
    if (t == 0 || t > rows_ || t > cols_) return out;
    for (const auto& rs : combinations(rows_, t))
      for (const auto& cs : combinations(cols_, t)) {
        Polynomial<K> d = minor(rs, cs);
        if (!d.is_zero()) out.push_back(std::move(d));
      }
    return out;
  }

 private:
  Polynomial<K> expand(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols,
                       std::size_t depth, std::uint32_t open,
                       std::unordered_map<std::uint32_t, Polynomial<K>>& memo) const {
    if (depth == rows.size()) return Polynomial<K>::constant(ring_, 1);
    auto it = memo.find(open);
    if (it != memo.end()) return it->second;
    Polynomial<K> acc(ring_);
    bool negative = false;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (!((open >> j) & 1u)) continue;
      const Polynomial<K>& entry = (*this)(rows[depth], cols[j]);
      if (!entry.is_zero()) {
        Polynomial<K> term = entry * expand(rows, cols, depth + 1, open & ~(1u << j), memo);
        acc = negative ? acc - term : acc + term;
      }
      negative = !negative;
    }
    memo.emplace(open, acc);
    return acc;
  }

  RingPtr ring_;
  std::size_t rows_, cols_;
  std::vector<Polynomial<K>> data_;
};

}  // namespace csgin
