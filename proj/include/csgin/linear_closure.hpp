#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "csgin/groebner.hpp"
#include "csgin/hilbert.hpp"
#include "csgin/linalg.hpp"
#include "csgin/minors.hpp"
#include "csgin/random.hpp"

namespace csgin {

/// The basis rows are linearly dependent; row() is the first row in the span of the earlier ones.
class RankDeficient : public std::invalid_argument {
 public:
  RankDeficient(const std::string& what, std::size_t row) : std::invalid_argument(what), row_(row) {}
  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

/// Raw input of a space of linear forms: block sizes a_1..a_u of T and a v x n basis matrix.
struct LinearSpaceSpec {
  std::vector<int> blocks;
  std::vector<std::vector<long long>> basis;  // may be fractions via numerators/denominators below
  std::vector<std::vector<long long>> denominators;  // empty, or same shape as basis
  std::uint32_t characteristic = kDefaultPrime;
};

/// {"blocks": [...], "basis": [[...], ...], "field": "Q" | "Fp" | "Fp:p"}; entries are
/// integers or strings "a/b".
LinearSpaceSpec parse_linear_space_json(const std::string& text);

/// Parses "Q", "Fp" (32003) or "Fp:p".
std::uint32_t parse_field(const std::string& field);

/// T = K[x_1..x_n] graded by consecutive blocks of sizes a_i, named x1..xn.
RingPtr graded_linear_ring(const std::vector<int>& blocks, std::uint32_t characteristic);

/// A space V of linear forms of T, its ring T and the homogenized ring S = T[y_1..y_u].
template <FieldElement K>
class LinearSpace {
 public:
  LinearSpace(RingPtr t, Matrix<K> basis) : t_(std::move(t)), basis_(std::move(basis)) {
    if (basis_.cols() != t_->num_vars()) throw std::invalid_argument("basis width differs from the number of variables");
    if (basis_.characteristic() != t_->characteristic()) throw FieldError("basis and ring in different fields");
    if (auto row = first_dependent_row(basis_))
      throw RankDeficient("basis rows are linearly dependent (row " + std::to_string(*row + 1) + ")", *row);
    layout_ = make_homogenization_layout(t_, "y");
  }

  static LinearSpace from_spec(const LinearSpaceSpec& spec) {
    RingPtr t = graded_linear_ring(spec.blocks, spec.characteristic);
    const std::size_t n = t->num_vars();
    Matrix<K> m(spec.basis.size(), n, spec.characteristic);
    for (std::size_t r = 0; r < spec.basis.size(); ++r) {
      if (spec.basis[r].size() != n) throw std::invalid_argument("basis row " + std::to_string(r + 1) + " has wrong length");
      for (std::size_t c = 0; c < n; ++c) {
        long long den = spec.denominators.empty() ? 1 : spec.denominators[r][c];
        m(r, c) = K::from_fraction(spec.basis[r][c], den, spec.characteristic);
      }
    }
    return LinearSpace(std::move(t), std::move(m));
  }

  const RingPtr& t_ring() const { return t_; }
  const RingPtr& s_ring() const { return layout_.target; }
  const HomogenizationLayout& layout() const { return layout_; }
  const Matrix<K>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.rows(); }
  std::size_t num_blocks() const { return t_->num_blocks(); }
  std::uint32_t characteristic() const { return t_->characteristic(); }

  /// Basis row r as a linear form of T.
  Polynomial<K> form(const std::vector<K>& row) const {
    std::vector<Term<K>> terms;
    for (std::size_t c = 0; c < row.size(); ++c) terms.push_back({Monomial::variable(c), row[c]});
    return Polynomial<K>::from_terms(t_, std::move(terms));
  }
  std::vector<Polynomial<K>> forms() const {
    std::vector<Polynomial<K>> out;
    for (std::size_t r = 0; r < basis_.rows(); ++r) out.push_back(form(basis_.row(r)));
    return out;
  }

 private:
  RingPtr t_;
  Matrix<K> basis_;
  HomogenizationLayout layout_;
};

/// Block subsets as bit masks over 0..u-1.
inline std::vector<std::size_t> blocks_of_mask(std::uint32_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < 32; ++b)
    if ((mask >> b) & 1u) out.push_back(b);
  return out;
}

/// Basis of V_A = V ∩ (sum of T_{e_i}, i in A), in reduced row echelon form.
template <FieldElement K>
Matrix<K> compute_VA(const LinearSpace<K>& v, std::uint32_t a) {
  if (a == 0) throw std::invalid_argument("A must be nonempty");
  const BlockRing& t = *v.t_ring();
  const std::uint32_t ch = v.characteristic();
  std::vector<std::size_t> outside;
  for (std::size_t c = 0; c < t.num_vars(); ++c)
    if (!((a >> t.block_of(c)) & 1u)) outside.push_back(c);
  // Combinations c of the basis rows with c·M vanishing on the outside columns.
  Matrix<K> restricted = v.basis().select_columns(outside).transpose();
  std::vector<std::vector<K>> combos;
  if (outside.empty()) {
    for (std::size_t r = 0; r < v.dim(); ++r) {
      std::vector<K> e(v.dim(), K::from_int(0, ch));
      e[r] = K::from_int(1, ch);
      combos.push_back(std::move(e));
    }
  } else {
    combos = kernel(restricted);
  }
  Matrix<K> span(combos.size(), t.num_vars(), ch);
  for (std::size_t k = 0; k < combos.size(); ++k)
    for (std::size_t r = 0; r < v.dim(); ++r) {
      if (combos[k][r].is_zero()) continue;
      for (std::size_t c = 0; c < t.num_vars(); ++c) span(k, c) += combos[k][r] * v.basis()(r, c);
    }
  Echelon<K> e = row_reduce(span);
  std::vector<std::size_t> keep(e.pivots.size());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
  return e.reduced.select_rows(keep);
}

/// Blocks A (bit masks) with V_A ≠ 0.
template <FieldElement K>
std::vector<std::uint32_t> relevant_subsets(const LinearSpace<K>& v) {
  std::vector<std::uint32_t> out;
  const std::uint32_t u = static_cast<std::uint32_t>(v.num_blocks());
  for (std::uint32_t a = 1; a < (1u << u); ++a)
    if (compute_VA(v, a).rows() > 0) out.push_back(a);
  return out;
}

/// Graded component of the linear form `row` in block b, as a polynomial of `ring`
/// where T variable c sits at var_map[c].
template <FieldElement K>
Polynomial<K> block_component(const std::vector<K>& row, const BlockRing& t, std::size_t b, const RingPtr& ring,
                              const std::vector<std::size_t>& var_map) {
  std::vector<Term<K>> terms;
  for (std::size_t c = 0; c < row.size(); ++c)
    if (t.block_of(c) == b && !row[c].is_zero()) terms.push_back({Monomial::variable(var_map[c]), row[c]});
  return Polynomial<K>::from_terms(ring, std::move(terms));
}

/// M_A over T: row k holds the block-A_k components of the basis vectors of V_A.
template <FieldElement K>
PolyMatrix<K> matrix_M(const LinearSpace<K>& v, std::uint32_t a, const Matrix<K>& va_basis) {
  auto blocks = blocks_of_mask(a);
  std::vector<std::size_t> identity(v.t_ring()->num_vars());
  for (std::size_t c = 0; c < identity.size(); ++c) identity[c] = c;
  PolyMatrix<K> m(v.t_ring(), blocks.size(), va_basis.rows());
  for (std::size_t k = 0; k < blocks.size(); ++k)
    for (std::size_t col = 0; col < va_basis.rows(); ++col)
      m(k, col) = block_component(va_basis.row(col), *v.t_ring(), blocks[k], v.t_ring(), identity);
  return m;
}

/// X_A = (Y_A | M_A) over S, with Y_A bidiagonal: y_{A_k} at (k, k), -y_{A_{k+1}} at (k+1, k).
template <FieldElement K>
PolyMatrix<K> matrix_X(const LinearSpace<K>& v, std::uint32_t a, const Matrix<K>& va_basis) {
  auto blocks = blocks_of_mask(a);
  const std::size_t k = blocks.size();
  const RingPtr& s = v.s_ring();
  const auto& layout = v.layout();
  PolyMatrix<K> x(s, k, k - 1 + va_basis.rows());
  for (std::size_t c = 0; c + 1 < k; ++c) {
    x(c, c) = Polynomial<K>::variable(s, layout.y_var[blocks[c]]);
    x(c + 1, c) = -Polynomial<K>::variable(s, layout.y_var[blocks[c + 1]]);
  }
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t col = 0; col < va_basis.rows(); ++col)
      x(r, k - 1 + col) = block_component(va_basis.row(col), *v.t_ring(), blocks[r], s, layout.x_to_target);
  return x;
}

template <FieldElement K>
Polynomial<K> product_of_y(const LinearSpace<K>& v) {
  Polynomial<K> f = Polynomial<K>::constant(v.s_ring(), 1);
  for (std::size_t y : v.layout().y_var) f = f * Polynomial<K>::variable(v.s_ring(), y);
  return f;
}

/// I_u(X_[u]) built from the given basis of V.
template <FieldElement K>
Ideal<K> top_minor_ideal(const LinearSpace<K>& v) {
  const std::uint32_t all = (1u << v.num_blocks()) - 1u;
  PolyMatrix<K> x = matrix_X(v, all, v.basis());
  return Ideal<K>(v.s_ring(), x.minors(v.num_blocks()));
}

/// J(V)^hom = I_u(X_[u]) : (y_1 ... y_u).
template <FieldElement K>
Ideal<K> jhom_saturation(const LinearSpace<K>& v) {
  if (v.dim() == 0) return Ideal<K>(v.s_ring());
  return colon(top_minor_ideal(v), product_of_y(v));
}

/// J(V)^hom = sum over A with V_A ≠ 0 of I_|A|(X_A).
template <FieldElement K>
Ideal<K> jhom_determinantal(const LinearSpace<K>& v) {
  std::vector<Polynomial<K>> gens;
  for (std::uint32_t a : relevant_subsets(v)) {
    auto minors = matrix_X(v, a, compute_VA(v, a)).minors(blocks_of_mask(a).size());
    gens.insert(gens.end(), minors.begin(), minors.end());
  }
  return Ideal<K>(v.s_ring(), std::move(gens));
}

/// J(V)^⋆ = sum over A with V_A ≠ 0 of I_|A|(M_A), an ideal of T.
template <FieldElement K>
Ideal<K> jstar(const LinearSpace<K>& v) {
  std::vector<Polynomial<K>> gens;
  for (std::uint32_t a : relevant_subsets(v)) {
    auto minors = matrix_M(v, a, compute_VA(v, a)).minors(blocks_of_mask(a).size());
    gens.insert(gens.end(), minors.begin(), minors.end());
  }
  return Ideal<K>(v.t_ring(), std::move(gens));
}

/// J(V)^hom ∩ T, moved back to T.
template <FieldElement K>
Ideal<K> contract_to_t(const LinearSpace<K>& v, const Ideal<K>& hom) {
  Ideal<K> kept = eliminate(hom, v.layout().y_var);
  std::vector<Polynomial<K>> gens;
  for (const auto& g : kept.generators()) gens.push_back(dehomogenize(g, v.layout()));
  return Ideal<K>(v.t_ring(), std::move(gens));
}

/// Column subsets of size v whose columns of M_V are independent, as sorted index lists.
template <FieldElement K>
std::vector<std::vector<std::size_t>> matroid_bases(const LinearSpace<K>& v) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& cols : combinations(v.t_ring()->num_vars(), v.dim()))
    if (rank(v.basis().select_columns(cols)) == v.dim()) out.push_back(cols);
  return out;
}

/// D_V: distinct multidegrees of the bases.
template <FieldElement K>
std::vector<std::vector<int>> degrees_of_bases(const LinearSpace<K>& v) {
  std::set<std::vector<int>> degrees;
  for (const auto& b : matroid_bases(v)) {
    std::vector<int> d(v.num_blocks(), 0);
    for (std::size_t c : b) ++d[v.t_ring()->block_of(c)];
    degrees.insert(d);
  }
  return {degrees.begin(), degrees.end()};
}

template <FieldElement K>
LaurentPoly multidegree_matroid(const LinearSpace<K>& v) {
  LaurentPoly out(v.num_blocks());
  for (const auto& d : degrees_of_bases(v)) out.add_term(d, 1);
  return out;
}

/// Intersection of the Borel primes P_w of S over w in D_V.
template <FieldElement K>
MonomialIdeal gin_from_DV(const LinearSpace<K>& v) {
  if (v.dim() == 0) return MonomialIdeal(v.s_ring());
  std::vector<MonomialIdeal> primes;
  for (const auto& w : degrees_of_bases(v)) primes.push_back(borel_prime(v.s_ring(), w));
  return intersect_all(v.s_ring(), primes);
}

/// Generators of J:(F) with multidegree in {0,1}^u other than (1,...,1), added to J.
template <FieldElement K>
Ideal<K> colon_low_degree_part(const Ideal<K>& j, const Ideal<K>& colon_ideal) {
  std::vector<Polynomial<K>> gens = j.generators();
  for (const auto& g : colon_ideal.generators()) {
    auto d = g.multidegree();
    bool below = true, all_one = true;
    for (int x : d) {
      if (x > 1) below = false;
      if (x != 1) all_one = false;
    }
    if (below && !all_one) gens.push_back(g);
  }
  return Ideal<K>(j.ring(), std::move(gens));
}

/// Random space of dimension v: sparse entries in [-3, 3], redrawn until the rows are independent.
template <FieldElement K>
LinearSpace<K> random_linear_space(const std::vector<int>& blocks, std::size_t v, SplitMix64& rng,
                                   std::uint32_t characteristic) {
  RingPtr t = graded_linear_ring(blocks, characteristic);
  const std::size_t n = t->num_vars();
  if (v > n) throw std::invalid_argument("dimension exceeds the number of variables");
  for (;;) {
    Matrix<K> m(v, n, characteristic);
    for (std::size_t r = 0; r < v; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (rng.below(100) < 55) m(r, c) = K::from_int(rng.between(-3, 3), characteristic);
    if (rank(m) == v) return LinearSpace<K>(t, std::move(m));
  }
}

}  // namespace csgin
