#include "csgin/homology.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

#include "csgin/field.hpp"
#include "csgin/linalg.hpp"

namespace csgin {

namespace {

constexpr std::size_t kMaxComplexVertices = 24;

std::uint32_t full_mask(std::size_t n) { return n >= 32 ? 0xffffffffu : (1u << n) - 1u; }

std::vector<std::uint32_t> maximal_sets(std::vector<std::uint32_t> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::sort(sets.begin(), sets.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa > pb : a < b;
  });
  std::vector<std::uint32_t> kept;
  for (std::uint32_t s : sets) {
    bool inside = false;
    for (std::uint32_t k : kept)
      if ((s & k) == s) {
        inside = true;
        break;
      }
    if (!inside) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

/// Rank of a matrix with small integer entries over GF(p), dense elimination.
std::size_t rank_mod_p(std::vector<std::vector<long long>> rows, std::uint32_t p) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::vector<std::vector<std::uint64_t>> m(rows.size(), std::vector<std::uint64_t>(cols));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      long long v = rows[r][c] % static_cast<long long>(p);
      m[r][c] = static_cast<std::uint64_t>(v < 0 ? v + p : v);
    }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    std::uint64_t inv = Modular(static_cast<long long>(m[rank][c]), p).inverse().residue();
    for (std::size_t j = c; j < cols; ++j) m[rank][j] = m[rank][j] * inv % p;
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (!m[r][c]) continue;
      std::uint64_t f = m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] = (m[r][j] + (p - f) * m[rank][j]) % p;
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_rational(const std::vector<std::vector<long long>>& rows) {
  if (rows.empty()) return 0;
  return rank(Matrix<Rational>::from_rows(rows, rows.front().size(), 0));
}

std::size_t rank_over(const std::vector<std::vector<long long>>& rows, std::uint32_t characteristic) {
  return characteristic == 0 ? rank_rational(rows) : rank_mod_p(rows, characteristic);
}

/// Graded Betti numbers β_{i,j} of the Alexander dual, keyed (i, j).
std::map<std::pair<int, int>, std::size_t> dual_graded_betti(const MonomialIdeal& ideal) {
  return betti_direct(alexander_dual(ideal)).graded();
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::size_t local_cohomology_from_dual(const std::map<std::pair<int, int>, std::size_t>& dual, int n, int i,
                                       int degree) {
  auto beta = [&](int a, int b) -> std::size_t {
    auto it = dual.find({a, b});
    return it == dual.end() ? 0 : it->second;
  };
  if (degree > 0) return 0;
  if (degree == 0) return beta(i, n);
  const int j = -degree;
  std::size_t total = 0;
  for (int v = 1; v <= std::min(i, j); ++v)
    total += static_cast<std::size_t>(binomial(j - 1, v - 1)) * beta(i - v, n - v);
  return total;
}

std::vector<std::uint32_t> lcm_lattice(const MonomialIdeal& ideal) {
  std::vector<std::uint32_t> lattice;
  for (const Monomial& g : ideal.generators()) {
    const std::uint32_t s = g.support();
    std::vector<std::uint32_t> grown = lattice;
    grown.push_back(s);
    for (std::uint32_t l : lattice) grown.push_back(l | s);
    std::sort(grown.begin(), grown.end());
    grown.erase(std::unique(grown.begin(), grown.end()), grown.end());
    lattice = std::move(grown);
  }
  return lattice;
}

void require_squarefree(const MonomialIdeal& ideal) {
  if (!is_squarefree(ideal)) throw NotSquarefree("Hochster formulas need a squarefree ideal");
  if (ideal.ring()->num_vars() > kMaxComplexVertices) throw std::invalid_argument("too many variables for homology");
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::size_t vertices, std::vector<std::uint32_t> facets)
    : n_(vertices), facets_(maximal_sets(std::move(facets))) {
  if (n_ > kMaxComplexVertices) throw std::invalid_argument("too many vertices");
  for (std::uint32_t f : facets_)
    if (f & ~full_mask(n_)) throw std::out_of_range("facet uses a vertex outside the complex");
}

SimplicialComplex SimplicialComplex::stanley_reisner(const MonomialIdeal& ideal) {
  require_squarefree(ideal);
  const std::size_t n = ideal.ring()->num_vars();
  if (ideal.is_unit()) return SimplicialComplex(n, {});
  std::vector<std::uint32_t> facets;
  for (std::uint32_t cover : minimal_vertex_covers(ideal)) facets.push_back(full_mask(n) & ~cover);
  return SimplicialComplex(n, std::move(facets));
}

bool SimplicialComplex::contains(std::uint32_t face) const {
  for (std::uint32_t f : facets_)
    if ((face & f) == face) return true;
  return false;
}

int SimplicialComplex::dimension() const {
  if (facets_.empty()) return -2;
  int best = -1;
  for (std::uint32_t f : facets_) best = std::max(best, std::popcount(f) - 1);
  return best;
}

std::vector<std::uint32_t> SimplicialComplex::faces() const {
  std::vector<char> seen(std::size_t{1} << n_, 0);
  std::vector<std::uint32_t> out;
  for (std::uint32_t f : facets_) {
    // Enumerate subsets of f, including f and the empty set.
    std::uint32_t s = f;
    for (;;) {
      if (!seen[s]) {
        seen[s] = 1;
        out.push_back(s);
      }
      if (s == 0) break;
      s = (s - 1) & f;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex SimplicialComplex::restriction(std::uint32_t vertices) const {
  if (facets_.empty()) return *this;
  std::vector<std::uint32_t> facets;
  for (std::uint32_t f : facets_) facets.push_back(f & vertices);
  return SimplicialComplex(n_, std::move(facets));
}

SimplicialComplex SimplicialComplex::link(std::uint32_t face) const {
  std::vector<std::uint32_t> facets;
  for (std::uint32_t f : facets_)
    if ((face & f) == face) facets.push_back(f & ~face);
  return SimplicialComplex(n_, std::move(facets));
}

SimplicialComplex SimplicialComplex::alexander_dual() const {
  const std::uint32_t all = full_mask(n_);
  std::vector<std::uint32_t> faces;
  for (std::uint64_t t = 0; t <= all; ++t) {
    const auto tau = static_cast<std::uint32_t>(t);
    if (!contains(all & ~tau)) faces.push_back(tau);
  }
  return SimplicialComplex(n_, std::move(faces));
}

std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& complex, std::uint32_t characteristic) {
  if (complex.is_void()) return {};
  const int top = complex.dimension() + 1;  // largest face size
  std::vector<std::vector<std::uint32_t>> by_size(static_cast<std::size_t>(top) + 1);
  for (std::uint32_t f : complex.faces()) by_size[static_cast<std::size_t>(std::popcount(f))].push_back(f);

  // boundary_rank[k] = rank of the map from size-k faces to size-(k-1) faces.
  std::vector<std::size_t> boundary_rank(static_cast<std::size_t>(top) + 2, 0);
  for (int k = 1; k <= top; ++k) {
    const auto& src = by_size[static_cast<std::size_t>(k)];
    const auto& dst = by_size[static_cast<std::size_t>(k - 1)];
    std::unordered_map<std::uint32_t, std::size_t> index;
    for (std::size_t i = 0; i < dst.size(); ++i) index[dst[i]] = i;
    std::vector<std::vector<long long>> rows(src.size(), std::vector<long long>(dst.size(), 0));
    for (std::size_t r = 0; r < src.size(); ++r) {
      int position = 0;
      for (std::uint32_t rest = src[r]; rest; rest &= rest - 1) {
        std::uint32_t bit = rest & (~rest + 1);
        rows[r][index.at(src[r] & ~bit)] = position % 2 == 0 ? 1 : -1;
        ++position;
      }
    }
    boundary_rank[static_cast<std::size_t>(k)] = rank_over(rows, characteristic);
  }
  std::vector<std::size_t> ranks;
  for (int k = 0; k <= top; ++k) {
    const std::size_t faces = by_size[static_cast<std::size_t>(k)].size();
    ranks.push_back(faces - boundary_rank[static_cast<std::size_t>(k)] -
                    boundary_rank[static_cast<std::size_t>(k) + 1]);
  }
  return ranks;
}

void BettiTable::add(int i, std::uint32_t face, std::size_t value) {
  if (value == 0) return;
  fine_[{i, face}] += value;
}

std::map<std::pair<int, int>, std::size_t> BettiTable::graded() const {
  std::map<std::pair<int, int>, std::size_t> out;
  for (const auto& [key, v] : fine_) out[{key.first, std::popcount(key.second)}] += v;
  return out;
}

std::size_t BettiTable::get(int i, int j) const {
  auto g = graded();
  auto it = g.find({i, j});
  return it == g.end() ? 0 : it->second;
}

std::size_t BettiTable::get_fine(int i, std::uint32_t face) const {
  auto it = fine_.find({i, face});
  return it == fine_.end() ? 0 : it->second;
}

BettiTable betti_direct(const MonomialIdeal& ideal) {
  require_squarefree(ideal);
  BettiTable table;
  if (ideal.is_unit()) {
    table.add(0, 0, 1);
    return table;
  }
  const std::uint32_t ch = ideal.ring()->characteristic();
  const SimplicialComplex delta = SimplicialComplex::stanley_reisner(ideal);
  for (std::uint32_t sigma : lcm_lattice(ideal)) {
    auto ranks = reduced_homology_ranks(delta.restriction(sigma), ch);
    const int size = std::popcount(sigma);
    for (std::size_t k = 0; k < ranks.size(); ++k) {
      const int degree = static_cast<int>(k) - 1;  // H̃_degree
      const int i = size - degree - 2;
      if (i >= 0) table.add(i, sigma, ranks[k]);
    }
  }
  return table;
}

BettiTable betti_squarefree(const MonomialIdeal& ideal) {
  require_squarefree(ideal);
  BettiTable table;
  if (ideal.is_unit()) {
    table.add(0, 0, 1);
    return table;
  }
  const std::size_t n = ideal.ring()->num_vars();
  const std::uint32_t ch = ideal.ring()->characteristic();
  const SimplicialComplex dual = SimplicialComplex::stanley_reisner(ideal).alexander_dual();
  for (std::uint32_t sigma : lcm_lattice(ideal)) {
    auto ranks = reduced_homology_ranks(dual.link(full_mask(n) & ~sigma), ch);
    for (std::size_t k = 0; k < ranks.size(); ++k) table.add(static_cast<int>(k), sigma, ranks[k]);
  }
  return table;
}

std::size_t local_cohomology_hilbert(const MonomialIdeal& ideal, int i, int degree) {
  require_squarefree(ideal);
  if (ideal.is_unit() || degree > 0) return 0;
  return local_cohomology_from_dual(dual_graded_betti(ideal), static_cast<int>(ideal.ring()->num_vars()), i,
                                    degree);
}

HomologicalInvariants homological_invariants(const BettiTable& table) {
  HomologicalInvariants out;
  auto graded = table.graded();
  for (const auto& [key, v] : graded) {
    const int diag = key.second - key.first;
    out.regularity = out.regularity ? std::max(*out.regularity, diag) : diag;
    out.projective_dimension = out.projective_dimension ? std::max(*out.projective_dimension, key.first) : key.first;
  }
  for (const auto& [key, v] : graded) {
    bool extremal = true;
    for (const auto& [other, w] : graded) {
      if (other == key) continue;
      if (other.first >= key.first && other.second - other.first >= key.second - key.first) {
        extremal = false;
        break;
      }
    }
    if (extremal) out.extremal.push_back({key.first, key.second, v});
  }
  return out;
}

HomologicalInvariants homological_invariants(const MonomialIdeal& ideal) {
  return homological_invariants(betti_direct(ideal));
}

bool reisner_cm(const MonomialIdeal& ideal) {
  const SimplicialComplex delta = SimplicialComplex::stanley_reisner(ideal);
  if (delta.is_void()) return true;
  const std::uint32_t ch = ideal.ring()->characteristic();
  for (std::uint32_t face : delta.faces()) {
    const SimplicialComplex lk = delta.link(face);
    auto ranks = reduced_homology_ranks(lk, ch);
    const int dim = lk.dimension();
    for (int i = -1; i < dim; ++i)
      if (ranks[static_cast<std::size_t>(i + 1)] != 0) return false;
  }
  return true;
}

LocalCohomologyTable local_cohomology_table(const MonomialIdeal& ideal, int pd) {
  require_squarefree(ideal);
  const int n = static_cast<int>(ideal.ring()->num_vars());
  LocalCohomologyTable table;
  if (ideal.is_unit()) return table;
  auto dual = dual_graded_betti(ideal);
  for (int i = 0; i <= n; ++i)
    for (int d = -(n + pd); d <= pd; ++d) {
      std::size_t v = local_cohomology_from_dual(dual, n, i, d);
      if (v) table[{i, d}] = v;
    }
  return table;
}

ConjectureReport compare_local_cohomology(const MonomialIdeal& ideal, const MonomialIdeal& gin) {
  require_same_ring(ideal.ring(), gin.ring());
  ConjectureReport report;
  auto a = homological_invariants(ideal);
  auto b = homological_invariants(gin);
  const int pd = std::max({0, a.projective_dimension.value_or(0), b.projective_dimension.value_or(0)});
  const int n = static_cast<int>(ideal.ring()->num_vars());
  report.window_low = -(n + pd);
  report.window_high = pd;
  report.lhs = local_cohomology_table(ideal, pd);
  report.rhs = local_cohomology_table(gin, pd);
  report.local_cohomology_equal = report.lhs == report.rhs;
  report.lhs_extremal = a.extremal;
  report.rhs_extremal = b.extremal;
  report.extremal_equal = a.extremal == b.extremal;
  return report;
}

}  // namespace csgin
