#pragma once

// Independent reference computations for the unit tests: linear algebra in a fixed
// multidegree instead of Gröbner bases, and brute-force monomial counting.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "csgin/groebner.hpp"
#include "csgin/linalg.hpp"
#include "csgin/monomial_ideal.hpp"
#include "csgin/random.hpp"

namespace oracle {

using namespace csgin;

struct MonoLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return a.exponents() < b.exponents(); }
};
using MonoSet = std::set<Monomial, MonoLess>;

/// All monomials of the ring with the given Z^n-degree.
inline std::vector<Monomial> monomials_of_degree(const BlockRing& ring, const std::vector<int>& degree) {
  std::vector<Monomial> out{Monomial()};
  for (std::size_t b = 0; b < ring.num_blocks(); ++b) {
    std::vector<Monomial> next;
    const std::size_t first = ring.first_var(b);
    const std::size_t size = static_cast<std::size_t>(ring.block_size(b));
    std::function<void(std::size_t, int, Monomial)> fill = [&](std::size_t j, int left, Monomial m) {
      if (j + 1 == size) {
        m.set(first + j, static_cast<unsigned>(left));
        next.push_back(m);
        return;
      }
      for (int e = 0; e <= left; ++e) {
        Monomial mm = m;
        mm.set(first + j, static_cast<unsigned>(e));
        fill(j + 1, left - e, mm);
      }
    };
    for (const Monomial& m : out) fill(0, degree[b], m);
    out = std::move(next);
  }
  return out;
}

/// Degrees d with 0 <= d <= bound componentwise.
inline std::vector<std::vector<int>> degrees_up_to(const std::vector<int>& bound) {
  std::vector<std::vector<int>> out{{}};
  for (int top : bound) {
    std::vector<std::vector<int>> next;
    for (const auto& d : out)
      for (int e = 0; e <= top; ++e) {
        auto dd = d;
        dd.push_back(e);
        next.push_back(dd);
      }
    out = std::move(next);
  }
  return out;
}

/// Leading monomials of I_d for a homogeneous ideal: row-reduce the span of all m * g
/// in degree d with columns sorted decreasingly by the order.
template <FieldElement K>
MonoSet initial_in_degree(const std::vector<Polynomial<K>>& gens, const TermOrder& order,
                                     const std::vector<int>& degree) {
  const RingPtr& ring = gens.front().ring();
  std::vector<Monomial> cols = monomials_of_degree(*ring, degree);
  std::sort(cols.begin(), cols.end(), [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) > 0; });
  std::vector<std::vector<K>> rows;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    std::vector<int> gd = g.multidegree();
    std::vector<int> rest(degree.size());
    bool fits = true;
    for (std::size_t b = 0; b < degree.size(); ++b) {
      rest[b] = degree[b] - gd[b];
      if (rest[b] < 0) fits = false;
    }
    if (!fits) continue;
    for (const Monomial& m : monomials_of_degree(*ring, rest)) {
      std::vector<K> row(cols.size(), K::from_int(0, ring->characteristic()));
      for (const auto& t : g.terms()) {
        Monomial target = t.mono * m;
        auto it = std::find(cols.begin(), cols.end(), target);
        row[static_cast<std::size_t>(it - cols.begin())] = t.coeff;
      }
      rows.push_back(std::move(row));
    }
  }
  MonoSet out;
  if (rows.empty()) return out;
  Matrix<K> m(rows.size(), cols.size(), ring->characteristic());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) m(r, c) = rows[r][c];
  for (std::size_t p : row_reduce(m).pivots) out.insert(cols[p]);
  return out;
}

/// Monomials of degree d inside the monomial ideal.
inline MonoSet monomial_ideal_in_degree(const MonomialIdeal& ideal, const std::vector<int>& degree) {
  MonoSet out;
  for (const Monomial& m : monomials_of_degree(*ideal.ring(), degree))
    for (const Monomial& g : ideal.generators())
      if (g.divides(m)) {
        out.insert(m);
        break;
      }
  return out;
}

/// dim_K (S/I)_d by counting standard monomials.
inline long long hilbert_function(const MonomialIdeal& ideal, const std::vector<int>& degree) {
  return static_cast<long long>(monomials_of_degree(*ideal.ring(), degree).size() -
                                monomial_ideal_in_degree(ideal, degree).size());
}

/// Coefficient of z^d in K(z) / prod (1 - z_i)^{d_i}, expanded as a power series.
inline long long series_coefficient(const std::map<std::vector<int>, long long>& k, const std::vector<int>& block_sizes,
                                    const std::vector<int>& degree) {
  auto binom = [](long long n, long long r) {
    if (r < 0 || n < r) return 0LL;
    long long out = 1;
    for (long long i = 1; i <= r; ++i) out = out * (n - r + i) / i;
    return out;
  };
  long long total = 0;
  for (const auto& [e, c] : k) {
    long long term = c;
    for (std::size_t b = 0; b < degree.size() && term; ++b) {
      const long long rest = degree[b] - e[b];
      term = rest < 0 ? 0 : term * binom(rest + block_sizes[b] - 1, block_sizes[b] - 1);
    }
    total += term;
  }
  return total;
}

/// Random homogeneous polynomial of the given degree with small coefficients.
template <FieldElement K>
Polynomial<K> random_homogeneous(const RingPtr& ring, const std::vector<int>& degree, SplitMix64& rng, int terms) {
  std::vector<Monomial> monos = monomials_of_degree(*ring, degree);
  std::vector<Term<K>> out;
  std::set<std::size_t> used;
  for (int t = 0; t < terms; ++t) {
    std::size_t k = rng.below(monos.size());
    if (!used.insert(k).second) continue;
    long long c = rng.between(-5, 5);
    if (c == 0) c = 1;
    out.push_back({monos[k], K::from_int(c, ring->characteristic())});
  }
  return Polynomial<K>::from_terms(ring, std::move(out));
}

/// Random squarefree monomial ideal.
inline MonomialIdeal random_squarefree(const RingPtr& ring, SplitMix64& rng, std::size_t max_gens = 5) {
  const std::size_t n = ring->num_vars();
  std::vector<Monomial> gens;
  for (std::size_t k = 0, count = 1 + rng.below(max_gens); k < count; ++k) {
    Monomial m;
    for (std::size_t v = 0; v < n; ++v)
      if (rng.below(3) == 0) m.set(v, 1);
    if (m.is_one()) m.set(rng.below(n), 1);
    gens.push_back(m);
  }
  return MonomialIdeal(ring, std::move(gens));
}

/// Random monomial ideal with exponents up to max_exp.
inline MonomialIdeal random_monomial_ideal(const RingPtr& ring, SplitMix64& rng, unsigned max_exp = 2,
                                           std::size_t max_gens = 5) {
  const std::size_t n = ring->num_vars();
  std::vector<Monomial> gens;
  for (std::size_t k = 0, count = 1 + rng.below(max_gens); k < count; ++k) {
    Monomial m;
    for (std::size_t v = 0; v < n; ++v)
      if (rng.below(2) == 0) m.set(v, static_cast<unsigned>(rng.below(max_exp + 1)));
    if (m.is_one()) m.set(rng.below(n), 1);
    gens.push_back(m);
  }
  return MonomialIdeal(ring, std::move(gens));
}

/// Uniformly shuffled permutation order of the given kind.
inline TermOrder random_order(std::size_t n, SplitMix64& rng, OrderKind kind) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  return TermOrder::permuted(kind, std::move(perm));
}

}  // namespace oracle
