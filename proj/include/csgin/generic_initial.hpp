#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "csgin/groebner.hpp"
#include "csgin/linalg.hpp"
#include "csgin/parallel.hpp"
#include "csgin/random.hpp"

namespace csgin {

struct GinOptions {
  std::vector<std::uint64_t> seeds{1, 2, 3};
  int retries = 5;  // resamples allowed per seed
};

struct GinResult {
  MonomialIdeal gin;
  std::vector<std::uint64_t> seeds_used;
  bool borel_certified = false;
  std::size_t agreements = 0;
  std::size_t resamples = 0;
};

/// Seeds failed to agree on a Borel-fixed initial ideal within the retry budget.
class GenericityError : public std::runtime_error {
 public:
  GenericityError(const std::string& what, std::vector<MonomialIdeal> candidates)
      : std::runtime_error(what), candidates_(std::move(candidates)) {}
  const std::vector<MonomialIdeal>& candidates() const { return candidates_; }

 private:
  std::vector<MonomialIdeal> candidates_;
};

/// One invertible matrix per block; row j gives the image of x_{i,j}.
template <FieldElement K>
using BlockChange = std::vector<Matrix<K>>;

template <FieldElement K>
K random_scalar(SplitMix64& rng, std::uint32_t characteristic) {
  if (characteristic == 0) return K::from_int(rng.between(-16, 16), 0);
  return K::from_int(static_cast<long long>(rng.below(characteristic)), characteristic);
}

/// Draws invertible block matrices; singular draws are redrawn from the same stream.
template <FieldElement K>
BlockChange<K> random_block_change(const BlockRing& ring, SplitMix64& rng) {
  BlockChange<K> change;
  const std::uint32_t ch = ring.characteristic();
  for (std::size_t b = 0; b < ring.num_blocks(); ++b) {
    const auto d = static_cast<std::size_t>(ring.block_size(b));
    for (;;) {
      Matrix<K> m(d, d, ch);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) m(r, c) = random_scalar<K>(rng, ch);
      if (!determinant(m).is_zero()) {
        change.push_back(std::move(m));
        break;
      }
    }
  }
  return change;
}

template <FieldElement K>
std::vector<Polynomial<K>> block_change_images(const RingPtr& ring, const BlockChange<K>& change) {
  std::vector<Polynomial<K>> images;
  for (std::size_t v = 0; v < ring->num_vars(); ++v) {
    const std::size_t b = ring->block_of(v);
    const std::size_t j = ring->index_in_block(v);
    std::vector<Term<K>> terms;
    for (std::size_t k = 0; k < static_cast<std::size_t>(ring->block_size(b)); ++k)
      terms.push_back({Monomial::variable(ring->var(b, k)), change[b](j, k)});
    images.push_back(Polynomial<K>::from_terms(ring, std::move(terms)));
  }
  return images;
}

template <FieldElement K>
Ideal<K> change_coordinates(const Ideal<K>& ideal, const BlockChange<K>& change) {
  auto images = block_change_images(ideal.ring(), change);
  std::vector<Polynomial<K>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.substitute(ideal.ring(), images));
  return Ideal<K>(ideal.ring(), std::move(gens));
}

/// Orders usable for gin: graded revlex or lex whose variable ranking keeps
/// x_{i,1} > x_{i,2} > ... inside every block.
inline void require_gin_order(const BlockRing& ring, const TermOrder& order) {
  if (order.kind() == OrderKind::BlockElimination)
    throw std::invalid_argument("generic initial ideals use graded revlex or lex orders");
  if (order.num_vars() != ring.num_vars()) throw std::invalid_argument("order and ring disagree on variable count");
  std::vector<std::size_t> rank(ring.num_vars());
  for (std::size_t k = 0; k < order.num_vars(); ++k) rank[order.permutation()[k]] = k;
  for (std::size_t v = 1; v < ring.num_vars(); ++v)
    if (ring.block_of(v) == ring.block_of(v - 1) && rank[v] < rank[v - 1])
      throw std::invalid_argument("order must rank x_{i,j} above x_{i,j+1}");
}

/// Initial ideal of I after the random change drawn from stream (seed, attempt).
template <FieldElement K>
MonomialIdeal initial_after_change(const Ideal<K>& ideal, const TermOrder& order, std::uint64_t seed,
                                   std::uint64_t attempt) {
  SplitMix64 rng(seed, attempt);
  auto change = random_block_change<K>(*ideal.ring(), rng);
  return initial_ideal(change_coordinates(ideal, change), order);
}

/// Z^n-graded generic initial ideal, certified by seed agreement and Borel-fixedness.
template <FieldElement K>
GinResult gin(const Ideal<K>& ideal, const TermOrder& order, const GinOptions& options = {}) {
  if (options.seeds.empty()) throw std::invalid_argument("at least one seed is required");
  require_gin_order(*ideal.ring(), order);
  const std::size_t s = options.seeds.size();
  std::vector<std::uint64_t> attempt(s, 0);
  std::vector<MonomialIdeal> cand = parallel_map<MonomialIdeal>(s, [&](std::size_t k) {
    return initial_after_change(ideal, order, options.seeds[k], 0);
  });
  std::size_t resamples = 0;
  for (int round = 0;; ++round) {
    // Strict plurality among Borel-fixed candidates.
    std::map<MonomialIdeal, std::size_t> votes;
    for (const auto& c : cand)
      if (is_borel_fixed(c)) ++votes[c];
    const MonomialIdeal* leader = nullptr;
    std::size_t best = 0;
    bool tie = false;
    for (const auto& [c, n] : votes) {
      if (n > best) {
        best = n;
        leader = &c;
        tie = false;
      } else if (n == best) {
        tie = true;
      }
    }
    std::vector<std::size_t> redo;
    for (std::size_t k = 0; k < s; ++k)
      if (!leader || tie || !(cand[k] == *leader)) redo.push_back(k);
    if (redo.empty()) {
      GinResult r{cand.front(), options.seeds, true, s, resamples};
      return r;
    }
    if (round >= options.retries) {
      throw GenericityError("genericity not certified: seeds disagree or gin is not Borel-fixed", cand);
    }
    for (std::size_t k : redo) ++attempt[k];
    resamples += redo.size();
    auto fresh = parallel_map<MonomialIdeal>(redo.size(), [&](std::size_t i) {
      std::size_t k = redo[i];
      return initial_after_change(ideal, order, options.seeds[k], attempt[k]);
    });
    for (std::size_t i = 0; i < redo.size(); ++i) cand[redo[i]] = std::move(fresh[i]);
  }
}

template <FieldElement K>
GinResult gin(const Ideal<K>& ideal, const GinOptions& options = {}) {
  return gin(ideal, TermOrder::grevlex(ideal.ring()->num_vars()), options);
}

/// gin(I) squarefree.
template <FieldElement K>
bool is_CS(const Ideal<K>& ideal, const GinOptions& options = {}) {
  return is_squarefree(gin(ideal, options).gin);
}

/// gin(I) generated in the first variables of the blocks.
template <FieldElement K>
bool is_CS_star(const Ideal<K>& ideal, const GinOptions& options = {}) {
  return uses_only_first_variables(gin(ideal, options).gin);
}

}  // namespace csgin
