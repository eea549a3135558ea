#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "csgin/monomial_ideal.hpp"
#include "csgin/order.hpp"
#include "csgin/poly.hpp"

namespace csgin {

/// Counters from one Buchberger run.
struct GroebnerStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t coprime_skipped = 0;
  std::size_t chain_skipped = 0;
};

namespace engine {

/// Polynomial in the position space of a TermOrder, terms strictly decreasing.
template <FieldElement K>
struct EPoly {
  std::vector<Term<K>> terms;
  unsigned sugar = 0;
  bool empty() const { return terms.empty(); }
  const Monomial& lead() const { return terms.front().mono; }
};

template <FieldElement K>
class Engine {
 public:
  Engine(const TermOrder& order, std::uint32_t characteristic)
      : order_(order), nvars_(order.num_vars()), characteristic_(characteristic) {}

  int cmp(const Monomial& a, const Monomial& b) const { return order_.compare_positions(a, b); }

  EPoly<K> import(const Polynomial<K>& f) const {
    EPoly<K> e;
    e.terms.reserve(f.size());
    for (const auto& t : f.terms()) e.terms.push_back({order_.to_positions(t.mono), t.coeff});
    std::sort(e.terms.begin(), e.terms.end(),
              [this](const Term<K>& a, const Term<K>& b) { return cmp(a.mono, b.mono) > 0; });
    e.sugar = f.total_degree();
    return e;
  }

  Polynomial<K> export_to(const EPoly<K>& e, const RingPtr& ring) const {
    std::vector<Term<K>> out;
    out.reserve(e.terms.size());
    for (const auto& t : e.terms) out.push_back({order_.from_positions(t.mono), t.coeff});
    return Polynomial<K>::from_terms(ring, std::move(out));
  }

  static void make_monic(EPoly<K>& f) {
    if (f.empty() || f.terms.front().coeff.is_one()) return;
    K inv = f.terms.front().coeff.inverse();
    for (auto& t : f.terms) t.coeff *= inv;
  }

  /// out = a[from..] - c * m * b[1..]  (the leading term of b is assumed cancelled)
  void sub_multiple(const std::vector<Term<K>>& a, std::size_t from, const K& c, const Monomial& m,
                    const std::vector<Term<K>>& b, std::vector<Term<K>>& out) const {
    out.clear();
    out.reserve(a.size() - from + b.size());
    std::size_t i = from, j = 1;
    while (i < a.size() || j < b.size()) {
      if (j == b.size()) {
        out.push_back(a[i++]);
        continue;
      }
      Monomial bm = b[j].mono * m;
      int s = i == a.size() ? -1 : cmp(a[i].mono, bm);
      if (s > 0) {
        out.push_back(a[i++]);
      } else if (s < 0) {
        out.push_back({bm, -(c * b[j].coeff)});
        ++j;
      } else {
        K v = a[i].coeff - c * b[j].coeff;
        if (!v.is_zero()) out.push_back({bm, v});
        ++i;
        ++j;
      }
    }
  }

  struct Basis {
    std::vector<EPoly<K>> polys;
    std::vector<std::uint32_t> masks;
    std::vector<char> active;
  };

  /// Index of an active basis element whose lead divides m, or -1.
  long find_reducer(const Basis& basis, const Monomial& m, std::uint32_t mmask) const {
    for (std::size_t k = 0; k < basis.polys.size(); ++k) {
      if (!basis.active[k]) continue;
      if (basis.masks[k] & ~mmask) continue;
      if (basis.polys[k].lead().divides(m)) return static_cast<long>(k);
    }
    return -1;
  }

  /// Reduces f by the active elements; full=true also reduces the tail.
  EPoly<K> reduce(EPoly<K> f, const Basis& basis, bool full) const {
    std::vector<Term<K>> done;
    std::vector<Term<K>> cur = std::move(f.terms);
    std::vector<Term<K>> scratch;
    std::size_t start = 0;
    while (start < cur.size()) {
      const Term<K>& lt = cur[start];
      long r = find_reducer(basis, lt.mono, lt.mono.support());
      if (r < 0) {
        if (!full) {
          done.insert(done.end(), cur.begin() + static_cast<long>(start), cur.end());
          break;
        }
        done.push_back(lt);
        ++start;
        continue;
      }
      const EPoly<K>& g = basis.polys[static_cast<std::size_t>(r)];
      K c = lt.coeff / g.terms.front().coeff;
      Monomial m = lt.mono / g.lead();
      f.sugar = std::max(f.sugar, m.degree() + g.sugar);
      sub_multiple(cur, start + 1, c, m, g.terms, scratch);
      std::swap(cur, scratch);
      start = 0;
    }
    f.terms = std::move(done);
    return f;
  }

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    unsigned sugar;
  };

  EPoly<K> spoly(const EPoly<K>& f, const EPoly<K>& g, const Monomial& l) const {
    Monomial mf = l / f.lead();
    Monomial mg = l / g.lead();
    K c = f.terms.front().coeff / g.terms.front().coeff;
    // mf*f - c*mg*g, leading terms cancel
    std::vector<Term<K>> scaled;
    scaled.reserve(f.terms.size());
    for (const auto& t : f.terms) scaled.push_back({t.mono * mf, t.coeff});
    EPoly<K> s;
    sub_multiple(scaled, 1, c, mg, g.terms, s.terms);
    s.sugar = std::max(f.sugar - f.lead().degree(), g.sugar - g.lead().degree()) + l.degree();
    return s;
  }

  /// Gebauer–Möller update after adding basis element h.
  void update(Basis& basis, std::vector<Pair>& pairs, std::size_t h, GroebnerStats& stats) const {
    const Monomial& lh = basis.polys[h].lead();
    const unsigned hs = basis.polys[h].sugar - lh.degree();
    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
      unsigned sugar;
    };
    std::vector<Cand> cands;
    for (std::size_t g = 0; g < h; ++g) {
      if (!basis.active[g]) continue;
      const EPoly<K>& gp = basis.polys[g];
      Monomial l = lcm(lh, gp.lead());
      unsigned s = std::max(hs, gp.sugar - gp.lead().degree()) + l.degree();
      cands.push_back({g, l, coprime(lh, gp.lead()), s});
    }
    std::vector<Cand> kept;
    for (std::size_t c = 0; c < cands.size(); ++c) {
      bool keep = cands[c].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t d = c + 1; d < cands.size() && keep; ++d)
          if (cands[d].lcm.divides(cands[c].lcm)) keep = false;
        for (std::size_t d = 0; d < kept.size() && keep; ++d)
          if (kept[d].lcm.divides(cands[c].lcm)) keep = false;
      }
      if (keep) kept.push_back(cands[c]);
      else ++stats.chain_skipped;
    }
    std::vector<Pair> next;
    next.reserve(pairs.size() + kept.size());
    for (const Pair& p : pairs) {
      const Monomial& li = basis.polys[p.i].lead();
      const Monomial& lj = basis.polys[p.j].lead();
      if (lh.divides(p.lcm) && !(lcm(li, lh) == p.lcm) && !(lcm(lh, lj) == p.lcm)) {
        ++stats.chain_skipped;
        continue;
      }
      next.push_back(p);
    }
    for (const Cand& c : kept) {
      if (c.coprime) {
        ++stats.coprime_skipped;
        continue;
      }
      next.push_back({c.g, h, c.lcm, c.sugar});
      ++stats.pairs_created;
    }
    pairs = std::move(next);
    for (std::size_t g = 0; g < h; ++g)
      if (basis.active[g] && lh.divides(basis.polys[g].lead())) basis.active[g] = 0;
  }

  void insert(Basis& basis, std::vector<Pair>& pairs, EPoly<K> h, GroebnerStats& stats) const {
    make_monic(h);
    basis.masks.push_back(h.lead().support());
    basis.polys.push_back(std::move(h));
    basis.active.push_back(1);
    update(basis, pairs, basis.polys.size() - 1, stats);
  }

  /// Reduced Gröbner basis in position space, sorted by decreasing leading term.
  std::vector<EPoly<K>> groebner(std::vector<EPoly<K>> input, GroebnerStats& stats) const {
    Basis basis;
    std::vector<Pair> pairs;
    std::sort(input.begin(), input.end(), [this](const EPoly<K>& a, const EPoly<K>& b) {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      if (a.empty() || b.empty()) return b.empty() && !a.empty();
      return cmp(a.lead(), b.lead()) < 0;
    });
    for (auto& f : input) {
      EPoly<K> r = reduce(std::move(f), basis, true);
      if (!r.empty()) insert(basis, pairs, std::move(r), stats);
    }
    while (!pairs.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs.size(); ++k) {
        const Pair& a = pairs[k];
        const Pair& b = pairs[best];
        if (a.sugar < b.sugar || (a.sugar == b.sugar && cmp(a.lcm, b.lcm) < 0)) best = k;
      }
      Pair p = pairs[best];
      pairs[best] = pairs.back();
      pairs.pop_back();
      ++stats.pairs_reduced;
      EPoly<K> s = spoly(basis.polys[p.i], basis.polys[p.j], p.lcm);
      EPoly<K> r = reduce(std::move(s), basis, true);
      if (r.empty()) {
        ++stats.zero_reductions;
        continue;
      }
      insert(basis, pairs, std::move(r), stats);
    }
    return interreduce(basis);
  }

  std::vector<EPoly<K>> interreduce(const Basis& basis) const {
    Basis minimal;
    for (std::size_t k = 0; k < basis.polys.size(); ++k) {
      if (!basis.active[k]) continue;
      minimal.polys.push_back(basis.polys[k]);
      minimal.masks.push_back(basis.masks[k]);
      minimal.active.push_back(1);
    }
    std::vector<EPoly<K>> out;
    for (std::size_t k = 0; k < minimal.polys.size(); ++k) {
      minimal.active[k] = 0;
      EPoly<K> tail;
      tail.sugar = minimal.polys[k].sugar;
      tail.terms.assign(minimal.polys[k].terms.begin() + 1, minimal.polys[k].terms.end());
      EPoly<K> red = reduce(std::move(tail), minimal, true);
      EPoly<K> g;
      g.sugar = red.sugar;
      g.terms.push_back(minimal.polys[k].terms.front());
      g.terms.insert(g.terms.end(), red.terms.begin(), red.terms.end());
      make_monic(g);
      minimal.active[k] = 1;
      out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end(),
              [this](const EPoly<K>& a, const EPoly<K>& b) { return cmp(a.lead(), b.lead()) > 0; });
    return out;
  }

 private:
  const TermOrder& order_;
  std::size_t nvars_;
  std::uint32_t characteristic_;
};

}  // namespace engine

/// Raised when an Ideal receives a generator that is not Z^n-homogeneous.
class NonHomogeneous : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Reduced Gröbner basis of arbitrary polynomials (homogeneity not required).
template <FieldElement K>
std::vector<Polynomial<K>> buchberger(const RingPtr& ring, const std::vector<Polynomial<K>>& gens,
                                      const TermOrder& order, GroebnerStats* stats = nullptr) {
  if (order.num_vars() != ring->num_vars()) throw std::invalid_argument("order and ring disagree on variable count");
  engine::Engine<K> eng(order, ring->characteristic());
  std::vector<engine::EPoly<K>> input;
  for (const auto& g : gens) {
    require_same_ring(ring, g.ring());
    if (!g.is_zero()) input.push_back(eng.import(g));
  }
  GroebnerStats local;
  auto basis = eng.groebner(std::move(input), stats ? *stats : local);
  std::vector<Polynomial<K>> out;
  out.reserve(basis.size());
  for (const auto& e : basis) out.push_back(eng.export_to(e, ring));
  return out;
}

/// Leading monomial of f under `order` (ring variables).
template <FieldElement K>
Monomial leading_monomial(const Polynomial<K>& f, const TermOrder& order) {
  if (f.is_zero()) throw std::invalid_argument("leading monomial of zero");
  const Monomial* best = &f.terms().front().mono;
  for (const auto& t : f.terms())
    if (order.compare(t.mono, *best) > 0) best = &t.mono;
  return *best;
}

/// Remainder of f modulo `basis` under `order`, fully reduced.
template <FieldElement K>
Polynomial<K> reduce_by(const Polynomial<K>& f, const std::vector<Polynomial<K>>& basis,
                        const TermOrder& order) {
  engine::Engine<K> eng(order, f.ring()->characteristic());
  typename engine::Engine<K>::Basis b;
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    auto e = eng.import(g);
    b.masks.push_back(e.lead().support());
    b.polys.push_back(std::move(e));
    b.active.push_back(1);
  }
  return eng.export_to(eng.reduce(eng.import(f), b, true), f.ring());
}

/// Exhaustive check: every S-polynomial of `basis` reduces to zero (no criteria used).
template <FieldElement K>
bool is_groebner_basis(const std::vector<Polynomial<K>>& basis, const TermOrder& order) {
  if (basis.empty()) return true;
  engine::Engine<K> eng(order, basis.front().ring()->characteristic());
  typename engine::Engine<K>::Basis b;
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    auto e = eng.import(g);
    b.masks.push_back(e.lead().support());
    b.polys.push_back(std::move(e));
    b.active.push_back(1);
  }
  for (std::size_t i = 0; i < b.polys.size(); ++i)
    for (std::size_t j = i + 1; j < b.polys.size(); ++j) {
      Monomial l = lcm(b.polys[i].lead(), b.polys[j].lead());
      auto s = eng.spoly(b.polys[i], b.polys[j], l);
      if (!eng.reduce(std::move(s), b, true).empty()) return false;
    }
  return true;
}

/// Ideal of a BlockRing with Z^n-homogeneous generators and a per-order Gröbner basis cache.
/// Copies share the cache.
template <FieldElement K>
class Ideal {
 public:
  explicit Ideal(RingPtr ring) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {}
  Ideal(RingPtr ring, std::vector<Polynomial<K>> generators)
      : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (auto& g : generators) {
      require_same_ring(ring_, g.ring());
      if (g.is_zero()) continue;
      if (!g.is_homogeneous()) throw NonHomogeneous("ideal generator is not multigraded-homogeneous");
      gens_.push_back(std::move(g));
    }
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial<K>>& generators() const { return gens_; }
  bool is_zero_ideal() const { return gens_.empty(); }

  const std::vector<Polynomial<K>>& groebner_basis(const TermOrder& order,
                                                   GroebnerStats* stats = nullptr) const {
    const std::string key = order.key();
    {
      std::lock_guard<std::mutex> lock(cache_->mu);
      auto it = cache_->bases.find(key);
      if (it != cache_->bases.end()) return it->second;
    }
    auto basis = buchberger(ring_, gens_, order, stats);
    std::lock_guard<std::mutex> lock(cache_->mu);
    return cache_->bases.emplace(key, std::move(basis)).first->second;
  }

  std::size_t cached_orders() const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    return cache_->bases.size();
  }

 private:
  struct Cache {
    mutable std::mutex mu;
    std::map<std::string, std::vector<Polynomial<K>>> bases;
  };
  RingPtr ring_;
  std::vector<Polynomial<K>> gens_;
  std::shared_ptr<Cache> cache_;
};

template <FieldElement K>
MonomialIdeal initial_ideal(const Ideal<K>& ideal, const TermOrder& order) {
  std::vector<Monomial> leads;
  for (const auto& g : ideal.groebner_basis(order)) leads.push_back(leading_monomial(g, order));
  return MonomialIdeal(ideal.ring(), std::move(leads));
}

template <FieldElement K>
Polynomial<K> normal_form(const Polynomial<K>& f, const Ideal<K>& ideal, const TermOrder& order) {
  require_same_ring(f.ring(), ideal.ring());
  return reduce_by(f, ideal.groebner_basis(order), order);
}

template <FieldElement K>
bool contains(const Ideal<K>& ideal, const Polynomial<K>& f) {
  return normal_form(f, ideal, TermOrder::grevlex(ideal.ring()->num_vars())).is_zero();
}

/// a ⊆ b
template <FieldElement K>
bool is_subset(const Ideal<K>& a, const Ideal<K>& b) {
  require_same_ring(a.ring(), b.ring());
  for (const auto& g : a.generators())
    if (!contains(b, g)) return false;
  return true;
}

template <FieldElement K>
bool ideal_equal(const Ideal<K>& a, const Ideal<K>& b) {
  return is_subset(a, b) && is_subset(b, a);
}

template <FieldElement K>
Ideal<K> sum(const Ideal<K>& a, const Ideal<K>& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial<K>> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal<K>(a.ring(), std::move(gens));
}

template <FieldElement K>
Ideal<K> from_monomials(const MonomialIdeal& m) {
  std::vector<Polynomial<K>> gens;
  K one = K::from_int(1, m.ring()->characteristic());
  for (const auto& g : m.generators()) gens.push_back(Polynomial<K>::monomial(m.ring(), g, one));
  return Ideal<K>(m.ring(), std::move(gens));
}

/// Splits every polynomial into its homogeneous components (all of which lie in a
/// homogeneous ideal containing the polynomial).
template <FieldElement K>
std::vector<Polynomial<K>> homogeneous_parts(const std::vector<Polynomial<K>>& polys) {
  std::vector<Polynomial<K>> out;
  for (const auto& p : polys)
    for (auto& [deg, part] : p.homogeneous_components()) out.push_back(part);
  return out;
}

/// I ∩ K[variables not in `vars`], via a block elimination order.
template <FieldElement K>
Ideal<K> eliminate(const Ideal<K>& ideal, const std::vector<std::size_t>& vars) {
  if (vars.empty()) return ideal;
  TermOrder order = TermOrder::elimination(ideal.ring()->num_vars(), vars);
  std::uint32_t mask = 0;
  for (std::size_t v : vars) mask |= 1u << v;
  std::vector<Polynomial<K>> kept;
  for (const auto& g : ideal.groebner_basis(order))
    if (!(g.support() & mask)) kept.push_back(g);
  return Ideal<K>(ideal.ring(), std::move(kept));
}

namespace detail {

/// Ring with one extra single-variable block used as an elimination tag.
inline RingPtr tagged_ring(const RingPtr& ring) {
  std::vector<int> sizes = ring->block_sizes();
  sizes.push_back(1);
  std::vector<std::string> names = ring->names();
  std::string tag = "tag";
  while (ring->find_variable(tag)) tag += "_";
  names.push_back(tag);
  return make_ring(std::move(sizes), ring->characteristic(), std::move(names));
}

inline std::vector<std::size_t> identity_map(std::size_t n) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i;
  return m;
}

}  // namespace detail

/// I ∩ J = (t·I + (1−t)·J) ∩ K[x].
template <FieldElement K>
Ideal<K> intersect(const Ideal<K>& a, const Ideal<K>& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_zero_ideal() || b.is_zero_ideal()) return Ideal<K>(a.ring());
  const RingPtr& ring = a.ring();
  const std::size_t n = ring->num_vars();
  RingPtr big = detail::tagged_ring(ring);
  auto up = detail::identity_map(n);
  Polynomial<K> t = Polynomial<K>::variable(big, n);
  Polynomial<K> one_minus_t = Polynomial<K>::constant(big, 1) - t;
  std::vector<Polynomial<K>> gens;
  for (const auto& g : a.generators()) gens.push_back(t * g.map_to(big, up));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.map_to(big, up));
  auto basis = buchberger(big, gens, TermOrder::elimination(n + 1, {n}));
  std::vector<Polynomial<K>> kept;
  std::vector<std::size_t> down(n + 1, n + 1);
  for (std::size_t v = 0; v < n; ++v) down[v] = v;
  for (const auto& g : basis)
    if (!((g.support() >> n) & 1u)) kept.push_back(g.map_to(ring, down));
  return Ideal<K>(ring, homogeneous_parts(kept));
}

/// Exact quotient g / f; throws if f does not divide g.
template <FieldElement K>
Polynomial<K> divide_exact(const Polynomial<K>& g, const Polynomial<K>& f) {
  require_same_ring(g.ring(), f.ring());
  if (f.is_zero()) throw std::invalid_argument("division by zero polynomial");
  Polynomial<K> q(g.ring());
  Polynomial<K> r = g;
  const auto& lf = f.leading_term();
  K inv = lf.coeff.inverse();
  while (!r.is_zero()) {
    const auto& lr = r.leading_term();
    if (!lf.mono.divides(lr.mono)) throw std::invalid_argument("polynomial division is not exact");
    Monomial m = lr.mono / lf.mono;
    K c = lr.coeff * inv;
    q = q + Polynomial<K>::monomial(g.ring(), m, c);
    r = r - f.times(m, c);
  }
  return q;
}

/// I : (f) = (I ∩ (f)) / f.
template <FieldElement K>
Ideal<K> colon(const Ideal<K>& ideal, const Polynomial<K>& f) {
  require_same_ring(ideal.ring(), f.ring());
  if (f.is_zero()) throw std::invalid_argument("colon by the zero polynomial");
  if (!f.is_homogeneous()) throw NonHomogeneous("colon needs a homogeneous polynomial");
  if (f.total_degree() == 0) return ideal;
  Ideal<K> inter = intersect(ideal, Ideal<K>(ideal.ring(), {f}));
  std::vector<Polynomial<K>> gens;
  for (const auto& g : inter.generators()) gens.push_back(divide_exact(g, f));
  return Ideal<K>(ideal.ring(), std::move(gens));
}

/// I : f^∞ by iterated colons until two consecutive ideals agree.
template <FieldElement K>
Ideal<K> saturate(const Ideal<K>& ideal, const Polynomial<K>& f, int* rounds = nullptr) {
  Ideal<K> cur = ideal;
  int count = 0;
  for (;;) {
    Ideal<K> next = colon(cur, f);
    ++count;
    if (is_subset(next, cur)) break;
    cur = std::move(next);
  }
  if (rounds) *rounds = count;
  return cur;
}

/// Reduced Gröbner basis as an Ideal (same ideal, nicer generators).
template <FieldElement K>
Ideal<K> reduced(const Ideal<K>& ideal) {
  return Ideal<K>(ideal.ring(), ideal.groebner_basis(TermOrder::grevlex(ideal.ring()->num_vars())));
}

}  // namespace csgin
