#include "csgin/monomial_ideal.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

#include "csgin/parse.hpp"

namespace csgin {

std::vector<Monomial> minimalize(std::vector<Monomial> gens, std::size_t nvars) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> kept;
  for (const Monomial& m : gens) {
    bool redundant = false;
    for (const Monomial& k : kept)
      if (k.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(m);
  }
  std::sort(kept.begin(), kept.end(),
            [nvars](const Monomial& a, const Monomial& b) { return ambient_compare(a, b, nvars) > 0; });
  return kept;
}

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Monomial> generators)
    : ring_(std::move(ring)), gens_(minimalize(std::move(generators), ring_->num_vars())) {
  const std::uint32_t allowed =
      ring_->num_vars() == 32 ? 0xffffffffu : ((1u << ring_->num_vars()) - 1u);
  for (const Monomial& m : gens_)
    if (m.support() & ~allowed) throw std::out_of_range("generator uses a variable outside the ring");
}

MonomialIdeal MonomialIdeal::prime(RingPtr ring, std::uint32_t vars) {
  std::vector<Monomial> gens;
  for (std::size_t v = 0; v < ring->num_vars(); ++v)
    if ((vars >> v) & 1u) gens.push_back(Monomial::variable(v));
  return MonomialIdeal(std::move(ring), std::move(gens));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const Monomial& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  for (const Monomial& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

bool operator<(const MonomialIdeal& a, const MonomialIdeal& b) {
  return std::lexicographical_compare(
      a.gens_.begin(), a.gens_.end(), b.gens_.begin(), b.gens_.end(),
      [](const Monomial& x, const Monomial& y) { return x.exponents() < y.exponents(); });
}

std::string MonomialIdeal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += monomial_to_string(gens_[i], *ring_);
  }
  return out + ")";
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const Monomial& x : a.generators())
    for (const Monomial& y : b.generators()) gens.push_back(lcm(x, y));
  return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal intersect_all(const RingPtr& ring, const std::vector<MonomialIdeal>& ideals) {
  MonomialIdeal acc = MonomialIdeal::unit(ring);
  for (const auto& i : ideals) acc = intersect(acc, i);
  return acc;
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal colon_variable(const MonomialIdeal& ideal, std::size_t var) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (Monomial m : ideal.generators()) {
    if (m[var]) m.set(var, m[var] - 1);
    gens.push_back(m);
  }
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

bool is_squarefree(const MonomialIdeal& ideal) {
  for (const Monomial& m : ideal.generators())
    for (std::size_t v = 0; v < ideal.ring()->num_vars(); ++v)
      if (m[v] > 1) return false;
  return true;
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<Monomial> gens;
  for (const Monomial& m : ideal.generators()) {
    Monomial r;
    for (std::size_t v = 0; v < ideal.ring()->num_vars(); ++v)
      if (m[v]) r.set(v, 1);
    gens.push_back(r);
  }
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

MonomialIdeal alexander_dual(const MonomialIdeal& ideal) {
  if (!is_squarefree(ideal)) throw NotSquarefree("Alexander dual needs a squarefree ideal");
  MonomialIdeal acc = MonomialIdeal::unit(ideal.ring());
  for (const Monomial& m : ideal.generators())
    acc = intersect(acc, MonomialIdeal::prime(ideal.ring(), m.support()));
  return acc;
}

std::vector<std::uint32_t> minimal_vertex_covers(const MonomialIdeal& ideal) {
  std::vector<std::uint32_t> edges;
  for (const Monomial& m : ideal.generators()) edges.push_back(m.support());
  std::vector<std::uint32_t> found;

  auto covers = [&](std::uint32_t c) {
    for (std::uint32_t e : edges)
      if (!(e & c)) return false;
    return true;
  };
  // Branch on the first uncovered edge; vertices tried earlier are forbidden in
  // later branches, so every cover is generated once.
  std::function<void(std::uint32_t, std::uint32_t)> search = [&](std::uint32_t cover,
                                                                 std::uint32_t forbidden) {
    for (std::uint32_t f : found)
      if ((f & cover) == f) return;  // bound: already contains a known cover
    const std::uint32_t* open = nullptr;
    for (const std::uint32_t& e : edges) {
      if (e & cover) continue;
      if (!(e & ~forbidden)) return;  // cannot be covered any more
      if (!open) open = &e;
    }
    if (!open) {
      found.push_back(cover);
      return;
    }
    std::uint32_t candidates = *open & ~forbidden;
    std::uint32_t banned = forbidden;
    while (candidates) {
      std::uint32_t bit = candidates & (~candidates + 1);
      candidates &= candidates - 1;
      search(cover | bit, banned);
      banned |= bit;
    }
  };
  search(0, 0);

  std::vector<std::uint32_t> minimal;
  for (std::uint32_t c : found) {
    bool ok = true;
    for (std::uint32_t rest = c; rest && ok; rest &= rest - 1) {
      std::uint32_t bit = rest & (~rest + 1);
      if (covers(c & ~bit)) ok = false;
    }
    if (ok) minimal.push_back(c);
  }
  std::sort(minimal.begin(), minimal.end());
  minimal.erase(std::unique(minimal.begin(), minimal.end()), minimal.end());
  return minimal;
}

std::vector<MonomialIdeal> minimal_primes(const MonomialIdeal& ideal) {
  if (!is_squarefree(ideal)) throw NotSquarefree("minimal primes are computed for squarefree ideals");
  std::vector<MonomialIdeal> primes;
  for (std::uint32_t c : minimal_vertex_covers(ideal)) primes.push_back(MonomialIdeal::prime(ideal.ring(), c));
  std::sort(primes.begin(), primes.end());
  return primes;
}

bool is_borel_fixed(const MonomialIdeal& ideal) {
  const BlockRing& ring = *ideal.ring();
  for (const Monomial& m : ideal.generators()) {
    for (std::size_t v = 0; v < ring.num_vars(); ++v) {
      if (!m[v] || ring.index_in_block(v) == 0) continue;
      Monomial moved = m;
      moved.set(v, m[v] - 1);
      moved.set(v - 1, m[v - 1] + 1);
      if (!ideal.contains(moved)) return false;
    }
  }
  return true;
}

MonomialIdeal borel_prime(const RingPtr& ring, const std::vector<int>& a) {
  if (a.size() != ring->num_blocks()) throw std::invalid_argument("one entry per block required");
  std::uint32_t vars = 0;
  for (std::size_t b = 0; b < a.size(); ++b) {
    if (a[b] < 0 || a[b] > ring->block_size(b)) throw std::out_of_range("Borel prime index out of range");
    for (int j = 0; j < a[b]; ++j) vars |= 1u << ring->var(b, static_cast<std::size_t>(j));
  }
  return MonomialIdeal::prime(ring, vars);
}

int codimension(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) return static_cast<int>(ideal.ring()->num_vars()) + 1;
  int best = static_cast<int>(ideal.ring()->num_vars());
  for (std::uint32_t c : minimal_vertex_covers(radical(ideal)))
    best = std::min(best, std::popcount(c));
  return best;
}

int dimension(const MonomialIdeal& ideal) {
  return static_cast<int>(ideal.ring()->num_vars()) - codimension(ideal);
}

bool uses_only_first_variables(const MonomialIdeal& ideal) {
  const BlockRing& ring = *ideal.ring();
  for (const Monomial& m : ideal.generators())
    for (std::size_t v = 0; v < ring.num_vars(); ++v)
      if (m[v] && ring.index_in_block(v) != 0) return false;
  return true;
}

}  // namespace csgin
