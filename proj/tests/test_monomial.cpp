#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "csgin/monomial_ideal.hpp"
#include "csgin/parse.hpp"
#include "oracles.hpp"

using namespace csgin;
using F = Modular;
constexpr std::uint32_t kP = kDefaultPrime;

namespace {

MonomialIdeal monomials(const RingPtr& ring, std::initializer_list<const char*> gens) {
  std::vector<Monomial> out;
  for (const char* g : gens) out.push_back(parse_polynomial<F>(g, ring).leading_term().mono);
  return MonomialIdeal(ring, std::move(out));
}

RingPtr ring19() { return make_ring({3, 3}, kP, {"x1", "x2", "x3", "y1", "y2", "y3"}); }
RingPtr ring38() { return make_ring({3, 2, 4}, kP, {"x1", "x2", "y1", "x3", "y2", "x4", "x5", "x6", "y3"}); }

MonomialIdeal gin38() {
  return monomials(ring38(), {"x1*x4", "x2*x4", "x3*x4", "x1*x5", "x2*x3*x5", "x1*x3*x6"});
}

bool in_ideal(const MonomialIdeal& ideal, const Monomial& m) {
  for (const auto& g : ideal.generators())
    if (g.divides(m)) return true;
  return false;
}

/// Borel-fixedness by the definition: every exchange x_{i,j} -> x_{i,k}, k < j, stays inside.
bool borel_by_definition(const MonomialIdeal& ideal) {
  const BlockRing& r = *ideal.ring();
  for (const auto& g : ideal.generators())
    for (std::size_t v = 0; v < r.num_vars(); ++v) {
      if (!g[v]) continue;
      for (std::size_t w = r.first_var(r.block_of(v)); w < v; ++w) {
        Monomial m = g;
        m.set(v, g[v] - 1);
        m.set(w, g[w] + 1);
        if (!in_ideal(ideal, m)) return false;
      }
    }
  return true;
}

/// Minimal vertex covers by enumerating every subset of variables.
std::set<std::uint32_t> covers_by_enumeration(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.ring()->num_vars();
  std::vector<std::uint32_t> covers;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool ok = true;
    for (const auto& g : ideal.generators())
      if (!(g.support() & s)) ok = false;
    if (ok) covers.push_back(s);
  }
  std::set<std::uint32_t> out;
  for (std::uint32_t c : covers) {
    bool minimal = true;
    for (std::uint32_t d : covers)
      if (d != c && (d & c) == d) minimal = false;
    if (minimal) out.insert(c);
  }
  return out;
}

}  // namespace

TEST_CASE("intersections") {
  RingPtr r = make_ring({1, 1}, kP);
  CHECK(intersect(monomials(r, {"x1_1"}), monomials(r, {"x2_1"})) == monomials(r, {"x1_1*x2_1"}));
  RingPtr s = ring38();
  std::vector<MonomialIdeal> primes;
  for (auto gens : std::vector<std::vector<const char*>>{{"x1", "x2", "x3"}, {"x1", "x2", "x4"}, {"x1", "x3", "x4"},
                                                         {"x1", "x4", "x5"}, {"x3", "x4", "x5"}, {"x4", "x5", "x6"}}) {
    std::vector<Monomial> m;
    for (const char* g : gens) m.push_back(parse_polynomial<F>(g, s).leading_term().mono);
    primes.emplace_back(s, m);
  }
  CHECK(intersect_all(s, primes) == gin38());
}

TEST_CASE("squarefree and Borel checks") {
  MonomialIdeal gin19 =
      monomials(ring19(), {"x1*y1", "x2*y1", "x1*y2", "x2*y2", "x3*y1", "x1*x2*y3", "x1^2*y3"});
  CHECK_FALSE(is_squarefree(gin19));
  CHECK(is_squarefree(gin38()));
  CHECK(is_borel_fixed(gin19));
  CHECK(is_borel_fixed(gin38()));
  RingPtr r = make_ring({2}, kP);
  CHECK_FALSE(is_borel_fixed(monomials(r, {"x1_2"})));
  CHECK(is_borel_fixed(monomials(r, {"x1_1"})));
  for (auto a : std::vector<std::vector<int>>{{2, 1, 0}, {0, 0, 3}, {1, 1, 1}, {3, 2, 4}}) {
    MonomialIdeal p = borel_prime(ring38(), a);
    CHECK(is_borel_fixed(p));
    CHECK(codimension(p) == a[0] + a[1] + a[2]);
  }
}

TEST_CASE("Borel-fixedness agrees with the exchange definition") {
  SplitMix64 rng(7);
  int borel = 0;
  for (int k = 0; k < 400; ++k) {
    RingPtr r = make_ring({1 + static_cast<int>(rng.below(3)), 1 + static_cast<int>(rng.below(3))}, kP);
    MonomialIdeal ideal = oracle::random_monomial_ideal(r, rng, 2, 4);
    const bool expected = borel_by_definition(ideal);
    borel += expected;
    CHECK(is_borel_fixed(ideal) == expected);
  }
  CHECK(borel > 20);
}

TEST_CASE("Alexander duality examples") {
  RingPtr r2 = make_ring({2}, kP, {"x1", "x2"});
  CHECK(alexander_dual(monomials(r2, {"x1*x2"})) == monomials(r2, {"x1", "x2"}));
  CHECK(alexander_dual(monomials(r2, {"x1", "x2"})) == monomials(r2, {"x1*x2"}));
  RingPtr r3 = make_ring({3}, kP, {"x1", "x2", "x3"});
  CHECK(alexander_dual(monomials(r3, {"x1*x2", "x2*x3"})) == monomials(r3, {"x2", "x1*x3"}));
}

TEST_CASE("Alexander duality is an involution and matches the cover definition") {
  SplitMix64 rng(8);
  for (int k = 0; k < 500; ++k) {
    const int n = 1 + static_cast<int>(rng.below(8));
    std::vector<int> blocks;
    for (int left = n; left > 0;) {
      int b = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(left)));
      blocks.push_back(b);
      left -= b;
    }
    RingPtr r = make_ring(blocks, kP);
    MonomialIdeal ideal = oracle::random_squarefree(r, rng);
    MonomialIdeal dual = alexander_dual(ideal);
    CHECK(alexander_dual(dual) == ideal);
    std::set<std::uint32_t> dual_supports;
    for (const auto& g : dual.generators()) dual_supports.insert(g.support());
    CHECK(dual_supports == covers_by_enumeration(ideal));
    auto covers = minimal_vertex_covers(ideal);
    CHECK(std::set<std::uint32_t>(covers.begin(), covers.end()) == covers_by_enumeration(ideal));
  }
}

TEST_CASE("minimal primes") {
  RingPtr r2 = make_ring({2}, kP, {"x1", "x2"});
  auto p = minimal_primes(monomials(r2, {"x1*x2"}));
  REQUIRE(p.size() == 2);
  std::set<std::string> names;
  for (const auto& q : p) names.insert(q.to_string());
  CHECK(names == std::set<std::string>{"(x1)", "(x2)"});

  auto primes38 = minimal_primes(gin38());
  CHECK(primes38.size() == 6);
  for (const auto& q : primes38) CHECK(q.size() == 3);

  auto zero = minimal_primes(MonomialIdeal(r2));
  REQUIRE(zero.size() == 1);
  CHECK(zero.front().is_zero());
}

TEST_CASE("minimal primes intersect back to the radical") {
  SplitMix64 rng(9);
  for (int k = 0; k < 200; ++k) {
    RingPtr r = make_ring({2, 1 + static_cast<int>(rng.below(3)), 2}, kP);
    MonomialIdeal sq = oracle::random_squarefree(r, rng);
    CHECK(intersect_all(r, minimal_primes(sq)) == sq);
    MonomialIdeal general = oracle::random_monomial_ideal(r, rng, 3, 4);
    CHECK(intersect_all(r, minimal_primes(radical(general))) == radical(general));
  }
}

TEST_CASE("dimension and codimension") {
  RingPtr r = make_ring({2, 2}, kP);
  CHECK(dimension(MonomialIdeal(r)) == 4);
  CHECK(codimension(MonomialIdeal(r)) == 0);
  CHECK(dimension(monomials(r, {"x1_1", "x1_2", "x2_1", "x2_2"})) == 0);
  CHECK(dimension(MonomialIdeal::unit(r)) == -1);
  CHECK(codimension(MonomialIdeal::unit(r)) == 5);
  CHECK(codimension(gin38()) == 3);
  CHECK(dimension(gin38()) == 6);
}

TEST_CASE("generators in first variables") {
  CHECK_FALSE(uses_only_first_variables(gin38()));
  RingPtr r = make_ring({2, 2}, kP);
  CHECK(uses_only_first_variables(monomials(r, {"x1_1*x2_1"})));
  CHECK(uses_only_first_variables(monomials(r, {"x1_1"})));
  CHECK_FALSE(uses_only_first_variables(monomials(r, {"x1_1*x1_2"})));
}

TEST_CASE("sums, colons by a variable and radicals") {
  RingPtr r = make_ring({3}, kP, {"a", "b", "c"});
  CHECK(sum(monomials(r, {"a^2"}), monomials(r, {"a*b"})) == monomials(r, {"a^2", "a*b"}));
  CHECK(colon_variable(monomials(r, {"a^2*b", "c"}), 0) == monomials(r, {"a*b", "c"}));
  CHECK(radical(monomials(r, {"a^3*b^2", "c^2"})) == monomials(r, {"a*b", "c"}));
  CHECK(MonomialIdeal(r, {Monomial::variable(0), Monomial::variable(0) * Monomial::variable(1)}).size() == 1);
}
