#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "csgin/binomial_edge.hpp"
#include "csgin/groebner.hpp"
#include "csgin/hilbert.hpp"
#include "csgin/linear_closure.hpp"
#include "csgin/parallel.hpp"
#include "csgin/parse.hpp"
#include "oracles.hpp"

using namespace csgin;
using F = Modular;
using Q = Rational;
constexpr std::uint32_t kP = kDefaultPrime;

namespace {

template <FieldElement K>
Ideal<K> ideal_of(const RingPtr& ring, std::initializer_list<const char*> gens) {
  std::vector<Polynomial<K>> polys;
  for (const char* g : gens) polys.push_back(parse_polynomial<K>(g, ring));
  return Ideal<K>(ring, std::move(polys));
}

template <FieldElement K>
std::set<std::string> as_strings(const std::vector<Polynomial<K>>& polys) {
  std::set<std::string> out;
  for (const auto& p : polys) out.insert(to_string(p));
  return out;
}

MonomialIdeal monomials(const RingPtr& ring, std::initializer_list<const char*> gens) {
  std::vector<Monomial> out;
  for (const char* g : gens)
    out.push_back(ring->characteristic() ? parse_polynomial<F>(g, ring).leading_term().mono
                                         : parse_polynomial<Q>(g, ring).leading_term().mono);
  return MonomialIdeal(ring, std::move(out));
}

/// Random homogeneous ideal on blocks (2,2) or (3,2) with 2-4 generators.
Ideal<F> random_ideal(SplitMix64& rng) {
  RingPtr ring = make_ring(rng.below(2) ? std::vector<int>{2, 2} : std::vector<int>{3, 2}, kP);
  std::vector<Polynomial<F>> gens;
  for (std::size_t k = 0, count = 2 + rng.below(3); k < count; ++k) {
    std::vector<int> d{static_cast<int>(rng.below(3)), static_cast<int>(rng.below(3))};
    if (d[0] + d[1] == 0) d[0] = 1;
    gens.push_back(oracle::random_homogeneous<F>(ring, d, rng, 3));
  }
  return Ideal<F>(ring, std::move(gens));
}

}  // namespace

TEST_CASE("a single binomial is its own Gröbner basis") {
  RingPtr r = edge_ring(2, kP);
  auto I = ideal_of<F>(r, {"x1*y2 - x2*y1"});
  auto gb = I.groebner_basis(TermOrder::grevlex(4));
  REQUIRE(gb.size() == 1);
  CHECK(gb.front() == I.generators().front().monic());
}

TEST_CASE("2-minors of the generic 2x3 matrix") {
  RingPtr r = make_ring({3, 3}, 0);
  auto I = ideal_of<Q>(r, {"x1_1*x2_2 - x1_2*x2_1", "x1_1*x2_3 - x1_3*x2_1", "x1_2*x2_3 - x1_3*x2_2"});
  TermOrder diagonal = TermOrder::lex(6);
  auto gb = I.groebner_basis(diagonal);
  CHECK(gb.size() == 3);
  CHECK(is_groebner_basis(gb, diagonal));
  CHECK(initial_ideal(I, diagonal) == monomials(r, {"x1_1*x2_2", "x1_1*x2_3", "x1_2*x2_3"}));
}

TEST_CASE("binomial edge ideal of P3 and membership") {
  RingPtr r = edge_ring(3, kP);
  auto J = binomial_edge_ideal<F>(Graph::path(3), r);
  // x1 > x2 > x3 > y's: leading terms x1*y2, x2*y3 are coprime, so the basis is quadratic.
  TermOrder natural = TermOrder::permuted(OrderKind::Lex, {0, 2, 4, 1, 3, 5});
  CHECK(J.groebner_basis(natural).size() == 2);
  // x1 > x3 > x2 > y's: leading terms x1*y2, x3*y2 share y2 and the S-pair leaves x2*Δ13.
  TermOrder xs_first = TermOrder::permuted(OrderKind::Lex, {0, 4, 2, 1, 3, 5});
  auto gb = J.groebner_basis(xs_first);
  CHECK(gb.size() == 3);
  CHECK(is_groebner_basis(gb, xs_first));
  int cubic = 0;
  for (const auto& g : gb)
    if (g.multidegree() == std::vector<int>{1, 1, 1}) ++cubic;
  CHECK(cubic == 1);
  auto d13 = parse_polynomial<F>("x1*y3 - x3*y1", r);
  CHECK_FALSE(contains(J, d13));
  CHECK(contains(J, parse_polynomial<F>("y2", r) * d13));
  for (const auto& g : J.generators()) CHECK(normal_form(g, J, TermOrder::grevlex(6)).is_zero());
  CHECK(ideal_equal(J, sum(J, Ideal<F>(r, {parse_polynomial<F>("y2", r) * d13}))));
}

TEST_CASE("monomial ideals are their own initial ideals") {
  RingPtr r = make_ring({2, 2}, kP);
  MonomialIdeal m = monomials(r, {"x1_1^2*x2_2", "x1_2*x2_1"});
  CHECK(initial_ideal(from_monomials<F>(m), TermOrder::grevlex(4)) == m);
  CHECK(initial_ideal(from_monomials<F>(m), TermOrder::lex(4)) == m);
}

TEST_CASE("non-homogeneous generators are rejected") {
  RingPtr r = make_ring({1, 1}, kP);
  CHECK_THROWS_AS(ideal_of<F>(r, {"x1_1 + x2_1"}), NonHomogeneous);
  CHECK_THROWS_AS(ideal_of<F>(r, {"x1_1^2 + x1_1"}), NonHomogeneous);
}

TEST_CASE("elimination") {
  RingPtr r = make_ring({3}, kP, {"x11", "x21", "x22"});
  auto I = ideal_of<F>(r, {"x11 - x21", "x11*x22"});
  CHECK(ideal_equal(eliminate(I, {}), I));
  Ideal<F> e = eliminate(I, {0});
  CHECK(ideal_equal(e, ideal_of<F>(r, {"x21*x22"})));

  LinearSpaceSpec spec{{2, 1, 3}, {{1, 1, 0, 0, 0, 1}, {0, 1, -1, 0, 1, 0}, {0, 0, 1, 1, 0, 0}}, {}, kP};
  auto v = LinearSpace<F>::from_spec(spec);
  Ideal<F> hom = jhom_saturation(v);
  Ideal<F> kept = eliminate(hom, v.layout().y_var);
  std::vector<Polynomial<F>> back;
  for (const auto& g : kept.generators()) back.push_back(dehomogenize(g, v.layout()));
  CHECK(ideal_equal(Ideal<F>(v.t_ring(), back), ideal_of<F>(v.t_ring(), {"(x1 + x2)*(x4 + x5) - x2*x6"})));
}

TEST_CASE("colon and saturation examples") {
  RingPtr r = make_ring({1, 1}, kP, {"x11", "y1"});
  auto I = ideal_of<F>(r, {"y1*x11"});
  CHECK(ideal_equal(colon(I, Polynomial<F>::constant(r, 1)), I));
  int rounds = 0;
  CHECK(ideal_equal(saturate(I, parse_polynomial<F>("y1", r), &rounds), ideal_of<F>(r, {"x11"})));
  CHECK(rounds >= 1);

  LinearSpaceSpec spec{{2, 1, 3}, {{1, 1, 0, 0, 0, 1}, {0, 1, -1, 0, 1, 0}, {0, 0, 1, 1, 0, 0}}, {}, kP};
  auto v = LinearSpace<F>::from_spec(spec);
  Ideal<F> top = top_minor_ideal(v);
  Ideal<F> listed = ideal_of<F>(v.s_ring(), {"x4*y2 + x3*y3", "x6*y1 + x1*y3 + x2*y3", "x4*y1 + x5*y1 + x2*y3",
                                             "x1*x4 + x2*x4 + x1*x5 + x2*x5 - x2*x6"});
  CHECK(ideal_equal(saturate(top, product_of_y(v)), listed));
  CHECK(ideal_equal(colon(top, product_of_y(v)), listed));
}

TEST_CASE("intersection examples") {
  RingPtr r = make_ring({1, 1}, kP);
  auto a = ideal_of<F>(r, {"x1_1"}), b = ideal_of<F>(r, {"x2_1"});
  CHECK(ideal_equal(intersect(a, b), ideal_of<F>(r, {"x1_1*x2_1"})));
}

TEST_CASE("initial ideals agree with the linear algebra oracle") {
  SplitMix64 rng(101);
  for (int k = 0; k < 20; ++k) {
    Ideal<F> I = random_ideal(rng);
    if (I.is_zero_ideal()) continue;
    const std::size_t n = I.ring()->num_vars();
    std::vector<TermOrder> orders{TermOrder::grevlex(n), TermOrder::lex(n),
                                  oracle::random_order(n, rng, OrderKind::GradedReverseLex)};
    for (const auto& order : orders) {
      const auto& gb = I.groebner_basis(order);
      CHECK(is_groebner_basis(gb, order));
      CHECK(as_strings(buchberger(I.ring(), gb, order)) == as_strings(gb));
      MonomialIdeal in = initial_ideal(I, order);
      for (const auto& d : oracle::degrees_up_to({3, 3}))
        CHECK(oracle::monomial_ideal_in_degree(in, d) == oracle::initial_in_degree(I.generators(), order, d));
    }
  }
}

TEST_CASE("initial ideals of one ideal share the K-polynomial") {
  SplitMix64 rng(202);
  for (int k = 0; k < 20; ++k) {
    Ideal<F> I = random_ideal(rng);
    const std::size_t n = I.ring()->num_vars();
    LaurentPoly base = k_polynomial(initial_ideal(I, TermOrder::grevlex(n)));
    CHECK(k_polynomial(initial_ideal(I, TermOrder::lex(n))) == base);
    CHECK(k_polynomial(initial_ideal(I, oracle::random_order(n, rng, OrderKind::Lex))) == base);
  }
}

TEST_CASE("colon, saturation and intersection properties") {
  SplitMix64 rng(303);
  for (int k = 0; k < 15; ++k) {
    Ideal<F> I = random_ideal(rng);
    const RingPtr& r = I.ring();
    std::vector<int> d{static_cast<int>(rng.below(2)), 1};
    Polynomial<F> f = oracle::random_homogeneous<F>(r, d, rng, 2);
    if (f.is_zero()) continue;
    Ideal<F> c = colon(I, f);
    Ideal<F> s = saturate(I, f);
    CHECK(is_subset(I, c));
    CHECK(is_subset(c, s));
    for (const auto& g : c.generators()) CHECK(contains(I, f * g));
    CHECK(ideal_equal(colon(s, f), s));

    Ideal<F> J = random_ideal(rng);
    if (!same_ring(J.ring(), r)) continue;
    Ideal<F> meet = intersect(I, J);
    CHECK(is_subset(meet, I));
    CHECK(is_subset(meet, J));
    std::vector<Polynomial<F>> products;
    for (const auto& a : I.generators())
      for (const auto& b : J.generators()) products.push_back(a * b);
    CHECK(is_subset(Ideal<F>(r, products), meet));
    // dim (I ∩ J)_d = dim I_d + dim J_d - dim (I + J)_d, by linear algebra.
    Ideal<F> both = sum(I, J);
    for (const auto& deg : oracle::degrees_up_to({2, 2})) {
      const std::size_t lhs = oracle::initial_in_degree(meet.generators().empty() ? I.generators() : meet.generators(),
                                                        TermOrder::grevlex(r->num_vars()), deg)
                                  .size();
      const std::size_t a = oracle::initial_in_degree(I.generators(), TermOrder::grevlex(r->num_vars()), deg).size();
      const std::size_t b = oracle::initial_in_degree(J.generators(), TermOrder::grevlex(r->num_vars()), deg).size();
      const std::size_t ab = oracle::initial_in_degree(both.generators(), TermOrder::grevlex(r->num_vars()), deg).size();
      if (!meet.generators().empty()) CHECK(lhs + ab == a + b);
    }
  }
}

TEST_CASE("a single colon already saturates the top minor ideal") {
  SplitMix64 rng(404);
  for (int k = 0; k < 10; ++k) {
    std::vector<int> blocks{1 + static_cast<int>(rng.below(2)), 1 + static_cast<int>(rng.below(2)),
                            1 + static_cast<int>(rng.below(2))};
    auto v = random_linear_space<F>(blocks, 1 + rng.below(3), rng, kP);
    Ideal<F> top = top_minor_ideal(v);
    Ideal<F> once = colon(top, product_of_y(v));
    Ideal<F> sat = saturate(top, product_of_y(v));
    CHECK(ideal_equal(once, sat));
  }
}

TEST_CASE("the basis cache is shared and safe across threads") {
  SplitMix64 rng(505);
  Ideal<F> I = random_ideal(rng);
  const std::size_t n = I.ring()->num_vars();
  std::vector<TermOrder> orders{TermOrder::grevlex(n), TermOrder::lex(n),
                                oracle::random_order(n, rng, OrderKind::Lex)};
  Ideal<F> copy = I;
  auto results = parallel_map<std::set<std::string>>(orders.size() * 4, [&](std::size_t k) {
    return as_strings(copy.groebner_basis(orders[k % orders.size()]));
  });
  for (std::size_t k = 0; k < results.size(); ++k)
    CHECK(results[k] == as_strings(buchberger(I.ring(), I.generators(), orders[k % orders.size()])));
  CHECK(I.cached_orders() == orders.size());
}
