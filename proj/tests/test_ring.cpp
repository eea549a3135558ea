#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "csgin/linalg.hpp"
#include "csgin/linear_closure.hpp"
#include "csgin/order.hpp"
#include "csgin/parse.hpp"
#include "csgin/poly.hpp"
#include "csgin/random.hpp"
#include "oracles.hpp"

using namespace csgin;
using F = Modular;
using Q = Rational;

template <FieldElement K>
K draw(SplitMix64& rng, std::uint32_t ch) {
  return K::from_fraction(rng.between(-50, 50), rng.between(1, 9), ch);
}

TEST_CASE_TEMPLATE("field axioms on random samples", K, Modular, Rational) {
  const std::uint32_t ch = std::is_same_v<K, Modular> ? kDefaultPrime : 0;
  SplitMix64 rng(11);
  const K zero = K::from_int(0, ch), one = K::from_int(1, ch);
  for (int k = 0; k < 300; ++k) {
    K a = draw<K>(rng, ch), b = draw<K>(rng, ch), c = draw<K>(rng, ch);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a + zero == a);
    CHECK(a * one == a);
    CHECK(a - a == zero);
    if (!a.is_zero()) CHECK(a * a.inverse() == one);
  }
  CHECK_THROWS_AS(zero.inverse(), FieldError);
}

TEST_CASE("modular arithmetic reduces into the symmetric range") {
  const std::uint32_t p = 7;
  CHECK(F::from_int(-1, p) == F::from_int(6, p));
  CHECK(F::from_fraction(1, 2, p) == F::from_int(4, p));
  CHECK(F::from_int(6, p).to_string() == "-1");
  CHECK(Q::from_fraction(6, -4, 0).to_string() == "-3/2");
}

TEST_CASE("linear algebra examples") {
  Matrix<F> id = Matrix<F>::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3, kDefaultPrime);
  CHECK(rank(id) == 3);
  CHECK(determinant(id) == F::from_int(1, kDefaultPrime));
  CHECK(kernel(id).empty());
  Matrix<F> zero(2, 2, kDefaultPrime);
  CHECK(rank(zero) == 0);
  CHECK(determinant(zero).is_zero());
  CHECK(kernel(zero).size() == 2);
  Matrix<Q> mv = Matrix<Q>::from_rows({{1, 1, 0, 0, 0, 1}, {0, 1, -1, 0, 1, 0}, {0, 0, 1, 1, 0, 0}}, 6, 0);
  CHECK(rank(mv) == 3);
  auto ker = kernel(mv);
  CHECK(ker.size() == 3);
  for (const auto& v : ker)
    for (std::size_t r = 0; r < 3; ++r) {
      Q s = Q::from_int(0, 0);
      for (std::size_t c = 0; c < 6; ++c) s += mv(r, c) * v[c];
      CHECK(s.is_zero());
    }
  Matrix<Q> a = Matrix<Q>::from_rows({{2, 1}, {1, 1}}, 2, 0);
  Matrix<Q> inv = inverse(a);
  CHECK(inv(0, 0) == Q::from_int(1, 0));
  CHECK(inv(0, 1) == Q::from_int(-1, 0));
  CHECK(inv(1, 1) == Q::from_int(2, 0));
  CHECK_THROWS_AS(inverse(Matrix<Q>::from_rows({{1, 2}, {2, 4}}, 2, 0)), FieldError);
  CHECK(first_dependent_row(Matrix<Q>::from_rows({{1, 2}, {3, 4}, {2, 4}}, 2, 0)) == std::optional<std::size_t>(2));
}

TEST_CASE("rings, names and parsing") {
  RingPtr r = make_ring({2, 3}, kDefaultPrime);
  CHECK(r->num_vars() == 5);
  CHECK(r->block_of(3) == 1);
  CHECK(r->index_in_block(3) == 1);
  CHECK(r->find_variable("x2_3") == std::optional<std::size_t>(4));
  CHECK_FALSE(r->find_variable("x3_1").has_value());
  auto f = parse_polynomial<F>("3*x1_1^2*x2_1 - x1_2^2*x2_3 + 1/2*x1_1*x1_2*x2_2", r);
  CHECK(f.size() == 3);
  CHECK(f.is_homogeneous());
  CHECK(f.multidegree() == std::vector<int>{2, 1});
  CHECK(parse_polynomial<F>(to_string(f), r) == f);

  RingPtr named = make_ring({3, 3}, 0, {"x1", "x2", "x3", "y1", "y2", "y3"});
  CHECK(named->find_variable("y2") == std::optional<std::size_t>(4));
  CHECK(named->find_variable("x2_2") == std::optional<std::size_t>(4));
  auto g = parse_polynomial<Q>("(x1 + x2)*(y1 - y2)", named);
  CHECK(to_string(g) == "x1*y1 + x2*y1 - x1*y2 - x2*y2");
}

TEST_CASE("parse errors carry the position") {
  RingPtr r = make_ring({2}, kDefaultPrime, {"a", "b"});
  try {
    parse_polynomial<F>("a + c", r);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_polynomial<F>("a +* b", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial<F>("(a + b", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial<F>("a/0", r), std::exception);
  CHECK_THROWS_AS(make_ring({0}, kDefaultPrime), std::invalid_argument);
  CHECK_THROWS_AS(make_ring({2}, 15), std::invalid_argument);
}

TEST_CASE("polynomial arithmetic") {
  RingPtr r = make_ring({3, 3}, kDefaultPrime, {"x1", "x2", "x3", "y1", "y2", "y3"});
  auto p = [&](const char* s) { return parse_polynomial<F>(s, r); };
  auto d12 = p("x1*y2 - x2*y1");
  CHECK((d12 + (-d12)).is_zero());
  CHECK(d12 * Polynomial<F>::constant(r, 1) == d12);
  CHECK(d12 * p("x3") == p("x1*x3*y2 - x2*x3*y1"));
  SplitMix64 rng(5);
  for (int k = 0; k < 50; ++k) {
    std::vector<int> da{static_cast<int>(rng.below(3)), static_cast<int>(rng.below(3))};
    std::vector<int> db{static_cast<int>(rng.below(3)), static_cast<int>(rng.below(3))};
    auto a = oracle::random_homogeneous<F>(r, da, rng, 4);
    auto b = oracle::random_homogeneous<F>(r, db, rng, 4);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK((a * b).multidegree() == std::vector<int>{da[0] + db[0], da[1] + db[1]});
  }
}

TEST_CASE("homogenization examples") {
  RingPtr t = make_ring({1, 1}, 0, {"x1", "x3"});
  HomogenizationLayout layout = make_homogenization_layout(t, "y");
  auto f = parse_polynomial<Q>("x1 + x3", t);
  CHECK(homogenize(f, layout) == parse_polynomial<Q>("x1*y2 + x3*y1", layout.target));

  RingPtr t6 = graded_linear_ring({2, 1, 3}, 0);
  HomogenizationLayout l6 = make_homogenization_layout(t6, "y");
  auto l3 = parse_polynomial<Q>("x3 + x4", t6);
  std::vector<int> c{0, 1, 1};
  CHECK(homogenize(l3, l6, &c) == parse_polynomial<Q>("x4*y2 + x3*y3", l6.target));
  std::vector<int> small{0, 0, 1};
  CHECK_THROWS_AS(homogenize(l3, l6, &small), HomogenizationError);

  auto h = parse_polynomial<Q>("x1*x4 + x2*x5", t6);
  CHECK(homogenize(h, l6) == h.map_to(l6.target, l6.x_to_target));
}

TEST_CASE("dehomogenize inverts homogenize on random polynomials") {
  SplitMix64 rng(17);
  int checked = 0;
  for (int k = 0; k < 500; ++k) {
    std::vector<int> blocks;
    int n = 0;
    while (n < 6) {
      int b = 1 + static_cast<int>(rng.below(3));
      if (n + b > 6) break;
      blocks.push_back(b);
      n += b;
      if (rng.below(3) == 0) break;
    }
    RingPtr t = make_ring(blocks, kDefaultPrime);
    HomogenizationLayout layout = make_homogenization_layout(t, "y");
    std::vector<Term<F>> terms;
    for (int j = 0, count = 1 + static_cast<int>(rng.below(5)); j < count; ++j) {
      Monomial m;
      for (std::size_t v = 0; v < t->num_vars(); ++v) m.set(v, static_cast<unsigned>(rng.below(3)));
      terms.push_back({m, F::from_int(rng.between(1, 100), kDefaultPrime)});
    }
    auto f = Polynomial<F>::from_terms(t, terms);
    if (f.is_zero()) continue;
    auto h = homogenize(f, layout);
    CHECK(h.is_homogeneous());
    CHECK(dehomogenize(h, layout) == f);
    ++checked;
  }
  CHECK(checked > 400);
}

TEST_CASE("term order axioms") {
  SplitMix64 rng(23);
  const std::size_t n = 7;
  std::vector<TermOrder> orders{TermOrder::grevlex(n), TermOrder::lex(n), TermOrder::elimination(n, {2, 5}),
                                oracle::random_order(n, rng, OrderKind::GradedReverseLex),
                                oracle::random_order(n, rng, OrderKind::Lex)};
  auto random_monomial = [&] {
    Monomial m;
    for (std::size_t v = 0; v < n; ++v) m.set(v, static_cast<unsigned>(rng.below(3)));
    return m;
  };
  for (const auto& order : orders) {
    for (int k = 0; k < 300; ++k) {
      Monomial a = random_monomial(), b = random_monomial(), c = random_monomial();
      const int ab = order.compare(a, b);
      CHECK(ab == -order.compare(b, a));
      CHECK((ab == 0) == (a == b));
      if (ab < 0) CHECK(order.compare(a * c, b * c) < 0);
      CHECK(order.compare(Monomial(), a * c) <= 0);
      if (ab < 0 && order.compare(b, c) < 0) CHECK(order.compare(a, c) < 0);
      CHECK(order.from_positions(order.to_positions(a)) == a);
    }
  }
  // Ambient order: x_{1,1} > x_{1,2} > x_{2,1}.
  TermOrder g = TermOrder::grevlex(3);
  CHECK(g.compare(Monomial::variable(0), Monomial::variable(1)) > 0);
  CHECK(g.compare(Monomial::variable(1), Monomial::variable(2)) > 0);
  CHECK(g.key() != TermOrder::lex(3).key());
}
