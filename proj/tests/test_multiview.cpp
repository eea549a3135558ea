#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "csgin/homology.hpp"
#include "csgin/multiview.hpp"
#include "csgin/parse.hpp"
#include "oracles.hpp"

using namespace csgin;
using F = Modular;
using Q = Rational;
constexpr std::uint32_t kP = kDefaultPrime;

namespace {

template <FieldElement K>
CameraSystem<K> system_of(std::size_t n, const std::vector<std::vector<std::vector<long long>>>& cams,
                          std::uint32_t ch) {
  return CameraSystem<K>::from_spec({static_cast<int>(n), cams, ch});
}

/// Image of a random point p: block i is A_i p times a random nonzero scale.
template <FieldElement K>
std::vector<Polynomial<K>> random_image(const CameraSystem<K>& sys, SplitMix64& rng) {
  const std::uint32_t ch = sys.characteristic();
  std::vector<K> p;
  for (std::size_t k = 0; k < sys.n(); ++k) p.push_back(random_scalar<K>(rng, ch));
  std::vector<Polynomial<K>> point(sys.ring()->num_vars(), Polynomial<K>::constant(sys.ring(), 0));
  for (std::size_t i = 0; i < sys.m(); ++i) {
    K scale = random_scalar<K>(rng, ch);
    if (scale.is_zero()) scale = K::from_int(1, ch);
    const Matrix<K>& a = sys.cameras()[i];
    for (std::size_t j = 0; j < a.rows(); ++j) {
      K value = K::from_int(0, ch);
      for (std::size_t k = 0; k < sys.n(); ++k) value += a(j, k) * p[k];
      point[sys.ring()->var(i, j)] = Polynomial<K>::from_terms(sys.ring(), {{Monomial(), value * scale}});
    }
  }
  return point;
}

bool is_zero_ideal(const Ideal<F>& ideal) {
  return ideal.groebner_basis(TermOrder::grevlex(ideal.ring()->num_vars())).empty();
}

}  // namespace

TEST_CASE("two identical views of the projective line give the diagonal") {
  auto sys = system_of<F>(2, {{{1, 0}, {0, 1}}, {{1, 0}, {0, 1}}}, kP);
  const RingPtr& r = sys.ring();
  Ideal<F> diagonal(r, {parse_polynomial<F>("x1_1*x2_2 - x1_2*x2_1", r)});
  CHECK(ideal_equal(multiview_star_route(sys), diagonal));
  CHECK(ideal_equal(multiview_segre_route(sys), diagonal));
  CHECK(is_CS_multiview(sys));
}

TEST_CASE("degenerate systems give the zero ideal") {
  auto points = system_of<F>(1, {{{1}}, {{2}}}, kP);
  CHECK(is_zero_ideal(multiview_star_route(points)));
  CHECK(is_zero_ideal(multiview_segre_route(points)));
  auto single = system_of<F>(3, {{{1, 0, 0}, {0, 1, 1}}}, kP);
  CHECK(is_zero_ideal(multiview_star_route(single)));
  CHECK(is_zero_ideal(multiview_segre_route(single)));
}

TEST_CASE("routes agree and vanish on the images of random points") {
  SplitMix64 rng(81);
  for (int k = 0; k < 10; ++k) {
    const std::size_t n = 2 + rng.below(3);
    std::vector<int> d;
    for (std::size_t i = 0, m = 2 + rng.below(2); i < m; ++i)
      d.push_back(1 + static_cast<int>(rng.below(std::min<std::uint64_t>(3, n))));
    CameraSystem<F> sys = random_camera_system<F>(n, d, rng, kP);
    Ideal<F> star = multiview_star_route(sys);
    CHECK(ideal_equal(star, multiview_segre_route(sys)));
    for (int p = 0; p < 4; ++p) {
      auto point = random_image(sys, rng);
      for (const auto& g : star.generators()) CHECK(g.substitute(sys.ring(), point).is_zero());
    }
    MonomialIdeal g = gin(star).gin;
    CHECK(is_squarefree(g));
    CHECK(reisner_cm(g));
  }
}

TEST_CASE("routes agree over the rationals") {
  auto sys = system_of<Q>(3, {{{1, 0, 0}, {0, 1, 0}}, {{0, 1, 0}, {0, 0, 1}}, {{1, 1, 1}}}, 0);
  CHECK(ideal_equal(multiview_star_route(sys), multiview_segre_route(sys)));
}

TEST_CASE("normalized systems give maximal minors of a generic matrix") {
  for (auto [m, d] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {2, 3}, {3, 3}}) {
    CameraSystem<F> sys = normalized_example_system<F>(m, d, kP);
    Ideal<F> minors = generic_maximal_minors<F>(sys.ring(), m, d);
    CHECK(ideal_equal(multiview_star_route(sys), minors));
    CHECK(ideal_equal(multiview_segre_route(sys), minors));
  }
  CHECK_THROWS_AS(normalized_example_system<F>(3, 2, kP), std::invalid_argument);
  CHECK_THROWS_AS(normalized_example_system<F>(1, 2, kP), std::invalid_argument);
}

TEST_CASE("kernel space collects the relations among camera rows") {
  auto sys = system_of<F>(2, {{{1, 0}, {0, 1}}, {{1, 1}}}, kP);
  LinearSpace<F> v = kernel_space(sys);
  REQUIRE(v.dim() == 1);
  const std::size_t a = sys.ring()->var(0, 0), b = sys.ring()->var(0, 1), c = sys.ring()->var(1, 0);
  CHECK(v.basis()(0, a) == v.basis()(0, b));
  CHECK(v.basis()(0, a) == -v.basis()(0, c));
  CHECK(extend_to_basis(sys.cameras()[1]).rows() == 2);
  CHECK_FALSE(determinant(extend_to_basis(sys.cameras()[1])).is_zero());
}

TEST_CASE("camera input validation") {
  CameraSpec spec = parse_camera_json(R"({"n": 2, "cameras": [[[1, 0]], [[0, 1]]], "field": "Fp:101"})");
  CHECK(spec.n == 2);
  CHECK(spec.characteristic == 101);
  CHECK(spec.cameras.size() == 2);
  try {
    parse_camera_json(R"({"n": 2, "cameras": [[[1, 0]] })");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() > 10);
  }
  CHECK_THROWS_AS(parse_camera_json(R"({"n": 2})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_camera_json(R"({"n": 0, "cameras": []})"), std::invalid_argument);
  try {
    system_of<F>(2, {{{1, 0}, {2, 0}}}, kP);
    FAIL("expected rank deficiency");
  } catch (const RankDeficient& e) {
    CHECK(e.row() == 1);
  }
  CHECK_THROWS_AS(system_of<F>(2, {{{1, 0, 0}}}, kP), std::invalid_argument);
  CHECK_THROWS_AS(system_of<F>(2, {}, kP), std::invalid_argument);
}
