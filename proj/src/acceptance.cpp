#include "csgin/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "csgin/binomial_edge.hpp"
#include "csgin/generic_initial.hpp"
#include "csgin/hilbert.hpp"
#include "csgin/homology.hpp"
#include "csgin/linear_closure.hpp"
#include "csgin/multiview.hpp"
#include "csgin/parse.hpp"

namespace csgin::acceptance {
namespace {

using F = Modular;
using Q = Rational;
constexpr std::uint32_t kP = kDefaultPrime;

/// Thrown inside a criterion to report its first counterexample.
struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

template <FieldElement K>
std::string describe(const Ideal<K>& ideal) {
  std::string out = "(";
  for (std::size_t k = 0; k < ideal.generators().size(); ++k) {
    if (k) out += ", ";
    out += to_string(ideal.generators()[k]);
  }
  return out + ")";
}

template <FieldElement K>
Ideal<K> parse_ideal(const RingPtr& ring, const std::vector<std::string>& gens) {
  std::vector<Polynomial<K>> polys;
  for (const auto& g : gens) polys.push_back(parse_polynomial<K>(g, ring));
  return Ideal<K>(ring, std::move(polys));
}

MonomialIdeal parse_monomials(const RingPtr& ring, const std::vector<std::string>& gens) {
  std::vector<Monomial> monos;
  for (const auto& g : gens)
    monos.push_back(ring->characteristic() ? parse_polynomial<F>(g, ring).leading_term().mono
                                           : parse_polynomial<Q>(g, ring).leading_term().mono);
  return MonomialIdeal(ring, std::move(monos));
}

/// Squarefree monomial ideals met along the way, keyed for deterministic order.
class Collector {
 public:
  void add(const std::string& origin, const MonomialIdeal& ideal) {
    if (!is_squarefree(ideal) || ideal.is_zero() || ideal.is_unit()) return;
    if (ideal.ring()->num_vars() > 10) return;
    std::string key;
    for (int b : ideal.ring()->block_sizes()) key += std::to_string(b) + ",";
    key += "|" + ideal.to_string();
    items_.emplace(key, std::make_pair(origin, ideal));
  }
  const std::map<std::string, std::pair<std::string, MonomialIdeal>>& items() const { return items_; }

 private:
  std::map<std::string, std::pair<std::string, MonomialIdeal>> items_;
};

struct Context {
  Options options;
  GinOptions gin;
  Collector collected;
  std::vector<MonomialIdeal> property_pool;  // small ideals reused by criterion 9
};

MonomialIdeal grevlex_initial(const Ideal<F>& ideal) {
  return initial_ideal(ideal, TermOrder::grevlex(ideal.ring()->num_vars()));
}

// 1. Bigraded six-variable ideal with a non-CS gin.
std::string bigraded_replay(Context& ctx) {
  const std::vector<std::string> gens{"x1*y1", "x2*y2", "x3*y2", "x2*y3", "x3*y3"};
  const std::vector<std::string> expected{"x1*y1", "x2*y1", "x1*y2", "x2*y2", "x3*y1", "x1*x2*y3", "x1^2*y3"};
  const LaurentPoly mdeg = parse_laurent("z1^3 + z1^2*z2 + z1*z2^2 + z2^3", 2);
  auto check = [&]<FieldElement K>(std::uint32_t ch, const char* field) {
    RingPtr ring = make_ring({3, 3}, ch, {"x1", "x2", "x3", "y1", "y2", "y3"});
    Ideal<K> ideal = parse_ideal<K>(ring, gens);
    GinResult g = gin(ideal, ctx.gin);
    MonomialIdeal want = parse_monomials(ring, expected);
    require(g.gin == want, std::string(field) + ": gin " + g.gin.to_string() + " differs from " + want.to_string());
    MonomialIdeal in = initial_ideal(ideal, TermOrder::grevlex(6));
    require(multidegree(in) == mdeg, std::string(field) + ": MDeg " + multidegree(in).to_string());
    require(g_multidegree(in) == mdeg, std::string(field) + ": GDeg " + g_multidegree(in).to_string());
    require(!is_squarefree(g.gin), std::string(field) + ": reported CS");
    if (ch) ctx.collected.add("bigraded six-variable ideal", in);
  };
  check.operator()<Q>(0, "Q");
  check.operator()<F>(kP, "GF(32003)");
  return "gin, MDeg, GDeg match over Q and GF(32003); not CS";
}

template <FieldElement K>
LinearSpace<K> esempio(std::uint32_t ch) {
  LinearSpaceSpec spec{{2, 1, 3}, {{1, 1, 0, 0, 0, 1}, {0, 1, -1, 0, 1, 0}, {0, 0, 1, 1, 0, 0}}, {}, ch};
  return LinearSpace<K>::from_spec(spec);
}

// 2. Closure of a plane in blocks 2,1,3.
std::string closure_213_replay(Context& ctx) {
  auto check = [&]<FieldElement K>(std::uint32_t ch, const char* field) {
    LinearSpace<K> v = esempio<K>(ch);
    Ideal<K> listed = parse_ideal<K>(v.s_ring(), {"x4*y2 + x3*y3", "x6*y1 + x1*y3 + x2*y3", "x4*y1 + x5*y1 + x2*y3",
                                                  "x1*x4 + x2*x4 + x1*x5 + x2*x5 - x2*x6"});
    Ideal<K> sat = jhom_saturation(v);
    Ideal<K> det = jhom_determinantal(v);
    require(ideal_equal(sat, listed), std::string(field) + ": saturation " + describe(reduced(sat)));
    require(ideal_equal(det, listed), std::string(field) + ": determinantal sum " + describe(reduced(det)));
    Ideal<K> star_expected = parse_ideal<K>(v.t_ring(), {"(x1 + x2)*(x4 + x5) - x2*x6"});
    Ideal<K> star = jstar(v);
    require(ideal_equal(star, star_expected), std::string(field) + ": J(V)* " + describe(star));
    require(ideal_equal(contract_to_t(v, sat), star_expected), std::string(field) + ": contraction differs");
    if constexpr (std::is_same_v<K, F>) ctx.collected.add("blocks 2,1,3 closure in(J^hom)", grevlex_initial(sat));
  };
  check.operator()<Q>(0, "Q");
  check.operator()<F>(kP, "GF(32003)");
  return "saturation = determinantal sum = four generators; J(V)* principal";
}

// 3. Closure gin in blocks 3,2,4.
std::string closure_324_replay(Context& ctx) {
  LinearSpace<F> v = esempio<F>(kP);
  std::vector<std::vector<std::size_t>> want_bases;
  for (const char* b : {"123", "124", "134", "135", "145", "234", "235", "236", "245", "246", "346", "356", "456"}) {
    std::vector<std::size_t> cols;
    for (const char* c = b; *c; ++c) cols.push_back(static_cast<std::size_t>(*c - '1'));
    want_bases.push_back(cols);
  }
  auto bases = matroid_bases(v);
  require(bases == want_bases, std::to_string(bases.size()) + " bases instead of the 13 listed");
  const std::vector<std::vector<int>> want_dv{{0, 0, 3}, {0, 1, 2}, {1, 0, 2}, {1, 1, 1}, {2, 0, 1}, {2, 1, 0}};
  require(degrees_of_bases(v) == want_dv, "D_V differs");
  LaurentPoly mdeg = parse_laurent("z1^2*z2 + z1^2*z3 + z1*z2*z3 + z1*z3^2 + z2*z3^2 + z3^3", 3);
  require(multidegree_matroid(v) == mdeg, "matroid MDeg " + multidegree_matroid(v).to_string());
  MonomialIdeal want_gin =
      parse_monomials(v.s_ring(), {"x1*x4", "x2*x4", "x3*x4", "x1*x5", "x2*x3*x5", "x1*x3*x6"});
  MonomialIdeal from_dv = gin_from_DV(v);
  require(from_dv == want_gin, "gin from D_V " + from_dv.to_string());
  Ideal<F> hom = jhom_saturation(v);
  MonomialIdeal engine = gin(hom, ctx.gin).gin;
  require(engine == want_gin, "engine gin " + engine.to_string());
  require(multidegree(grevlex_initial(hom)) == mdeg, "Hilbert MDeg " + multidegree(grevlex_initial(hom)).to_string());
  ctx.collected.add("blocks 3,2,4 closure gin", engine);
  return "13 bases, 6 degrees, MDeg, gin from D_V = engine gin";
}

TermOrder random_order(std::size_t n, SplitMix64& rng) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  return TermOrder::permuted(rng.below(2) ? OrderKind::Lex : OrderKind::GradedReverseLex, std::move(perm));
}

// 4. Binomial edge ideals.
std::string edge_suite(Context& ctx) {
  std::vector<Graph> graphs = connected_graphs_up_to(4);
  for (const Graph& g : {Graph::path(5), Graph::path(6), Graph::cycle(5), Graph::complete_bipartite(2, 3)})
    graphs.push_back(g);
  SplitMix64 rng(ctx.options.corpus_seed, 4);
  std::size_t orders = 0;
  for (const Graph& g : graphs) {
    const int n = g.num_vertices();
    RingPtr ring = edge_ring(n, kP);
    Ideal<F> j = binomial_edge_ideal<F>(g, ring);
    MonomialIdeal pg = path_gin(g, ring);
    const std::string name = g.to_string();
    require(is_squarefree(pg), name + ": path gin not squarefree");
    if (!g.edges().empty()) {
      MonomialIdeal engine = gin(j, ctx.gin).gin;
      require(engine == pg, name + ": engine gin " + engine.to_string() + " vs path gin " + pg.to_string());
    }
    MonomialIdeal meet = intersect_all(ring, gin_minimal_primes(g, ring));
    require(meet == pg, name + ": intersection of U_{T,E} " + meet.to_string());
    auto inv = homological_invariants(pg);
    if (inv.regularity) require(*inv.regularity <= n, name + ": reg " + std::to_string(*inv.regularity));
    ctx.collected.add("path gin " + name, pg);
    for (int k = 0; k < 5; ++k) {
      TermOrder order = random_order(ring->num_vars(), rng);
      MonomialIdeal in = initial_ideal(j, order);
      require(is_squarefree(in), name + ": non-squarefree initial ideal " + in.to_string() + " for order " + order.key());
      ctx.collected.add("in(J_G) " + name, in);
      ++orders;
    }
  }
  return std::to_string(graphs.size()) + " graphs, " + std::to_string(orders) + " random orders";
}

/// Random space with u blocks in [u_lo, u_hi], n = sum of block sizes in [max(u, n_lo), n_hi]
/// and dimension v in [v_lo, min(v_hi, n)].
LinearSpace<F> draw_space(SplitMix64& rng, int u_lo, int u_hi, int n_lo, int n_hi, int v_lo, int v_hi) {
  const int u = static_cast<int>(rng.between(u_lo, u_hi));
  const int n = static_cast<int>(rng.between(std::max(u, n_lo), n_hi));
  std::vector<int> blocks(static_cast<std::size_t>(u), 1);
  for (int extra = n - u; extra > 0; --extra) ++blocks[rng.below(static_cast<std::uint64_t>(u))];
  const int v = static_cast<int>(rng.between(std::min(v_lo, n), std::min(v_hi, n)));
  return random_linear_space<F>(blocks, static_cast<std::size_t>(v), rng, kP);
}

std::string space_name(const LinearSpace<F>& v) {
  std::ostringstream out;
  out << "blocks [";
  for (std::size_t b = 0; b < v.num_blocks(); ++b) out << (b ? "," : "") << v.t_ring()->block_size(b);
  out << "] basis";
  for (std::size_t r = 0; r < v.dim(); ++r) {
    out << " [";
    for (std::size_t c = 0; c < v.basis().cols(); ++c) out << (c ? "," : "") << v.basis()(r, c).to_string();
    out << "]";
  }
  return out.str();
}

// 5. Random spaces of linear forms.
std::string closure_suite(Context& ctx) {
  SplitMix64 rng(ctx.options.corpus_seed, 5);
  for (int k = 0; k < 20; ++k) {
    LinearSpace<F> v = draw_space(rng, 2, 3, 4, 6, 2, 3);
    const std::string name = space_name(v);
    Ideal<F> sat = jhom_saturation(v);
    Ideal<F> det = jhom_determinantal(v);
    require(ideal_equal(sat, det), name + ": saturation " + describe(reduced(sat)) + " vs sum " + describe(reduced(det)));
    MonomialIdeal in = grevlex_initial(sat);
    require(multidegree(in) == multidegree_matroid(v),
            name + ": Hilbert MDeg " + multidegree(in).to_string() + " vs matroid " + multidegree_matroid(v).to_string());
    GinResult g = gin(sat, ctx.gin);
    require(is_squarefree(g.gin), name + ": gin " + g.gin.to_string() + " not squarefree");
    require(reisner_cm(g.gin), name + ": gin " + g.gin.to_string() + " not Cohen-Macaulay");
    require(g.gin == gin_from_DV(v), name + ": gin " + g.gin.to_string() + " vs D_V " + gin_from_DV(v).to_string());
    ctx.collected.add("in(J^hom) " + name, in);
    ctx.collected.add("gin(J^hom) " + name, g.gin);
    if (v.s_ring()->num_vars() <= 7) ctx.property_pool.push_back(in);
  }
  return "20 random spaces";
}

// 6. Fine grading, CS*.
std::string star_suite(Context& ctx) {
  SplitMix64 rng(ctx.options.corpus_seed, 6);
  for (int k = 0; k < 10; ++k) {
    const int n = static_cast<int>(rng.between(3, 5));
    const int v = static_cast<int>(rng.between(2, 3));
    LinearSpace<F> space = random_linear_space<F>(std::vector<int>(static_cast<std::size_t>(n), 1),
                                                  static_cast<std::size_t>(v), rng, kP);
    Ideal<F> hom = jhom_saturation(space);
    GinResult g = gin(hom, ctx.gin);
    require(uses_only_first_variables(g.gin), space_name(space) + ": gin " + g.gin.to_string() + " not CS*");
    ctx.collected.add("in(J^hom) fine " + space_name(space), grevlex_initial(hom));
  }
  return "10 random spaces with all blocks of size 1 in T";
}

std::string system_name(const CameraSystem<F>& sys) {
  std::ostringstream out;
  out << "n=" << sys.n() << " cameras";
  for (const auto& a : sys.cameras()) {
    out << " [";
    for (std::size_t r = 0; r < a.rows(); ++r) {
      out << (r ? ";" : "");
      for (std::size_t c = 0; c < a.cols(); ++c) out << (c ? "," : "") << a(r, c).to_string();
    }
    out << "]";
  }
  return out.str();
}

// 7. Multiview ideals.
std::string multiview_suite(Context& ctx) {
  SplitMix64 rng(ctx.options.corpus_seed, 7);
  auto cs_check = [&](const Ideal<F>& j, const std::string& name) {
    GinResult g = gin(j, ctx.gin);
    require(is_squarefree(g.gin), name + ": gin " + g.gin.to_string() + " not squarefree");
    require(reisner_cm(g.gin), name + ": gin not Cohen-Macaulay");
    ctx.collected.add("gin(J_A) " + name, g.gin);
    return g.gin;
  };
  for (int k = 0; k < 10; ++k) {
    const std::size_t m = 2 + rng.below(2);
    const std::size_t n = 2 + rng.below(4);
    std::vector<int> d;
    for (std::size_t i = 0; i < m; ++i) d.push_back(1 + static_cast<int>(rng.below(std::min<std::uint64_t>(3, n))));
    CameraSystem<F> sys = random_camera_system<F>(n, d, rng, kP);
    const std::string name = system_name(sys);
    Ideal<F> star = multiview_star_route(sys);
    Ideal<F> segre = multiview_segre_route(sys);
    require(ideal_equal(star, segre), name + ": star route " + describe(reduced(star)) + " vs Segre route " +
                                          describe(reduced(segre)));
    cs_check(star, name);
    ctx.collected.add("in(J_A) " + name, grevlex_initial(star));
  }
  for (auto [m, d] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {2, 3}, {3, 3}}) {
    const std::string tag = "(m,d)=(" + std::to_string(m) + "," + std::to_string(d) + ")";
    CameraSystem<F> normal = normalized_example_system<F>(m, d, kP);
    Ideal<F> minors = generic_maximal_minors<F>(normal.ring(), m, d);
    require(ideal_equal(multiview_star_route(normal), minors), tag + ": star route differs from maximal minors");
    require(ideal_equal(multiview_segre_route(normal), minors), tag + ": Segre route differs from maximal minors");
    MonomialIdeal gin_minors = cs_check(minors, tag);
    CameraSystem<F> generic = random_camera_system<F>((m - 1) * d, std::vector<int>(m, static_cast<int>(d)), rng, kP);
    Ideal<F> j = multiview_star_route(generic);
    MonomialIdeal gin_j = cs_check(j, tag + " generic");
    require(gin_j == gin_minors, tag + ": gin of generic J_A " + gin_j.to_string() + " vs " + gin_minors.to_string());
  }
  return "10 random systems, route equality and three example identities, all CS";
}

// 8. Local cohomology and extremal Betti numbers.
std::string conjecture_suite(Context& ctx) {
  std::size_t compared = 0, skipped = 0;
  for (const auto& [key, entry] : ctx.collected.items()) {
    const auto& [origin, ideal] = entry;
    MonomialIdeal g = gin(from_monomials<F>(ideal), ctx.gin).gin;
    if (!is_squarefree(g)) {
      ++skipped;
      continue;
    }
    ConjectureReport r = compare_local_cohomology(ideal, g);
    require(r.local_cohomology_equal, origin + ": local cohomology differs for " + ideal.to_string());
    require(r.extremal_equal, origin + ": extremal Betti numbers differ for " + ideal.to_string());
    ++compared;
  }
  require(compared > 0, "no ideals collected");
  return std::to_string(compared) + " CS ideals compared, " + std::to_string(skipped) + " non-CS skipped";
}

/// Random squarefree monomial ideal on a ring with the given blocks.
MonomialIdeal random_squarefree(const RingPtr& ring, SplitMix64& rng) {
  const std::size_t n = ring->num_vars();
  std::vector<Monomial> gens;
  const std::size_t count = 1 + rng.below(5);
  for (std::size_t k = 0; k < count; ++k) {
    Monomial m;
    for (std::size_t v = 0; v < n; ++v)
      if (rng.below(3) == 0) m.set(v, 1);
    if (m.is_one()) m.set(rng.below(n), 1);
    gens.push_back(m);
  }
  return MonomialIdeal(ring, std::move(gens));
}

LaurentPoly k_from_betti(const MonomialIdeal& ideal, const BettiTable& table) {
  const std::size_t blocks = ideal.ring()->num_blocks();
  LaurentPoly k = LaurentPoly::one(blocks);
  for (const auto& [key, value] : table.multigraded()) {
    Monomial m;
    for (std::size_t v = 0; v < ideal.ring()->num_vars(); ++v)
      if ((key.second >> v) & 1u) m.set(v, 1);
    const long long sign = key.first % 2 == 0 ? -1 : 1;
    k.add_term(ideal.ring()->multidegree(m), sign * static_cast<long long>(value));
  }
  return k;
}

// 9. Cross-formula properties.
std::string property_suite(Context& ctx) {
  SplitMix64 rng(ctx.options.corpus_seed, 9);
  std::vector<MonomialIdeal> pool = ctx.property_pool;
  for (int k = 0; k < 20; ++k) {
    std::vector<int> blocks;
    for (std::size_t b = 0, nb = 1 + rng.below(3); b < nb; ++b) blocks.push_back(1 + static_cast<int>(rng.below(3)));
    pool.push_back(random_squarefree(make_ring(blocks, kP), rng));
  }
  for (const MonomialIdeal& ideal : pool) {
    const std::string name = ideal.to_string();
    BettiTable direct = betti_direct(ideal);
    require(betti_squarefree(ideal) == direct, name + ": dual-form Betti numbers differ from direct Hochster");
    require(k_from_betti(ideal, direct) == k_polynomial(ideal),
            name + ": K-polynomial " + k_polynomial(ideal).to_string() + " vs Betti sum " +
                k_from_betti(ideal, direct).to_string());
    require(alexander_dual(alexander_dual(ideal)) == ideal, name + ": Alexander dual is not an involution");
  }
  // J is a coordinate change of in(J(V)^hom), a CS ideal that is not prime; each factor of F
  // is a form inside one of its minimal primes so that J:(F) is larger than J.
  std::size_t nontrivial = 0;
  for (int k = 0; k < 10; ++k) {
    LinearSpace<F> v = draw_space(rng, 2, 3, 3, 5, 1, 3);
    const RingPtr& s = v.s_ring();
    MonomialIdeal in = grevlex_initial(jhom_saturation(v));
    std::vector<MonomialIdeal> primes = minimal_primes(in);
    Polynomial<F> f = Polynomial<F>::constant(s, 1);
    for (std::size_t t = 0, factors = 1 + rng.below(2); t < factors; ++t) {
      const MonomialIdeal& p = primes[rng.below(primes.size())];
      const std::size_t pick = p.generators()[rng.below(p.size())].support();
      const std::size_t b = s->block_of(static_cast<std::size_t>(__builtin_ctz(static_cast<std::uint32_t>(pick))));
      std::vector<Term<F>> terms;
      for (const Monomial& x : p.generators()) {
        const std::size_t var = static_cast<std::size_t>(__builtin_ctz(x.support()));
        if (s->block_of(var) == b) terms.push_back({x, random_scalar<F>(rng, kP)});
      }
      f = f * Polynomial<F>::from_terms(s, std::move(terms));
    }
    if (f.is_zero()) continue;
    BlockChange<F> change = random_block_change<F>(*s, rng);
    Ideal<F> j = change_coordinates(from_monomials<F>(in), change);
    f = f.substitute(s, block_change_images(s, change));
    Ideal<F> c = colon(j, f);
    if (!is_subset(c, j)) ++nontrivial;
    require(ideal_equal(c, colon_low_degree_part(j, c)),
            space_name(v) + ": J:(F) differs from J + J_1 for F = " + to_string(f));
  }
  return std::to_string(pool.size()) + " monomial ideals, 10 colon instances (" + std::to_string(nontrivial) +
         " with J:(F) larger than J)";
}

}  // namespace

std::vector<Outcome> run_all(const Options& options, const std::function<void(const Outcome&)>& on_outcome) {
  Context ctx;
  ctx.options = options;
  ctx.gin.seeds = options.seeds;
  struct Item {
    const char* title;
    double budget;
    std::string (*run)(Context&);
  };
  const Item items[] = {
      {"Bigraded six-variable replay", 1, bigraded_replay},
      {"Blocks 2,1,3 closure replay", 5, closure_213_replay},
      {"Blocks 3,2,4 closure replay", 30, closure_324_replay},
      {"Binomial edge ideal suite", 300, edge_suite},
      {"Random linear space suite", 600, closure_suite},
      {"CS* suite with blocks of size 2", 120, star_suite},
      {"Multiview suite", 600, multiview_suite},
      {"Local cohomology and extremal Betti suite", 600, conjecture_suite},
      {"Cross-formula property suite", 300, property_suite},
  };
  std::vector<Outcome> out;
  int id = 0;
  for (const Item& item : items) {
    Outcome o;
    o.id = ++id;
    o.title = item.title;
    o.budget_seconds = item.budget;
    const auto start = std::chrono::steady_clock::now();
    try {
      o.detail = item.run(ctx);
      o.pass = true;
    } catch (const Failure& f) {
      o.detail = f.what;
    } catch (const std::exception& e) {
      o.detail = std::string("error: ") + e.what();
    }
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && options.enforce_budgets && o.seconds > o.budget_seconds) {
      o.pass = false;
      o.detail = "over the time budget: " + o.detail;
    }
    if (on_outcome) on_outcome(o);
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace csgin::acceptance
