#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "csgin/acceptance.hpp"
#include "csgin/binomial_edge.hpp"
#include "csgin/generic_initial.hpp"
#include "csgin/hilbert.hpp"
#include "csgin/homology.hpp"
#include "csgin/linear_closure.hpp"
#include "csgin/multiview.hpp"
#include "csgin/parse.hpp"

using namespace csgin;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitVerification = 2;

struct Settings {
  std::string command;
  std::string input;
  std::string field;  // empty: take the field from the input file
  std::string order = "grevlex";
  std::vector<std::uint64_t> seeds{1, 2, 3};
  std::string out;
  bool json = false;
  bool check = false;
  bool timing = false;
};

/// Input problems reported with exit code 1.
struct InputError : std::runtime_error {
  InputError(const std::string& what, Json where) : std::runtime_error(what), where(std::move(where)) {}
  Json where;
};

class Fnv1a {
 public:
  void add(std::string_view bytes) {
    for (unsigned char c : bytes) {
      h_ ^= c;
      h_ *= 1099511628211ull;
    }
    add_separator();
  }
  std::string hex() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h_));
    return buf;
  }

 private:
  void add_separator() {
    h_ ^= 0xff;
    h_ *= 1099511628211ull;
  }
  std::uint64_t h_ = 14695981039346656037ull;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path, Json{{"file", path}});
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError("malformed " + what + " JSON: " + e.what(), Json{{"position", e.byte}});
  }
}

std::string field_name(std::uint32_t ch) { return ch ? "Fp:" + std::to_string(ch) : "Q"; }

std::uint32_t resolve_field(const Settings& s, const std::string& from_file) {
  const std::string& text = s.field.empty() ? from_file : s.field;
  try {
    return parse_field(text.empty() ? "Q" : text);
  } catch (const std::exception& e) {
    throw InputError(e.what(), Json{{"field", text}});
  }
}

TermOrder order_for(const Settings& s, std::size_t n) {
  if (s.order == "lex") return TermOrder::lex(n);
  return TermOrder::grevlex(n);
}

GinOptions gin_options(const Settings& s) {
  GinOptions o;
  o.seeds = s.seeds;
  return o;
}

Json monomials_json(const MonomialIdeal& ideal) {
  Json out = Json::array();
  for (const auto& g : ideal.generators()) out.push_back(monomial_to_string(g, *ideal.ring()));
  return out;
}

template <FieldElement K>
Json polys_json(const std::vector<Polynomial<K>>& polys) {
  Json out = Json::array();
  for (const auto& p : polys) out.push_back(to_string(p));
  return out;
}

template <FieldElement K>
Json ideal_json(const Ideal<K>& ideal) {
  return polys_json(reduced(ideal).generators());
}

Json laurent_json(const LaurentPoly& p) { return p.is_zero() ? Json("0") : Json(p.to_string()); }

Json ring_json(const BlockRing& r) {
  return Json{{"blocks", r.block_sizes()}, {"names", r.names()}};
}

Json betti_extremal_json(const std::vector<ExtremalBetti>& ext) {
  Json out = Json::array();
  for (const auto& e : ext) out.push_back(Json{{"i", e.i}, {"j", e.j}, {"value", e.value}});
  return out;
}

/// Generators of each side missing from the other.
Json monomial_difference(const MonomialIdeal& expected, const MonomialIdeal& actual) {
  auto missing = [](const MonomialIdeal& a, const MonomialIdeal& b) {
    Json out = Json::array();
    for (const auto& g : a.generators())
      if (std::find(b.generators().begin(), b.generators().end(), g) == b.generators().end())
        out.push_back(monomial_to_string(g, *a.ring()));
    return out;
  };
  return Json{{"only_expected", missing(expected, actual)}, {"only_actual", missing(actual, expected)}};
}

template <FieldElement K>
Json ideal_difference(const Ideal<K>& expected, const Ideal<K>& actual) {
  auto outside = [](const Ideal<K>& a, const Ideal<K>& b) {
    Json out = Json::array();
    for (const auto& g : reduced(a).generators())
      if (!contains(b, g)) out.push_back(to_string(g));
    return out;
  };
  return Json{{"expected_not_in_actual", outside(expected, actual)},
              {"actual_not_in_expected", outside(actual, expected)}};
}

/// Collects verdicts; the first failure supplies the counterexample payload.
class Verdicts {
 public:
  void record(const std::string& name, bool ok, const std::function<Json()>& counterexample = {}) {
    verdicts_[name] = ok ? "PASS" : "FAIL";
    if (!ok && counterexample_.is_null())
      counterexample_ = Json{{"invariant", name}, {"details", counterexample ? counterexample() : Json::object()}};
  }
  bool any_failed() const { return !counterexample_.is_null(); }
  void write(Json& report) const {
    if (verdicts_.empty()) return;
    report["verdicts"] = verdicts_;
    if (any_failed()) report["counterexample"] = counterexample_;
  }

 private:
  Json verdicts_ = Json::object();
  Json counterexample_;
};

struct Outcome {
  Json results;
  Verdicts verdicts;
  std::uint32_t characteristic = 0;
  bool has_field = true;
};

// Ideal files: {"blocks": [..], "names": [..]?, "generators": [".."], "field": ".."}.
struct IdealInput {
  RingPtr ring;
  std::vector<std::string> generators;
};

IdealInput read_ideal(const Settings& s, const std::string& text) {
  Json j = parse_json(text, "ideal");
  if (!j.is_object() || !j.contains("blocks") || !j.contains("generators"))
    throw InputError("ideal JSON needs \"blocks\" and \"generators\"", Json::object());
  IdealInput in;
  try {
    auto blocks = j.at("blocks").get<std::vector<int>>();
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    const std::uint32_t ch = resolve_field(s, j.value("field", std::string()));
    in.ring = make_ring(blocks, ch, names);
    in.generators = j.at("generators").get<std::vector<std::string>>();
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(e.what(), Json::object());
  }
  return in;
}

template <FieldElement K>
Ideal<K> build_ideal(const IdealInput& in) {
  std::vector<Polynomial<K>> polys;
  for (std::size_t k = 0; k < in.generators.size(); ++k) {
    try {
      polys.push_back(parse_polynomial<K>(in.generators[k], in.ring));
      if (!polys.back().is_homogeneous())
        throw InputError("generator " + std::to_string(k + 1) + " is not multigraded-homogeneous",
                         Json{{"generator", k + 1}});
    } catch (const ParseError& e) {
      throw InputError(e.what(), Json{{"generator", k + 1}, {"position", e.position()}});
    }
  }
  try {
    return Ideal<K>(in.ring, std::move(polys));
  } catch (const std::exception& e) {
    throw InputError(e.what(), Json::object());
  }
}

template <FieldElement K>
void run_gin(const Settings& s, const IdealInput& in, Outcome& o) {
  Ideal<K> ideal = build_ideal<K>(in);
  const TermOrder order = order_for(s, in.ring->num_vars());
  MonomialIdeal initial = initial_ideal(ideal, order);
  GinResult g = gin(ideal, order, gin_options(s));
  o.results = Json{{"ring", ring_json(*in.ring)},
                   {"generators", polys_json(ideal.generators())},
                   {"order", s.order},
                   {"initial_ideal", monomials_json(initial)},
                   {"gin", monomials_json(g.gin)},
                   {"borel_certified", g.borel_certified},
                   {"seed_agreements", g.agreements},
                   {"resamples", g.resamples},
                   {"is_CS", is_squarefree(g.gin)},
                   {"is_CS_star", uses_only_first_variables(g.gin)},
                   {"multidegree", laurent_json(multidegree(initial))},
                   {"g_multidegree", laurent_json(g_multidegree(initial))}};
  if (s.check) {
    o.verdicts.record("gin_borel_fixed", is_borel_fixed(g.gin), [&] { return Json{{"gin", monomials_json(g.gin)}}; });
    const LaurentPoly ki = k_polynomial(initial), kg = k_polynomial(g.gin);
    o.verdicts.record("hilbert_series_preserved", ki == kg, [&] {
      return Json{{"initial_ideal", laurent_json(ki)}, {"gin", laurent_json(kg)}};
    });
  }
}

template <FieldElement K>
void run_multidegree(const Settings& s, const IdealInput& in, Outcome& o) {
  Ideal<K> ideal = build_ideal<K>(in);
  MonomialIdeal initial = initial_ideal(ideal, order_for(s, in.ring->num_vars()));
  const LaurentPoly k = k_polynomial(initial);
  const LaurentPoly mdeg = multidegree(initial);
  const LaurentPoly gdeg = g_multidegree(initial);
  MixedMultiplicities mixed = mdeg_to_mixed_multiplicities(mdeg, in.ring->block_sizes());
  Json values = Json::array();
  for (const auto& [a, f] : mixed.values) values.push_back(Json{{"a", a}, {"f", f}});
  o.results = Json{{"ring", ring_json(*in.ring)},
                   {"initial_ideal", monomials_json(initial)},
                   {"k_polynomial", laurent_json(k)},
                   {"c_polynomial", laurent_json(c_polynomial(k))},
                   {"multidegree", laurent_json(mdeg)},
                   {"g_multidegree", laurent_json(gdeg)},
                   {"multiplicity_free", multiplicity_free(mdeg)},
                   {"mixed_multiplicities", values},
                   {"flagged", mixed.flagged}};
  if (s.check) {
    const LaurentPoly other = k_polynomial(initial, PivotRule::LastVariable);
    o.verdicts.record("pivot_independent", other == k, [&] {
      return Json{{"most_frequent", laurent_json(k)}, {"last_variable", laurent_json(other)}};
    });
    bool inside = true;
    for (const auto& [e, c] : mdeg.terms()) inside = inside && gdeg.coefficient(e) == c;
    o.verdicts.record("multidegree_in_g_multidegree", inside, [&] {
      return Json{{"multidegree", laurent_json(mdeg)}, {"g_multidegree", laurent_json(gdeg)}};
    });
  }
}

template <FieldElement K>
void run_conjecture(const Settings& s, const IdealInput& in, Outcome& o) {
  Ideal<K> ideal = build_ideal<K>(in);
  const TermOrder order = order_for(s, in.ring->num_vars());
  MonomialIdeal initial = initial_ideal(ideal, order);
  MonomialIdeal g = gin(ideal, order, gin_options(s)).gin;
  o.results = Json{{"ring", ring_json(*in.ring)}, {"initial_ideal", monomials_json(initial)}, {"gin", monomials_json(g)}};
  const bool applicable = is_squarefree(initial) && is_squarefree(g);
  o.results["applicable"] = applicable;
  if (!applicable) return;
  ConjectureReport rep = compare_local_cohomology(initial, g);
  Json table = Json::array();
  for (const auto& [key, value] : rep.lhs) {
    auto it = rep.rhs.find(key);
    const std::size_t other = it == rep.rhs.end() ? 0 : it->second;
    if (value || other) table.push_back(Json{{"i", key.first}, {"degree", key.second}, {"ideal", value}, {"gin", other}});
  }
  o.results["window"] = {rep.window_low, rep.window_high};
  o.results["local_cohomology"] = table;
  o.results["extremal_ideal"] = betti_extremal_json(rep.lhs_extremal);
  o.results["extremal_gin"] = betti_extremal_json(rep.rhs_extremal);
  o.results["holds"] = rep.holds();
  if (s.check) {
    o.verdicts.record("local_cohomology_equal", rep.local_cohomology_equal, [&] {
      Json diff = Json::array();
      for (const auto& [key, value] : rep.lhs) {
        auto it = rep.rhs.find(key);
        const std::size_t other = it == rep.rhs.end() ? 0 : it->second;
        if (value != other) {
          diff.push_back(Json{{"i", key.first}, {"degree", key.second}, {"ideal", value}, {"gin", other}});
          break;
        }
      }
      return Json{{"first_difference", diff}};
    });
    o.verdicts.record("extremal_betti_equal", rep.extremal_equal, [&] {
      return Json{{"ideal", betti_extremal_json(rep.lhs_extremal)}, {"gin", betti_extremal_json(rep.rhs_extremal)}};
    });
  }
}

Graph read_graph(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  try {
    return first != std::string::npos && text[first] == '{' ? Graph::from_json(text) : Graph::from_edge_list(text);
  } catch (const ParseError& e) {
    throw InputError(e.what(), Json{{"position", e.position()}});
  } catch (const std::exception& e) {
    throw InputError(e.what(), Json::object());
  }
}

template <FieldElement K>
void run_edge(const Settings& s, const Graph& graph, std::uint32_t ch, Outcome& o) {
  RingPtr ring = edge_ring(graph.num_vertices(), ch);
  Ideal<K> jg = binomial_edge_ideal<K>(graph, ring);
  const MonomialIdeal pg = path_gin(graph, ring);
  const std::vector<MonomialIdeal> primes = gin_minimal_primes(graph, ring);
  const MonomialIdeal engine = gin(jg, order_for(s, ring->num_vars()), gin_options(s)).gin;
  Json prime_list = Json::array();
  for (const auto& p : primes) prime_list.push_back(monomials_json(p));
  const auto reg = homological_invariants(pg).regularity;
  o.results = Json{{"graph", graph.to_string()},
                   {"ring", ring_json(*ring)},
                   {"generators", polys_json(jg.generators())},
                   {"path_gin", monomials_json(pg)},
                   {"gin", monomials_json(engine)},
                   {"minimal_primes", prime_list},
                   {"regularity", reg ? Json(*reg) : Json(nullptr)},
                   {"is_CS", is_squarefree(engine)}};
  if (s.check) {
    o.verdicts.record("gin_equals_path_gin", engine == pg, [&] { return monomial_difference(pg, engine); });
    o.verdicts.record("path_gin_squarefree", is_squarefree(pg), [&] { return Json{{"path_gin", monomials_json(pg)}}; });
    const MonomialIdeal meet = intersect_all(ring, primes);
    o.verdicts.record("primes_intersect_to_path_gin", meet == pg, [&] { return monomial_difference(pg, meet); });
    o.verdicts.record("regularity_at_most_n", reg && *reg <= graph.num_vertices(),
                      [&] { return Json{{"regularity", reg ? Json(*reg) : Json(nullptr)}, {"n", graph.num_vertices()}}; });
  }
}

LinearSpaceSpec read_space(const Settings& s, const std::string& text) {
  LinearSpaceSpec spec;
  try {
    spec = parse_linear_space_json(text);
  } catch (const ParseError& e) {
    throw InputError(e.what(), Json{{"position", e.position()}});
  } catch (const std::exception& e) {
    throw InputError(e.what(), Json::object());
  }
  if (!s.field.empty()) spec.characteristic = resolve_field(s, "");
  return spec;
}

template <FieldElement K>
void run_closure(const Settings& s, const LinearSpaceSpec& spec, Outcome& o) {
  LinearSpace<K> v = [&] {
    try {
      return LinearSpace<K>::from_spec(spec);
    } catch (const RankDeficient& e) {
      throw InputError(e.what(), Json{{"row", e.row() + 1}});
    } catch (const std::exception& e) {
      throw InputError(e.what(), Json::object());
    }
  }();
  const RingPtr& sr = v.s_ring();
  Ideal<K> sat = jhom_saturation(v);
  Ideal<K> star = jstar(v);
  Json subsets = Json::array();
  for (std::uint32_t a : relevant_subsets(v)) {
    Json blocks = Json::array();
    for (std::size_t b : blocks_of_mask(a)) blocks.push_back(b + 1);
    subsets.push_back(blocks);
  }
  Json bases = Json::array();
  for (const auto& b : matroid_bases(v)) {
    Json cols = Json::array();
    for (std::size_t c : b) cols.push_back(c + 1);
    bases.push_back(cols);
  }
  const MonomialIdeal from_dv = gin_from_DV(v);
  const LaurentPoly matroid_mdeg = multidegree_matroid(v);
  o.results = Json{{"t_ring", ring_json(*v.t_ring())},
                   {"s_ring", ring_json(*sr)},
                   {"dim", v.dim()},
                   {"relevant_subsets", subsets},
                   {"jhom", ideal_json(sat)},
                   {"jstar", ideal_json(star)},
                   {"matroid_bases", bases},
                   {"degrees_of_bases", degrees_of_bases(v)},
                   {"multidegree", laurent_json(matroid_mdeg)},
                   {"gin_from_DV", monomials_json(from_dv)}};
  if (s.check) {
    Ideal<K> det = jhom_determinantal(v);
    o.verdicts.record("saturation_equals_determinantal", ideal_equal(sat, det),
                      [&] { return ideal_difference(sat, det); });
    Ideal<K> contracted = contract_to_t(v, sat);
    o.verdicts.record("contraction_equals_jstar", ideal_equal(contracted, star),
                      [&] { return ideal_difference(star, contracted); });
    const MonomialIdeal initial = initial_ideal(sat, TermOrder::grevlex(sr->num_vars()));
    o.verdicts.record("hilbert_multidegree_equals_matroid", multidegree(initial) == matroid_mdeg, [&] {
      return Json{{"hilbert", laurent_json(multidegree(initial))}, {"matroid", laurent_json(matroid_mdeg)}};
    });
    const MonomialIdeal engine = gin(sat, order_for(s, sr->num_vars()), gin_options(s)).gin;
    o.verdicts.record("gin_equals_gin_from_DV", engine == from_dv, [&] { return monomial_difference(from_dv, engine); });
    o.verdicts.record("gin_cohen_macaulay", reisner_cm(engine), [&] { return Json{{"gin", monomials_json(engine)}}; });
  }
}

CameraSpec read_cameras(const Settings& s, const std::string& text) {
  CameraSpec spec;
  try {
    spec = parse_camera_json(text);
  } catch (const ParseError& e) {
    throw InputError(e.what(), Json{{"position", e.position()}});
  } catch (const std::exception& e) {
    throw InputError(e.what(), Json::object());
  }
  if (!s.field.empty()) spec.characteristic = resolve_field(s, "");
  return spec;
}

template <FieldElement K>
void run_multiview(const Settings& s, const CameraSpec& spec, Outcome& o) {
  CameraSystem<K> sys = [&] {
    try {
      return CameraSystem<K>::from_spec(spec);
    } catch (const RankDeficient& e) {
      throw InputError(e.what(), Json{{"row", e.row() + 1}});
    } catch (const std::exception& e) {
      throw InputError(e.what(), Json::object());
    }
  }();
  Ideal<K> star = multiview_star_route(sys);
  const MonomialIdeal g = gin(star, order_for(s, sys.ring()->num_vars()), gin_options(s)).gin;
  o.results = Json{{"ring", ring_json(*sys.ring())},
                   {"n", sys.n()},
                   {"multiview_ideal", ideal_json(star)},
                   {"gin", monomials_json(g)},
                   {"is_CS", is_squarefree(g)}};
  if (s.check) {
    Ideal<K> segre = multiview_segre_route(sys);
    o.verdicts.record("star_route_equals_segre_route", ideal_equal(star, segre),
                      [&] { return ideal_difference(segre, star); });
    o.verdicts.record("gin_squarefree", is_squarefree(g), [&] { return Json{{"gin", monomials_json(g)}}; });
    o.verdicts.record("gin_cohen_macaulay", reisner_cm(g), [&] { return Json{{"gin", monomials_json(g)}}; });
  }
}

template <template <class> class Run, class... Args>
void dispatch(std::uint32_t ch, Args&&... args) {
  if (ch == 0)
    Run<Rational>{}(std::forward<Args>(args)...);
  else
    Run<Modular>{}(std::forward<Args>(args)...);
}

#define CSGIN_RUNNER(name, fn)                         \
  template <class K>                                   \
  struct name {                                        \
    template <class... A>                              \
    void operator()(A&&... a) const {                  \
      fn<K>(std::forward<A>(a)...);                    \
    }                                                  \
  };
CSGIN_RUNNER(GinRun, run_gin)
CSGIN_RUNNER(MultidegreeRun, run_multidegree)
CSGIN_RUNNER(ConjectureRun, run_conjecture)
CSGIN_RUNNER(EdgeRun, run_edge)
CSGIN_RUNNER(ClosureRun, run_closure)
CSGIN_RUNNER(MultiviewRun, run_multiview)
#undef CSGIN_RUNNER

Outcome execute(const Settings& s, Fnv1a& digest) {
  Outcome o;
  if (s.command == "verify-all") {
    o.has_field = false;
    acceptance::Options opts;
    opts.seeds = s.seeds;
    Json criteria = Json::array();
    for (const auto& c : acceptance::run_all(opts, [](const acceptance::Outcome& c) {
           std::cerr << (c.pass ? "PASS " : "FAIL ") << c.id << ' ' << c.title << '\n';
         })) {
      Json item{{"id", c.id}, {"title", c.title}, {"verdict", c.pass ? "PASS" : "FAIL"}, {"detail", c.detail},
                {"budget_seconds", c.budget_seconds}};
      if (s.timing) item["seconds"] = c.seconds;
      criteria.push_back(item);
      o.verdicts.record("criterion " + std::to_string(c.id), c.pass, [&] {
        return Json{{"title", c.title}, {"detail", c.detail}};
      });
    }
    o.results = Json{{"criteria", criteria}};
    return o;
  }
  const std::string text = read_file(s.input);
  digest.add(text);
  if (s.command == "gin" || s.command == "multidegree" || s.command == "conjecture") {
    IdealInput in = read_ideal(s, text);
    o.characteristic = in.ring->characteristic();
    if (s.command == "gin") dispatch<GinRun>(o.characteristic, s, in, o);
    else if (s.command == "multidegree") dispatch<MultidegreeRun>(o.characteristic, s, in, o);
    else dispatch<ConjectureRun>(o.characteristic, s, in, o);
  } else if (s.command == "edge") {
    Graph g = read_graph(text);
    o.characteristic = resolve_field(s, "Fp");
    dispatch<EdgeRun>(o.characteristic, s, g, o.characteristic, o);
  } else if (s.command == "closure") {
    LinearSpaceSpec spec = read_space(s, text);
    o.characteristic = spec.characteristic;
    dispatch<ClosureRun>(o.characteristic, s, spec, o);
  } else if (s.command == "multiview") {
    CameraSpec spec = read_cameras(s, text);
    o.characteristic = spec.characteristic;
    dispatch<MultiviewRun>(o.characteristic, s, spec, o);
  }
  return o;
}

void emit(const Settings& s, const Json& report) {
  const std::string text = s.json ? report.dump() : report.dump(2);
  if (s.out.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(s.out, std::ios::binary);
  out << text << '\n';
  if (!out) std::cerr << "cannot write " << s.out << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multigraded generic initial ideals and Cartwright-Sturmfels checks"};
  app.require_subcommand(1);
  Settings s;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--field", s.field, "Q, Fp or Fp:p (overrides the input file)");
    sub->add_option("--order", s.order, "term order for initial ideals and gins")
        ->check(CLI::IsMember({"grevlex", "lex"}));
    sub->add_option("--seed", s.seeds, "comma-separated seed list")->delimiter(',');
    sub->add_option("--out", s.out, "write the report to this path");
    sub->add_flag("--json", s.json, "single-line JSON");
    sub->add_flag("--check", s.check, "verify cross-route invariants");
    sub->add_flag("--timing", s.timing, "include wall-clock timing");
  };
  struct Sub {
    const char* name;
    const char* input_flag;
    const char* help;
  };
  const Sub subs[] = {{"gin", "--ideal", "generic initial ideal of a multigraded ideal"},
                      {"edge", "--graph", "binomial edge ideal of a graph (JSON or edge list)"},
                      {"closure", "--input", "closure ideal of a space of linear forms"},
                      {"multiview", "--input", "multiview ideal of a camera system"},
                      {"multidegree", "--ideal", "K-polynomial, multidegrees and mixed multiplicities"},
                      {"conjecture", "--ideal", "local cohomology and extremal Betti numbers of in(I) vs gin(I)"}};
  for (const Sub& sub : subs) {
    CLI::App* cmd = app.add_subcommand(sub.name, sub.help);
    cmd->add_option(sub.input_flag, s.input, "input file")->required();
    common(cmd);
  }
  common(app.add_subcommand("verify-all", "run the acceptance suite"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }
  s.command = app.get_subcommands().front()->get_name();

  Fnv1a digest;
  digest.add(s.command);
  digest.add(s.field);
  digest.add(s.order);
  for (auto seed : s.seeds) digest.add(std::to_string(seed));

  Json command = Json::array();
  // The output path is left out so reports are identical wherever they are written.
  for (int k = 1; k < argc; ++k) {
    const std::string arg = argv[k];
    if (arg == "--out") {
      ++k;
      continue;
    }
    if (arg.rfind("--out=", 0) == 0) continue;
    command.push_back(arg);
  }
  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome o = execute(s, digest);
    Json report{{"command", command}, {"inputs_digest", digest.hex()}};
    if (o.has_field) report["field"] = field_name(o.characteristic);
    report["seeds"] = s.seeds;
    report["results"] = o.results;
    o.verdicts.write(report);
    if (s.timing)
      report["timing"] = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
    emit(s, report);
    return o.verdicts.any_failed() ? kExitVerification : kExitOk;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    emit(s, Json{{"command", command}, {"error", e.what()}, {"where", e.where}});
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    emit(s, Json{{"command", command}, {"error", e.what()}});
    return kExitInput;
  }
}
