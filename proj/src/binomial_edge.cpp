#include "csgin/binomial_edge.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "csgin/parse.hpp"

namespace csgin {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
  if (n < 1 || n > 16) throw std::invalid_argument("graph must have between 1 and 16 vertices");
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw std::out_of_range("edge endpoint outside the vertex set");
    if (a == b) throw std::invalid_argument("loops are not allowed");
    if (a > b) std::swap(a, b);
    edges_.emplace_back(a, b);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("repeated edge");
  for (auto [a, b] : edges_) {
    adj_[static_cast<std::size_t>(a)] |= 1u << b;
    adj_[static_cast<std::size_t>(b)] |= 1u << a;
  }
}

Graph Graph::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed graph JSON: ") + e.what(), e.byte);
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("graph JSON needs \"n\" and \"edges\"");
  int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("each edge must be a pair");
    edges.emplace_back(e[0].get<int>() - 1, e[1].get<int>() - 1);
  }
  return Graph(n, std::move(edges));
}

Graph Graph::from_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<int, int>> edges;
  int n = 0;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    const std::size_t start = offset;
    offset += line.size() + 1;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    int a = 0, b = 0;
    std::string extra;
    if (!(fields >> a >> b) || (fields >> extra)) throw ParseError("expected a line \"i j\"", start);
    if (a < 1 || b < 1) throw ParseError("vertex labels start at 1", start);
    n = std::max({n, a, b});
    edges.emplace_back(a - 1, b - 1);
  }
  if (n == 0) throw ParseError("no edges", 0);
  return Graph(n, std::move(edges));
}

Graph Graph::path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph Graph::cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph Graph::complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph Graph::complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph(a + b, e);
}

Graph Graph::star(int leaves) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

bool Graph::adjacent(int a, int b) const { return (adj_[static_cast<std::size_t>(a)] >> b) & 1u; }

int Graph::components(std::uint32_t vertices) const {
  int count = 0;
  std::uint32_t left = vertices;
  while (left) {
    std::uint32_t frontier = left & (~left + 1);
    std::uint32_t seen = frontier;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj_[static_cast<std::size_t>(__builtin_ctz(f))];
      next &= vertices & ~seen;
      seen |= next;
      frontier = next;
    }
    left &= ~seen;
    ++count;
  }
  return count;
}

Graph Graph::relabel(const std::vector<int>& perm) const {
  std::vector<std::pair<int, int>> e;
  for (auto [a, b] : edges_) e.emplace_back(perm.at(static_cast<std::size_t>(a)), perm.at(static_cast<std::size_t>(b)));
  return Graph(n_, e);
}

std::string Graph::to_string() const {
  std::string out = "n=" + std::to_string(n_) + " {";
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(edges_[k].first + 1) + "-" + std::to_string(edges_[k].second + 1);
  }
  return out + "}";
}

std::vector<Graph> connected_graphs_up_to(int max_vertices) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_vertices; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    std::set<std::vector<std::pair<int, int>>> seen;
    for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
      std::vector<std::pair<int, int>> e;
      for (std::size_t s = 0; s < slots.size(); ++s)
        if ((mask >> s) & 1u) e.push_back(slots[s]);
      Graph g(n, e);
      if (!g.connected()) continue;
      std::vector<int> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 0);
      std::vector<std::pair<int, int>> canonical = g.edges();
      do {
        auto r = g.relabel(perm).edges();
        canonical = std::min(canonical, r);
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (seen.insert(canonical).second) out.push_back(Graph(n, canonical));
    }
  }
  return out;
}

RingPtr edge_ring(int n, std::uint32_t characteristic) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) {
    names.push_back("x" + std::to_string(i));
    names.push_back("y" + std::to_string(i));
  }
  return make_ring(std::vector<int>(static_cast<std::size_t>(n), 2), characteristic, std::move(names));
}

std::size_t x_var(int vertex) { return 2 * static_cast<std::size_t>(vertex); }
std::size_t y_var(int vertex) { return 2 * static_cast<std::size_t>(vertex) + 1; }

MonomialIdeal path_gin(const Graph& g, const RingPtr& ring) {
  const int n = g.num_vertices();
  std::vector<Monomial> gens;
  std::function<void(int, int, std::uint32_t, Monomial)> walk = [&](int start, int at, std::uint32_t visited,
                                                                    Monomial interior) {
    for (int next = 0; next < n; ++next) {
      if (!g.adjacent(at, next) || ((visited >> next) & 1u)) continue;
      if (next > start) {
        Monomial m = interior;
        m.set(x_var(start), 1);
        m.set(x_var(next), 1);
        gens.push_back(m);
      }
      Monomial deeper = interior;
      deeper.set(y_var(next), 1);
      walk(start, next, visited | (1u << next), deeper);
    }
  };
  for (int start = 0; start < n; ++start) walk(start, start, 1u << start, Monomial());
  return MonomialIdeal(ring, std::move(gens));
}

std::vector<MonomialIdeal> gin_minimal_primes(const Graph& g, const RingPtr& ring) {
  const int n = g.num_vertices();
  const std::uint32_t all = (1u << n) - 1u;
  std::set<MonomialIdeal> primes;
  for (std::uint32_t t = 0; t <= all; ++t) {
    const int c = t ? g.components(t) : 0;
    bool admissible = true;
    for (int i = 0; i < n && admissible; ++i)
      if (!((t >> i) & 1u) && !(g.components(t | (1u << i)) < c)) admissible = false;
    if (!admissible) continue;
    // Components of G_T as vertex masks.
    std::vector<std::uint32_t> comps;
    std::uint32_t left = t;
    while (left) {
      std::uint32_t comp = left & (~left + 1);
      for (;;) {
        std::uint32_t grown = comp;
        for (int v = 0; v < n; ++v)
          if ((comp >> v) & 1u)
            for (int w = 0; w < n; ++w)
              if (((left >> w) & 1u) && g.adjacent(v, w)) grown |= 1u << w;
        if (grown == comp) break;
        comp = grown;
      }
      comps.push_back(comp);
      left &= ~comp;
    }
    std::uint32_t outside = 0;
    for (int i = 0; i < n; ++i)
      if (!((t >> i) & 1u)) outside |= (1u << x_var(i)) | (1u << y_var(i));
    std::function<void(std::size_t, std::uint32_t)> choose = [&](std::size_t k, std::uint32_t chosen) {
      if (k == comps.size()) {
        std::uint32_t vars = outside;
        for (int i = 0; i < n; ++i)
          if (((t & ~chosen) >> i) & 1u) vars |= 1u << x_var(i);
        primes.insert(MonomialIdeal::prime(ring, vars));
        return;
      }
      for (std::uint32_t rest = comps[k]; rest; rest &= rest - 1) choose(k + 1, chosen | (rest & (~rest + 1)));
    };
    choose(0, 0);
  }
  return {primes.begin(), primes.end()};
}

}  // namespace csgin
