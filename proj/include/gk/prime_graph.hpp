#ifndef GK_PRIME_GRAPH_HPP
#define GK_PRIME_GRAPH_HPP

#include "gk/errors.hpp"
#include "gk/groups.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace gk {

using Prime = std::uint64_t;

/// Labeled set of vertices drawn as one cluster (a clique class of a compact form).
struct VertexClass {
  std::string label;
  std::vector<Prime> primes;
  friend bool operator==(const VertexClass&, const VertexClass&) = default;
};

/// Simple undirected graph on primes. Edges are stored as (smaller, larger).
class PrimeGraph {
public:
  PrimeGraph() = default;
  explicit PrimeGraph(std::vector<Prime> vertices) {
    for (Prime v : vertices) add_vertex(v);
  }

  void add_vertex(Prime v) {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) vertices_.insert(it, v);
  }

  void add_edge(Prime a, Prime b) {
    if (a == b) throw std::invalid_argument("PrimeGraph: loop at " + std::to_string(a));
    if (!has_vertex(a) || !has_vertex(b))
      throw std::invalid_argument("PrimeGraph: edge " + std::to_string(a) + "-" + std::to_string(b) +
                                  " has an endpoint outside the vertex set");
    edges_.insert(std::minmax(a, b));
  }

  bool has_vertex(Prime v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }
  bool adjacent(Prime a, Prime b) const { return a != b && edges_.count(std::minmax(a, b)) > 0; }

  const std::vector<Prime>& vertices() const { return vertices_; }
  const std::set<std::pair<Prime, Prime>>& edges() const { return edges_; }

  std::vector<Prime> neighbors(Prime v) const {
    std::vector<Prime> out;
    for (Prime u : vertices_)
      if (adjacent(u, v)) out.push_back(u);
    return out;
  }

  const std::string& group() const { return group_; }
  void set_group(std::string name) { group_ = std::move(name); }

  const std::vector<VertexClass>& classes() const { return classes_; }
  void set_classes(std::vector<VertexClass> classes) { classes_ = std::move(classes); }

  /// Labeled-graph equality: same vertex set and same edge set. Metadata is ignored.
  friend bool operator==(const PrimeGraph& a, const PrimeGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

private:
  std::vector<Prime> vertices_;
  std::set<std::pair<Prime, Prime>> edges_;
  std::string group_;
  std::vector<VertexClass> classes_;
};

inline bool graphs_equal(const PrimeGraph& a, const PrimeGraph& b) { return a == b; }

struct EdgeDiff {
  std::vector<Prime> only_in_first_vertices;
  std::vector<Prime> only_in_second_vertices;
  std::vector<std::pair<Prime, Prime>> only_in_first_edges;
  std::vector<std::pair<Prime, Prime>> only_in_second_edges;
};

inline EdgeDiff graph_diff(const PrimeGraph& a, const PrimeGraph& b) {
  EdgeDiff d;
  std::set_difference(a.vertices().begin(), a.vertices().end(), b.vertices().begin(), b.vertices().end(),
                      std::back_inserter(d.only_in_first_vertices));
  std::set_difference(b.vertices().begin(), b.vertices().end(), a.vertices().begin(), a.vertices().end(),
                      std::back_inserter(d.only_in_second_vertices));
  std::set_difference(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end(),
                      std::back_inserter(d.only_in_first_edges));
  std::set_difference(b.edges().begin(), b.edges().end(), a.edges().begin(), a.edges().end(),
                      std::back_inserter(d.only_in_second_edges));
  return d;
}

/// Vertices are the primes of w; r-s is an edge iff rs is in w.
inline PrimeGraph graph_from_spectrum(const Spectrum& w) {
  PrimeGraph g(w.primes());
  const auto& vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (w.contains(vs[i] * vs[j])) g.add_edge(vs[i], vs[j]);
  return g;
}

/// Connected components; the one containing 2 first, the rest by smallest vertex.
struct ComponentPartition {
  std::vector<std::vector<Prime>> components;
  std::size_t count() const { return components.size(); }
};

inline ComponentPartition components(const PrimeGraph& g) {
  const auto& vs = g.vertices();
  std::map<Prime, std::size_t> index;
  for (std::size_t i = 0; i < vs.size(); ++i) index[vs[i]] = i;
  std::vector<std::size_t> parent(vs.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : g.edges()) parent[find(index[a])] = find(index[b]);
  std::map<std::size_t, std::vector<Prime>> groups;
  for (std::size_t i = 0; i < vs.size(); ++i) groups[find(i)].push_back(vs[i]);
  ComponentPartition out;
  for (auto& [root, members] : groups) out.components.push_back(std::move(members));
  std::sort(out.components.begin(), out.components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  // 2 is the smallest prime, so its component already sorts first.
  return out;
}

struct CocliqueResult {
  std::size_t size = 0;
  std::vector<Prime> witness;
};

namespace detail {

class Bits {
public:
  explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0), n_(n) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t(1) << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t(1) << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }
  bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }
  std::size_t first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return i * 64 + static_cast<std::size_t>(__builtin_ctzll(words_[i]));
    return n_;
  }
  std::size_t next(std::size_t from) const {
    for (std::size_t i = from; i < n_; ++i)
      if (test(i)) return i;
    return n_;
  }
  Bits minus(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
    return r;
  }
  Bits intersect(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  std::size_t size() const { return n_; }

private:
  std::vector<std::uint64_t> words_;
  std::size_t n_;
};

// Exact maximum independent set by branch and bound; the bound is a greedy
// clique cover of the candidate set.
class IndependentSetSearch {
public:
  explicit IndependentSetSearch(const PrimeGraph& g) : n_(g.vertices().size()), adj_(n_, Bits(n_)) {
    const auto& vs = g.vertices();
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (i != j && g.adjacent(vs[i], vs[j])) adj_[i].set(j);
  }

  std::size_t vertex_count() const { return n_; }
  const Bits& neighbors(std::size_t v) const { return adj_[v]; }

  std::size_t max_size(const Bits& candidates) {
    best_ = 0;
    search(candidates, 0);
    return best_;
  }

private:
  std::size_t clique_cover_bound(const Bits& cand) const {
    Bits left = cand;
    std::size_t cliques = 0;
    while (!left.none()) {
      std::size_t v = left.first();
      Bits clique_common = adj_[v].intersect(left);
      left.reset(v);
      ++cliques;
      // Grow the clique greedily: pick vertices adjacent to everything chosen so far.
      for (std::size_t u = clique_common.first(); u < n_; u = clique_common.next(u + 1)) {
        left.reset(u);
        clique_common = clique_common.intersect(adj_[u]);
      }
    }
    return cliques;
  }

  void search(Bits cand, std::size_t current) {
    // Vertices with no neighbour among candidates can always be taken.
    for (std::size_t v = cand.first(); v < n_; v = cand.next(v + 1)) {
      if (adj_[v].intersect(cand).none()) {
        cand.reset(v);
        ++current;
      }
    }
    if (cand.none()) {
      best_ = std::max(best_, current);
      return;
    }
    if (current + clique_cover_bound(cand) <= best_) return;
    std::size_t pick = n_, pick_degree = 0;
    for (std::size_t v = cand.first(); v < n_; v = cand.next(v + 1)) {
      std::size_t d = adj_[v].intersect(cand).count();
      if (pick == n_ || d > pick_degree) {
        pick = v;
        pick_degree = d;
      }
    }
    Bits with = cand.minus(adj_[pick]);
    with.reset(pick);
    search(with, current + 1);
    Bits without = cand;
    without.reset(pick);
    search(without, current);
  }

  std::size_t n_;
  std::vector<Bits> adj_;
  std::size_t best_ = 0;
};

// Lexicographically least maximum independent set inside `allowed`.
inline CocliqueResult lex_least_max_coclique(const PrimeGraph& g, Bits allowed) {
  IndependentSetSearch search(g);
  const std::size_t n = search.vertex_count();
  const std::size_t target = search.max_size(allowed);
  CocliqueResult out;
  out.size = target;
  Bits cand = allowed;
  std::size_t need = target;
  for (std::size_t v = 0; v < n && need > 0; ++v) {
    if (!cand.test(v)) continue;
    Bits rest = cand.minus(search.neighbors(v));
    for (std::size_t u = 0; u <= v; ++u) rest.reset(u);
    if (1 + search.max_size(rest) == need) {
      out.witness.push_back(g.vertices()[v]);
      --need;
      cand = rest;
    } else {
      cand.reset(v);
    }
  }
  return out;
}

} // namespace detail

/// t(G): the largest coclique, witness lexicographically least.
inline CocliqueResult max_coclique(const PrimeGraph& g) {
  detail::Bits all(g.vertices().size());
  for (std::size_t i = 0; i < g.vertices().size(); ++i) all.set(i);
  return detail::lex_least_max_coclique(g, all);
}

/// t(r, G): the largest coclique containing r.
inline CocliqueResult t_at(Prime r, const PrimeGraph& g) {
  const auto& vs = g.vertices();
  if (!g.has_vertex(r)) throw std::invalid_argument("t_at: " + std::to_string(r) + " is not a vertex");
  detail::Bits allowed(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (vs[i] == r || !g.adjacent(vs[i], r)) allowed.set(i);
  // r has no neighbour in `allowed`, so every maximum coclique there contains it.
  return detail::lex_least_max_coclique(g, allowed);
}

inline bool is_coclique(const PrimeGraph& g, const std::vector<Prime>& set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (!g.has_vertex(set[i])) return false;
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (set[i] == set[j] || g.adjacent(set[i], set[j])) return false;
  }
  return true;
}

// ---- serialization ----

inline std::string to_json(const PrimeGraph& g) {
  nlohmann::ordered_json j;
  j["group"] = g.group();
  j["vertices"] = g.vertices();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
  j["edges"] = edges;
  if (!g.classes().empty()) {
    auto classes = nlohmann::ordered_json::array();
    for (const auto& c : g.classes()) classes.push_back({{"label", c.label}, {"primes", c.primes}});
    j["classes"] = classes;
  }
  return j.dump();
}

inline PrimeGraph graph_from_json_value(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("graph JSON must be an object");
  if (!j.contains("vertices") || !j["vertices"].is_array()) throw ParseError("graph JSON needs a 'vertices' array");
  if (!j.contains("edges") || !j["edges"].is_array()) throw ParseError("graph JSON needs an 'edges' array");
  PrimeGraph g;
  for (const auto& v : j["vertices"]) {
    if (!v.is_number_unsigned()) throw ParseError("vertex " + v.dump() + " is not a non-negative integer");
    const Prime p = v.get<Prime>();
    if (!is_prime(big(p))) throw ParseError("vertex " + std::to_string(p) + " is not prime");
    g.add_vertex(p);
  }
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
      throw ParseError("edge " + e.dump() + " must be a pair of integers");
    try {
      g.add_edge(e[0].get<Prime>(), e[1].get<Prime>());
    } catch (const std::invalid_argument& err) {
      throw ParseError(err.what());
    }
  }
  if (j.contains("group") && j["group"].is_string()) g.set_group(j["group"].get<std::string>());
  if (j.contains("classes")) {
    std::vector<VertexClass> classes;
    for (const auto& c : j["classes"]) {
      VertexClass vc;
      vc.label = c.at("label").get<std::string>();
      vc.primes = c.at("primes").get<std::vector<Prime>>();
      classes.push_back(std::move(vc));
    }
    g.set_classes(std::move(classes));
  }
  return g;
}

inline PrimeGraph graph_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("graph JSON: ") + e.what());
  }
  return graph_from_json_value(j);
}

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

inline std::string to_dot(const PrimeGraph& g) {
  std::ostringstream os;
  os << "graph " << dot_quote(g.group().empty() ? "G" : g.group()) << " {\n";
  os << "  node [shape=circle];\n";
  std::set<Prime> clustered;
  std::size_t cluster = 0;
  for (const auto& c : g.classes()) {
    os << "  subgraph cluster_" << cluster++ << " {\n";
    os << "    label=" << dot_quote(c.label) << ";\n";
    for (Prime p : c.primes) {
      os << "    " << p << ";\n";
      clustered.insert(p);
    }
    os << "  }\n";
  }
  for (Prime v : g.vertices())
    if (!clustered.count(v)) os << "  " << v << ";\n";
  for (const auto& [a, b] : g.edges()) os << "  " << a << " -- " << b << ";\n";
  os << "}\n";
  return os.str();
}

} // namespace gk

#endif
