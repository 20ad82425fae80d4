#include "gk/gk.hpp"
#include "naive.hpp"

#include <gtest/gtest.h>

#include <random>

using gk::Prime;
using gk::PrimeGraph;

namespace {

PrimeGraph graph_on(std::vector<Prime> vs, std::vector<std::pair<Prime, Prime>> es, std::string name = "") {
  PrimeGraph g(std::move(vs));
  for (auto [a, b] : es) g.add_edge(a, b);
  g.set_group(std::move(name));
  return g;
}

std::vector<Prime> first_primes(std::size_t n) {
  std::vector<Prime> out;
  for (Prime p = 2; out.size() < n; ++p)
    if (naive::is_prime(p)) out.push_back(p);
  return out;
}

PrimeGraph random_graph(std::mt19937_64& rng, std::size_t n, double density) {
  PrimeGraph g(first_primes(n));
  std::bernoulli_distribution coin(density);
  const auto vs = g.vertices();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(vs[i], vs[j]);
  return g;
}

// Every subset, kept if it beats the best so far or ties it lexicographically.
gk::CocliqueResult brute_coclique(const PrimeGraph& g, std::optional<Prime> through = {}) {
  const auto& vs = g.vertices();
  const std::size_t n = vs.size();
  std::vector<Prime> best;
  bool found = false;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    std::vector<Prime> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(vs[i]);
    if (through && std::find(s.begin(), s.end(), *through) == s.end()) continue;
    if (!gk::is_coclique(g, s)) continue;
    if (!found || s.size() > best.size() || (s.size() == best.size() && s < best)) best = s;
    found = true;
  }
  return {best.size(), best};
}

std::size_t plain_mis(const std::vector<std::uint64_t>& adj, std::uint64_t cand) {
  if (!cand) return 0;
  const int v = __builtin_ctzll(cand);
  const std::uint64_t rest = cand & ~(std::uint64_t(1) << v);
  if (!(adj[v] & rest)) return 1 + plain_mis(adj, rest);
  return std::max(plain_mis(adj, rest), 1 + plain_mis(adj, rest & ~adj[v]));
}

std::vector<Prime> sorted(std::vector<Prime> v) {
  std::sort(v.begin(), v.end());
  return v;
}

} // namespace

TEST(PrimeGraph, RejectsLoopsAndUnknownEndpoints) {
  PrimeGraph g({2, 3});
  EXPECT_THROW(g.add_edge(2, 2), std::invalid_argument);
  EXPECT_THROW(g.add_edge(2, 5), std::invalid_argument);
  g.add_edge(3, 2);
  EXPECT_TRUE(g.adjacent(2, 3));
  EXPECT_TRUE(g.adjacent(3, 2));
  EXPECT_EQ(g.edges().size(), 1u);
}

TEST(PrimeGraph, EqualityIgnoresMetadata) {
  auto a = graph_on({2, 3}, {{2, 3}}, "A");
  auto b = graph_on({2, 3}, {{3, 2}}, "B");
  EXPECT_TRUE(gk::graphs_equal(a, b));
  EXPECT_FALSE(gk::graphs_equal(a, graph_on({2, 3}, {})));
  EXPECT_FALSE(gk::graphs_equal(a, graph_on({2, 3, 5}, {{2, 3}})));
}

TEST(PrimeGraph, DiffListsBothSides) {
  const auto a = graph_on({2, 3, 5}, {{2, 3}});
  const auto b = graph_on({2, 3, 7}, {{3, 7}});
  const auto d = gk::graph_diff(a, b);
  EXPECT_EQ(d.only_in_first_vertices, std::vector<Prime>{5});
  EXPECT_EQ(d.only_in_second_vertices, std::vector<Prime>{7});
  EXPECT_EQ(d.only_in_first_edges, (std::vector<std::pair<Prime, Prime>>{{2, 3}}));
  EXPECT_EQ(d.only_in_second_edges, (std::vector<std::pair<Prime, Prime>>{{3, 7}}));
}

TEST(FromSpectrum, Examples) {
  EXPECT_EQ(gk::graph_from_spectrum(gk::Spectrum::generated_by({2, 3, 5})), graph_on({2, 3, 5}, {}));
  EXPECT_EQ(gk::graph_from_spectrum(gk::Spectrum::generated_by({6})), graph_on({2, 3}, {{2, 3}}));
  const auto trivial = gk::graph_from_spectrum(gk::Spectrum{});
  EXPECT_TRUE(trivial.vertices().empty());
  EXPECT_TRUE(trivial.edges().empty());
}

TEST(GraphOf, Examples) {
  EXPECT_EQ(gk::graph_of("G2(3)"), graph_on({2, 3, 7, 13}, {{2, 3}}));
  EXPECT_EQ(gk::graph_of("PSL2(13)"), graph_on({2, 3, 7, 13}, {{2, 3}}));
  EXPECT_EQ(gk::graph_of("F4(2)"), graph_on({2, 3, 5, 7, 13, 17}, {{2, 3}, {2, 5}, {2, 7}, {3, 5}, {3, 7}}));
  EXPECT_EQ(gk::graph_of("Sz(8)"), graph_on({2, 5, 7, 13}, {}));
}

TEST(GraphOf, KnownEqualities) {
  EXPECT_EQ(gk::graph_of("Alt(5)"), gk::graph_of("Alt(6)"));
  EXPECT_EQ(gk::graph_of("G2(3)"), gk::graph_of("PSL2(13)"));
  EXPECT_EQ(gk::graph_of("Alt(7)"), gk::graph_of("PSL2(49)"));
}

TEST(GraphOf, VerticesArePrimeSpectrum) {
  for (const char* s : {"G2(9)", "G2(27)", "F4(4)", "F4(8)", "2F4(8)", "2F4(32)", "E8(2)", "E8(7)", "Alt(11)", "Sz(32)", "PSL2(125)"}) {
    std::vector<Prime> want;
    for (const auto& p : gk::prime_spectrum(gk::parse_group_id(s))) want.push_back(gk::to_u64(p));
    EXPECT_EQ(gk::graph_of(s).vertices(), want) << s;
  }
}

TEST(GraphOf, UnsupportedWithoutData) {
  const gk::TabulatedRegistry empty;
  EXPECT_THROW(gk::graph_of(gk::parse_group_id("PSU4(4)"), empty), gk::DataError);
  EXPECT_THROW(gk::graph_of(gk::parse_group_id("E7(2)"), empty), gk::DataError);
  EXPECT_THROW(gk::graph_of(gk::parse_group_id("G2(4)"), empty), gk::UnsupportedError);
  EXPECT_THROW(gk::graph_of(gk::parse_group_id("F4(3)"), empty), gk::UnsupportedError);
}

TEST(Components, Examples) {
  const auto e8 = gk::components(gk::graph_of("E8(3)"));
  ASSERT_EQ(e8.count(), 4u);
  EXPECT_EQ(e8.components[0].front(), 2u);
  std::set<std::vector<Prime>> rest(e8.components.begin() + 1, e8.components.end());
  EXPECT_EQ(rest, (std::set<std::vector<Prime>>{{4561}, naive::primitive(24, 3), naive::primitive(30, 3)}));

  const auto sz = gk::components(gk::graph_of("Sz(8)"));
  EXPECT_EQ(sz.components, (std::vector<std::vector<Prime>>{{2}, {5}, {7}, {13}}));
  EXPECT_EQ(gk::components(graph_on({2, 3, 5}, {})).count(), 3u);
}

TEST(Components, PartitionIsValid) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = random_graph(rng, 12, 0.15);
    const auto parts = gk::components(g);
    std::vector<Prime> all;
    std::map<Prime, std::size_t> where;
    for (std::size_t i = 0; i < parts.count(); ++i)
      for (Prime p : parts.components[i]) {
        all.push_back(p);
        where[p] = i;
      }
    EXPECT_EQ(sorted(all), g.vertices());
    EXPECT_EQ(parts.components[0].front(), 2u);
    for (auto [a, b] : g.edges()) EXPECT_EQ(where[a], where[b]);
    for (const auto& comp : parts.components) {  // connected: BFS inside the part reaches everything
      std::set<Prime> seen{comp.front()};
      std::vector<Prime> stack{comp.front()};
      while (!stack.empty()) {
        Prime v = stack.back();
        stack.pop_back();
        for (Prime w : g.neighbors(v))
          if (seen.insert(w).second) stack.push_back(w);
      }
      EXPECT_EQ(seen.size(), comp.size());
    }
  }
}

TEST(ComponentCounts, Families) {
  for (std::uint64_t q : {8, 32, 128}) EXPECT_EQ(gk::components(gk::graph_of("Sz(" + std::to_string(q) + ")")).count(), 4u);
  for (unsigned k = 1; k <= 6; ++k) {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) q *= 3;
    EXPECT_EQ(gk::components(gk::graph_of("G2(" + std::to_string(q) + ")")).count(), 3u) << q;
  }
  for (unsigned n = 1; n <= 6; ++n)
    EXPECT_EQ(gk::components(gk::graph_of("F4(" + std::to_string(1u << n) + ")")).count(), 3u) << n;
  for (std::uint64_t q : {8, 32}) EXPECT_EQ(gk::components(gk::graph_of("2F4(" + std::to_string(q) + ")")).count(), 3u);
  for (std::uint64_t q : gk::prime_powers_up_to(32)) {
    const bool minus = q % 5 == 2 || q % 5 == 3;
    EXPECT_EQ(gk::components(gk::graph_of("E8(" + std::to_string(q) + ")")).count(), minus ? 4u : 5u) << q;
  }
}

TEST(Coclique, Examples) {
  const auto g2 = gk::max_coclique(gk::graph_of("G2(3)"));
  EXPECT_EQ(g2.size, 3u);
  EXPECT_EQ(g2.witness, (std::vector<Prime>{2, 7, 13}));
  const auto e8 = gk::graph_of("E8(2)");
  EXPECT_EQ(gk::t_at(2, e8).size, 5u);
  EXPECT_EQ(gk::max_coclique(e8).size, 12u);
  EXPECT_THROW(gk::t_at(29, e8), std::invalid_argument);
}

TEST(Coclique, EmptyGraph) {
  const auto r = gk::max_coclique(PrimeGraph{});
  EXPECT_EQ(r.size, 0u);
  EXPECT_TRUE(r.witness.empty());
}

TEST(Coclique, MatchesSubsetEnumeration) {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 1 + trial % 13;
    const auto g = random_graph(rng, n, 0.2 + 0.05 * (trial % 12));
    const auto want = brute_coclique(g);
    const auto got = gk::max_coclique(g);
    ASSERT_EQ(got.size, want.size) << gk::to_json(g);
    EXPECT_EQ(got.size, got.witness.size());
    EXPECT_EQ(sorted(got.witness), want.witness) << gk::to_json(g);
    const Prime r = g.vertices()[trial % n];
    const auto want_r = brute_coclique(g, r);
    const auto got_r = gk::t_at(r, g);
    ASSERT_EQ(got_r.size, want_r.size) << gk::to_json(g) << " r=" << r;
    EXPECT_EQ(sorted(got_r.witness), want_r.witness);
  }
}

TEST(Coclique, MatchesPlainRecursionOnFortyVertices) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 12; ++trial) {
    const auto g = random_graph(rng, 40, 0.1 + 0.07 * trial);
    const auto& vs = g.vertices();
    std::vector<std::uint64_t> adj(vs.size(), 0);
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = 0; j < vs.size(); ++j)
        if (g.adjacent(vs[i], vs[j])) adj[i] |= std::uint64_t(1) << j;
    const auto got = gk::max_coclique(g);
    EXPECT_EQ(got.size, plain_mis(adj, (std::uint64_t(1) << vs.size()) - 1)) << trial;
    EXPECT_TRUE(gk::is_coclique(g, got.witness));
  }
}

TEST(Serialization, JsonRoundTrip) {
  for (const char* s : {"G2(3)", "E8(2)", "2F4(8)", "Sz(8)", "Alt(10)"}) {
    const auto g = gk::graph_of(s);
    const auto back = gk::graph_from_json(gk::to_json(g));
    EXPECT_EQ(back, g) << s;
    EXPECT_EQ(back.group(), g.group());
    EXPECT_EQ(back.classes().size(), g.classes().size());
    EXPECT_EQ(gk::to_json(back), gk::to_json(g));
  }
}

TEST(Serialization, JsonIsOrdered) {
  const auto j = nlohmann::json::parse(gk::to_json(gk::graph_of("G2(3)")));
  EXPECT_EQ(j["vertices"], nlohmann::json::parse("[2,3,7,13]"));
  EXPECT_EQ(j["edges"], nlohmann::json::parse("[[2,3]]"));
  EXPECT_EQ(j["group"], "G2(3)");
}

TEST(Serialization, JsonRejectsBadInput) {
  EXPECT_THROW(gk::graph_from_json("not json"), gk::ParseError);
  EXPECT_THROW(gk::graph_from_json(R"({"vertices":[2,4],"edges":[]})"), gk::ParseError);
  EXPECT_THROW(gk::graph_from_json(R"({"vertices":[2,3],"edges":[[2,5]]})"), gk::ParseError);
  EXPECT_THROW(gk::graph_from_json(R"({"vertices":[2,3],"edges":[[2,2]]})"), gk::ParseError);
  EXPECT_THROW(gk::graph_from_json(R"({"vertices":[2,3]})"), gk::ParseError);
}

TEST(Serialization, Dot) {
  const std::string dot = gk::to_dot(graph_on({2, 3, 7, 13}, {{2, 3}}, "G2(3)"));
  EXPECT_NE(dot.find("graph \"G2(3)\""), std::string::npos);
  EXPECT_NE(dot.find("2 -- 3;"), std::string::npos);
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '-'), 2);
  for (const char* v : {"  2;", "  3;", "  7;", "  13;"}) EXPECT_NE(dot.find(v), std::string::npos) << v;

  const std::string empty = gk::to_dot(graph_on({2, 3, 5}, {}));
  EXPECT_EQ(empty.find("--"), std::string::npos);

  const std::string clustered = gk::to_dot(gk::graph_of("G2(3)"));
  EXPECT_NE(clustered.find("subgraph cluster_"), std::string::npos);
  EXPECT_EQ(gk::to_dot(gk::graph_of("G2(3)")), clustered);
}

TEST(Serialization, DotQuotesLabels) { EXPECT_EQ(gk::dot_quote(R"(pi(q+1)\{3})"), R"("pi(q+1)\\{3}")"); }
