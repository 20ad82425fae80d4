#ifndef GK_CLAIMS_HPP
#define GK_CLAIMS_HPP

#include "gk/compact.hpp"
#include "gk/criteria.hpp"
#include "gk/oracle.hpp"
#include "gk/tabulated.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace gk {

enum class ClaimStatus { Pass, Fail, Discrepancy, Skipped };

inline std::string to_string(ClaimStatus s) {
  switch (s) {
  case ClaimStatus::Pass: return "PASS";
  case ClaimStatus::Fail: return "FAIL";
  case ClaimStatus::Discrepancy: return "DISCREPANCY";
  case ClaimStatus::Skipped: return "SKIPPED";
  }
  return "?";
}

/// Where a claim lives and what it says, in our own words.
struct ClaimAnchor {
  std::string location;
  std::string statement;
};

struct ClaimReport {
  std::string id;
  std::string slug;
  std::vector<std::string> tags;
  ClaimAnchor anchor;
  std::string expected;
  std::string computed;
  nlohmann::ordered_json evidence;
  ClaimStatus status = ClaimStatus::Fail;
};

struct ClaimContext {
  double grid_scale = 1.0;
  const TabulatedRegistry* tabulated = nullptr;

  std::uint64_t scaled(std::uint64_t base) const {
    return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::llround(static_cast<double>(base) * grid_scale)));
  }
};

struct ClaimOutcome {
  ClaimStatus status;
  std::string computed;
  nlohmann::ordered_json evidence;
};

struct ClaimSpec {
  std::string id;
  std::string slug;
  std::vector<std::string> tags;
  ClaimAnchor anchor;
  std::string expected;
  std::function<ClaimOutcome(const ClaimContext&)> run;
};

namespace claims_detail {

using json = nlohmann::ordered_json;

inline json graph_json(const PrimeGraph& g) { return json::parse(to_json(g)); }

inline ClaimOutcome verdict(bool ok, std::string computed, json evidence) {
  return {ok ? ClaimStatus::Pass : ClaimStatus::Fail, std::move(computed), std::move(evidence)};
}

inline PrimeGraph graph_on(std::vector<Prime> vertices, std::vector<std::pair<Prime, Prime>> edges,
                           std::string name = "") {
  PrimeGraph g(std::move(vertices));
  for (const auto& [a, b] : edges) g.add_edge(a, b);
  g.set_group(std::move(name));
  return g;
}

inline PrimeGraph labeled(PrimeGraph g, std::string name) {
  g.set_group(std::move(name));
  return g;
}

inline std::vector<Prime> primes_of(unsigned i, std::uint64_t q) { return detail::as_primes(primitive_divisors(i, big(q))); }

inline std::string edges_str(const PrimeGraph& g) {
  std::string s = "{";
  bool first = true;
  for (const auto& [a, b] : g.edges()) {
    s += (first ? "" : ", ") + std::to_string(a) + "-" + std::to_string(b);
    first = false;
  }
  return s + "}";
}

inline std::string set_str(const std::vector<Prime>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

inline bool e8_minus_case(std::uint64_t q) { return q % 5 == 2 || q % 5 == 3; }

// Strip from `a` every prime that divides `b`; no factoring needed.
inline BigInt strip_common(BigInt a, const BigInt& b) {
  BigInt g = gcd(a, b);
  while (g > 1) {
    a /= g;
    g = gcd(a, g);
  }
  return a;
}

// ---------------------------------------------------------------- claims

inline ClaimOutcome c01(const ClaimContext&) {
  const PrimeGraph expected = graph_on({2, 3, 5}, {});
  const PrimeGraph a5 = labeled(graph_from_spectrum(spectrum_alt(5)), "Alt(5)");
  const PrimeGraph a6 = labeled(graph_from_spectrum(spectrum_alt(6)), "Alt(6)");
  const PrimeGraph a5o = labeled(graph_from_spectrum(alt_orders(5)), "Alt(5) enumerated");
  const PrimeGraph a6o = labeled(graph_from_spectrum(alt_orders(6)), "Alt(6) enumerated");
  const bool ok = a5 == expected && a6 == expected && a5o == expected && a6o == expected;
  return verdict(ok, "Gamma(A5) edges " + edges_str(a5) + ", Gamma(A6) edges " + edges_str(a6) + " on {2,3,5}",
                 {{"graphs", {graph_json(a5), graph_json(a6), graph_json(a5o), graph_json(a6o)}},
                  {"four_in_A6_not_A5", spectrum_alt(6).contains(4) && !spectrum_alt(5).contains(4)}});
}

inline ClaimOutcome c02(const ClaimContext&) {
  const PrimeGraph figure = graph_on({2, 3, 7, 13}, {{2, 3}});
  const PrimeGraph g2 = graph_of(parse_group_id("G2(3)"));
  const PrimeGraph psl = graph_of(parse_group_id("PSL2(13)"));
  const PrimeGraph oracle = labeled(graph_from_spectrum(psl2_orders(13)), "PSL2(13) enumerated");
  const bool ok = g2 == figure && psl == figure && oracle == figure;
  return verdict(ok, "G2(3) edges " + edges_str(g2) + ", PSL2(13) edges " + edges_str(psl) + ", enumerated " + edges_str(oracle),
                 {{"graphs", {graph_json(g2), graph_json(psl), graph_json(oracle)}}});
}

inline ClaimOutcome c03(const ClaimContext&) {
  const PrimeGraph a7 = graph_of(parse_group_id("Alt(7)"));
  const PrimeGraph psl = graph_of(parse_group_id("PSL2(49)"));
  const PrimeGraph oracle = labeled(graph_from_spectrum(psl2_orders(49)), "PSL2(49) enumerated");
  const bool ok = a7 == psl && psl == oracle;
  return verdict(ok, "Alt(7) " + set_str(a7.vertices()) + " " + edges_str(a7) + "; PSL2(49) " + set_str(psl.vertices()) + " " + edges_str(psl),
                 {{"graphs", {graph_json(a7), graph_json(psl), graph_json(oracle)}}});
}

inline ClaimOutcome c04(const ClaimContext&) {
  const PrimeGraph f4 = graph_of(parse_group_id("F4(2)"));
  const std::vector<Prime> pi{2, 3, 5, 7, 13, 17};
  const PrimeGraph expected = graph_on(pi, {{2, 3}, {2, 5}, {2, 7}, {3, 5}, {3, 7}});
  const bool isolated = f4.neighbors(13).empty() && f4.neighbors(17).empty();
  const bool in_classes = primes_of(12, 2) == std::vector<Prime>{13} && primes_of(8, 2) == std::vector<Prime>{17};
  const bool ok = f4.vertices() == pi && isolated && in_classes && f4 == expected;
  return verdict(ok, "pi = " + set_str(f4.vertices()) + ", edges " + edges_str(f4) + (isolated ? ", 13 and 17 isolated" : ""),
                 {{"graph", graph_json(f4)}, {"R12(2)", primes_of(12, 2)}, {"R8(2)", primes_of(8, 2)}});
}

// Grid: prime powers q <= 32.
inline ClaimOutcome c05(const ClaimContext&) {
  json rows = json::array();
  bool ok = true;
  for (std::uint64_t q : prime_powers_up_to(32)) {
    const PrimeGraph g = graph_of(parse_group_id("E8(" + std::to_string(q) + ")"));
    const auto parts = components(g);
    std::set<std::vector<Prime>> expected{primes_of(15, q), primes_of(24, q), primes_of(30, q)};
    if (!e8_minus_case(q)) expected.insert(primes_of(20, q));
    std::set<std::vector<Prime>> others(parts.components.begin() + 1, parts.components.end());
    const bool row_ok = parts.components.front().front() == 2 && others == expected &&
                        parts.count() == (e8_minus_case(q) ? 4u : 5u);
    ok = ok && row_ok;
    rows.push_back({{"q", q}, {"s", parts.count()}, {"components", parts.components}, {"ok", row_ok}});
  }
  return verdict(ok, std::to_string(rows.size()) + " values of q checked", {{"rows", rows}});
}

// Grid: q in {2, 3, 7, 8, 13}.
inline ClaimOutcome c06(const ClaimContext&) {
  json rows = json::array();
  bool ok = true;
  for (std::uint64_t q : {2, 3, 7, 8, 13}) {
    const PrimeGraph g = graph_of(parse_group_id("E8(" + std::to_string(q) + ")"));
    std::vector<Prime> theta{5};
    for (unsigned i : {9u, 14u, 7u, 18u, 15u, 24u, 30u}) theta.push_back(primes_of(i, q).front());
    const bool five_in_r4 = has_order(5, big(q), 4);
    const bool row_ok = five_in_r4 && is_coclique(g, theta) && std::set<Prime>(theta.begin(), theta.end()).size() == 8;
    ok = ok && row_ok;
    rows.push_back({{"q", q}, {"coclique", theta}, {"graph", graph_json(g)}, {"ok", row_ok}});
  }
  const std::vector<Prime> q2{5, 73, 43, 127, 19, 151, 241, 331};
  ok = ok && rows[0]["coclique"].get<std::vector<Prime>>() == q2;
  return verdict(ok, "theta u {5} for q=2: " + set_str(rows[0]["coclique"].get<std::vector<Prime>>()), {{"rows", rows}});
}

// Grid: 2 <= q <= 60, 1 <= m <= 24.
inline ClaimOutcome c07(const ClaimContext& ctx) {
  const std::uint64_t q_max = std::max<std::uint64_t>(60, ctx.scaled(60));
  json exceptions = json::array();
  std::set<std::pair<std::uint64_t, unsigned>> found;
  bool agree = true;
  for (std::uint64_t q = 2; q <= q_max; ++q)
    for (unsigned m = 1; m <= 24; ++m) {
      const bool has = has_primitive_divisor(m, big(q));
      if (!has) {
        exceptions.push_back({q, m});
        found.insert({q, m});
      }
      if (has != zsigmondy_exists(big(q), m)) agree = false;
    }
  const std::set<std::pair<std::uint64_t, unsigned>> expected{{2, 1}, {3, 1}, {2, 6}};
  return verdict(found == expected && agree, "exceptions (q,m): " + exceptions.dump(),
                 {{"q_max", q_max}, {"m_max", 24}, {"exceptions", exceptions}, {"predicate_agrees", agree}});
}

// Grid: x <= 10^6.
inline ClaimOutcome c08(const ClaimContext& ctx) {
  const std::uint64_t x_max = ctx.scaled(1000000);
  json sols = json::array();
  for (const auto& s : nagell_search(x_max)) sols.push_back({s.x, s.y, s.k});
  return verdict(sols == json::array({{18, 7, 3}}), "solutions (x,y,k): " + sols.dump(), {{"x_max", x_max}, {"solutions", sols}});
}

// Grid: k <= 20.
inline ClaimOutcome c09(const ClaimContext& ctx) {
  const std::uint64_t k_max = ctx.scaled(20);
  bool ok = true;
  json residues = json::array();
  for (unsigned long k = 1; k <= k_max; ++k) {
    const BigInt q = pow(BigInt(3), 2 * k);
    const unsigned long r = mod_floor(q * q + q + 1, 8).get_ui();
    residues.push_back(r);
    ok = ok && r == 3;
  }
  return verdict(ok, "q^2+q+1 mod 8 for q = 3^{2k}, k <= " + std::to_string(k_max) + ": all 3" + std::string(ok ? "" : " (violated)"),
                 {{"k_max", k_max}, {"residues", residues}});
}

// Grid: k <= 10^5.
inline ClaimOutcome c10(const ClaimContext& ctx) {
  const std::uint64_t k_max = ctx.scaled(100000);
  std::uint64_t nine_k = 1;
  json hits = json::array();
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    nine_k = nine_k * 9 % 49;
    if ((nine_k * nine_k + 49 - nine_k + 2) % 49 == 0) hits.push_back(k);
  }
  // The residue is periodic in k with the order of 9 modulo 49.
  std::set<std::uint64_t> cycle;
  for (std::uint64_t k = 1, t = 9; k <= 21; ++k, t = t * 9 % 49) cycle.insert((t * t + 49 - t + 2) % 49);
  return verdict(hits.empty(), "no k <= " + std::to_string(k_max) + " with 49 | 9^{2k}-9^k+2",
                 {{"k_max", k_max}, {"divisible_at", hits}, {"residues_over_one_period", cycle}});
}

inline ClaimOutcome c11(const ClaimContext&) {
  const PrimeGraph g = graph_of(parse_group_id("PSL2(169)"));
  const bool ok = g.adjacent(5, 17) && spectrum_psl2(169).contains(85);
  return verdict(ok, std::string("5-17 ") + (g.adjacent(5, 17) ? "adjacent" : "nonadjacent") + "; (169+1)/2 = 85",
                 {{"graph", graph_json(g)}});
}

// Grid: prime powers q <= 1000.
inline ClaimOutcome c12(const ClaimContext& ctx) {
  const std::uint64_t q_max = ctx.scaled(1000);
  std::size_t checked = 0;
  json bad = json::array();
  for (std::uint64_t q : prime_powers_up_to(q_max)) {
    if (!e8_minus_case(q)) continue;
    ++checked;
    if (!has_order(5, big(q), 4) || (q * q + 1) % 5 != 0) bad.push_back(q);
  }
  return verdict(bad.empty(), "5 in R4(q) for all " + std::to_string(checked) + " prime powers q = +-2 (mod 5), q <= " + std::to_string(q_max),
                 {{"q_max", q_max}, {"checked", checked}, {"violations", bad}});
}

// Grid: integers 3 <= q <= 2000, both signs.
inline ClaimOutcome c13(const ClaimContext& ctx) {
  const std::uint64_t q_max = ctx.scaled(2000);
  std::size_t singletons = 0, mod8_cases = 0;
  json bad = json::array();
  for (std::uint64_t q = 3; q <= q_max; ++q)
    for (int sign : {1, -1}) {
      auto res = restriction_residues(big(q), sign);
      if (!res) continue;
      ++singletons;
      bool row_ok = res->mod6 == 1;
      if (q % 8 == 1) {
        ++mod8_cases;
        row_ok = row_ok && (res->mod8 == 1 || res->mod8 == 3);
      }
      if (!row_ok) bad.push_back({q, sign, res->prime.get_str()});
    }
  return verdict(bad.empty(), std::to_string(singletons) + " singleton cases, " + std::to_string(mod8_cases) + " with q = 1 (mod 8)",
                 {{"q_max", q_max}, {"singletons", singletons}, {"mod8_cases", mod8_cases}, {"violations", bad}});
}

inline ClaimOutcome c14(const ClaimContext& ctx) {
  const TabulatedRegistry& reg = ctx.tabulated ? *ctx.tabulated : default_tabulated();
  const TabulatedGraph* t = reg.find("PSL3(4)");
  if (!t) return {ClaimStatus::Fail, "no tabulated graph for PSL3(4)", {}};
  const PrimeGraph psl3 = labeled(t->graph(), "PSL3(4)");
  const PrimeGraph psl2 = graph_of(parse_group_id("PSL2(49)"));
  const auto diff = graph_diff(psl3, psl2);
  json ev{{"graphs", {graph_json(psl3), graph_json(psl2)}},
          {"source", t->source},
          {"only_in_PSL3(4)", diff.only_in_first_edges},
          {"only_in_PSL2(49)", diff.only_in_second_edges}};
  if (psl3 == psl2) return {ClaimStatus::Pass, "graphs equal", ev};
  return {ClaimStatus::Discrepancy,
          "graphs differ: PSL3(4) edges " + edges_str(psl3) + ", PSL2(49) edges " + edges_str(psl2), ev};
}

// Grid: prime powers q <= 32 with q = +-2 (mod 5).
inline ClaimOutcome c15(const ClaimContext&) {
  json rows = json::array();
  bool ok = true;
  for (std::uint64_t q : prime_powers_up_to(32)) {
    if (!e8_minus_case(q)) continue;
    const PrimeGraph g = graph_of(parse_group_id("E8(" + std::to_string(q) + ")"));
    const auto first = components(g).components.front();
    const auto r20 = primes_of(20, q);
    const bool row_ok = !r20.empty() && std::includes(first.begin(), first.end(), r20.begin(), r20.end());
    ok = ok && row_ok;
    rows.push_back({{"q", q}, {"R20", r20}, {"ok", row_ok}});
  }
  return verdict(ok, std::to_string(rows.size()) + " values of q; R20(q) inside the component of 2", {{"rows", rows}});
}

// Grid: k <= 1000.
inline ClaimOutcome c16(const ClaimContext& ctx) {
  const std::uint64_t k_max = ctx.scaled(1000);
  std::uint64_t t = 1;
  json bad = json::array();
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    t = t * 9 % 5;
    if (t != (k % 2 ? 4u : 1u)) bad.push_back(k);
  }
  return verdict(bad.empty(), "3^{2k} = (-1)^k (mod 5) for k <= " + std::to_string(k_max), {{"k_max", k_max}, {"violations", bad}});
}

// Grid: q in {2, 3, 4, 5}.
inline ClaimOutcome c17(const ClaimContext&) {
  json rows = json::array();
  bool ok = true;
  std::string summary;
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const PrimeGraph g = graph_of(parse_group_id("E8(" + std::to_string(q) + ")"));
    const auto t2 = t_at(2, g);
    const auto t = max_coclique(g);
    const bool row_ok = t2.size == 5 && t.size >= 11 && is_coclique(g, t.witness) && is_coclique(g, t2.witness);
    ok = ok && row_ok;
    rows.push_back({{"q", q}, {"t2", t2.size}, {"t2_witness", t2.witness}, {"t", t.size}, {"t_witness", t.witness},
                    {"graph", graph_json(g)}});
    summary += (summary.empty() ? "" : "; ") + std::string("q=") + std::to_string(q) + ": t(2)=" + std::to_string(t2.size) +
               ", t=" + std::to_string(t.size);
  }
  return verdict(ok, summary, {{"rows", rows}});
}

inline ClaimOutcome c18(const ClaimContext&) {
  CandidateBounds bounds;
  bounds.q_max = 256;
  const auto found = enumerate_candidates(PrimeSet{2, 3, 5, 7, 13, 17}, bounds);
  json missing = json::array(), listed = json::array();
  for (const char* name : {"PSU4(4)", "PSU3(17)", "PSL2(169)", "PSp4(13)", "PSL3(16)", "PSp6(4)", "POmega8+(4)", "F4(2)"}) {
    const GroupId g = parse_group_id(name);
    if (std::find(found.begin(), found.end(), g) == found.end()) missing.push_back(name);
  }
  for (const auto& g : found) listed.push_back(g.str());
  return verdict(missing.empty(), std::to_string(found.size()) + " candidates; all 8 listed groups present" + std::string(missing.empty() ? "" : " (missing some)"),
                 {{"q_max", bounds.q_max}, {"n_max", bounds.n_max}, {"candidates", listed}, {"missing", missing}});
}

// Grid: prime powers q <= 1000.
inline ClaimOutcome c19(const ClaimContext& ctx) {
  const std::uint64_t q_max = ctx.scaled(1000);
  json bad = json::array();
  std::size_t n = 0;
  for (std::uint64_t q : prime_powers_up_to(q_max)) {
    ++n;
    const BigInt f = e8_order_polynomial(big(q));
    if (order(parse_group_id("E8(" + std::to_string(q) + ")")) != f || recover_q_from_order(f) != q ||
        recover_q_from_order(f + 1).has_value())
      bad.push_back(q);
  }
  return verdict(bad.empty(), "round trip exact for " + std::to_string(n) + " prime powers", {{"q_max", q_max}, {"violations", bad}});
}

// Grid: 3 <= i <= 30, 2 <= a <= 40.
inline ClaimOutcome c20(const ClaimContext&) {
  json bad = json::array();
  for (unsigned i = 3; i <= 30; ++i)
    for (long a = 2; a <= 40; ++a)
      if (k_value(i, a) != k_bruteforce(i, a)) bad.push_back({i, a});
  return verdict(bad.empty(), "cyclotomic formula equals definition on 28 x 39 grid", {{"violations", bad}});
}

// Grid: m*k <= 24, k >= 2, q <= 20.
inline ClaimOutcome c21(const ClaimContext&) {
  json bad = json::array(), equal_cases = json::array();
  std::size_t coprime = 0;
  for (std::uint64_t q = 2; q <= 20; ++q)
    for (unsigned m = 1; m <= 12; ++m)
      for (unsigned k = 2; m * k <= 24; ++k) {
        const BigInt qk = pow(big(q), k);
        const BigInt big_side = k_bruteforce(m, qk);
        if (strip_common(k_bruteforce(m * k, big(q)), big_side) != 1) bad.push_back({"R_mk(q) <= R_m(q^k)", q, m, k});
        if (std::gcd(m, k) != 1) continue;
        ++coprime;
        const BigInt small_side = k_bruteforce(m, big(q));
        if (strip_common(small_side, big_side) != 1) bad.push_back({"R_m(q) <= R_m(q^k)", q, m, k});
        if (strip_common(big_side, small_side) == 1) equal_cases.push_back({q, m, k});
      }
  return verdict(bad.empty(),
                 "both inclusions hold; " + std::to_string(equal_cases.size()) + " of " + std::to_string(coprime) +
                     " coprime cases have equal sets",
                 {{"violations", bad}, {"coprime_cases", coprime}, {"equal_cases", equal_cases}});
}

// Grid: odd r in R_i(q), i <= 24, q <= 20.
inline ClaimOutcome c22(const ClaimContext&) {
  json bad = json::array();
  std::size_t primes = 0;
  for (std::uint64_t q = 2; q <= 20; ++q)
    for (unsigned i = 1; i <= 24; ++i)
      for (const BigInt& r : primitive_divisors(i, big(q))) {
        if (r == 2) continue;
        ++primes;
        if (mod_floor(r - 1, i) != 0) bad.push_back({r.get_str(), i, q});
      }
  return verdict(bad.empty(), std::to_string(primes) + " odd primitive divisors, all = 1 mod i", {{"checked", primes}, {"violations", bad}});
}

// Grid: odd primes r < 200, 1 <= i <= 24, 2 <= q <= 30.
inline ClaimOutcome c23(const ClaimContext&) {
  json bad = json::array();
  std::size_t checked = 0;
  for (long r = 3; r < 200; r += 2) {
    if (!is_prime(r)) continue;
    for (long q = 2; q <= 30; ++q) {
      if (q % r == 0) continue;
      const unsigned long e = mult_order(r, q).get_ui();
      for (unsigned i = 1; i <= 24; ++i) {
        ++checked;
        const bool divides = powm(BigInt(q), BigInt(i), BigInt(r)) == 1;
        if (divides != (i % e == 0)) bad.push_back({r, q, i});
      }
    }
  }
  return verdict(bad.empty(), std::to_string(checked) + " triples (r,q,i)", {{"checked", checked}, {"violations", bad}});
}

inline ClaimOutcome c24(const ClaimContext&) {
  json rows = json::array();
  bool ok = true;
  const std::vector<std::pair<std::string, bool>> cases = {
      {"E8(2)", true}, {"E8(3)", true}, {"E8(4)", true}, {"G2(5)", true}, {"G2(4)", false}, {"Sz(8)", false}, {"F4(2)", true},
      {"2F4(8)", true}, {"2G2(27)", true}};
  for (const auto& [name, want] : cases) {
    const bool got = is_unisingular(parse_group_id(name));
    ok = ok && got == want;
    rows.push_back({{"group", name}, {"unisingular", got}});
  }
  return verdict(ok, "lookup matches the listed families", {{"rows", rows}});
}

inline ClaimOutcome skipped(const ClaimContext&) {
  return {ClaimStatus::Skipped, "requires representation theory; not replayed", {}};
}

} // namespace claims_detail

/// The registry, in report order.
inline const std::vector<ClaimSpec>& claim_registry() {
  using namespace claims_detail;
  static const std::vector<ClaimSpec> registry = {
      {"c01", "a5-a6", {"alt", "oracle"},
       {"introduction, alternating groups", "the prime graphs of A5 and A6 coincide and have no edges on {2,3,5}; 4 is an element order of A6 but not A5"},
       "Gamma(A5) = Gamma(A6) = empty graph on {2,3,5}", c01},
      {"c02", "g2_3-psl2_13", {"g2", "psl2", "oracle"},
       {"G2(3) figure and the remark on PSL2(13)", "Gamma(G2(3)) has vertices 2,3,7,13 and the single edge 2-3, and equals Gamma(PSL2(13))"},
       "vertices {2,3,7,13}, edges {2-3} for G2(3), PSL2(13) and the SL2(13) enumeration", c02},
      {"c03", "a7-psl2_49", {"alt", "psl2", "oracle"},
       {"introduction, alternating groups with n and n-2 prime", "for n = 7 the graph of A_n equals that of PSL2(49)"},
       "Gamma(A7) = Gamma(PSL2(49)), checked against matrix enumeration", c03},
      {"c04", "f4_2-isolated", {"f4"},
       {"F4(2) case", "pi(F4(2)) = {2,3,5,7,13,17}, 13 in R12(2), 17 in R8(2), and 13, 17 are isolated"},
       "pi = {2,3,5,7,13,17}; edges {2-3,2-5,2-7,3-5,3-7}", c04},
      {"c05", "e8-components", {"e8", "components"},
       {"E8 case, components", "for q = +-2 (mod 5) the components other than pi_1 are R15(q), R24(q), R30(q)"},
       "s = 4 with {pi1, R15, R24, R30} when q = +-2 (mod 5), else s = 5 with R20 added; prime powers q <= 32", c05},
      {"c06", "e8-theta-coclique", {"e8", "coclique"},
       {"E8 case, 5 in R4(q)", "5 together with one primitive divisor for each i in {9,14,7,18,15,24,30} is a coclique of size 8"},
       "verified coclique of size 8 for q in {2,3,7,8,13}; for q = 2 it is {5,73,43,127,19,151,241,331}", c06},
      {"c07", "zsigmondy-exceptions", {"numtheory", "zsigmondy"},
       {"Bang-Zsigmondy lemma", "R_m(q) is nonempty except for (q,m) = (2,1), (3,1), (2,6)"},
       "exception set {(2,1),(3,1),(2,6)} over 2 <= q <= 60, 1 <= m <= 24", c07},
      {"c08", "nagell", {"numtheory"},
       {"Nagell-Ljunggren lemma", "x^2+x+1 = y^k with k > 1 only for x = 18, y = 7, k = 3"},
       "solutions with x <= 10^6: exactly (18,7,3)", c08},
      {"c09", "mod8-power-of-9", {"numtheory", "g2"},
       {"G2 case, q a power of 9", "q^2+q+1 = 3 (mod 8) when q = 3^{2k}"},
       "q^2+q+1 = 3 (mod 8) for q = 3^{2k}, k <= 20", c09},
      {"c10", "no-49-divisor", {"numtheory", "g2"},
       {"G2 case, divisibility by 49", "9^{2k} - 9^k + 2 is never divisible by 49"},
       "no k <= 10^5 with 49 | 9^{2k}-9^k+2", c10},
      {"c11", "psl2_169-adjacency", {"psl2", "f4"},
       {"F4(2) case, candidate groups", "5 and 17 are adjacent in the graph of PSL2(13^2)"},
       "5-17 is an edge of Gamma(PSL2(169))", c11},
      {"c12", "five-in-R4", {"e8", "numtheory"},
       {"E8 case, q = +-2 (mod 5)", "q = +-2 (mod 5) forces 5 in R4(q)"},
       "5 in R4(q) for every prime power q <= 1000 with q = +-2 (mod 5)", c12},
      {"c13", "restrictions-lemma", {"numtheory"},
       {"residue lemma", "if pi(q^2 +- q + 1) = {r} then r = 1 (mod 6), and r = 1 or 3 (mod 8) when q = 1 (mod 8)"},
       "congruences hold for all integers 3 <= q <= 2000 and both signs", c13},
      {"c14", "psl3_4-psl2_49", {"tabulated", "psl2"},
       {"introduction, PSL3(4)", "Gamma(PSL3(4)) = Gamma(PSL2(49))"},
       "Gamma(PSL3(4)) (tabulated) = Gamma(PSL2(49))", c14},
      {"c15", "r20-in-pi1", {"e8", "components"},
       {"E8 case, field automorphisms", "for q = +-2 (mod 5), R20(q) lies in the component of 2"},
       "R20(q) is inside the component of 2 for prime powers q <= 32, q = +-2 (mod 5)", c15},
      {"c16", "3-mod-5-powers", {"numtheory", "g2"},
       {"G2 case, q a power of 9", "3^{2k} = (-1)^k (mod 5)"},
       "3^{2k} = (-1)^k (mod 5) for k <= 1000", c16},
      {"c17", "e8-coclique-numbers", {"e8", "coclique"},
       {"E8 case, coclique bounds", "t(2, E8(q)) = 5 and t(E8(q)) >= 11"},
       "t(2,.) = 5 and t >= 11 for q in {2,3,4,5}; exact t recorded", c17},
      {"c18", "f4_2-candidates", {"f4", "candidates"},
       {"F4(2) case, candidate list", "the simple groups with prime spectrum in {2,3,5,7,13,17} include PSU4(4), PSU3(17), PSL2(13^2), PSp4(13), PSL3(16), PSp6(4), POmega8+(4), F4(2)"},
       "all eight listed groups appear among the enumerated candidates", c18},
      {"c19", "e8-order-injective", {"e8", "numtheory"},
       {"E8 corollary, order polynomial", "f(x) = |E8(x)| is strictly increasing for x >= 1, so |E8(q)| determines q"},
       "recover_q_from_order(f(q)) = q for prime powers q <= 1000", c19},
      {"c20", "k-formula", {"numtheory"},
       {"cyclotomic formula for k_i(a)", "k_i(a) = Phi_i(a) / gcd(r, Phi_{i_{r'}}(a)) for i > 2, r the largest prime divisor of i"},
       "formula equals the definition for 3 <= i <= 30, 2 <= a <= 40", c20},
      {"c21", "power-inclusion", {"numtheory", "zsigmondy"},
       {"primitive divisors of powers", "R_mk(q) is contained in R_m(q^k), and R_m(q) in R_m(q^k) when (m,k) = 1"},
       "both inclusions on m*k <= 24, q <= 20", c21},
      {"c22", "primitive-congruence", {"numtheory", "zsigmondy"},
       {"primitive divisors are 1 mod i", "every r in R_i(q) has the form ik + 1 (odd r)"},
       "r = 1 (mod i) for odd r in R_i(q), i <= 24, q <= 20", c22},
      {"c23", "divides-iff-order", {"numtheory"},
       {"order divisibility lemma", "an odd prime r divides q^i - 1 iff e(r,q) divides i"},
       "equivalence for odd r < 200, q <= 30, i <= 24", c23},
      {"c24", "unisingular-lookup", {"groups"},
       {"unisingular groups lemma", "E8(q), F4(q), 2F4(q), 2G2(q) for all q and G2(q) for odd q are unisingular; Suzuki groups are not"},
       "lookup agrees on sample groups", c24},
      {"s01", "brauer-character-dim", {"skipped"},
       {"Brauer character lemma", "dimension of fixed-point spaces computed from Brauer characters"},
       "not replayed (representation theory)", skipped},
      {"s02", "fixed-point-free-action", {"skipped"},
       {"G2 case, module constructions", "elements of a subgroup act fixed-point freely on a module"},
       "not replayed (representation theory)", skipped},
  };
  return registry;
}

inline ClaimReport make_report(const ClaimSpec& spec, const ClaimContext& ctx) {
  ClaimReport r;
  r.id = spec.id;
  r.slug = spec.slug;
  r.tags = spec.tags;
  r.anchor = spec.anchor;
  r.expected = spec.expected;
  try {
    ClaimOutcome o = spec.run(ctx);
    r.status = o.status;
    r.computed = std::move(o.computed);
    r.evidence = std::move(o.evidence);
  } catch (const std::exception& e) {
    r.status = ClaimStatus::Fail;
    r.computed = std::string("error: ") + e.what();
  }
  return r;
}

/// Runs one claim by id ("c02") or slug ("g2_3-psl2_13").
inline ClaimReport run_claim(const std::string& key, const ClaimContext& ctx = {}) {
  for (const auto& spec : claim_registry())
    if (spec.id == key || spec.slug == key) return make_report(spec, ctx);
  throw std::invalid_argument("unknown claim '" + key + "'");
}

/// All claims whose tag, id or slug equals `filter` (all when empty), in registry order.
inline std::vector<ClaimReport> run_all(const std::string& filter = "", const ClaimContext& ctx = {}) {
  std::vector<ClaimReport> out;
  for (const auto& spec : claim_registry()) {
    const bool match = filter.empty() || spec.id == filter || spec.slug == filter ||
                       std::find(spec.tags.begin(), spec.tags.end(), filter) != spec.tags.end();
    if (match) out.push_back(make_report(spec, ctx));
  }
  return out;
}

inline bool any_failed(const std::vector<ClaimReport>& reports) {
  return std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.status == ClaimStatus::Fail; });
}

inline nlohmann::ordered_json report_json(const ClaimReport& r) {
  return {{"id", r.id},
          {"slug", r.slug},
          {"tags", r.tags},
          {"anchor", {{"location", r.anchor.location}, {"statement", r.anchor.statement}}},
          {"expected", r.expected},
          {"computed", r.computed},
          {"status", to_string(r.status)},
          {"evidence", r.evidence}};
}

/// One line per report; discrepancies get a marker so they stand out.
inline std::string format_report(const ClaimReport& r) {
  std::string line = r.id + "  " + r.slug + "  " + to_string(r.status);
  if (r.status == ClaimStatus::Discrepancy) line = "!! " + line;
  return line + "\n    expected: " + r.expected + "\n    computed: " + r.computed + "\n";
}

} // namespace gk

#endif
