#ifndef GK_COMPACT_HPP
#define GK_COMPACT_HPP

#include "gk/criteria.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace gk {

enum class ClassKind {
  Primitive,     // R_i(q)
  PrimitiveUnion, // R_1(q) u R_2(q) u {p}
  FixedPrime,    // a single named prime
  Torus,         // pi(m_k) for 2F4, optionally without 3
};

struct CompactClass {
  std::string label;
  ClassKind kind = ClassKind::Primitive;
  unsigned index = 0; // i for R_i, k for m_k
  Prime prime = 0;    // FixedPrime
  bool without_three = false;
};

/// A vertex that belongs to whichever host class contains it and takes over
/// that host's adjacencies; extra edges apply when it lands in `when_host`.
struct ConditionalRule {
  std::string vertex;
  std::vector<std::string> hosts;
  std::string when_host;
  std::vector<std::string> extra_neighbors;
  std::string condition;
};

struct CompactGraph {
  Family family = Family::E8;
  std::vector<CompactClass> classes;
  std::vector<std::pair<std::string, std::string>> class_edges;
  std::vector<ConditionalRule> rules;

  const CompactClass* find(const std::string& label) const {
    for (const auto& c : classes)
      if (c.label == label) return &c;
    return nullptr;
  }
  std::size_t degree(const std::string& label) const {
    std::size_t d = 0;
    for (const auto& [a, b] : class_edges) d += (a == label) + (b == label);
    return d;
  }
  bool class_adjacent(const std::string& a, const std::string& b) const {
    for (const auto& [x, y] : class_edges)
      if ((x == a && y == b) || (x == b && y == a)) return true;
    return false;
  }
};

namespace detail {

inline CompactClass prim(unsigned i) { return {"R_" + std::to_string(i), ClassKind::Primitive, i, 0, false}; }
inline CompactClass fixed(Prime p, std::string label) { return {std::move(label), ClassKind::FixedPrime, 0, p, false}; }
inline CompactClass torus(unsigned k, bool without_three) {
  return {twof4_labels()[k - 1], ClassKind::Torus, k, 0, without_three};
}

inline void check_rules(const CompactGraph& c) {
  std::set<std::string> labels;
  for (const auto& cl : c.classes)
    if (!labels.insert(cl.label).second) throw std::logic_error("compact form: duplicate class " + cl.label);
  for (const auto& [a, b] : c.class_edges)
    if (!labels.count(a) || !labels.count(b)) throw std::logic_error("compact form: edge names unknown class");
  for (const auto& r : c.rules) {
    std::vector<std::string> named = r.hosts;
    named.push_back(r.vertex);
    named.insert(named.end(), r.extra_neighbors.begin(), r.extra_neighbors.end());
    if (!r.when_host.empty()) named.push_back(r.when_host);
    for (const auto& n : named)
      if (!labels.count(n)) throw std::logic_error("compact form: rule names unknown class " + n);
  }
}

} // namespace detail

/// The compact form of Gamma(G) for G2, F4, 2F4 and E8.
inline CompactGraph compact_form(Family family) {
  using detail::fixed;
  using detail::prim;
  CompactGraph c;
  c.family = family;
  switch (family) {
  case Family::G2:
    c.classes = {prim(1), prim(2), fixed(3, "{3}"), prim(3), prim(6)};
    c.class_edges = {{"R_1", "R_2"}, {"R_1", "{3}"}, {"R_2", "{3}"}};
    break;
  case Family::F4:
    c.classes = {prim(1), prim(2), prim(3), prim(4), prim(6), fixed(2, "2"), prim(8), prim(12)};
    c.class_edges = {{"R_1", "R_2"}, {"R_2", "R_6"}, {"R_1", "R_6"}, {"R_2", "R_3"}, {"R_1", "R_3"}, {"R_1", "R_4"},
                     {"R_2", "R_4"}, {"R_1", "2"},   {"R_2", "2"},   {"R_3", "2"},   {"R_6", "2"},   {"R_4", "2"}};
    break;
  case Family::TwoF4: {
    const auto& L = twof4_labels();
    c.classes = {fixed(2, "2"),         fixed(3, "3"),         detail::torus(1, false), detail::torus(2, true),
                 detail::torus(3, false), detail::torus(4, true), detail::torus(5, false), detail::torus(6, false)};
    c.class_edges = {{"2", L[2]}, {"2", L[0]}, {L[0], "3"}, {"3", L[3]}, {L[0], L[1]},
                     {"2", L[1]}, {"3", L[1]}, {"3", "2"},  {L[2], L[0]}};
    break;
  }
  case Family::E8: {
    CompactClass r{"R", ClassKind::PrimitiveUnion, 0, 0, false};
    c.classes = {r,        prim(3),  prim(4),  prim(5),  prim(6),        prim(7),  prim(8),  prim(9), prim(10),
                 prim(12), prim(14), prim(18), fixed(5, "5"), prim(20), prim(15), prim(24), prim(30)};
    c.class_edges = {{"R", "R_7"},     {"R", "R_14"},    {"R_4", "R_8"},  {"R_10", "R_6"}, {"R_10", "R_4"},
                     {"R_10", "R"},    {"R", "R_6"},     {"R_6", "R_4"},  {"R_6", "R_18"}, {"R_6", "R_8"},
                     {"R_6", "R_12"},  {"R_6", "R_3"},   {"R", "R_18"},   {"R", "R_8"},    {"R_3", "R_8"},
                     {"R", "R_12"},    {"R_4", "R_12"},  {"R_3", "R_12"}, {"R", "R_9"},    {"R_3", "R_9"},
                     {"R", "R_3"},     {"R_4", "R_3"},   {"R_5", "R_3"},  {"R_5", "R"},    {"R", "R_4"},
                     {"R_5", "R_4"}};
    c.rules = {{"5", {"R_4", "R"}, "R_4", {"R_20"}, "5 in R_4(q), i.e. q^2 = -1 (mod 5)"}};
    break;
  }
  default: throw UnsupportedError("no compact form for this family");
  }
  detail::check_rules(c);
  return c;
}

namespace detail {

inline std::vector<Prime> as_primes(const PrimeSet& s) {
  std::vector<Prime> out;
  for (const BigInt& p : s) {
    if (!fits_u64(p)) throw UnsupportedError("prime " + p.get_str() + " exceeds 64 bits");
    out.push_back(to_u64(p));
  }
  return out;
}

inline GroupId compact_group(Family family, std::uint64_t q) {
  auto pp = as_prime_power(q);
  if (!pp) throw ConstraintError("q = " + std::to_string(q) + " is not a prime power");
  GroupId g;
  g.family = family;
  g.p = pp->p;
  g.k = pp->k;
  validate(g);
  if (family == Family::G2 && g.p != 3) throw ConstraintError(g.str() + ": the G2 compact form needs q a power of 3");
  if (family == Family::F4 && g.p != 2) throw ConstraintError(g.str() + ": the F4 compact form needs q even");
  return g;
}

} // namespace detail

/// Instantiates every class at q, drops empty ones, and expands classes to cliques.
inline PrimeGraph expand_compact(const CompactGraph& c, std::uint64_t q) {
  const GroupId g = detail::compact_group(c.family, q);
  std::map<std::string, std::vector<Prime>> members;
  std::set<std::string> floating;
  for (const auto& r : c.rules) floating.insert(r.vertex);

  std::set<Prime> fixed_primes;
  for (const auto& cl : c.classes)
    if (cl.kind == ClassKind::FixedPrime && !floating.count(cl.label)) fixed_primes.insert(cl.prime);

  for (const auto& cl : c.classes) {
    std::vector<Prime> ps;
    switch (cl.kind) {
    case ClassKind::Primitive: ps = detail::as_primes(primitive_divisors(cl.index, big(q))); break;
    case ClassKind::PrimitiveUnion: {
      PrimeSet u = primitive_divisors(1, big(q)).united(primitive_divisors(2, big(q)));
      u.insert(big(g.p));
      ps = detail::as_primes(u);
      break;
    }
    case ClassKind::FixedPrime: ps = {cl.prime}; break;
    case ClassKind::Torus: {
      ps = detail::as_primes(prime_divisors(twof4_tori(q)[cl.index - 1]));
      if (cl.without_three) ps.erase(std::remove(ps.begin(), ps.end(), Prime(3)), ps.end());
      break;
    }
    }
    if (cl.kind != ClassKind::FixedPrime)
      ps.erase(std::remove_if(ps.begin(), ps.end(), [&](Prime p) { return fixed_primes.count(p) > 0; }), ps.end());
    members[cl.label] = ps;
  }

  // Floating vertices leave their host class and inherit its adjacencies.
  std::map<std::string, std::string> host_of;
  for (const auto& rule : c.rules) {
    const Prime v = members[rule.vertex].at(0);
    for (const auto& h : rule.hosts) {
      auto& hs = members[h];
      auto it = std::find(hs.begin(), hs.end(), v);
      if (it != hs.end()) {
        hs.erase(it);
        host_of[rule.vertex] = h;
        break;
      }
    }
    if (!host_of.count(rule.vertex))
      throw std::logic_error(g.str() + ": floating vertex " + rule.vertex + " found in no host class");
  }

  std::set<Prime> seen;
  std::vector<Prime> vertices;
  for (const auto& cl : c.classes)
    for (Prime p : members[cl.label]) {
      if (!seen.insert(p).second) throw std::logic_error(g.str() + ": prime " + std::to_string(p) + " in two classes");
      vertices.push_back(p);
    }
  PrimeGraph out(vertices);
  out.set_group(g.str());

  auto connect = [&](const std::vector<Prime>& a, const std::vector<Prime>& b) {
    for (Prime x : a)
      for (Prime y : b)
        if (x != y) out.add_edge(x, y);
  };
  for (const auto& cl : c.classes) connect(members[cl.label], members[cl.label]);
  for (const auto& [a, b] : c.class_edges) connect(members[a], members[b]);
  for (const auto& rule : c.rules) {
    const std::string& h = host_of[rule.vertex];
    const auto& v = members[rule.vertex];
    connect(v, members[h]);
    for (const auto& cl : c.classes)
      if (c.class_adjacent(h, cl.label)) connect(v, members[cl.label]);
    if (h == rule.when_host)
      for (const auto& extra : rule.extra_neighbors) connect(v, members[extra]);
  }

  std::vector<VertexClass> classes;
  for (const auto& cl : c.classes)
    if (!members[cl.label].empty()) classes.push_back({cl.label, members[cl.label]});
  out.set_classes(std::move(classes));
  return out;
}

inline std::string family_token(Family f) {
  switch (f) {
  case Family::G2: return "G2";
  case Family::F4: return "F4";
  case Family::TwoF4: return "2F4";
  case Family::E8: return "E8";
  default: return "?";
  }
}

inline Family parse_compact_family(const std::string& token) {
  if (token == "G2") return Family::G2;
  if (token == "F4") return Family::F4;
  if (token == "2F4") return Family::TwoF4;
  if (token == "E8") return Family::E8;
  throw UnsupportedError("no compact form for family '" + token + "' (expected G2, F4, 2F4 or E8)");
}

/// Human-readable listing of a compact form.
inline std::string describe(const CompactGraph& c) {
  std::string s = family_token(c.family) + " compact form\nclasses:";
  for (const auto& cl : c.classes) s += " " + cl.label;
  s += "\nclass edges:\n";
  for (const auto& [a, b] : c.class_edges) s += "  " + a + " -- " + b + "\n";
  for (const auto& r : c.rules) {
    s += "rule: " + r.vertex + " joins the first of";
    for (const auto& h : r.hosts) s += " " + h;
    s += " containing it; if " + r.condition + ", also " + r.vertex + " --";
    for (const auto& e : r.extra_neighbors) s += " " + e;
    s += "\n";
  }
  return s;
}

} // namespace gk

#endif
