#ifndef GK_CRITERIA_HPP
#define GK_CRITERIA_HPP

#include "gk/prime_graph.hpp"
#include "gk/tabulated.hpp"

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace gk {

/// e(r, q) as a machine integer.
inline unsigned e_of(Prime r, std::uint64_t q) {
  return static_cast<unsigned>(to_u64(mult_order(big(r), big(q))));
}

/// pi(G) as machine-word primes; graphs need every vertex below 2^64.
inline std::vector<Prime> prime_vertices(const GroupId& g) {
  std::vector<Prime> out;
  for (const BigInt& p : prime_spectrum(g)) {
    if (!fits_u64(p)) throw UnsupportedError(g.str() + ": prime " + p.get_str() + " exceeds 64 bits");
    out.push_back(to_u64(p));
  }
  return out;
}

/// The torus factors m_1..m_6 of 2F4(q), q = 2^{2n+1}.
inline std::array<BigInt, 6> twof4_tori(std::uint64_t q) {
  auto pp = as_prime_power(q);
  if (!pp || pp->p != 2 || pp->k % 2 == 0 || q <= 2) throw ConstraintError("2F4 torus factors need q = 2^{2n+1} > 2");
  const BigInt Q = big(q);
  const BigInt s = BigInt(1) << ((pp->k + 1) / 2); // sqrt(2q)
  return {Q - 1, Q + 1, Q * Q + 1, Q * Q - Q + 1, Q * Q - s * Q + Q - s + 1, Q * Q + s * Q + Q + s + 1};
}

inline const std::array<std::string, 6>& twof4_labels() {
  static const std::array<std::string, 6> labels = {"pi(q-1)",         "pi(q+1)\\{3}", "pi(q^2+1)",
                                                    "pi(q^2-q+1)\\{3}", "pi(m_5)",       "pi(m_6)"};
  return labels;
}

namespace detail {

// A vertex with the data its criterion needs. `cls` is e(r,q), or the torus
// index for 2F4; 0 marks the special vertices singled out by name.
struct ClassifiedVertex {
  Prime r;
  unsigned cls;
  std::string label;
};

inline PrimeGraph build_by_criterion(const GroupId& g, const std::vector<ClassifiedVertex>& vs,
                                     const std::function<bool(const ClassifiedVertex&, const ClassifiedVertex&)>& nonadjacent) {
  std::vector<Prime> primes;
  for (const auto& v : vs) primes.push_back(v.r);
  PrimeGraph out(primes);
  out.set_group(g.str());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!nonadjacent(vs[i], vs[j])) out.add_edge(vs[i].r, vs[j].r);
  std::map<std::string, std::vector<Prime>> by_label;
  std::vector<std::string> order;
  for (const auto& v : vs) {
    if (!by_label.count(v.label)) order.push_back(v.label);
    by_label[v.label].push_back(v.r);
  }
  std::vector<VertexClass> classes;
  for (const auto& label : order) classes.push_back({label, by_label[label]});
  out.set_classes(std::move(classes));
  return out;
}

inline bool in(unsigned v, std::initializer_list<unsigned> set) {
  for (unsigned x : set)
    if (x == v) return true;
  return false;
}

inline PrimeGraph graph_g2(const GroupId& g) {
  if (g.p != 3) throw UnsupportedError(g.str() + ": the G2 graph criterion needs q a power of 3");
  const std::uint64_t q = g.q();
  std::vector<ClassifiedVertex> vs;
  for (Prime r : prime_vertices(g)) {
    if (r == 3) vs.push_back({r, 0, "{3}"});
    else {
      unsigned e = e_of(r, q);
      vs.push_back({r, e, "R_" + std::to_string(e)});
    }
  }
  return build_by_criterion(g, vs, [](const auto& a, const auto& b) {
    if (a.cls != 0 && a.cls == b.cls) return false;
    return in(a.cls, {3, 6}) || in(b.cls, {3, 6});
  });
}

inline PrimeGraph graph_f4(const GroupId& g) {
  if (g.p != 2) throw UnsupportedError(g.str() + ": the F4 graph criterion needs q even");
  const std::uint64_t q = g.q();
  std::vector<ClassifiedVertex> vs;
  for (Prime r : prime_vertices(g)) {
    if (r == 2) vs.push_back({r, 0, "2"});
    else {
      unsigned e = e_of(r, q);
      vs.push_back({r, e, "R_" + std::to_string(e)});
    }
  }
  return build_by_criterion(g, vs, [](const auto& a, const auto& b) {
    if (a.cls == 0 || b.cls == 0) return in(a.cls == 0 ? b.cls : a.cls, {8, 12});
    if (a.cls == b.cls) return false;
    const unsigned k = std::min(a.cls, b.cls), l = std::max(a.cls, b.cls);
    return in(l, {8, 12}) || (l == 6 && in(k, {3, 4})) || (l == 4 && k == 3);
  });
}

inline PrimeGraph graph_twof4(const GroupId& g) {
  const auto m = twof4_tori(g.q());
  std::vector<ClassifiedVertex> vs;
  for (Prime r : prime_vertices(g)) {
    if (r == 2) {
      vs.push_back({r, 0, "2"});
      continue;
    }
    if (r == 3) {
      vs.push_back({r, 7, "3"});
      continue;
    }
    unsigned k = 0;
    for (unsigned i = 0; i < 6 && !k; ++i)
      if (mpz_divisible_ui_p(m[i].get_mpz_t(), static_cast<unsigned long>(r))) k = i + 1;
    if (!k) throw std::logic_error(g.str() + ": prime " + std::to_string(r) + " divides no torus factor");
    vs.push_back({r, k, twof4_labels()[k - 1]});
  }
  // cls: 0 for 2, 7 for 3, 1..6 for the torus factor.
  return build_by_criterion(g, vs, [](const auto& a, const auto& b) {
    if (a.cls == 0 || b.cls == 0) {
      const unsigned o = a.cls == 0 ? b.cls : a.cls;
      return o != 7 && o > 3;
    }
    if (a.cls == 7 || b.cls == 7) return in(a.cls == 7 ? b.cls : a.cls, {3, 5, 6});
    if (a.cls == b.cls) return false;
    const unsigned k = std::min(a.cls, b.cls), l = std::max(a.cls, b.cls);
    return !(k == 1 && (l == 2 || l == 3));
  });
}

inline PrimeGraph graph_e8(const GroupId& g) {
  const std::uint64_t q = g.q();
  std::vector<ClassifiedVertex> vs;
  for (Prime r : prime_vertices(g)) {
    if (r == 2 || r == g.p) vs.push_back({r, 0, "R"});
    else {
      unsigned e = e_of(r, q);
      vs.push_back({r, e, e <= 2 ? "R" : "R_" + std::to_string(e)});
    }
  }
  return build_by_criterion(g, vs, [](const ClassifiedVertex& a, const ClassifiedVertex& b) {
    if (a.cls == 0 && b.cls == 0) return false;
    if (a.cls == 0 || b.cls == 0) return in(a.cls == 0 ? b.cls : a.cls, {15, 20, 24, 30});
    if (a.cls == b.cls) return false;
    const ClassifiedVertex& lo = a.cls < b.cls ? a : b;
    const unsigned k = lo.cls, l = std::max(a.cls, b.cls);
    return (l == 6 && k == 5) || (in(l, {7, 14}) && k >= 3) || (l == 9 && k >= 4) ||
           (in(l, {8, 12}) && k >= 5 && k != 6) || (l == 10 && k >= 3 && !in(k, {4, 6})) ||
           (l == 18 && !in(k, {1, 2, 6})) || (l == 20 && lo.r * k != 20) || in(l, {15, 24, 30});
  });
}

} // namespace detail

/// Gamma(G): criterion families (G2, F4, 2F4, E8), closed-form spectra
/// (Alt, PSL2, Sz), otherwise the tabulated registry.
inline PrimeGraph graph_of(const GroupId& g, const TabulatedRegistry& tabulated) {
  validate(g);
  PrimeGraph out;
  switch (g.family) {
  case Family::G2: return detail::graph_g2(g);
  case Family::F4: return detail::graph_f4(g);
  case Family::TwoF4: return detail::graph_twof4(g);
  case Family::E8: return detail::graph_e8(g);
  case Family::Alt: out = graph_from_spectrum(spectrum_alt(g.n)); break;
  case Family::Sz: out = graph_from_spectrum(spectrum_sz(g.q())); break;
  case Family::PSL:
    if (g.n == 2) {
      out = graph_from_spectrum(spectrum_psl2(g.q()));
      break;
    }
    [[fallthrough]];
  default: {
    const TabulatedGraph* t = tabulated.find(g.str());
    if (!t) throw DataError(g.str() + ": no adjacency criterion and no tabulated graph");
    out = t->graph();
  }
  }
  out.set_group(g.str());
  return out;
}

inline bool has_builtin_construction(const GroupId& g) {
  switch (g.family) {
  case Family::G2: return g.p == 3;
  case Family::F4: return g.p == 2;
  case Family::TwoF4:
  case Family::E8:
  case Family::Alt:
  case Family::Sz: return true;
  case Family::PSL: return g.n == 2;
  default: return false;
  }
}

/// graph_of with the default data file, loaded only when a lookup is needed.
inline PrimeGraph graph_of(const GroupId& g) {
  if (has_builtin_construction(g)) return graph_of(g, TabulatedRegistry{});
  return graph_of(g, default_tabulated());
}

inline PrimeGraph graph_of(std::string_view token) { return graph_of(parse_group_id(token)); }

} // namespace gk

#endif
