// Command-line front end for the gk library.

#include "gk/gk.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace {

enum class Format { Text, Dot, Json };

std::string text_graph(const gk::PrimeGraph& g) {
  std::ostringstream os;
  os << g.group() << "\nvertices:";
  for (auto v : g.vertices()) os << " " << v;
  os << "\nedges:";
  if (g.edges().empty()) os << " (none)";
  for (const auto& [a, b] : g.edges()) os << " " << a << "-" << b;
  os << "\n";
  return os.str();
}

void print_graph(const gk::PrimeGraph& g, Format f) {
  switch (f) {
  case Format::Dot: std::cout << gk::to_dot(g); break;
  case Format::Json: std::cout << gk::to_json(g) << "\n"; break;
  case Format::Text: std::cout << text_graph(g); break;
  }
}

std::string join(const std::vector<gk::Prime>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return "{" + s + "}";
}

struct Options {
  std::string data_path = gk::default_data_path();
  std::string group, group2, claim, family, pi;
  bool dot = false, json = false, all = false;
  gk::Prime at = 0;
  double grid_scale = 1.0;
  std::uint64_t q_max = 64, expand = 0;
  unsigned n_max = 20;
};

gk::PrimeGraph load_graph(const Options& o, const std::string& token) {
  const gk::GroupId g = gk::parse_group_id(token);
  if (gk::has_builtin_construction(g)) return gk::graph_of(g);
  return gk::graph_of(g, gk::TabulatedRegistry::from_file(o.data_path));
}

int run_oracle(const std::string& token) {
  const gk::GroupId g = gk::parse_group_id(token);
  gk::Spectrum brute, closed;
  std::string how;
  if (g.family == gk::Family::Alt) {
    brute = gk::alt_orders(g.n);
    closed = gk::spectrum_alt(g.n);
    how = "even permutations enumerated";
  } else if (g.family == gk::Family::PSL && g.n == 2) {
    auto e = gk::psl2_enumeration(static_cast<unsigned>(g.q()));
    brute = e.spectrum();
    closed = gk::spectrum_psl2(g.q());
    how = std::to_string(e.group_order) + " elements of PSL2 enumerated";
  } else if (g.family == gk::Family::Sz && g.q() == 8) {
    auto e = gk::sz8_enumeration();
    brute = e.spectrum();
    closed = gk::spectrum_sz(8);
    how = std::to_string(e.group_order) + " elements generated";
  } else {
    throw gk::UnsupportedError("oracle: supported groups are Alt(n<=12), PSL2(q) for q in {4,5,7,8,9,11,13,25,27,49}, Sz(8)");
  }
  std::cout << g.str() << ": " << how << "\n";
  std::cout << "orders (enumerated): " << brute.str() << "\n";
  std::cout << "orders (closed form): " << closed.str() << "\n";
  std::cout << (brute == closed ? "agree" : "DIFFER") << "\n";
  return brute == closed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prime graphs of finite simple groups"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--data", o.data_path, "tabulated graph data file");

  auto* graph = app.add_subcommand("graph", "print the prime graph of a group");
  graph->add_option("group", o.group, "group, e.g. E8(2), G2(27), PSL2(49), Alt(7), M11")->required();
  auto* dot_flag = graph->add_flag("--dot", o.dot, "Graphviz output");
  graph->add_flag("--json", o.json, "JSON output")->excludes(dot_flag);

  auto* comps = app.add_subcommand("components", "connected components of the prime graph");
  comps->add_option("group", o.group)->required();

  auto* coc = app.add_subcommand("coclique", "largest coclique, optionally through a vertex");
  coc->add_option("group", o.group)->required();
  coc->add_option("--at", o.at, "prime that the coclique must contain");

  auto* cmp = app.add_subcommand("compare", "labeled equality of two prime graphs");
  cmp->add_option("group1", o.group)->required();
  cmp->add_option("group2", o.group2)->required();

  auto* verify = app.add_subcommand("verify", "replay recorded claims");
  verify->add_option("claim", o.claim, "claim id, slug or tag");
  verify->add_flag("--all", o.all, "run every claim");
  verify->add_option("--grid-scale", o.grid_scale, "multiply the numeric grids")->check(CLI::PositiveNumber);
  verify->add_flag("--json", o.json, "JSON reports");

  auto* search = app.add_subcommand("search", "simple groups with prime spectrum inside a set");
  search->add_option("--pi", o.pi, "comma-separated primes")->required();
  search->add_option("--qmax", o.q_max, "largest q per Lie family");
  search->add_option("--nmax", o.n_max, "largest alternating degree");

  auto* oracle = app.add_subcommand("oracle", "brute-force element orders");
  oracle->add_option("group", o.group)->required();

  auto* compact = app.add_subcommand("compact", "compact form of G2, F4, 2F4 or E8");
  compact->add_option("family", o.family)->required();
  compact->add_option("--expand", o.expand, "instantiate at this q");
  auto* cdot = compact->add_flag("--dot", o.dot, "Graphviz output of the expansion");
  compact->add_flag("--json", o.json, "JSON output of the expansion")->excludes(cdot);

  CLI11_PARSE(app, argc, argv);
  const Format fmt = o.dot ? Format::Dot : o.json ? Format::Json : Format::Text;

  try {
    if (*graph) {
      print_graph(load_graph(o, o.group), fmt);
    } else if (*comps) {
      const auto g = load_graph(o, o.group);
      const auto parts = gk::components(g);
      std::cout << g.group() << ": s = " << parts.count() << "\n";
      for (std::size_t i = 0; i < parts.count(); ++i)
        std::cout << "pi_" << i + 1 << " = " << join(parts.components[i]) << "\n";
    } else if (*coc) {
      const auto g = load_graph(o, o.group);
      const auto r = o.at ? gk::t_at(o.at, g) : gk::max_coclique(g);
      std::cout << (o.at ? "t(" + std::to_string(o.at) + ", " + g.group() + ")" : "t(" + g.group() + ")") << " = " << r.size
                << "\nwitness: " << join(r.witness) << "\n";
    } else if (*cmp) {
      const auto a = load_graph(o, o.group);
      const auto b = load_graph(o, o.group2);
      if (a == b) {
        std::cout << "equal\n";
        return 0;
      }
      const auto d = gk::graph_diff(a, b);
      std::cout << "different\n";
      auto edges = [](const auto& es) {
        std::string s;
        for (const auto& [x, y] : es) s += " " + std::to_string(x) + "-" + std::to_string(y);
        return s.empty() ? std::string(" (none)") : s;
      };
      std::cout << "vertices only in " << a.group() << ": " << join(d.only_in_first_vertices) << "\n";
      std::cout << "vertices only in " << b.group() << ": " << join(d.only_in_second_vertices) << "\n";
      std::cout << "edges only in " << a.group() << ":" << edges(d.only_in_first_edges) << "\n";
      std::cout << "edges only in " << b.group() << ":" << edges(d.only_in_second_edges) << "\n";
      return 1;
    } else if (*verify) {
      if (!o.all && o.claim.empty()) throw CLI::ValidationError("verify", "give a claim id or --all");
      const auto tab = gk::TabulatedRegistry::from_file(o.data_path);
      gk::ClaimContext ctx{o.grid_scale, &tab};
      const auto reports = gk::run_all(o.all ? "" : o.claim, ctx);
      if (reports.empty()) std::cerr << "no claim matches '" << o.claim << "'\n";
      std::size_t discrepancies = 0;
      for (const auto& r : reports) {
        if (r.status == gk::ClaimStatus::Discrepancy) ++discrepancies;
        if (o.json) std::cout << gk::report_json(r).dump() << "\n";
        else std::cout << gk::format_report(r);
      }
      if (!o.json && discrepancies)
        std::cout << "\n" << discrepancies << " DISCREPANCY report(s): computed data disagrees with the recorded statement\n";
      return gk::any_failed(reports) ? 1 : 0;
    } else if (*search) {
      gk::PrimeSet pi;
      std::stringstream ss(o.pi);
      for (std::string tok; std::getline(ss, tok, ',');) {
        gk::BigInt p(tok);
        if (!gk::is_prime(p)) throw gk::ParseError("'" + tok + "' is not prime");
        pi.insert(p);
      }
      gk::CandidateBounds bounds{o.q_max, o.n_max};
      for (const auto& g : gk::enumerate_candidates(pi, bounds)) std::cout << g.str() << "\n";
    } else if (*oracle) {
      return run_oracle(o.group);
    } else if (*compact) {
      const auto c = gk::compact_form(gk::parse_compact_family(o.family));
      if (o.expand) print_graph(gk::expand_compact(c, o.expand), fmt);
      else std::cout << gk::describe(c);
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
