#include "gk/gk.hpp"
#include "naive.hpp"

#include <gtest/gtest.h>

using gk::Prime;

namespace {

std::vector<std::uint64_t> powers(std::uint64_t p, unsigned k_max) {
  std::vector<std::uint64_t> out;
  std::uint64_t q = 1;
  for (unsigned k = 1; k <= k_max; ++k) out.push_back(q *= p);
  return out;
}

gk::PrimeGraph of(const std::string& family, std::uint64_t q) { return gk::graph_of(family + "(" + std::to_string(q) + ")"); }

// Primes sharing a class label must be adjacent.
void expect_classes_are_cliques(const gk::PrimeGraph& g) {
  ASSERT_FALSE(g.classes().empty()) << g.group();
  std::vector<Prime> covered;
  for (const auto& c : g.classes()) {
    for (std::size_t i = 0; i < c.primes.size(); ++i) {
      covered.push_back(c.primes[i]);
      for (std::size_t j = i + 1; j < c.primes.size(); ++j)
        EXPECT_TRUE(g.adjacent(c.primes[i], c.primes[j])) << g.group() << " " << c.label;
    }
  }
  std::sort(covered.begin(), covered.end());
  EXPECT_EQ(covered, g.vertices()) << g.group();
}

} // namespace

TEST(G2, FigureForQ3) {
  const auto g = of("G2", 3);
  EXPECT_EQ(g.vertices(), (std::vector<Prime>{2, 3, 7, 13}));
  EXPECT_EQ(g.edges().size(), 1u);
  EXPECT_TRUE(g.adjacent(2, 3));
}

TEST(G2, ClassesAndIsolatedTori) {
  for (std::uint64_t q : powers(3, 6)) {
    const auto g = of("G2", q);
    expect_classes_are_cliques(g);
    for (Prime r : g.vertices()) {
      if (r == 3) continue;
      const unsigned e = naive::e(r, q);
      ASSERT_TRUE(e == 1 || e == 2 || e == 3 || e == 6) << q << " " << r;
      for (Prime s : g.vertices()) {
        if (s == r || s == 3) continue;
        const unsigned f = naive::e(s, q);
        const bool want = e == f || ((e == 1 || e == 2) && (f == 1 || f == 2));
        EXPECT_EQ(g.adjacent(r, s), want) << q << " " << r << " " << s;
      }
      EXPECT_EQ(g.adjacent(r, 3), e <= 2) << q << " " << r;
    }
  }
}

TEST(F4, EvenQ) {
  const auto g = of("F4", 2);
  EXPECT_TRUE(g.neighbors(13).empty());
  EXPECT_TRUE(g.neighbors(17).empty());
  for (std::uint64_t q : powers(2, 6)) {
    const auto h = of("F4", q);
    expect_classes_are_cliques(h);
    for (Prime r : h.vertices())
      if (r != 2) {
        const unsigned e = naive::e(r, q);
        EXPECT_EQ(h.adjacent(r, 2), e != 8 && e != 12) << q << " " << r;
      }
  }
}

TEST(TwoF4, TorusFactorsMultiplyToOrderPart) {
  for (std::uint64_t q : {8, 32, 128}) {
    const auto m = gk::twof4_tori(q);
    gk::PrimeSet from_tori;
    for (const auto& f : m) from_tori = from_tori.united(gk::prime_divisors(f));
    from_tori.insert(2);
    EXPECT_EQ(from_tori, gk::prime_spectrum(gk::parse_group_id("2F4(" + std::to_string(q) + ")"))) << q;
    EXPECT_EQ(m[4] * m[5], gk::pow(gk::big(q), 4) - gk::pow(gk::big(q), 2) + 1);  // m5 m6 = q^4 - q^2 + 1
  }
  EXPECT_THROW(gk::twof4_tori(2), gk::ConstraintError);
  EXPECT_THROW(gk::twof4_tori(16), gk::ConstraintError);
}

TEST(TwoF4, Structure) {
  for (std::uint64_t q : {8, 32, 128}) {
    const auto g = of("2F4", q);
    expect_classes_are_cliques(g);
    EXPECT_TRUE(g.adjacent(2, 3)) << q;
  }
  // m5(8) = 64 - 32 + 8 - 4 + 1 = 37, m6(8) = 64 + 32 + 8 + 4 + 1 = 109, q^2 + 1 = 65.
  const auto g = of("2F4", 8);
  EXPECT_TRUE(g.neighbors(37).empty());
  EXPECT_TRUE(g.neighbors(109).empty());
  EXPECT_TRUE(g.adjacent(5, 13));
  EXPECT_TRUE(g.adjacent(2, 5));
  EXPECT_FALSE(g.adjacent(3, 5));
}

TEST(E8, ExponentsAreInTheListedSet) {
  const std::set<unsigned> allowed{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 15, 18, 20, 24, 30};
  for (std::uint64_t q : gk::prime_powers_up_to(32)) {
    const auto g = of("E8", q);
    const auto pp = gk::as_prime_power(q);
    expect_classes_are_cliques(g);
    for (Prime r : g.vertices())
      if (r != pp->p) EXPECT_TRUE(allowed.count(naive::e(r, q))) << q << " " << r;
  }
}

TEST(E8, Q2Landmarks) {
  const auto g = of("E8", 2);
  // R20(2) = {41} from Phi_20(2) = 205 = 5 * 41; 241 = Phi_24(2) lies in R24(2).
  EXPECT_EQ(naive::primitive(20, 2), std::vector<Prime>{41});
  EXPECT_EQ(naive::primitive(24, 2), std::vector<Prime>{241});
  EXPECT_TRUE(g.adjacent(5, 41));
  EXPECT_FALSE(g.adjacent(5, 241));
  EXPECT_TRUE(g.neighbors(241).empty());
}

TEST(E8, ThetaCocliqueWhenFiveInR4) {
  for (std::uint64_t q : gk::prime_powers_up_to(32)) {
    if (!(q % 5 == 2 || q % 5 == 3)) continue;
    const auto g = of("E8", q);
    std::vector<Prime> theta{5};
    for (unsigned i : {9u, 14u, 7u, 18u, 15u, 24u, 30u}) theta.push_back(naive::primitive(i, q).front());
    EXPECT_TRUE(gk::is_coclique(g, theta)) << q;
  }
}

TEST(E8, CocliqueNumbers) {
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const auto g = of("E8", q);
    EXPECT_EQ(gk::t_at(2, g).size, 5u) << q;
    const auto t = gk::max_coclique(g);
    EXPECT_EQ(t.size, 12u) << q;
    EXPECT_TRUE(gk::is_coclique(g, t.witness));
  }
}

TEST(CrossConstruction, CompactExpansionEqualsCriterion) {
  for (std::uint64_t q : powers(3, 6)) EXPECT_EQ(gk::expand_compact(gk::compact_form(gk::Family::G2), q), of("G2", q)) << q;
  for (std::uint64_t q : powers(2, 6)) EXPECT_EQ(gk::expand_compact(gk::compact_form(gk::Family::F4), q), of("F4", q)) << q;
  for (std::uint64_t q : {8, 32, 128}) EXPECT_EQ(gk::expand_compact(gk::compact_form(gk::Family::TwoF4), q), of("2F4", q)) << q;
  for (std::uint64_t q : gk::prime_powers_up_to(32))
    EXPECT_EQ(gk::expand_compact(gk::compact_form(gk::Family::E8), q), of("E8", q)) << q;
}
