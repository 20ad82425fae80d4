#include "gk/gk.hpp"

#include <gtest/gtest.h>

using gk::DataError;

namespace {

std::string data_file(const char* name) { return std::string(GK_TEST_DATA_DIR) + "/" + name; }

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const DataError& e) {
    return e.what();
  }
  return "";
}

} // namespace

TEST(Tabulated, ShippedDataLoads) {
  const auto reg = gk::TabulatedRegistry::from_file(gk::default_data_path());
  EXPECT_GE(reg.size(), 6u);
  for (const auto& [name, t] : reg.entries()) {
    EXPECT_FALSE(t.source.empty()) << name;
    std::vector<gk::Prime> pi;
    for (const auto& p : gk::prime_spectrum(gk::parse_group_id(name))) pi.push_back(gk::to_u64(p));
    EXPECT_EQ(t.graph().vertices(), pi) << name;
  }
}

TEST(Tabulated, LookupCanonicalizesNames) {
  const auto& reg = gk::default_tabulated();
  ASSERT_NE(reg.find("PSL3(4)"), nullptr);
  ASSERT_NE(reg.find("M11"), nullptr);
  EXPECT_EQ(reg.find("PSU6(2)"), nullptr);
  EXPECT_TRUE(reg.find("PSL3(4)")->graph().edges().empty());
}

TEST(Tabulated, GraphOfUsesData) {
  const auto m11 = gk::graph_of("M11");
  EXPECT_EQ(m11.vertices(), (std::vector<gk::Prime>{2, 3, 5, 11}));
  EXPECT_TRUE(m11.adjacent(2, 3));
  EXPECT_EQ(m11.edges().size(), 1u);
  EXPECT_EQ(m11.group(), "M11");
}

TEST(Tabulated, EmptyFileIsEmptyList) {
  EXPECT_TRUE(gk::load_tabulated(data_file("empty.json")).empty());
  EXPECT_TRUE(gk::parse_tabulated("").empty());
  EXPECT_EQ(gk::TabulatedRegistry::from_file(data_file("empty.json")).size(), 0u);
}

TEST(Tabulated, BadEndpointNamesFileLineAndEntry) {
  const std::string msg = message_of([] { gk::load_tabulated(data_file("bad_endpoint.json")); });
  EXPECT_NE(msg.find("bad_endpoint.json:9:"), std::string::npos) << msg;
  EXPECT_NE(msg.find("entry 1"), std::string::npos) << msg;
  EXPECT_NE(msg.find("'J1'"), std::string::npos) << msg;
}

TEST(Tabulated, MissingSourceRejected) {
  const std::string msg = message_of([] { gk::load_tabulated(data_file("missing_source.json")); });
  EXPECT_NE(msg.find("missing_source.json:3:"), std::string::npos) << msg;
  EXPECT_NE(msg.find("source"), std::string::npos) << msg;
}

TEST(Tabulated, OtherErrors) {
  EXPECT_THROW(gk::load_tabulated(data_file("no_such_file.json")), DataError);
  EXPECT_THROW(gk::parse_tabulated("{"), DataError);
  EXPECT_THROW(gk::parse_tabulated(R"({"graphs": 3})"), DataError);
  EXPECT_THROW(gk::parse_tabulated(R"({"graphs": [{"name": "M11", "vertices": [2, 4], "edges": [], "source": "x"}]})"), DataError);
  EXPECT_THROW(gk::parse_tabulated(R"({"graphs": [{"name": "M11", "vertices": [2], "edges": [], "source": ""}]})"), DataError);
  const std::string dup = R"({"graphs": [{"name": "M11", "vertices": [2], "edges": [], "source": "a"},
                                          {"name": "M11", "vertices": [2], "edges": [], "source": "b"}]})";
  EXPECT_THROW(gk::TabulatedRegistry(gk::parse_tabulated(dup)), DataError);
}
