#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "xclin/catalog.hpp"
#include "xclin/families.hpp"

using namespace xclin;

TEST_CASE("partition driver") {
  auto same_parity = [](int a, int b) { return (a % 2) == (b % 2); };
  auto classes = partition_by_relation(6, same_parity, 1);
  REQUIRE(classes.size() == 2);
  CHECK(classes[0] == std::vector<int>{0, 2, 4});
  CHECK(classes[1] == std::vector<int>{1, 3, 5});
  // the parallel path produces the same partition
  CHECK(partition_by_relation(6, same_parity, 3) == classes);
  CHECK(partition_by_relation(0, same_parity, 2).empty());
}

TEST_CASE("group family report for order 8") {
  FamilyReport r = group_family_report(8, "isoclinism");
  // abelian family {1,2,5} and the extraspecial family {3,4}
  REQUIRE(r.families.size() == 2);
  CHECK(r.families[0].members == std::vector<int>{1, 2, 5});
  CHECK(r.families[1].members == std::vector<int>{3, 4});
  CHECK(r.families[0].degree == Rational(1));
  CHECK(r.families[1].degree == Rational(5, 8));
  CHECK(r.families.front().representative_id == CatalogId{8, 1});
}

TEST_CASE("report renders in all three formats") {
  FamilyReport r = group_family_report(8, "isoclinism");
  std::string table = r.to_table();
  CHECK(table.find("scope=groups(8)") != std::string::npos);
  CHECK(table.find("5/8") != std::string::npos);
  std::string tsv = r.to_tsv();
  CHECK(tsv.rfind("representative\tmembers\tdegree\n", 0) == 0);
  CHECK(tsv.find("3,4\t5/8") != std::string::npos);
  // json round trip
  FamilyReport back = FamilyReport::from_json(r.to_json());
  CHECK(back.relation == r.relation);
  CHECK(back.order == r.order);
  REQUIRE(back.families.size() == r.families.size());
  for (size_t i = 0; i < r.families.size(); ++i) {
    CHECK(back.families[i].members == r.families[i].members);
    CHECK(back.families[i].degree == r.families[i].degree);
    CHECK(back.families[i].representative_id == r.families[i].representative_id);
  }
  CHECK(back.to_json() == r.to_json());
}

TEST_CASE("exterior report carries exterior degrees") {
  FamilyReport r = group_family_report(8, "exterior", 2);
  // order 8: {1} cyclic, {2,4} share the symplectic pairing on C2xC2,
  // {3} D8 capable, {5} C2^3 capable
  REQUIRE(r.families.size() == 4);
  CHECK(r.families[0].members == std::vector<int>{1});
  CHECK(r.families[0].degree == Rational(1));
  CHECK(r.families[1].members == std::vector<int>{2, 4});
  CHECK(r.families[1].degree == Rational(5, 8));
  CHECK(r.families[2].members == std::vector<int>{3});
  CHECK(r.families[3].members == std::vector<int>{5});
}

TEST_CASE("relation name is validated") {
  CHECK_THROWS(group_family_report(8, "nonsense"));
  CHECK_THROWS(group_family_report(23, "isoclinism"));
}

TEST_CASE("families partition every catalog order") {
  for (int order = 1; order <= 20; ++order) {
    for (const char* rel : {"isoclinism", "exterior"}) {
      FamilyReport r = group_family_report(order, rel);
      std::vector<int> seen;
      for (const auto& f : r.families) {
        CHECK(std::is_sorted(f.members.begin(), f.members.end()));
        CHECK(f.degree.has_value());
        seen.insert(seen.end(), f.members.begin(), f.members.end());
      }
      std::sort(seen.begin(), seen.end());
      CHECK(seen == Catalog::builtin().ids_of_order(order));
    }
  }
}
