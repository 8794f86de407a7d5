#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <numeric>
#include <thread>
#include <sstream>

#include "xclin/catalog.hpp"
#include "xclin/group.hpp"
#include "xclin/homsearch.hpp"

using namespace xclin;

namespace {

const Catalog& cat() { return Catalog::builtin(); }

int involutions(const GroupPtr& g) {
  auto h = g->element_order_histogram();
  auto it = h.find(2);
  return it == h.end() ? 0 : it->second;
}

int exponent(const GroupPtr& g) {
  int e = 1;
  for (int i = 0; i < g->order(); ++i) e = std::lcm(e, g->element_order(i));
  return e;
}

}  // namespace

TEST_CASE("every entry instantiates to its stated order") {
  int count = 0;
  for (const auto& e : cat().entries()) {
    GroupPtr g = cat().group(e.order, e.id);
    CHECK(g->order() == e.order);
    CHECK(g->catalog_id() == CatalogId{e.order, e.id});
    ++count;
  }
  CHECK(count == 55);  // 54 groups of order <= 20, plus Q40
}

TEST_CASE("expected id counts per order") {
  CHECK(cat().ids_of_order(8).size() == 5);
  CHECK(cat().ids_of_order(12).size() == 5);
  CHECK(cat().ids_of_order(16).size() == 14);
  CHECK(cat().ids_of_order(18).size() == 5);
  CHECK(cat().ids_of_order(20).size() == 5);
  CHECK(cat().ids_of_order(40) == std::vector<int>{4});
  CHECK_FALSE(cat().has_order(21));
}

TEST_CASE("groups of one order are pairwise non-isomorphic") {
  for (int order : {4, 6, 8, 9, 10, 12, 14, 16, 18, 20}) {
    auto ids = cat().ids_of_order(order);
    for (size_t i = 0; i < ids.size(); ++i)
      for (size_t j = i + 1; j < ids.size(); ++j)
        CHECK_FALSE(exists_isomorphism(cat().group(order, ids[i]),
                                       cat().group(order, ids[j])));
  }
}

// Invariant profile that pins each order-16 id to its isomorphism type:
// the five abelian ones by invariant factors, the nine non-abelian ones by
// (exponent, |Z|, Z cyclic?, |G'|, involution count, abelianization).
TEST_CASE("order 16 identification battery") {
  struct Row {
    int id;
    int exponent;
    int z_order;
    bool z_cyclic;
    int derived;
    int involutions;
    std::vector<int> abelianization;
  };
  const Row rows[] = {
      {1, 16, 16, true, 1, 1, {16}},
      {2, 4, 16, false, 1, 3, {4, 4}},
      {3, 4, 4, false, 2, 7, {2, 4}},
      {4, 4, 4, false, 2, 3, {2, 4}},
      {5, 8, 16, false, 1, 3, {2, 8}},
      {6, 8, 4, true, 2, 3, {2, 4}},
      {7, 8, 2, true, 4, 9, {2, 2}},
      {8, 8, 2, true, 4, 5, {2, 2}},
      {9, 8, 2, true, 4, 1, {2, 2}},
      {10, 4, 16, false, 1, 7, {2, 2, 4}},
      {11, 4, 4, false, 2, 11, {2, 2, 2}},
      {12, 4, 4, false, 2, 3, {2, 2, 2}},
      {13, 4, 4, true, 2, 7, {2, 2, 2}},
      {14, 2, 16, false, 1, 15, {2, 2, 2, 2}},
  };
  for (const Row& r : rows) {
    CAPTURE(r.id);
    GroupPtr g = cat().group(16, r.id);
    CHECK(exponent(g) == r.exponent);
    Subgroup z = center(g);
    CHECK(z.order() == r.z_order);
    GroupPtr zg = z.as_group();
    bool cyclic = false;
    for (int i = 0; i < zg->order(); ++i)
      if (zg->element_order(i) == zg->order()) cyclic = true;
    CHECK(cyclic == r.z_cyclic);
    CHECK(derived_subgroup(g).order() == r.derived);
    CHECK(involutions(g) == r.involutions);
    CHECK(abelian_invariants(g) == r.abelianization);
  }
}

TEST_CASE("named small groups have the right shape") {
  CHECK(cat().group(6, 1)->order() == 6);
  CHECK(center(cat().group(6, 1)).order() == 1);            // S3
  CHECK(exponent(cat().group(8, 4)) == 4);                  // Q8
  CHECK(involutions(cat().group(8, 4)) == 1);               // Q8 has one involution
  CHECK(involutions(cat().group(12, 1)) == 1);              // dicyclic C3:C4
  CHECK(involutions(cat().group(20, 1)) == 1);              // dicyclic C5:C4
  CHECK(center(cat().group(20, 3)).order() == 1);           // Frobenius F20
  CHECK(involutions(cat().group(40, 4)) == 1);              // Q40 dicyclic
  CHECK(derived_subgroup(cat().group(40, 4)).order() == 10);
  CHECK(center(cat().group(18, 1)).order() == 1);           // D18
  CHECK(derived_subgroup(cat().group(18, 4)).order() == 9); // (C3xC3):C2
}

TEST_CASE("catalog file on disk parses and matches the builtin") {
  Catalog disk = Catalog::load_file(std::string(XCLIN_DATA_DIR) + "/catalog.txt");
  CHECK(disk.entries().size() == cat().entries().size());
  for (size_t i = 0; i < disk.entries().size(); ++i) {
    CHECK(disk.entries()[i].order == cat().entries()[i].order);
    CHECK(disk.entries()[i].id == cat().entries()[i].id);
    CHECK(disk.entries()[i].generator_cycles == cat().entries()[i].generator_cycles);
  }
}

TEST_CASE("catalog parser rejects malformed input") {
  CHECK_THROWS_AS(Catalog::parse("4;1;C4;4;(1,2,3,4)\n4;1;dup;4;(1,2,3,4)\n"),
                  CatalogError);
  CHECK_THROWS_AS(Catalog::parse("4;1;C4;4;(1,2,9)\n"), CatalogError);
  CHECK_THROWS_AS(Catalog::parse("4;1;C4;4;(1,2)(2,3)\n"), CatalogError);
  CHECK_THROWS_AS(Catalog::parse("4;1;C4\n"), CatalogError);
  CHECK_THROWS_AS(Catalog::parse("x;1;C4;4;(1,2)\n"), CatalogError);
  // wrong order detected at instantiation
  Catalog bad = Catalog::parse("5;1;notC5;4;(1,2,3,4)\n");
  CHECK_THROWS_AS(bad.group(5, 1), CatalogError);
}

TEST_CASE("concurrent catalog lookups share one instantiation") {
  std::vector<std::thread> threads;
  std::vector<GroupPtr> results(8);
  for (int t = 0; t < 8; ++t)
    threads.emplace_back([&, t] { results[t] = cat().group(16, 9); });
  for (auto& th : threads) th.join();
  for (int t = 1; t < 8; ++t) CHECK(results[t] == results[0]);
}

TEST_CASE("id_group errors outside the catalog") {
  GroupPtr c21 = Group::from_generators(
      21, {Permutation::from_cycles(
              "(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21)", 21)});
  CHECK_THROWS_AS(cat().id_group(c21), CatalogError);
}
