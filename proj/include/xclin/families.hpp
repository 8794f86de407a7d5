#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "xclin/catalog.hpp"
#include "xclin/rational.hpp"

namespace xclin {

// Partitions {0..count-1} into equivalence classes of a transitive relation.
// jobs > 1 evaluates the pairwise checks on worker threads; the resulting
// partition is independent of the job count. Classes and members ascending.
std::vector<std::vector<int>> partition_by_relation(
    int count, const std::function<bool(int, int)>& related, int jobs = 1);

struct FamilyEntry {
  // Group scope: representative = (order, id) and members are catalog ids.
  // XMod scope: representative/members are 1-based positions in the list.
  std::optional<CatalogId> representative_id;
  int representative_position = 0;
  std::vector<int> members;
  std::optional<Rational> degree;
};

struct FamilyReport {
  std::string relation;  // "isoclinism" | "exterior"
  bool group_scope = true;
  int order = 0;             // group scope
  int size_s = 0, size_r = 0;  // xmod scope
  std::vector<FamilyEntry> families;

  std::string to_table() const;
  std::string to_tsv() const;
  std::string to_json() const;
  static FamilyReport from_json(const std::string& text);
};

FamilyReport group_family_report(int order, const std::string& relation, int jobs = 1,
                                 const Catalog& cat = Catalog::builtin());

FamilyReport xmod_family_report(int size_s, int size_r, const std::string& relation,
                                int jobs = 1, const Catalog& cat = Catalog::builtin());

}  // namespace xclin
