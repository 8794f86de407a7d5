#pragma once

#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "xclin/group.hpp"

namespace xclin {

struct CatalogError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CatalogEntry {
  int order = 0;
  int id = 0;
  std::string name;
  int degree = 0;
  std::vector<std::string> generator_cycles;
};

// Small-groups catalog. One record per line:
//   order;id;name;degree;gen1|gen2|...
// Lines starting with '#' and blank lines are skipped. Malformed cycles and
// duplicate (order,id) pairs are rejected.
class Catalog {
 public:
  static Catalog parse(const std::string& text);
  static Catalog load_file(const std::string& path);
  // Compiled-in copy of data/catalog.txt, overridable via XCLIN_CATALOG.
  static const Catalog& builtin();

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  const CatalogEntry* find(int order, int id) const;
  bool has_order(int order) const;
  std::vector<int> ids_of_order(int order) const;

  // Instantiated group, cached; carries its (order,id) and name.
  GroupPtr group(int order, int id) const;

  // The unique catalog pair whose group is isomorphic to `g`.
  CatalogId id_group(const GroupPtr& g) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::vector<GroupPtr> groups;  // parallel to entries_
  };
  std::vector<CatalogEntry> entries_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

}  // namespace xclin
