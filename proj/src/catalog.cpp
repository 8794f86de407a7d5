#include "xclin/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "xclin/homsearch.hpp"
#include "xclin/catalog_text.hpp"

namespace xclin {

Catalog Catalog::parse(const std::string& text) {
  Catalog cat;
  std::set<std::pair<int, int>> seen;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    size_t start = 0;
    for (int k = 0; k < 4; ++k) {
      size_t sep = line.find(';', start);
      if (sep == std::string::npos)
        throw CatalogError("catalog line " + std::to_string(lineno) + ": expected 5 fields");
      fields.push_back(line.substr(start, sep - start));
      start = sep + 1;
    }
    fields.push_back(line.substr(start));
    CatalogEntry e;
    try {
      e.order = std::stoi(fields[0]);
      e.id = std::stoi(fields[1]);
      e.degree = std::stoi(fields[3]);
    } catch (const std::exception&) {
      throw CatalogError("catalog line " + std::to_string(lineno) + ": bad integer field");
    }
    e.name = fields[2];
    if (e.order < 1 || e.id < 1 || e.degree < 1)
      throw CatalogError("catalog line " + std::to_string(lineno) + ": non-positive field");
    if (!seen.insert({e.order, e.id}).second)
      throw CatalogError("catalog line " + std::to_string(lineno) + ": duplicate (order,id)");
    std::string gens = fields[4];
    size_t pos = 0;
    while (pos <= gens.size()) {
      size_t sep = gens.find('|', pos);
      std::string one = gens.substr(pos, sep == std::string::npos ? std::string::npos : sep - pos);
      if (!one.empty()) {
        // validate now so malformed cycles are rejected at parse time
        try {
          Permutation::from_cycles(one, e.degree);
        } catch (const std::exception& ex) {
          throw CatalogError("catalog line " + std::to_string(lineno) + ": " + ex.what());
        }
        e.generator_cycles.push_back(one);
      }
      if (sep == std::string::npos) break;
      pos = sep + 1;
    }
    cat.entries_.push_back(std::move(e));
  }
  std::sort(cat.entries_.begin(), cat.entries_.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) {
              return std::pair(a.order, a.id) < std::pair(b.order, b.id);
            });
  cat.cache_->groups.assign(cat.entries_.size(), nullptr);
  return cat;
}

Catalog Catalog::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open catalog file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const Catalog& Catalog::builtin() {
  static Catalog cat = [] {
    if (const char* env = std::getenv("XCLIN_CATALOG")) return load_file(env);
    return parse(kDefaultCatalogText);
  }();
  return cat;
}

const CatalogEntry* Catalog::find(int order, int id) const {
  for (const auto& e : entries_)
    if (e.order == order && e.id == id) return &e;
  return nullptr;
}

bool Catalog::has_order(int order) const {
  for (const auto& e : entries_)
    if (e.order == order) return true;
  return false;
}

std::vector<int> Catalog::ids_of_order(int order) const {
  std::vector<int> ids;
  for (const auto& e : entries_)
    if (e.order == order) ids.push_back(e.id);
  return ids;
}

GroupPtr Catalog::group(int order, int id) const {
  const CatalogEntry* e = find(order, id);
  if (!e) throw CatalogError("no catalog entry (" + std::to_string(order) + "," +
                             std::to_string(id) + ")");
  size_t idx = static_cast<size_t>(e - entries_.data());
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (cache_->groups[idx]) return cache_->groups[idx];
  }
  std::vector<Permutation> gens;
  for (const auto& c : e->generator_cycles)
    gens.push_back(Permutation::from_cycles(c, e->degree));
  GroupPtr g = Group::from_generators(e->degree, std::move(gens), e->name);
  if (g->order() != e->order)
    throw CatalogError("catalog entry (" + std::to_string(order) + "," +
                       std::to_string(id) + ") instantiates to order " +
                       std::to_string(g->order()));
  const_cast<Group*>(g.get())->set_catalog_id(CatalogId{order, id});
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (!cache_->groups[idx]) cache_->groups[idx] = g;
    return cache_->groups[idx];
  }
}

CatalogId Catalog::id_group(const GroupPtr& g) const {
  if (!has_order(g->order()))
    throw CatalogError("id_group: order " + std::to_string(g->order()) +
                       " outside the catalog");
  for (int id : ids_of_order(g->order())) {
    if (exists_isomorphism(g, group(g->order(), id))) return CatalogId{g->order(), id};
  }
  throw CatalogError("id_group: no catalog group of order " +
                     std::to_string(g->order()) + " is isomorphic to the input");
}

}  // namespace xclin
