#include "xclin/homsearch.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace xclin {

std::optional<GroupHom> generator_image_extension(const GroupPtr& domain,
                                                  const std::vector<int>& domain_gens,
                                                  const std::vector<int>& images,
                                                  const GroupPtr& codomain) {
  if (domain_gens.size() != images.size())
    throw std::invalid_argument("generator_image_extension: length mismatch");
  std::vector<int> table(domain->order(), -1);
  table[0] = 0;
  // Seed; conflicting seeds for the same generator already rule out a hom.
  for (size_t i = 0; i < domain_gens.size(); ++i) {
    int& slot = table[domain_gens[i]];
    if (slot >= 0 && slot != images[i]) return std::nullopt;
    slot = images[i];
  }
  std::vector<char> queued(domain->order(), 0);
  std::deque<int> todo = {0};
  queued[0] = 1;
  while (!todo.empty()) {
    int w = todo.front();
    todo.pop_front();
    for (size_t i = 0; i < domain_gens.size(); ++i) {
      int wg = domain->mul(w, domain_gens[i]);
      int img = codomain->mul(table[w], images[i]);
      if (table[wg] < 0)
        table[wg] = img;
      else if (table[wg] != img)
        return std::nullopt;
      if (!queued[wg]) {
        queued[wg] = 1;
        todo.push_back(wg);
      }
    }
  }
  for (int v : table)
    if (v < 0)
      throw std::invalid_argument(
          "generator_image_extension: generators do not generate the domain");
  // A conflict-free closure is the graph of a subgroup of domain × codomain
  // meeting every domain fiber once, i.e. a homomorphism.
  return GroupHom{domain, codomain, std::move(table)};
}

namespace {

// Backtracking over images of a fixed generating sequence.
// `order_filter(go, bo)` decides whether an element of order `bo` is an
// acceptable image of a generator of order `go`.
void search_maps(const GroupPtr& a, const GroupPtr& b,
                 const std::function<bool(int, int)>& order_filter,
                 const std::function<bool(const GroupHom&)>& visit) {
  std::vector<int> gens = minimal_generating_sequence(a);
  if (gens.empty()) {
    visit(GroupHom::trivial(a, b));
    return;
  }
  const size_t k = gens.size();
  std::vector<int> images(k, 0);
  // depth-first over image tuples, lexicographic
  std::function<bool(size_t)> rec = [&](size_t depth) -> bool {
    if (depth == k) {
      auto hom = generator_image_extension(a, gens, images, b);
      if (hom) return visit(*hom);
      return true;
    }
    int go = a->element_order(gens[depth]);
    for (int cand = 0; cand < b->order(); ++cand) {
      if (!order_filter(go, b->element_order(cand))) continue;
      images[depth] = cand;
      if (!rec(depth + 1)) return false;
    }
    return true;
  };
  rec(0);
}

bool iso_prefilters_pass(const GroupPtr& a, const GroupPtr& b) {
  if (a->order() != b->order()) return false;
  if (a->element_order_histogram() != b->element_order_histogram()) return false;
  if (abelian_invariants(a) != abelian_invariants(b)) return false;
  if (center(a).order() != center(b).order()) return false;
  if (derived_subgroup(a).order() != derived_subgroup(b).order()) return false;
  return true;
}

}  // namespace

std::vector<GroupHom> homomorphisms(const GroupPtr& a, const GroupPtr& b) {
  std::vector<GroupHom> out;
  search_maps(
      a, b, [](int go, int bo) { return go % bo == 0; },
      [&](const GroupHom& h) {
        out.push_back(h);
        return true;
      });
  return out;
}

void for_each_isomorphism(const GroupPtr& a, const GroupPtr& b,
                          const std::function<bool(const GroupHom&)>& visit) {
  if (!iso_prefilters_pass(a, b)) return;
  search_maps(
      a, b, [](int go, int bo) { return go == bo; },
      [&](const GroupHom& h) {
        if (!h.is_bijective()) return true;
        return visit(h);
      });
}

std::vector<GroupHom> isomorphisms_between(const GroupPtr& a, const GroupPtr& b) {
  std::vector<GroupHom> out;
  for_each_isomorphism(a, b, [&](const GroupHom& h) {
    out.push_back(h);
    return true;
  });
  return out;
}

bool exists_isomorphism(const GroupPtr& a, const GroupPtr& b) {
  bool found = false;
  for_each_isomorphism(a, b, [&](const GroupHom&) {
    found = true;
    return false;
  });
  return found;
}

AutomorphismGroup automorphism_group(const GroupPtr& g) {
  std::vector<Permutation> tables;
  for (const GroupHom& h : isomorphisms_between(g, g))
    tables.emplace_back(h.table);
  // identity automorphism is the identity permutation; closure holds since
  // automorphism tables compose as permutations under the same convention
  GroupPtr aut = Group::from_elements(tables, tables);
  if (aut->order() != static_cast<int>(tables.size()))
    throw std::logic_error("automorphism_group: closure mismatch");
  return AutomorphismGroup{aut, g};
}

}  // namespace xclin
