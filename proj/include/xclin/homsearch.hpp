#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "xclin/group.hpp"

namespace xclin {

// Breadth-first closure from (identity, identity), extending known pairs
// (w, w') by (w·g, w'·g') for each seeded generator pair. Returns the
// homomorphism table iff no element receives two distinct images.
// `domain_gens` must generate the domain.
std::optional<GroupHom> generator_image_extension(const GroupPtr& domain,
                                                  const std::vector<int>& domain_gens,
                                                  const std::vector<int>& images,
                                                  const GroupPtr& codomain);

// Exhaustive, duplicate-free list of homomorphisms A -> B, by backtracking
// over generator images with element-order divisibility pruning.
std::vector<GroupHom> homomorphisms(const GroupPtr& a, const GroupPtr& b);

// All bijective homomorphisms A -> B. Order/element-order/abelian-invariant/
// |Z|/|G'| prefilters are applied before any search.
std::vector<GroupHom> isomorphisms_between(const GroupPtr& a, const GroupPtr& b);

// Lazy variant: visitor returns false to stop the search.
void for_each_isomorphism(const GroupPtr& a, const GroupPtr& b,
                          const std::function<bool(const GroupHom&)>& visit);

bool exists_isomorphism(const GroupPtr& a, const GroupPtr& b);

struct AutomorphismGroup {
  // Permutation group on the element indices of `base`; each group element
  // is an automorphism acting as a permutation of base's element table.
  GroupPtr group;
  GroupPtr base;
  // Automorphism table of a group element: the permutation itself.
  const Permutation& table(int element) const { return group->element(element); }
};

AutomorphismGroup automorphism_group(const GroupPtr& g);

}  // namespace xclin
