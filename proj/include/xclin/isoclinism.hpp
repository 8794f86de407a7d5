#pragma once

#include <optional>
#include <vector>

#include "xclin/catalog.hpp"
#include "xclin/group.hpp"

namespace xclin {

struct GroupIsoclinismWitness {
  QuotientGroup left_quotient;   // M / Z(M)
  QuotientGroup right_quotient;  // N / Z(N)
  GroupHom mu;                   // between the quotient carriers
  GroupHom zeta;                 // [M,M] -> [N,N], as subgroup groups
  GroupPtr left_derived;
  GroupPtr right_derived;
};

// Searches all isomorphisms mu between the central quotients; for each,
// extends zeta on commutator generators by zeta([x,y]) := [mu x, mu y].
// The first witness in deterministic search order is returned.
std::optional<GroupIsoclinismWitness> are_isoclinic_groups(const GroupPtr& m,
                                                           const GroupPtr& n);

// Sorted ids i with catalog(order, i) isoclinic to g.
std::vector<int> isoclinic_family(const GroupPtr& g, int order,
                                  const Catalog& cat = Catalog::builtin());

}  // namespace xclin
