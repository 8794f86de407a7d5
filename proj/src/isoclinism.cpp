#include "xclin/isoclinism.hpp"

#include "xclin/homsearch.hpp"

namespace xclin {

std::optional<GroupIsoclinismWitness> are_isoclinic_groups(const GroupPtr& m,
                                                           const GroupPtr& n) {
  Subgroup dm = derived_subgroup(m);
  Subgroup dn = derived_subgroup(n);
  if (dm.order() != dn.order()) return std::nullopt;
  QuotientGroup qm = quotient_group(m, center(m));
  QuotientGroup qn = quotient_group(n, center(n));
  if (qm.carrier->order() != qn.carrier->order()) return std::nullopt;

  GroupPtr dm_group = dm.as_group();
  GroupPtr dn_group = dn.as_group();
  // element index translation: parent index <-> derived-subgroup-group index
  auto to_sub = [](const GroupPtr& parent, const GroupPtr& sub, int parent_elem) {
    return sub->index_of(parent->element(parent_elem));
  };

  std::optional<GroupIsoclinismWitness> witness;
  for_each_isomorphism(qm.carrier, qn.carrier, [&](const GroupHom& mu) {
    // zeta on commutator generators: [x,y] -> [mu x, mu y]
    std::vector<int> gens, images;
    const int k = qm.carrier->order();
    gens.reserve(static_cast<size_t>(k) * k);
    images.reserve(gens.capacity());
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        int cm = m->comm(qm.coset_rep[a], qm.coset_rep[b]);
        int cn = n->comm(qn.coset_rep[mu(a)], qn.coset_rep[mu(b)]);
        int gsub = to_sub(m, dm_group, cm);
        int isub = to_sub(n, dn_group, cn);
        gens.push_back(gsub);
        images.push_back(isub);
      }
    auto zeta = generator_image_extension(dm_group, gens, images, dn_group);
    if (!zeta || !zeta->is_bijective()) return true;
    witness = GroupIsoclinismWitness{qm, qn, mu, *zeta, dm_group, dn_group};
    return false;
  });
  return witness;
}

std::vector<int> isoclinic_family(const GroupPtr& g, int order, const Catalog& cat) {
  if (!cat.has_order(order))
    throw CatalogError("isoclinic_family: order outside catalog");
  std::vector<int> members;
  for (int id : cat.ids_of_order(order))
    if (are_isoclinic_groups(g, cat.group(order, id))) members.push_back(id);
  return members;
}

}  // namespace xclin
