#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "xclin/catalog.hpp"
#include "xclin/group.hpp"
#include "xclin/presentation.hpp"
#include "xclin/rational.hpp"

namespace xclin {

// The non-abelian exterior product M ∧ N of two normal subgroups of a common
// ambient group, realized as a permutation group via coset enumeration of the
// element-indexed presentation, together with the full pairing table
// lambda : M × N -> M ∧ N.
struct ExteriorPairing {
  GroupPtr ambient;
  Subgroup left;   // M
  Subgroup right;  // N
  GroupPtr wedge;  // M ∧ N
  // lambda[(position of m in left) * |N| + (position of n in right)]
  // = wedge element index of m ∧ n.
  std::vector<int> lambda;
  Presentation presentation;  // one generator per (m,n) pair
  std::vector<int> left_position;   // ambient element -> position in left, -1
  std::vector<int> right_position;  // ambient element -> position in right, -1

  int pair_generator(int m_pos, int n_pos) const {
    return m_pos * right.order() + n_pos;
  }
  // m, n are ambient element indices.
  int pairing(int m, int n) const {
    return lambda[pair_generator(left_position[m], right_position[n])];
  }
};

using ExteriorPairingPtr = std::shared_ptr<const ExteriorPairing>;

// Enumeration bound used when a call passes max_cosets = 0. Starts at
// 1,000,000; the CLI overrides it via --max-cosets.
int default_max_cosets();
void set_default_max_cosets(int bound);

ExteriorPairingPtr exterior_product(const GroupPtr& g, const Subgroup& m,
                                    const Subgroup& n, int max_cosets = 0);

// G ∧ G, cached per group (keyed by element table).
ExteriorPairingPtr exterior_square(const GroupPtr& g, int max_cosets = 0);

// Z∧(G) = {g : g ∧ x = 1 for all x}; always contained in Z(G).
Subgroup exterior_center(const GroupPtr& g);

Rational exterior_degree(const GroupPtr& g);

// Canonical map kappa : M ∧ N -> G with m ∧ n -> [m,n]; image is [M,N].
GroupHom commutator_image(const ExteriorPairing& p);

struct ExteriorIsoclinismWitness {
  QuotientGroup left_quotient;   // M / Z∧(M)
  QuotientGroup right_quotient;  // N / Z∧(N)
  GroupHom mu;                   // between the quotient carriers
  GroupHom zeta;                 // M∧M -> N∧N
};

std::optional<ExteriorIsoclinismWitness> are_exterior_isoclinic_groups(
    const GroupPtr& m, const GroupPtr& n);

std::vector<int> exterior_isoclinic_family(const GroupPtr& g, int order,
                                           const Catalog& cat = Catalog::builtin());

// A group whose exterior center is trivial, i.e. a capable group. Every
// group is exterior isoclinic to one: G ≈ G/Z∧(G) and the epicentral
// quotient is capable.
bool is_exterior_stem_group(const GroupPtr& g);

std::vector<CatalogId> all_exterior_stem_group_ids(int order,
                                                   const Catalog& cat = Catalog::builtin());

// Minimal-order catalog group exterior isoclinic to g (smallest id on ties).
GroupPtr exterior_isoclinic_group(const GroupPtr& g,
                                  const Catalog& cat = Catalog::builtin());

// Minimal-order exterior stem catalog group exterior isoclinic to g.
GroupPtr exterior_isoclinic_exterior_stem_group(const GroupPtr& g,
                                                const Catalog& cat = Catalog::builtin());

// Classical wedge of the abelian group ⊕ C_{d_i} (divisor chain input):
// the multiset {gcd(d_i, d_j) : i < j} as an ascending invariant list.
std::vector<int> abelian_wedge_oracle(const std::vector<int>& invariants);

// The unique zeta candidate induced by mu between quotients of the pairing
// ambients: e_(a,b) -> lambda_n(mu a, mu b). Returns the bijective
// homomorphism iff every relator of pm's presentation dies in pn's wedge.
// qm, qn must quotient by subgroups of the respective exterior centers so
// the pairing is constant on cosets. Shared with the crossed-module search.
std::optional<GroupHom> wedge_zeta_from_mu(const ExteriorPairing& pm,
                                           const ExteriorPairing& pn,
                                           const QuotientGroup& qm,
                                           const QuotientGroup& qn,
                                           const GroupHom& mu);

}  // namespace xclin
