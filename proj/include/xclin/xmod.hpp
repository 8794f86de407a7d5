#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "xclin/catalog.hpp"
#include "xclin/exterior.hpp"
#include "xclin/group.hpp"

namespace xclin {

struct AxiomViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class CrossedModule;
using XModPtr = std::shared_ptr<const CrossedModule>;

// Crossed module (∂ : S -> R) with a left action of R on S by automorphisms,
// stored as one automorphism table per range element. Construction verifies
// the pre-crossed property, the Peiffer identity, and that the action is a
// homomorphism into Aut(S); violations name the failing pair.
class CrossedModule {
 public:
  static XModPtr create(GroupPtr source, GroupPtr range, GroupHom boundary,
                        std::vector<std::vector<int>> action);

  const GroupPtr& source() const { return source_; }
  const GroupPtr& range() const { return range_; }
  const GroupHom& boundary() const { return boundary_; }
  int act(int r, int s) const { return action_[r][s]; }
  const std::vector<std::vector<int>>& action() const { return action_; }
  std::pair<int, int> size() const { return {source_->order(), range_->order()}; }

 private:
  CrossedModule() = default;
  GroupPtr source_;
  GroupPtr range_;
  GroupHom boundary_;
  std::vector<std::vector<int>> action_;
};

// ---- standard constructions ----

XModPtr identity_xmod(const GroupPtr& g);              // (id : G -> G), conjugation
XModPtr inclusion_of_trivial_xmod(const GroupPtr& g);  // (1 ↪ G)
XModPtr conjugation_xmod(const Subgroup& n);           // N ⊴ R by conjugation
// rho surjective with central kernel; action via lifting and conjugation.
XModPtr xmod_from_central_extension(const GroupHom& rho);
XModPtr direct_product_xmod(const XModPtr& a, const XModPtr& b);

// ---- substructures ----

Subgroup fixed_points(const CrossedModule& x);  // S^R ≤ Z(S)
Subgroup stabilizer(const CrossedModule& x);    // St_R(S) = ker(action) ≤ R
Subgroup displacement(const CrossedModule& x);  // D_R(S) = ⟨ ʳs·s⁻¹ ⟩ ≤ S

struct SubCrossedModule {
  XModPtr parent;
  Subgroup source_sub;
  Subgroup range_sub;
  // ∂(source_sub) ⊆ range_sub. Holds for every genuine sub-crossed module;
  // the exterior centre may fail it (see exterior_center_xmod).
  bool boundary_contained = true;
};

SubCrossedModule whole_sub_xmod(const XModPtr& x);
SubCrossedModule center_xmod(const XModPtr& x);    // (S^R -> Z(R) ∩ St)
SubCrossedModule derived_xmod(const XModPtr& x);   // (D_R(S) -> [R,R])
// (S^R -> St ∩ Z∧(R)); boundary containment recorded, not enforced.
SubCrossedModule exterior_center_xmod(const XModPtr& x);

struct ExteriorDerivedXMod {
  // S-side: (D_R(S) -> [R,R]); the wedge connects through kappa only.
  SubCrossedModule displacement_part;
  ExteriorPairingPtr range_wedge;  // R ∧ R
  GroupHom kappa;                  // R∧R -> R, image [R,R]
};

ExteriorDerivedXMod exterior_derived_xmod(const XModPtr& x);

// Size-oriented containment: true iff the smaller object's components are
// contained in the larger's (either direction). Requires a common parent.
bool is_sub_xmod(const SubCrossedModule& a, const SubCrossedModule& b);
// Exterior-derived comparison reads the wedge side through kappa.
bool is_sub_xmod(const SubCrossedModule& a, const ExteriorDerivedXMod& d);

// Quotient by a normal sub-crossed module. When the boundary containment
// fails (exterior centre of most crossed modules), the quotient boundary
// degenerates to the trivial map; axioms are re-verified either way.
XModPtr quotient_xmod(const XModPtr& x, const SubCrossedModule& normal_sub);

// σ : S/S^R × R/(St ∩ Z∧(R)) -> D_R(S), (s·, r·) ↦ ʳs·s⁻¹
// ω : R/(St ∩ Z∧(R))² -> R∧R, (r·, r'·) ↦ r ∧ r'
// Both tables are verified representative-independent exhaustively.
struct SigmaOmega {
  QuotientGroup source_quotient;
  QuotientGroup range_quotient;
  Subgroup displacement_subgroup;
  ExteriorPairingPtr range_wedge;
  std::vector<int> sigma;  // (s̄·|Qr| + r̄) -> S element index
  std::vector<int> omega;  // (r̄·|Qr| + r̄') -> wedge element index

  int sigma_value(int s_bar, int r_bar) const {
    return sigma[s_bar * range_quotient.carrier->order() + r_bar];
  }
  int omega_value(int r_bar, int r2_bar) const {
    return omega[r_bar * range_quotient.carrier->order() + r2_bar];
  }
};

SigmaOmega sigma_omega_maps(const XModPtr& x);

// ---- enumeration ----

std::vector<XModPtr> all_xmods(int size_s, int size_r,
                               const Catalog& cat = Catalog::builtin());

// Morphism of crossed modules: ∂₂∘σ = ρ∘∂₁ and σ(ʳs) = ^(ρr)(σs).
struct XModMorphism {
  GroupHom sigma;  // S₁ -> S₂
  GroupHom rho;    // R₁ -> R₂
};

bool is_xmod_morphism(const CrossedModule& a, const CrossedModule& b,
                      const XModMorphism& m);
std::optional<XModMorphism> find_xmod_isomorphism(const XModPtr& a, const XModPtr& b);
bool are_isomorphic_xmods(const XModPtr& a, const XModPtr& b);
std::vector<XModPtr> all_xmods_up_to_isomorphism(const std::vector<XModPtr>& list);

// ---- isoclinism ----

struct XModIsoclinismWitness {
  XModMorphism mu;      // (μ₁, μ₀) between the central quotient data
  GroupHom zeta_source; // ζ₁ between displacement subgroups (as groups)
  GroupHom zeta_range;  // ζ₀: [R₁,R₁] -> [R₂,R₂] (classical) or R₁∧R₁ -> R₂∧R₂
};

std::optional<XModIsoclinismWitness> are_isoclinic_xmods(const XModPtr& a,
                                                         const XModPtr& b);
std::optional<XModIsoclinismWitness> are_exterior_isoclinic_xmods(const XModPtr& a,
                                                                  const XModPtr& b);

// 1-based positions in `list` equivalent to x under the chosen relation.
std::vector<int> isoclinic_xmod_family(const XModPtr& x,
                                       const std::vector<XModPtr>& list);
std::vector<int> exterior_isoclinic_xmod_family(const XModPtr& x,
                                                const std::vector<XModPtr>& list);

// S^R ⊆ D_R(S) and (St ∩ Z∧(R)) ⊆ [R,R].
bool is_exterior_stem_xmod(const XModPtr& x);

}  // namespace xclin
