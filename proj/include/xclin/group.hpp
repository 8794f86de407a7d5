#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "xclin/permutation.hpp"
#include "xclin/rational.hpp"

namespace xclin {

class Group;
using GroupPtr = std::shared_ptr<const Group>;

struct CatalogId {
  int order = 0;
  int id = 0;
  friend bool operator==(const CatalogId&, const CatalogId&) = default;
  friend auto operator<=>(const CatalogId&, const CatalogId&) = default;
};

// Finite permutation group with its complete, sorted element table and a
// full multiplication table. Elements are addressed by their index in the
// sorted table; the identity is always index 0 (it is lexicographically
// minimal among permutations of a fixed degree).
class Group {
 public:
  static GroupPtr from_generators(int degree, std::vector<Permutation> generators,
                                  std::string name = "");
  // `elements` need not be sorted; must be closed under product and inverse.
  static GroupPtr from_elements(std::vector<Permutation> elements,
                                std::vector<Permutation> generators,
                                std::string name = "");
  static GroupPtr trivial();

  int order() const { return static_cast<int>(elements_.size()); }
  int degree() const { return degree_; }
  int identity() const { return 0; }

  int mul(int a, int b) const { return mul_[a * order() + b]; }
  int inv(int a) const { return inv_[a]; }
  int conj(int a, int b) const {  // ᵃb = a·b·a⁻¹
    return mul(mul(a, b), inv(a));
  }
  int comm(int a, int b) const {  // [a,b] = a·b·a⁻¹·b⁻¹
    return mul(conj(a, b), inv(b));
  }
  int power(int a, int e) const;
  int element_order(int a) const { return element_order_[a]; }

  const Permutation& element(int i) const { return elements_[i]; }
  const std::vector<Permutation>& elements() const { return elements_; }
  // -1 when the permutation is not an element.
  int index_of(const Permutation& p) const;

  const std::vector<int>& generator_indices() const { return generator_indices_; }
  std::vector<Permutation> generator_permutations() const;

  const std::string& name() const { return name_; }
  const std::optional<CatalogId>& catalog_id() const { return catalog_id_; }
  void set_catalog_id(CatalogId id) { catalog_id_ = id; }
  void set_name(std::string n) { name_ = std::move(n); }

  bool is_abelian() const;
  std::map<int, int> element_order_histogram() const;

 private:
  Group() = default;
  void finish();  // builds mul/inv/order tables, validates closure

  int degree_ = 1;
  std::string name_;
  std::optional<CatalogId> catalog_id_;
  std::vector<Permutation> elements_;      // sorted
  std::vector<int> generator_indices_;     // indices into elements_
  std::vector<int> mul_;                   // order × order
  std::vector<int> inv_;
  std::vector<int> element_order_;
};

// Subgroup of a fixed parent, stored as sorted parent-element indices.
struct Subgroup {
  GroupPtr parent;
  std::vector<int> elements;  // sorted indices into parent

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(int element_index) const;
  bool contains(const Subgroup& other) const;  // other ⊆ this, same parent
  bool is_normal() const;
  // Standalone permutation group on the parent's points.
  GroupPtr as_group() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent == b.parent && a.elements == b.elements;
  }
};

// Homomorphism given by its full element table.
struct GroupHom {
  GroupPtr domain;
  GroupPtr codomain;
  std::vector<int> table;  // domain element index -> codomain element index

  int operator()(int x) const { return table[x]; }
  bool is_homomorphism() const;
  bool is_bijective() const;
  Subgroup image() const;
  Subgroup kernel() const;
  GroupHom then(const GroupHom& next) const;  // this first, then next
  GroupHom inverse() const;                   // requires bijective

  static GroupHom identity(GroupPtr g);
  static GroupHom trivial(GroupPtr domain, GroupPtr codomain);
};

// G/N realized as a faithful permutation group via the coset multiplication
// action; coset representatives are the minimal elements in the sorted table.
struct QuotientGroup {
  GroupPtr parent;
  Subgroup normal;
  GroupPtr carrier;
  GroupHom projection;          // parent -> carrier
  std::vector<int> coset_rep;   // carrier element -> minimal parent rep
};

// Commutator pairing G/Z × G/Z -> [G,G] for central Z.
struct CommutatorMap {
  QuotientGroup quotient;
  Subgroup derived;
  std::vector<int> table;  // (a * |Q| + b) -> parent element index

  int value(int a, int b) const {
    return table[a * quotient.carrier->order() + b];
  }
};

struct DirectProduct {
  GroupPtr group;
  GroupHom embed_left;
  GroupHom embed_right;
};

// ---- group-core operations ----

Subgroup center(const GroupPtr& g);
Subgroup derived_subgroup(const GroupPtr& g);
Subgroup subgroup_generated_by(const GroupPtr& g, const std::vector<int>& gens);
Subgroup whole_subgroup(const GroupPtr& g);
Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup subgroup_intersection(const Subgroup& a, const Subgroup& b);

CommutatorMap commutator_map(const GroupPtr& g, const Subgroup& central);
QuotientGroup quotient_group(const GroupPtr& g, const Subgroup& normal);
Rational commutative_degree(const GroupPtr& g);
DirectProduct direct_product(const GroupPtr& a, const GroupPtr& b);

bool is_stem_group(const GroupPtr& g);

// Invariant-factor decomposition (ascending divisor chain, 1s dropped).
// For non-abelian input this is the abelianization's decomposition.
std::vector<int> abelian_invariants(const GroupPtr& g);

// Deterministic small generating sequence: repeatedly adjoin the smallest
// element outside the closure so far.
std::vector<int> minimal_generating_sequence(const GroupPtr& g);

std::vector<Subgroup> all_subgroups(const GroupPtr& g);
std::vector<Subgroup> normal_subgroups(const GroupPtr& g);

}  // namespace xclin
