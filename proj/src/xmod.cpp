#include "xclin/xmod.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "xclin/homsearch.hpp"

namespace xclin {

namespace {

std::string pair_text(const GroupPtr& g, int a, const GroupPtr& h, int b) {
  return "(" + g->element(a).cycle_string() + ", " + h->element(b).cycle_string() + ")";
}

int to_sub_index(const GroupPtr& parent, const GroupPtr& sub, int parent_elem) {
  int i = sub->index_of(parent->element(parent_elem));
  if (i < 0) throw std::logic_error("element escaped its subgroup");
  return i;
}

int to_parent_index(const GroupPtr& parent, const GroupPtr& sub, int sub_elem) {
  int i = parent->index_of(sub->element(sub_elem));
  if (i < 0) throw std::logic_error("subgroup element missing from parent");
  return i;
}

}  // namespace

XModPtr CrossedModule::create(GroupPtr source, GroupPtr range, GroupHom boundary,
                              std::vector<std::vector<int>> action) {
  if (boundary.domain != source || boundary.codomain != range)
    throw std::invalid_argument("CrossedModule: boundary endpoints mismatch");
  if (!boundary.is_homomorphism())
    throw AxiomViolation("CrossedModule: boundary is not a homomorphism");
  const int ns = source->order(), nr = range->order();
  if (static_cast<int>(action.size()) != nr)
    throw std::invalid_argument("CrossedModule: action table size mismatch");
  for (int r = 0; r < nr; ++r) {
    const auto& row = action[r];
    if (static_cast<int>(row.size()) != ns)
      throw std::invalid_argument("CrossedModule: action row size mismatch");
    std::vector<char> hit(ns, 0);
    for (int v : row) {
      if (v < 0 || v >= ns || hit[v])
        throw AxiomViolation("CrossedModule: action of " + range->element(r).cycle_string() +
                             " is not a bijection");
      hit[v] = 1;
    }
    for (int s1 = 0; s1 < ns; ++s1)
      for (int s2 = 0; s2 < ns; ++s2)
        if (row[source->mul(s1, s2)] != source->mul(row[s1], row[s2]))
          throw AxiomViolation("CrossedModule: action of " + range->element(r).cycle_string() +
                               " is not an automorphism at " +
                               pair_text(source, s1, source, s2));
  }
  for (int s = 0; s < ns; ++s)
    if (action[0][s] != s)
      throw AxiomViolation("CrossedModule: identity acts nontrivially");
  for (int r1 = 0; r1 < nr; ++r1)
    for (int r2 = 0; r2 < nr; ++r2) {
      int r12 = range->mul(r1, r2);
      for (int s = 0; s < ns; ++s)
        if (action[r12][s] != action[r1][action[r2][s]])
          throw AxiomViolation("CrossedModule: action is not a left action at " +
                               pair_text(range, r1, range, r2));
    }
  // CM1, pre-crossed: ∂(ʳs) = r·∂s·r⁻¹
  for (int r = 0; r < nr; ++r)
    for (int s = 0; s < ns; ++s)
      if (boundary(action[r][s]) != range->conj(r, boundary(s)))
        throw AxiomViolation("CrossedModule: pre-crossed property fails at " +
                             pair_text(range, r, source, s));
  // CM2, Peiffer: ^(∂s2)s1 = s2·s1·s2⁻¹
  for (int s2 = 0; s2 < ns; ++s2)
    for (int s1 = 0; s1 < ns; ++s1)
      if (action[boundary(s2)][s1] != source->conj(s2, s1))
        throw AxiomViolation("CrossedModule: Peiffer identity fails at " +
                             pair_text(source, s1, source, s2));
  auto x = std::shared_ptr<CrossedModule>(new CrossedModule());
  x->source_ = std::move(source);
  x->range_ = std::move(range);
  x->boundary_ = std::move(boundary);
  x->action_ = std::move(action);
  return x;
}

XModPtr identity_xmod(const GroupPtr& g) {
  std::vector<std::vector<int>> action(g->order(), std::vector<int>(g->order()));
  for (int r = 0; r < g->order(); ++r)
    for (int s = 0; s < g->order(); ++s) action[r][s] = g->conj(r, s);
  return CrossedModule::create(g, g, GroupHom::identity(g), std::move(action));
}

XModPtr inclusion_of_trivial_xmod(const GroupPtr& g) {
  GroupPtr one = Group::trivial();
  std::vector<std::vector<int>> action(g->order(), std::vector<int>{0});
  return CrossedModule::create(one, g, GroupHom::trivial(one, g), std::move(action));
}

XModPtr conjugation_xmod(const Subgroup& n) {
  if (!n.is_normal()) throw std::invalid_argument("conjugation_xmod: subgroup not normal");
  GroupPtr s = n.as_group();
  GroupPtr r = n.parent;
  std::vector<int> bnd(s->order());
  for (int i = 0; i < s->order(); ++i) bnd[i] = to_parent_index(r, s, i);
  std::vector<std::vector<int>> action(r->order(), std::vector<int>(s->order()));
  for (int a = 0; a < r->order(); ++a)
    for (int i = 0; i < s->order(); ++i)
      action[a][i] = to_sub_index(r, s, r->conj(a, bnd[i]));
  return CrossedModule::create(s, r, GroupHom{s, r, std::move(bnd)}, std::move(action));
}

XModPtr xmod_from_central_extension(const GroupHom& rho) {
  const GroupPtr& s = rho.domain;
  const GroupPtr& r = rho.codomain;
  if (rho.image().order() != r->order())
    throw std::invalid_argument("xmod_from_central_extension: map is not surjective");
  if (!rho.is_homomorphism())
    throw std::invalid_argument("xmod_from_central_extension: not a homomorphism");
  Subgroup z = center(s);
  for (int k : rho.kernel().elements)
    if (!z.contains(k))
      throw std::invalid_argument("xmod_from_central_extension: kernel is not central");
  // deterministic lifts: minimal preimage in the sorted element table
  std::vector<int> lift(r->order(), -1);
  for (int x = 0; x < s->order(); ++x)
    if (lift[rho(x)] < 0) lift[rho(x)] = x;
  std::vector<std::vector<int>> action(r->order(), std::vector<int>(s->order()));
  for (int a = 0; a < r->order(); ++a)
    for (int x = 0; x < s->order(); ++x) action[a][x] = s->conj(lift[a], x);
  return CrossedModule::create(s, r, rho, std::move(action));
}

XModPtr direct_product_xmod(const XModPtr& a, const XModPtr& b) {
  DirectProduct sp = direct_product(a->source(), b->source());
  DirectProduct rp = direct_product(a->range(), b->range());
  const int ns = sp.group->order(), nr = rp.group->order();
  std::vector<int> bnd(ns, -1);
  for (int s1 = 0; s1 < a->source()->order(); ++s1)
    for (int s2 = 0; s2 < b->source()->order(); ++s2) {
      int s = sp.group->mul(sp.embed_left(s1), sp.embed_right(s2));
      bnd[s] = rp.group->mul(rp.embed_left(a->boundary()(s1)),
                             rp.embed_right(b->boundary()(s2)));
    }
  std::vector<std::vector<int>> action(nr, std::vector<int>(ns));
  for (int r1 = 0; r1 < a->range()->order(); ++r1)
    for (int r2 = 0; r2 < b->range()->order(); ++r2) {
      int r = rp.group->mul(rp.embed_left(r1), rp.embed_right(r2));
      for (int s1 = 0; s1 < a->source()->order(); ++s1)
        for (int s2 = 0; s2 < b->source()->order(); ++s2) {
          int s = sp.group->mul(sp.embed_left(s1), sp.embed_right(s2));
          action[r][s] = sp.group->mul(sp.embed_left(a->act(r1, s1)),
                                       sp.embed_right(b->act(r2, s2)));
        }
    }
  return CrossedModule::create(sp.group, rp.group,
                               GroupHom{sp.group, rp.group, std::move(bnd)},
                               std::move(action));
}

Subgroup fixed_points(const CrossedModule& x) {
  std::vector<int> fixed;
  for (int s = 0; s < x.source()->order(); ++s) {
    bool f = true;
    for (int r = 0; r < x.range()->order() && f; ++r)
      if (x.act(r, s) != s) f = false;
    if (f) fixed.push_back(s);
  }
  return Subgroup{x.source(), std::move(fixed)};
}

Subgroup stabilizer(const CrossedModule& x) {
  std::vector<int> st;
  for (int r = 0; r < x.range()->order(); ++r) {
    bool trivial = true;
    for (int s = 0; s < x.source()->order() && trivial; ++s)
      if (x.act(r, s) != s) trivial = false;
    if (trivial) st.push_back(r);
  }
  return Subgroup{x.range(), std::move(st)};
}

Subgroup displacement(const CrossedModule& x) {
  std::set<int> gens;
  for (int r = 0; r < x.range()->order(); ++r)
    for (int s = 0; s < x.source()->order(); ++s)
      gens.insert(x.source()->mul(x.act(r, s), x.source()->inv(s)));
  return subgroup_generated_by(x.source(), {gens.begin(), gens.end()});
}

namespace {

bool boundary_maps_into(const CrossedModule& x, const Subgroup& source_sub,
                        const Subgroup& range_sub) {
  for (int s : source_sub.elements)
    if (!range_sub.contains(x.boundary()(s))) return false;
  return true;
}

}  // namespace

SubCrossedModule whole_sub_xmod(const XModPtr& x) {
  return SubCrossedModule{x, whole_subgroup(x->source()), whole_subgroup(x->range()), true};
}

SubCrossedModule center_xmod(const XModPtr& x) {
  Subgroup f = fixed_points(*x);
  Subgroup k = subgroup_intersection(center(x->range()), stabilizer(*x));
  bool contained = boundary_maps_into(*x, f, k);
  return SubCrossedModule{x, std::move(f), std::move(k), contained};
}

SubCrossedModule derived_xmod(const XModPtr& x) {
  Subgroup d = displacement(*x);
  Subgroup rp = derived_subgroup(x->range());
  bool contained = boundary_maps_into(*x, d, rp);
  return SubCrossedModule{x, std::move(d), std::move(rp), contained};
}

SubCrossedModule exterior_center_xmod(const XModPtr& x) {
  Subgroup f = fixed_points(*x);
  Subgroup k = subgroup_intersection(stabilizer(*x), exterior_center(x->range()));
  bool contained = boundary_maps_into(*x, f, k);
  return SubCrossedModule{x, std::move(f), std::move(k), contained};
}

ExteriorDerivedXMod exterior_derived_xmod(const XModPtr& x) {
  auto wedge = exterior_square(x->range());
  GroupHom kappa = commutator_image(*wedge);
  Subgroup d = displacement(*x);
  Subgroup rp = derived_subgroup(x->range());
  bool contained = boundary_maps_into(*x, d, rp);
  return ExteriorDerivedXMod{SubCrossedModule{x, std::move(d), std::move(rp), contained},
                             wedge, std::move(kappa)};
}

bool is_sub_xmod(const SubCrossedModule& a, const SubCrossedModule& b) {
  if (a.parent != b.parent)
    throw std::invalid_argument("is_sub_xmod: different parent crossed modules");
  auto contained = [](const SubCrossedModule& small, const SubCrossedModule& big) {
    return big.source_sub.contains(small.source_sub) &&
           big.range_sub.contains(small.range_sub);
  };
  return contained(a, b) || contained(b, a);
}

bool is_sub_xmod(const SubCrossedModule& a, const ExteriorDerivedXMod& d) {
  return is_sub_xmod(a, d.displacement_part);
}

XModPtr quotient_xmod(const XModPtr& x, const SubCrossedModule& sub) {
  if (sub.parent != x)
    throw std::invalid_argument("quotient_xmod: sub-crossed module of a different parent");
  if (!sub.range_sub.is_normal())
    throw std::invalid_argument("quotient_xmod: range part is not normal");
  for (int r = 0; r < x->range()->order(); ++r)
    for (int s : sub.source_sub.elements)
      if (!sub.source_sub.contains(x->act(r, s)))
        throw std::invalid_argument("quotient_xmod: source part is not action-invariant");
  for (int r1 : sub.range_sub.elements)
    for (int s = 0; s < x->source()->order(); ++s)
      if (!sub.source_sub.contains(
              x->source()->mul(x->act(r1, s), x->source()->inv(s))))
        throw std::invalid_argument("quotient_xmod: displacement condition fails");
  QuotientGroup qs = quotient_group(x->source(), sub.source_sub);
  QuotientGroup qr = quotient_group(x->range(), sub.range_sub);
  std::vector<int> bnd(qs.carrier->order(), 0);
  if (boundary_maps_into(*x, sub.source_sub, sub.range_sub)) {
    for (int sb = 0; sb < qs.carrier->order(); ++sb)
      bnd[sb] = qr.projection(x->boundary()(qs.coset_rep[sb]));
  }
  // else: no representative-independent induced boundary exists; the
  // quotient degenerates to the trivial boundary (validated below).
  std::vector<std::vector<int>> action(qr.carrier->order(),
                                       std::vector<int>(qs.carrier->order()));
  for (int rb = 0; rb < qr.carrier->order(); ++rb)
    for (int sb = 0; sb < qs.carrier->order(); ++sb)
      action[rb][sb] = qs.projection(x->act(qr.coset_rep[rb], qs.coset_rep[sb]));
  return CrossedModule::create(qs.carrier, qr.carrier,
                               GroupHom{qs.carrier, qr.carrier, std::move(bnd)},
                               std::move(action));
}

SigmaOmega sigma_omega_maps(const XModPtr& x) {
  const GroupPtr& s = x->source();
  const GroupPtr& r = x->range();
  Subgroup f = fixed_points(*x);
  Subgroup k = subgroup_intersection(stabilizer(*x), exterior_center(r));
  QuotientGroup qs = quotient_group(s, f);
  QuotientGroup qr = quotient_group(r, k);
  auto wedge = exterior_square(r);
  Subgroup d = displacement(*x);
  const int m = qs.carrier->order(), n = qr.carrier->order();
  std::vector<int> sigma(static_cast<size_t>(m) * n);
  for (int sb = 0; sb < m; ++sb)
    for (int rb = 0; rb < n; ++rb)
      sigma[sb * n + rb] = s->mul(x->act(qr.coset_rep[rb], qs.coset_rep[sb]),
                                  s->inv(qs.coset_rep[sb]));
  std::vector<int> omega(static_cast<size_t>(n) * n);
  for (int rb = 0; rb < n; ++rb)
    for (int rb2 = 0; rb2 < n; ++rb2)
      omega[rb * n + rb2] = wedge->pairing(qr.coset_rep[rb], qr.coset_rep[rb2]);
  // exhaustive representative independence
  for (int se = 0; se < s->order(); ++se)
    for (int re = 0; re < r->order(); ++re) {
      int value = s->mul(x->act(re, se), s->inv(se));
      if (value != sigma[qs.projection(se) * n + qr.projection(re)])
        throw std::logic_error("sigma map depends on coset representatives");
    }
  for (int re = 0; re < r->order(); ++re)
    for (int re2 = 0; re2 < r->order(); ++re2)
      if (wedge->pairing(re, re2) !=
          omega[qr.projection(re) * n + qr.projection(re2)])
        throw std::logic_error("omega map depends on coset representatives");
  return SigmaOmega{std::move(qs), std::move(qr), std::move(d), wedge,
                    std::move(sigma), std::move(omega)};
}

// ---- enumeration ----

std::vector<XModPtr> all_xmods(int size_s, int size_r, const Catalog& cat) {
  if (!cat.has_order(size_s) || !cat.has_order(size_r))
    throw CatalogError("all_xmods: size outside catalog");
  std::vector<XModPtr> out;
  for (int sid : cat.ids_of_order(size_s)) {
    GroupPtr s = cat.group(size_s, sid);
    AutomorphismGroup aut = automorphism_group(s);
    for (int rid : cat.ids_of_order(size_r)) {
      GroupPtr r = cat.group(size_r, rid);
      std::vector<GroupHom> boundaries = homomorphisms(s, r);
      std::vector<GroupHom> action_homs = homomorphisms(r, aut.group);
      for (const GroupHom& bnd : boundaries) {
        for (const GroupHom& h : action_homs) {
          // left action: the table of r is the automorphism h(r⁻¹)
          std::vector<std::vector<int>> action(r->order());
          for (int re = 0; re < r->order(); ++re) {
            const Permutation& t = aut.table(h(r->inv(re)));
            action[re].resize(s->order());
            for (int se = 0; se < s->order(); ++se) action[re][se] = t[se];
          }
          bool ok = true;
          for (int re = 0; re < r->order() && ok; ++re)
            for (int se = 0; se < s->order() && ok; ++se)
              if (bnd(action[re][se]) != r->conj(re, bnd(se))) ok = false;
          for (int s2 = 0; s2 < s->order() && ok; ++s2)
            for (int s1 = 0; s1 < s->order() && ok; ++s1)
              if (action[bnd(s2)][s1] != s->conj(s2, s1)) ok = false;
          if (!ok) continue;
          out.push_back(CrossedModule::create(s, r, bnd, std::move(action)));
        }
      }
    }
  }
  return out;
}

namespace {

std::vector<long> xmod_profile(const CrossedModule& x) {
  std::vector<long> p;
  auto push_hist = [&](const std::map<int, int>& h) {
    p.push_back(static_cast<long>(h.size()));
    for (auto& [k, v] : h) {
      p.push_back(k);
      p.push_back(v);
    }
  };
  p.push_back(x.source()->order());
  p.push_back(x.range()->order());
  push_hist(x.source()->element_order_histogram());
  push_hist(x.range()->element_order_histogram());
  GroupHom bnd = x.boundary();
  p.push_back(bnd.kernel().order());
  std::map<int, int> img_orders;
  for (int e : bnd.image().elements) ++img_orders[x.range()->element_order(e)];
  push_hist(img_orders);
  p.push_back(fixed_points(x).order());
  p.push_back(stabilizer(x).order());
  p.push_back(displacement(x).order());
  // action fingerprint: per range element (order, fixed count), sorted
  std::vector<std::pair<int, int>> fp;
  for (int r = 0; r < x.range()->order(); ++r) {
    int fixed = 0;
    for (int s = 0; s < x.source()->order(); ++s)
      if (x.act(r, s) == s) ++fixed;
    fp.emplace_back(x.range()->element_order(r), fixed);
  }
  std::sort(fp.begin(), fp.end());
  for (auto& [a, b] : fp) {
    p.push_back(a);
    p.push_back(b);
  }
  return p;
}

struct IsoListEntry {
  GroupPtr a, b;  // pins the keyed groups so addresses are never reused
  std::vector<GroupHom> isos;
};

std::shared_ptr<const IsoListEntry> cached_isomorphisms(const GroupPtr& a,
                                                        const GroupPtr& b) {
  static std::mutex mutex;
  static std::map<std::pair<const Group*, const Group*>,
                  std::shared_ptr<const IsoListEntry>>
      cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({a.get(), b.get()});
    if (it != cache.end()) return it->second;
  }
  auto entry = std::make_shared<IsoListEntry>(IsoListEntry{a, b, isomorphisms_between(a, b)});
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(std::make_pair(a.get(), b.get()), entry).first->second;
}

std::optional<XModMorphism> isomorphic_xmods_impl(const CrossedModule& a,
                                                  const CrossedModule& b,
                                                  const GroupPtr& sa, const GroupPtr& sb,
                                                  const GroupPtr& ra, const GroupPtr& rb) {
  auto rhos = cached_isomorphisms(ra, rb);
  auto sigmas = cached_isomorphisms(sa, sb);
  for (const GroupHom& rho : rhos->isos) {
    for (const GroupHom& sigma : sigmas->isos) {
      bool ok = true;
      for (int s = 0; s < sa->order() && ok; ++s)
        if (b.boundary()(sigma(s)) != rho(a.boundary()(s))) ok = false;
      for (int r = 0; r < ra->order() && ok; ++r)
        for (int s = 0; s < sa->order() && ok; ++s)
          if (sigma(a.act(r, s)) != b.act(rho(r), sigma(s))) ok = false;
      if (ok) return XModMorphism{sigma, rho};
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_xmod_morphism(const CrossedModule& a, const CrossedModule& b,
                      const XModMorphism& m) {
  if (m.sigma.domain != a.source() || m.rho.domain != a.range()) return false;
  if (m.sigma.codomain != b.source() || m.rho.codomain != b.range()) return false;
  if (!m.sigma.is_homomorphism() || !m.rho.is_homomorphism()) return false;
  for (int s = 0; s < a.source()->order(); ++s)
    if (b.boundary()(m.sigma(s)) != m.rho(a.boundary()(s))) return false;
  for (int r = 0; r < a.range()->order(); ++r)
    for (int s = 0; s < a.source()->order(); ++s)
      if (m.sigma(a.act(r, s)) != b.act(m.rho(r), m.sigma(s))) return false;
  return true;
}

std::optional<XModMorphism> find_xmod_isomorphism(const XModPtr& a, const XModPtr& b) {
  if (xmod_profile(*a) != xmod_profile(*b)) return std::nullopt;
  return isomorphic_xmods_impl(*a, *b, a->source(), b->source(), a->range(), b->range());
}

bool are_isomorphic_xmods(const XModPtr& a, const XModPtr& b) {
  return find_xmod_isomorphism(a, b).has_value();
}

std::vector<XModPtr> all_xmods_up_to_isomorphism(const std::vector<XModPtr>& list) {
  std::vector<XModPtr> reps;
  std::vector<std::vector<long>> profiles;
  for (const XModPtr& x : list) {
    std::vector<long> profile = xmod_profile(*x);
    bool known = false;
    for (size_t i = 0; i < reps.size() && !known; ++i) {
      if (profiles[i] != profile) continue;
      if (isomorphic_xmods_impl(*reps[i], *x, reps[i]->source(), x->source(),
                                reps[i]->range(), x->range())
              .has_value())
        known = true;
    }
    if (!known) {
      reps.push_back(x);
      profiles.push_back(std::move(profile));
    }
  }
  return reps;
}

// ---- isoclinism ----

namespace {

// Central quotient datum (S/S^R -> R/K) with the induced action. When the
// boundary formula ∂(s)·K is not representative-independent the datum keeps
// the trivial boundary instead; the morphism equations below are checked
// against the datum, so the search stays total.
struct CentralQuotient {
  QuotientGroup qs;
  QuotientGroup qr;
  std::vector<int> boundary;
  bool boundary_genuine = true;
  std::vector<std::vector<int>> action;
};

CentralQuotient central_quotient(const CrossedModule& x, const Subgroup& k) {
  CentralQuotient cq;
  Subgroup f = fixed_points(x);
  cq.qs = quotient_group(x.source(), f);
  cq.qr = quotient_group(x.range(), k);
  cq.boundary_genuine = true;
  for (int s : f.elements)
    if (!k.contains(x.boundary()(s))) {
      cq.boundary_genuine = false;
      break;
    }
  cq.boundary.assign(cq.qs.carrier->order(), 0);
  if (cq.boundary_genuine)
    for (int sb = 0; sb < cq.qs.carrier->order(); ++sb)
      cq.boundary[sb] = cq.qr.projection(x.boundary()(cq.qs.coset_rep[sb]));
  cq.action.assign(cq.qr.carrier->order(), std::vector<int>(cq.qs.carrier->order()));
  for (int rb = 0; rb < cq.qr.carrier->order(); ++rb)
    for (int sb = 0; sb < cq.qs.carrier->order(); ++sb)
      cq.action[rb][sb] = cq.qs.projection(x.act(cq.qr.coset_rep[rb], cq.qs.coset_rep[sb]));
  return cq;
}

int boundary_image_size(const std::vector<int>& boundary) {
  std::set<int> img(boundary.begin(), boundary.end());
  return static_cast<int>(img.size());
}

// zeta1 on the displacement subgroups, determined by the sigma diagram.
std::optional<GroupHom> zeta1_from_mu(const CrossedModule& x1, const CrossedModule& x2,
                                      const CentralQuotient& q1, const CentralQuotient& q2,
                                      const GroupHom& mu1, const GroupHom& mu0,
                                      const GroupPtr& d1, const GroupPtr& d2) {
  const GroupPtr& s1 = x1.source();
  const GroupPtr& s2 = x2.source();
  std::vector<int> gens, images;
  gens.reserve(static_cast<size_t>(s1->order()) * x1.range()->order());
  images.reserve(gens.capacity());
  for (int se = 0; se < s1->order(); ++se) {
    int sb2 = q2.qs.coset_rep[mu1(q1.qs.projection(se))];
    for (int re = 0; re < x1.range()->order(); ++re) {
      int rb2 = q2.qr.coset_rep[mu0(q1.qr.projection(re))];
      int disp1 = s1->mul(x1.act(re, se), s1->inv(se));
      int disp2 = s2->mul(x2.act(rb2, sb2), s2->inv(sb2));
      gens.push_back(to_sub_index(s1, d1, disp1));
      images.push_back(to_sub_index(s2, d2, disp2));
    }
  }
  auto zeta = generator_image_extension(d1, gens, images, d2);
  if (!zeta || !zeta->is_bijective()) return std::nullopt;
  return zeta;
}

using ZetaBuilder = std::function<std::optional<std::pair<GroupHom, GroupHom>>(
    const GroupHom& mu1, const GroupHom& mu0)>;

std::optional<XModIsoclinismWitness> mu_pair_search(const CentralQuotient& q1,
                                                    const CentralQuotient& q2,
                                                    const ZetaBuilder& build) {
  if (q1.qs.carrier->order() != q2.qs.carrier->order()) return std::nullopt;
  if (q1.qr.carrier->order() != q2.qr.carrier->order()) return std::nullopt;
  if (boundary_image_size(q1.boundary) != boundary_image_size(q2.boundary))
    return std::nullopt;
  // quotient carriers are fresh objects per search; no point caching them
  auto mu1_list = isomorphisms_between(q1.qs.carrier, q2.qs.carrier);
  if (mu1_list.empty()) return std::nullopt;
  auto mu0_list = isomorphisms_between(q1.qr.carrier, q2.qr.carrier);
  for (const GroupHom& mu0 : mu0_list) {
    for (const GroupHom& mu1 : mu1_list) {
      bool ok = true;
      for (int sb = 0; sb < q1.qs.carrier->order() && ok; ++sb)
        if (q2.boundary[mu1(sb)] != mu0(q1.boundary[sb])) ok = false;
      for (int rb = 0; rb < q1.qr.carrier->order() && ok; ++rb)
        for (int sb = 0; sb < q1.qs.carrier->order() && ok; ++sb)
          if (mu1(q1.action[rb][sb]) != q2.action[mu0(rb)][mu1(sb)]) ok = false;
      if (!ok) continue;
      auto zetas = build(mu1, mu0);
      if (!zetas) continue;
      return XModIsoclinismWitness{XModMorphism{mu1, mu0}, zetas->first, zetas->second};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<XModIsoclinismWitness> are_isoclinic_xmods(const XModPtr& a,
                                                         const XModPtr& b) {
  Subgroup d1s = displacement(*a);
  Subgroup d2s = displacement(*b);
  if (d1s.order() != d2s.order()) return std::nullopt;
  Subgroup r1p_s = derived_subgroup(a->range());
  Subgroup r2p_s = derived_subgroup(b->range());
  if (r1p_s.order() != r2p_s.order()) return std::nullopt;
  CentralQuotient q1 =
      central_quotient(*a, subgroup_intersection(center(a->range()), stabilizer(*a)));
  CentralQuotient q2 =
      central_quotient(*b, subgroup_intersection(center(b->range()), stabilizer(*b)));
  if (!q1.boundary_genuine || !q2.boundary_genuine)
    throw std::logic_error("central quotient boundary must be induced");
  GroupPtr d1 = d1s.as_group(), d2 = d2s.as_group();
  GroupPtr r1p = r1p_s.as_group(), r2p = r2p_s.as_group();

  ZetaBuilder build = [&](const GroupHom& mu1,
                          const GroupHom& mu0) -> std::optional<std::pair<GroupHom, GroupHom>> {
    auto zeta1 = zeta1_from_mu(*a, *b, q1, q2, mu1, mu0, d1, d2);
    if (!zeta1) return std::nullopt;
    // zeta0 on derived ranges from the commutator diagram
    const GroupPtr& r1 = a->range();
    const GroupPtr& r2 = b->range();
    std::vector<int> gens, images;
    gens.reserve(static_cast<size_t>(r1->order()) * r1->order());
    images.reserve(gens.capacity());
    for (int re = 0; re < r1->order(); ++re) {
      int rb2 = q2.qr.coset_rep[mu0(q1.qr.projection(re))];
      for (int re2 = 0; re2 < r1->order(); ++re2) {
        int rb2b = q2.qr.coset_rep[mu0(q1.qr.projection(re2))];
        gens.push_back(to_sub_index(r1, r1p, r1->comm(re, re2)));
        images.push_back(to_sub_index(r2, r2p, r2->comm(rb2, rb2b)));
      }
    }
    auto zeta0 = generator_image_extension(r1p, gens, images, r2p);
    if (!zeta0 || !zeta0->is_bijective()) return std::nullopt;
    // (zeta1, zeta0) must be a morphism of the derived sub-crossed modules
    for (int d = 0; d < d1->order(); ++d) {
      int bd1 = a->boundary()(to_parent_index(a->source(), d1, d));
      int lhs = b->boundary()(to_parent_index(b->source(), d2, (*zeta1)(d)));
      int rhs = to_parent_index(r2, r2p, (*zeta0)(to_sub_index(r1, r1p, bd1)));
      if (lhs != rhs) return std::nullopt;
    }
    for (int rp = 0; rp < r1p->order(); ++rp) {
      int re = to_parent_index(r1, r1p, rp);
      int re2 = to_parent_index(r2, r2p, (*zeta0)(rp));
      for (int d = 0; d < d1->order(); ++d) {
        int ds = to_parent_index(a->source(), d1, d);
        int lhs = (*zeta1)(to_sub_index(a->source(), d1, a->act(re, ds)));
        int rhs = to_sub_index(
            b->source(), d2,
            b->act(re2, to_parent_index(b->source(), d2, (*zeta1)(d))));
        if (lhs != rhs) return std::nullopt;
      }
    }
    return std::make_pair(*zeta1, *zeta0);
  };
  return mu_pair_search(q1, q2, build);
}

std::optional<XModIsoclinismWitness> are_exterior_isoclinic_xmods(const XModPtr& a,
                                                                  const XModPtr& b) {
  Subgroup d1s = displacement(*a);
  Subgroup d2s = displacement(*b);
  if (d1s.order() != d2s.order()) return std::nullopt;
  auto w1 = exterior_square(a->range());
  auto w2 = exterior_square(b->range());
  if (w1->wedge->order() != w2->wedge->order()) return std::nullopt;
  CentralQuotient q1 = central_quotient(
      *a, subgroup_intersection(stabilizer(*a), exterior_center(a->range())));
  CentralQuotient q2 = central_quotient(
      *b, subgroup_intersection(stabilizer(*b), exterior_center(b->range())));
  GroupPtr d1 = d1s.as_group(), d2 = d2s.as_group();
  GroupHom kappa1 = commutator_image(*w1);
  GroupHom kappa2 = commutator_image(*w2);
  std::vector<int> ker1, ker2;
  for (int w = 0; w < w1->wedge->order(); ++w)
    if (kappa1(w) == 0) ker1.push_back(w);
  for (int w = 0; w < w2->wedge->order(); ++w)
    if (kappa2(w) == 0) ker2.push_back(w);
  if (ker1.size() != ker2.size()) return std::nullopt;
  // minimal kappa preimage per commutator value
  std::vector<int> preimage1(a->range()->order(), -1);
  for (int w = w1->wedge->order() - 1; w >= 0; --w) preimage1[kappa1(w)] = w;

  ZetaBuilder build = [&](const GroupHom& mu1,
                          const GroupHom& mu0) -> std::optional<std::pair<GroupHom, GroupHom>> {
    auto zeta0 = wedge_zeta_from_mu(*w1, *w2, q1.qr, q2.qr, mu0);
    if (!zeta0) return std::nullopt;
    auto zeta1 = zeta1_from_mu(*a, *b, q1, q2, mu1, mu0, d1, d2);
    if (!zeta1) return std::nullopt;
    // kappa-projected square: zeta0 must carry ker kappa1 onto ker kappa2,
    // and the induced map on commutator images must transport ∂ on D.
    std::vector<int> mapped;
    mapped.reserve(ker1.size());
    for (int w : ker1) mapped.push_back((*zeta0)(w));
    std::sort(mapped.begin(), mapped.end());
    if (mapped != ker2) return std::nullopt;
    for (int d = 0; d < d1->order(); ++d) {
      int bd1 = a->boundary()(to_parent_index(a->source(), d1, d));
      int w = preimage1[bd1];
      if (w < 0) return std::nullopt;  // ∂(D) ⊆ [R,R] always holds; guard anyway
      int lhs = b->boundary()(to_parent_index(b->source(), d2, (*zeta1)(d)));
      int rhs = kappa2((*zeta0)(w));
      if (lhs != rhs) return std::nullopt;
    }
    return std::make_pair(*zeta1, *zeta0);
  };
  return mu_pair_search(q1, q2, build);
}

std::vector<int> isoclinic_xmod_family(const XModPtr& x,
                                       const std::vector<XModPtr>& list) {
  std::vector<int> positions;
  for (size_t i = 0; i < list.size(); ++i)
    if (are_isoclinic_xmods(x, list[i])) positions.push_back(static_cast<int>(i) + 1);
  return positions;
}

std::vector<int> exterior_isoclinic_xmod_family(const XModPtr& x,
                                                const std::vector<XModPtr>& list) {
  std::vector<int> positions;
  for (size_t i = 0; i < list.size(); ++i)
    if (are_exterior_isoclinic_xmods(x, list[i])) positions.push_back(static_cast<int>(i) + 1);
  return positions;
}

bool is_exterior_stem_xmod(const XModPtr& x) {
  Subgroup f = fixed_points(*x);
  Subgroup d = displacement(*x);
  if (!d.contains(f)) return false;
  Subgroup k = subgroup_intersection(stabilizer(*x), exterior_center(x->range()));
  Subgroup rp = derived_subgroup(x->range());
  return rp.contains(k);
}

}  // namespace xclin
