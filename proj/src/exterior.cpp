#include "xclin/exterior.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "xclin/homsearch.hpp"

namespace xclin {

namespace {

std::atomic<int> g_default_max_cosets{1'000'000};

std::vector<int> position_table(const GroupPtr& g, const Subgroup& s) {
  std::vector<int> pos(g->order(), -1);
  for (size_t i = 0; i < s.elements.size(); ++i) pos[s.elements[i]] = static_cast<int>(i);
  return pos;
}

}  // namespace

int default_max_cosets() { return g_default_max_cosets.load(); }

void set_default_max_cosets(int bound) {
  if (bound < 1) throw std::invalid_argument("set_default_max_cosets: bound < 1");
  g_default_max_cosets.store(bound);
}

ExteriorPairingPtr exterior_product(const GroupPtr& g, const Subgroup& m,
                                    const Subgroup& n, int max_cosets) {
  if (max_cosets <= 0) max_cosets = default_max_cosets();
  if (m.parent != g || n.parent != g)
    throw std::invalid_argument("exterior_product: subgroups of a different group");
  if (!m.is_normal() || !n.is_normal())
    throw std::invalid_argument("exterior_product: factors must be normal subgroups");

  const int nm = m.order(), nn = n.order();
  auto mpos = position_table(g, m);
  auto npos = position_table(g, n);
  auto pair_gen = [&](int me, int ne) {  // ambient element indices
    return mpos[me] * nn + npos[ne];
  };

  Presentation pres(nm * nn);
  // Diagonal relators first: m ∧ n = 1 whenever m = n (in M ∩ N).
  for (int x : subgroup_intersection(m, n).elements)
    pres.add_relator({gen_letter(pair_gen(x, x))});
  // mm' ∧ n = (ᵐm' ∧ ᵐn)(m ∧ n), conjugation taken in g.
  {
    std::vector<int> word(3);
    for (int a : m.elements)
      for (int b : m.elements)
        for (int c : n.elements) {
          word[0] = inv_gen_letter(pair_gen(g->mul(a, b), c));
          word[1] = gen_letter(pair_gen(g->conj(a, b), g->conj(a, c)));
          word[2] = gen_letter(pair_gen(a, c));
          pres.add_relator(word);
        }
    // m ∧ nn' = (m ∧ n)(ⁿm ∧ ⁿn')
    for (int a : m.elements)
      for (int c : n.elements)
        for (int d : n.elements) {
          word[0] = inv_gen_letter(pair_gen(a, g->mul(c, d)));
          word[1] = gen_letter(pair_gen(a, c));
          word[2] = gen_letter(pair_gen(g->conj(c, a), g->conj(c, d)));
          pres.add_relator(word);
        }
  }

  CosetTable table = coset_enumeration(pres, max_cosets);
  PermutationRealization real = permutation_realization(table);

  auto pairing = std::make_shared<ExteriorPairing>(ExteriorPairing{
      g, m, n, real.group, std::move(real.generator_elements), std::move(pres),
      std::move(mpos), std::move(npos)});
  return pairing;
}

namespace {

// Wedge cache: single logical entry per element table. Construction runs
// outside the lock; first insert wins, duplicates are discarded (identical
// by determinism).
struct WedgeCache {
  std::mutex mutex;
  std::map<std::vector<int>, ExteriorPairingPtr> entries;

  static std::vector<int> key(const GroupPtr& g) {
    std::vector<int> k;
    k.push_back(g->degree());
    for (const auto& p : g->elements())
      for (int x = 0; x < p.degree(); ++x) k.push_back(p[x]);
    return k;
  }
};

WedgeCache& wedge_cache() {
  static WedgeCache cache;
  return cache;
}

}  // namespace

ExteriorPairingPtr exterior_square(const GroupPtr& g, int max_cosets) {
  auto key = WedgeCache::key(g);
  auto& cache = wedge_cache();
  {
    std::lock_guard<std::mutex> lock(cache.mutex);
    auto it = cache.entries.find(key);
    if (it != cache.entries.end()) return it->second;
  }
  auto built = exterior_product(g, whole_subgroup(g), whole_subgroup(g), max_cosets);
  std::lock_guard<std::mutex> lock(cache.mutex);
  auto [it, inserted] = cache.entries.emplace(std::move(key), built);
  return it->second;
}

Subgroup exterior_center(const GroupPtr& g) {
  auto sq = exterior_square(g);
  std::vector<int> z;
  for (int a = 0; a < g->order(); ++a) {
    bool trivial = true;
    for (int b = 0; b < g->order() && trivial; ++b)
      if (sq->pairing(a, b) != 0) trivial = false;
    if (trivial) z.push_back(a);
  }
  return Subgroup{g, std::move(z)};
}

Rational exterior_degree(const GroupPtr& g) {
  auto sq = exterior_square(g);
  std::int64_t count = 0;
  const int n = g->order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (sq->pairing(a, b) == 0) ++count;
  return Rational(count, static_cast<std::int64_t>(n) * n);
}

GroupHom commutator_image(const ExteriorPairing& p) {
  std::vector<int> gens, images;
  gens.reserve(p.lambda.size());
  images.reserve(p.lambda.size());
  for (int a : p.left.elements)
    for (int b : p.right.elements) {
      gens.push_back(p.pairing(a, b));
      images.push_back(p.ambient->comm(a, b));
    }
  auto hom = generator_image_extension(p.wedge, gens, images, p.ambient);
  if (!hom)
    throw std::logic_error("commutator_image: relators fail to map to commutators");
  return *hom;
}

// Each presentation generator e_(a,b) of M∧M is sent to lambda_N(mu a, mu b);
// the candidate descends to a homomorphism iff every relator maps to the
// identity of N∧N.
std::optional<GroupHom> wedge_zeta_from_mu(const ExteriorPairing& pm,
                                           const ExteriorPairing& pn,
                                           const QuotientGroup& qm, const QuotientGroup& qn,
                                           const GroupHom& mu) {
  if (pm.left.order() != pm.ambient->order() || pn.left.order() != pn.ambient->order())
    throw std::invalid_argument("wedge_zeta_from_mu: exterior squares required");
  const GroupPtr& m = pm.ambient;
  const GroupPtr& wn = pn.wedge;
  const int nm = m->order();
  std::vector<int> candidate(static_cast<size_t>(nm) * nm);
  for (int a = 0; a < nm; ++a) {
    int ia = qn.coset_rep[mu(qm.projection(a))];
    for (int b = 0; b < nm; ++b) {
      int ib = qn.coset_rep[mu(qm.projection(b))];
      candidate[pm.pair_generator(a, b)] = pn.pairing(ia, ib);
    }
  }
  const Presentation& pres = pm.presentation;
  for (size_t r = 0; r < pres.relator_count(); ++r) {
    int value = 0;
    for (const int* w = pres.relator_begin(r); w != pres.relator_end(r); ++w) {
      int img = candidate[*w / 2];
      value = wn->mul(value, (*w & 1) ? wn->inv(img) : img);
    }
    if (value != 0) return std::nullopt;
  }
  std::vector<int> gens(pm.lambda.begin(), pm.lambda.end());
  auto hom = generator_image_extension(pm.wedge, gens, candidate, wn);
  if (!hom) return std::nullopt;  // cannot happen once relators pass
  if (!hom->is_bijective()) return std::nullopt;
  return hom;
}

std::optional<ExteriorIsoclinismWitness> are_exterior_isoclinic_groups(
    const GroupPtr& m, const GroupPtr& n) {
  auto pm = exterior_square(m);
  auto pn = exterior_square(n);
  if (pm->wedge->order() != pn->wedge->order()) return std::nullopt;
  QuotientGroup qm = quotient_group(m, exterior_center(m));
  QuotientGroup qn = quotient_group(n, exterior_center(n));
  if (qm.carrier->order() != qn.carrier->order()) return std::nullopt;

  std::optional<ExteriorIsoclinismWitness> witness;
  for_each_isomorphism(qm.carrier, qn.carrier, [&](const GroupHom& mu) {
    auto zeta = wedge_zeta_from_mu(*pm, *pn, qm, qn, mu);
    if (!zeta) return true;
    witness = ExteriorIsoclinismWitness{qm, qn, mu, *zeta};
    return false;
  });
  return witness;
}

std::vector<int> exterior_isoclinic_family(const GroupPtr& g, int order,
                                           const Catalog& cat) {
  if (!cat.has_order(order))
    throw CatalogError("exterior_isoclinic_family: order outside catalog");
  std::vector<int> members;
  for (int id : cat.ids_of_order(order))
    if (are_exterior_isoclinic_groups(g, cat.group(order, id))) members.push_back(id);
  return members;
}

bool is_exterior_stem_group(const GroupPtr& g) {
  return exterior_center(g).order() == 1;
}

std::vector<CatalogId> all_exterior_stem_group_ids(int order, const Catalog& cat) {
  if (!cat.has_order(order))
    throw CatalogError("all_exterior_stem_group_ids: order outside catalog");
  std::vector<CatalogId> out;
  for (int id : cat.ids_of_order(order))
    if (is_exterior_stem_group(cat.group(order, id))) out.push_back(CatalogId{order, id});
  return out;
}

GroupPtr exterior_isoclinic_group(const GroupPtr& g, const Catalog& cat) {
  for (const auto& e : cat.entries()) {
    GroupPtr candidate = cat.group(e.order, e.id);
    if (are_exterior_isoclinic_groups(g, candidate)) return candidate;
  }
  throw CatalogError("exterior_isoclinic_group: no catalog group qualifies");
}

GroupPtr exterior_isoclinic_exterior_stem_group(const GroupPtr& g, const Catalog& cat) {
  for (const auto& e : cat.entries()) {
    GroupPtr candidate = cat.group(e.order, e.id);
    if (!is_exterior_stem_group(candidate)) continue;
    if (are_exterior_isoclinic_groups(g, candidate)) return candidate;
  }
  throw CatalogError(
      "exterior_isoclinic_exterior_stem_group: no exterior stem catalog group "
      "is exterior isoclinic to the input");
}

std::vector<int> abelian_wedge_oracle(const std::vector<int>& invariants) {
  for (size_t i = 0; i + 1 < invariants.size(); ++i)
    if (invariants[i] < 1 || invariants[i + 1] % invariants[i] != 0)
      throw std::invalid_argument("abelian_wedge_oracle: not a divisor chain");
  if (!invariants.empty() && invariants.back() < 1)
    throw std::invalid_argument("abelian_wedge_oracle: not a divisor chain");
  std::vector<int> wedge;
  for (size_t i = 0; i < invariants.size(); ++i)
    for (size_t j = i + 1; j < invariants.size(); ++j)
      wedge.push_back(std::gcd(invariants[i], invariants[j]));
  wedge.erase(std::remove(wedge.begin(), wedge.end(), 1), wedge.end());
  std::sort(wedge.begin(), wedge.end());
  return wedge;
}

}  // namespace xclin
