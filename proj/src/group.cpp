#include "xclin/group.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace xclin {

namespace {

std::vector<Permutation> close_under_product(int degree,
                                             const std::vector<Permutation>& gens) {
  std::set<Permutation> seen;
  std::deque<Permutation> todo;
  Permutation id(degree);
  seen.insert(id);
  todo.push_back(id);
  while (!todo.empty()) {
    Permutation cur = todo.front();
    todo.pop_front();
    for (const auto& g : gens) {
      Permutation next = cur * g;
      if (seen.insert(next).second) todo.push_back(next);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

GroupPtr Group::from_generators(int degree, std::vector<Permutation> generators,
                                std::string name) {
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw std::invalid_argument("Group: generator degree mismatch");
  auto elements = close_under_product(degree, generators);
  return from_elements(std::move(elements), std::move(generators), std::move(name));
}

GroupPtr Group::from_elements(std::vector<Permutation> elements,
                              std::vector<Permutation> generators,
                              std::string name) {
  if (elements.empty()) throw std::invalid_argument("Group: no elements");
  auto g = std::shared_ptr<Group>(new Group());
  g->degree_ = elements.front().degree();
  g->name_ = std::move(name);
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  g->elements_ = std::move(elements);
  g->finish();
  g->generator_indices_.reserve(generators.size());
  for (const auto& p : generators) {
    int idx = g->index_of(p);
    if (idx < 0) throw std::invalid_argument("Group: generator not in element table");
    g->generator_indices_.push_back(idx);
  }
  return g;
}

GroupPtr Group::trivial() {
  static GroupPtr t = Group::from_generators(1, {}, "C1");
  return t;
}

void Group::finish() {
  const int n = order();
  if (!elements_.front().is_identity())
    throw std::invalid_argument("Group: identity missing from element table");
  mul_.assign(static_cast<size_t>(n) * n, -1);
  inv_.assign(n, -1);
  element_order_.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      Permutation p = elements_[a] * elements_[b];
      int idx = index_of(p);
      if (idx < 0) throw std::invalid_argument("Group: element table not closed");
      mul_[a * n + b] = idx;
      if (idx == 0) inv_[a] = b;
    }
    if (inv_[a] < 0) throw std::invalid_argument("Group: element without inverse");
  }
  for (int a = 0; a < n; ++a) {
    int e = 1, x = a;
    while (x != 0) {
      x = mul(x, a);
      ++e;
    }
    element_order_[a] = e;
  }
}

int Group::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || !(*it == p)) return -1;
  return static_cast<int>(it - elements_.begin());
}

int Group::power(int a, int e) const {
  if (e < 0) return power(inv(a), -e);
  int r = 0, b = a;
  while (e > 0) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

std::vector<Permutation> Group::generator_permutations() const {
  std::vector<Permutation> out;
  out.reserve(generator_indices_.size());
  for (int i : generator_indices_) out.push_back(elements_[i]);
  return out;
}

bool Group::is_abelian() const {
  const int n = order();
  for (int a = 1; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::map<int, int> Group::element_order_histogram() const {
  std::map<int, int> h;
  for (int a = 0; a < order(); ++a) ++h[element_order_[a]];
  return h;
}

// ---- Subgroup ----

bool Subgroup::contains(int element_index) const {
  return std::binary_search(elements.begin(), elements.end(), element_index);
}

bool Subgroup::contains(const Subgroup& other) const {
  if (parent != other.parent)
    throw std::invalid_argument("Subgroup: containment across different parents");
  return std::includes(elements.begin(), elements.end(), other.elements.begin(),
                       other.elements.end());
}

bool Subgroup::is_normal() const {
  for (int g = 0; g < parent->order(); ++g)
    for (int h : elements)
      if (!contains(parent->conj(g, h))) return false;
  return true;
}

GroupPtr Subgroup::as_group() const {
  std::vector<Permutation> elems;
  elems.reserve(elements.size());
  for (int i : elements) elems.push_back(parent->element(i));
  // Greedy generating sequence within the subgroup.
  std::vector<int> gen_idx;
  std::set<int> closure = {parent->identity()};
  while (static_cast<int>(closure.size()) < order()) {
    int next = -1;
    for (int e : elements)
      if (!closure.count(e)) {
        next = e;
        break;
      }
    gen_idx.push_back(next);
    closure = {parent->identity()};
    std::deque<int> todo = {parent->identity()};
    while (!todo.empty()) {
      int cur = todo.front();
      todo.pop_front();
      for (int gi : gen_idx) {
        int nx = parent->mul(cur, gi);
        if (closure.insert(nx).second) todo.push_back(nx);
      }
    }
  }
  std::vector<Permutation> gens;
  for (int i : gen_idx) gens.push_back(parent->element(i));
  return Group::from_elements(std::move(elems), std::move(gens));
}

// ---- GroupHom ----

bool GroupHom::is_homomorphism() const {
  const int n = domain->order();
  if (static_cast<int>(table.size()) != n) return false;
  if (table[0] != 0) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table[domain->mul(a, b)] != codomain->mul(table[a], table[b])) return false;
  return true;
}

bool GroupHom::is_bijective() const {
  if (domain->order() != codomain->order()) return false;
  std::vector<char> hit(codomain->order(), 0);
  for (int v : table) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

Subgroup GroupHom::image() const {
  std::set<int> img(table.begin(), table.end());
  return Subgroup{codomain, {img.begin(), img.end()}};
}

Subgroup GroupHom::kernel() const {
  std::vector<int> ker;
  for (int x = 0; x < domain->order(); ++x)
    if (table[x] == 0) ker.push_back(x);
  return Subgroup{domain, std::move(ker)};
}

GroupHom GroupHom::then(const GroupHom& next) const {
  // distinct Group objects with identical element tables share index space
  bool same = codomain == next.domain ||
              (codomain->degree() == next.domain->degree() &&
               codomain->elements() == next.domain->elements());
  if (!same) throw std::invalid_argument("GroupHom: composition type mismatch");
  std::vector<int> t(table.size());
  for (size_t i = 0; i < table.size(); ++i) t[i] = next.table[table[i]];
  return GroupHom{domain, next.codomain, std::move(t)};
}

GroupHom GroupHom::inverse() const {
  if (!is_bijective()) throw std::invalid_argument("GroupHom: inverse of non-bijection");
  std::vector<int> t(table.size());
  for (size_t i = 0; i < table.size(); ++i) t[table[i]] = static_cast<int>(i);
  return GroupHom{codomain, domain, std::move(t)};
}

GroupHom GroupHom::identity(GroupPtr g) {
  std::vector<int> t(g->order());
  for (size_t i = 0; i < t.size(); ++i) t[i] = static_cast<int>(i);
  return GroupHom{g, g, std::move(t)};
}

GroupHom GroupHom::trivial(GroupPtr domain, GroupPtr codomain) {
  return GroupHom{domain, codomain, std::vector<int>(domain->order(), 0)};
}

// ---- operations ----

Subgroup center(const GroupPtr& g) {
  std::vector<int> z;
  for (int a = 0; a < g->order(); ++a) {
    bool central = true;
    for (int b = 0; b < g->order() && central; ++b)
      if (g->mul(a, b) != g->mul(b, a)) central = false;
    if (central) z.push_back(a);
  }
  return Subgroup{g, std::move(z)};
}

Subgroup subgroup_generated_by(const GroupPtr& g, const std::vector<int>& gens) {
  std::set<int> closure = {g->identity()};
  std::deque<int> todo = {g->identity()};
  while (!todo.empty()) {
    int cur = todo.front();
    todo.pop_front();
    for (int gi : gens) {
      int nx = g->mul(cur, gi);
      if (closure.insert(nx).second) todo.push_back(nx);
    }
  }
  return Subgroup{g, {closure.begin(), closure.end()}};
}

Subgroup derived_subgroup(const GroupPtr& g) {
  std::set<int> comms;
  for (int a = 0; a < g->order(); ++a)
    for (int b = 0; b < g->order(); ++b) comms.insert(g->comm(a, b));
  return subgroup_generated_by(g, {comms.begin(), comms.end()});
}

Subgroup whole_subgroup(const GroupPtr& g) {
  std::vector<int> all(g->order());
  for (int i = 0; i < g->order(); ++i) all[i] = i;
  return Subgroup{g, std::move(all)};
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup{g, {0}}; }

Subgroup subgroup_intersection(const Subgroup& a, const Subgroup& b) {
  if (a.parent != b.parent)
    throw std::invalid_argument("Subgroup: intersection across different parents");
  std::vector<int> out;
  std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(),
                        b.elements.end(), std::back_inserter(out));
  return Subgroup{a.parent, std::move(out)};
}

CommutatorMap commutator_map(const GroupPtr& g, const Subgroup& central) {
  Subgroup z = center(g);
  for (int e : central.elements)
    if (!z.contains(e))
      throw std::invalid_argument("commutator_map: subgroup is not central");
  QuotientGroup q = quotient_group(g, central);
  const int m = q.carrier->order();
  std::vector<int> table(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      table[a * m + b] = g->comm(q.coset_rep[a], q.coset_rep[b]);
  return CommutatorMap{std::move(q), derived_subgroup(g), std::move(table)};
}

QuotientGroup quotient_group(const GroupPtr& g, const Subgroup& normal) {
  if (!normal.is_normal())
    throw std::invalid_argument("quotient_group: subgroup is not normal");
  const int n = g->order();
  // cosets keyed by minimal member
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (coset_of[x] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int h : normal.elements) coset_of[g->mul(x, h)] = c;
  }
  const int k = static_cast<int>(reps.size());
  // right multiplication action on cosets
  std::vector<Permutation> coset_perm;
  coset_perm.reserve(k);
  for (int c = 0; c < k; ++c) {
    std::vector<int> images(k);
    for (int d = 0; d < k; ++d) images[d] = coset_of[g->mul(reps[d], reps[c])];
    coset_perm.emplace_back(std::move(images));
  }
  std::vector<Permutation> gens;
  for (int gi : g->generator_indices()) gens.push_back(coset_perm[coset_of[gi]]);
  GroupPtr carrier = Group::from_elements(coset_perm, gens);
  std::vector<int> proj(n);
  for (int x = 0; x < n; ++x) proj[x] = carrier->index_of(coset_perm[coset_of[x]]);
  std::vector<int> rep_of_carrier(k);
  for (int c = 0; c < k; ++c) rep_of_carrier[carrier->index_of(coset_perm[c])] = reps[c];
  return QuotientGroup{g, normal, carrier, GroupHom{g, carrier, std::move(proj)},
                       std::move(rep_of_carrier)};
}

Rational commutative_degree(const GroupPtr& g) {
  std::int64_t count = 0;
  const int n = g->order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g->mul(a, b) == g->mul(b, a)) ++count;
  return Rational(count, static_cast<std::int64_t>(n) * n);
}

DirectProduct direct_product(const GroupPtr& a, const GroupPtr& b) {
  const int da = a->degree(), db = b->degree();
  auto lift_left = [&](const Permutation& p) {
    std::vector<int> im(da + db);
    for (int x = 0; x < da; ++x) im[x] = p[x];
    for (int x = 0; x < db; ++x) im[da + x] = da + x;
    return Permutation(std::move(im));
  };
  auto lift_right = [&](const Permutation& p) {
    std::vector<int> im(da + db);
    for (int x = 0; x < da; ++x) im[x] = x;
    for (int x = 0; x < db; ++x) im[da + x] = da + p[x];
    return Permutation(std::move(im));
  };
  std::vector<Permutation> elems;
  elems.reserve(static_cast<size_t>(a->order()) * b->order());
  for (const auto& pa : a->elements())
    for (const auto& pb : b->elements()) {
      std::vector<int> im(da + db);
      for (int x = 0; x < da; ++x) im[x] = pa[x];
      for (int x = 0; x < db; ++x) im[da + x] = da + pb[x];
      elems.emplace_back(std::move(im));
    }
  std::vector<Permutation> gens;
  for (const auto& p : a->generator_permutations()) gens.push_back(lift_left(p));
  for (const auto& p : b->generator_permutations()) gens.push_back(lift_right(p));
  GroupPtr prod = Group::from_elements(std::move(elems), std::move(gens));
  std::vector<int> ta(a->order()), tb(b->order());
  for (int x = 0; x < a->order(); ++x) ta[x] = prod->index_of(lift_left(a->element(x)));
  for (int x = 0; x < b->order(); ++x) tb[x] = prod->index_of(lift_right(b->element(x)));
  return DirectProduct{prod, GroupHom{a, prod, std::move(ta)},
                       GroupHom{b, prod, std::move(tb)}};
}

bool is_stem_group(const GroupPtr& g) {
  Subgroup z = center(g);
  Subgroup d = derived_subgroup(g);
  return d.contains(z);
}

std::vector<int> abelian_invariants(const GroupPtr& g) {
  GroupPtr a = g;
  if (!g->is_abelian()) {
    a = quotient_group(g, derived_subgroup(g)).carrier;
  }
  const int n = a->order();
  if (n == 1) return {};
  // primary decomposition from order-divisibility counts
  std::map<int, std::vector<int>> primary;  // prime -> descending exponent list
  int rest = n;
  for (int p = 2; p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    std::vector<int> counts;  // counts[i] = #{x : x^(p^i) = 1}
    counts.push_back(1);
    while (true) {
      int pk = 1;
      for (size_t i = 0; i < counts.size(); ++i) pk *= p;
      int c = 0;
      for (int x = 0; x < n; ++x)
        if (a->power(x, pk) == 0) ++c;
      counts.push_back(c);
      if (c == counts[counts.size() - 2]) break;  // stabilized
    }
    // counts[i]/counts[i-1] = p^(number of cyclic factors with exponent >= i)
    std::vector<int> factors;
    for (size_t i = 1; i < counts.size(); ++i) {
      int ratio = counts[i] / counts[i - 1];
      int m = 0;
      while (ratio > 1) {
        ratio /= p;
        ++m;
      }
      if (m == 0) break;
      if (static_cast<int>(factors.size()) < m) factors.resize(m, 0);
      for (int j = 0; j < m; ++j) factors[j] = static_cast<int>(i);
    }
    std::sort(factors.begin(), factors.end(), std::greater<int>());
    primary[p] = factors;
  }
  size_t k = 0;
  for (auto& [p, f] : primary) k = std::max(k, f.size());
  std::vector<int> divisors(k, 1);  // descending
  for (auto& [p, f] : primary)
    for (size_t i = 0; i < f.size(); ++i) {
      int pe = 1;
      for (int j = 0; j < f[i]; ++j) pe *= p;
      divisors[i] *= pe;
    }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

std::vector<int> minimal_generating_sequence(const GroupPtr& g) {
  std::vector<int> gens;
  Subgroup h = trivial_subgroup(g);
  while (h.order() < g->order()) {
    int next = -1;
    for (int x = 1; x < g->order(); ++x)
      if (!h.contains(x)) {
        next = x;
        break;
      }
    gens.push_back(next);
    h = subgroup_generated_by(g, gens);
  }
  return gens;
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g) {
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> todo;
  std::vector<int> triv = {0};
  seen.insert(triv);
  todo.push_back(triv);
  while (!todo.empty()) {
    std::vector<int> h = todo.front();
    todo.pop_front();
    for (int x = 1; x < g->order(); ++x) {
      if (std::binary_search(h.begin(), h.end(), x)) continue;
      std::vector<int> gens = h;
      gens.push_back(x);
      Subgroup k = subgroup_generated_by(g, gens);
      if (seen.insert(k.elements).second) todo.push_back(k.elements);
    }
  }
  std::vector<Subgroup> out;
  out.reserve(seen.size());
  for (auto& e : seen) out.push_back(Subgroup{g, e});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return out;
}

std::vector<Subgroup> normal_subgroups(const GroupPtr& g) {
  std::vector<Subgroup> out;
  for (auto& h : all_subgroups(g))
    if (h.is_normal()) out.push_back(h);
  return out;
}

}  // namespace xclin
