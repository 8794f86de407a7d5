#include "xclin/xmod_json.hpp"

#include "json.hpp"
#include "xclin/homsearch.hpp"

namespace xclin {

namespace {

nlohmann::json group_record(const GroupPtr& g, const Catalog& cat) {
  if (cat.has_order(g->order())) {
    try {
      CatalogId id = cat.id_group(g);
      return {{"order", id.order}, {"id", id.id}};
    } catch (const CatalogError&) {
      // fall through to the explicit form
    }
  }
  nlohmann::json j;
  j["degree"] = g->degree();
  j["generators"] = nlohmann::json::array();
  for (const auto& p : g->generator_permutations())
    j["generators"].push_back(p.cycle_string());
  return j;
}

GroupPtr group_from_record(const nlohmann::json& j, const Catalog& cat) {
  if (j.contains("order")) return cat.group(j.at("order").get<int>(), j.at("id").get<int>());
  int degree = j.at("degree").get<int>();
  std::vector<Permutation> gens;
  for (const auto& c : j.at("generators"))
    gens.push_back(Permutation::from_cycles(c.get<std::string>(), degree));
  return Group::from_generators(degree, std::move(gens));
}

}  // namespace

std::string xmod_to_json(const CrossedModule& x, const Catalog& cat) {
  nlohmann::json j;
  j["source"] = group_record(x.source(), cat);
  j["range"] = group_record(x.range(), cat);
  j["boundary"] = nlohmann::json::array();
  for (int g : x.source()->generator_indices())
    j["boundary"].push_back(x.range()->element(x.boundary()(g)).cycle_string());
  j["action"] = nlohmann::json::array();
  for (int r : x.range()->generator_indices()) {
    nlohmann::json row = nlohmann::json::array();
    for (int g : x.source()->generator_indices())
      row.push_back(x.source()->element(x.act(r, g)).cycle_string());
    j["action"].push_back(std::move(row));
  }
  return j.dump(2);
}

XModPtr xmod_from_json(const std::string& text, const Catalog& cat) {
  nlohmann::json j = nlohmann::json::parse(text);
  GroupPtr s = group_from_record(j.at("source"), cat);
  GroupPtr r = group_from_record(j.at("range"), cat);
  std::vector<int> sgens = s->generator_indices();
  std::vector<int> rgens = r->generator_indices();

  std::vector<int> bnd_images;
  for (const auto& c : j.at("boundary"))
    bnd_images.push_back(r->index_of(Permutation::from_cycles(c.get<std::string>(), r->degree())));
  auto boundary = generator_image_extension(s, sgens, bnd_images, r);
  if (!boundary) throw std::invalid_argument("xmod_from_json: boundary does not extend");

  // Each action record determines one automorphism of the source.
  const auto& jact = j.at("action");
  if (jact.size() != rgens.size())
    throw std::invalid_argument("xmod_from_json: action rows do not match range generators");
  std::vector<GroupHom> gen_autos;
  for (const auto& row : jact) {
    std::vector<int> images;
    for (const auto& c : row)
      images.push_back(s->index_of(Permutation::from_cycles(c.get<std::string>(), s->degree())));
    auto auto_hom = generator_image_extension(s, sgens, images, s);
    if (!auto_hom || !auto_hom->is_bijective())
      throw std::invalid_argument("xmod_from_json: action row is not an automorphism");
    gen_autos.push_back(*auto_hom);
  }
  // Extend from generators to the full range through the automorphism group.
  AutomorphismGroup aut = automorphism_group(s);
  std::vector<int> rgen_images;
  for (const GroupHom& h : gen_autos) {
    int idx = aut.group->index_of(Permutation(h.table));
    if (idx < 0) throw std::invalid_argument("xmod_from_json: unknown automorphism");
    rgen_images.push_back(idx);
  }
  // left action: seed with images of inverses (see all_xmods)
  std::vector<int> rgen_inv(rgens.size());
  for (size_t i = 0; i < rgens.size(); ++i) rgen_inv[i] = r->inv(rgens[i]);
  auto h = generator_image_extension(r, rgen_inv, rgen_images, aut.group);
  if (!h) throw std::invalid_argument("xmod_from_json: action does not extend to the range");
  std::vector<std::vector<int>> action(r->order(), std::vector<int>(s->order()));
  for (int re = 0; re < r->order(); ++re) {
    const Permutation& t = aut.table((*h)(r->inv(re)));
    for (int se = 0; se < s->order(); ++se) action[re][se] = t[se];
  }
  return CrossedModule::create(s, r, *boundary, std::move(action));
}

}  // namespace xclin
