// Command-line surface for the exterior-isoclinism toolkit. Every numeric
// result is exact; diagnostics go to stderr, data to stdout.

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "xclin/exterior.hpp"
#include "xclin/families.hpp"
#include "xclin/isoclinism.hpp"
#include "xclin/xmod.hpp"
#include "xclin/xmod_json.hpp"

namespace {

using namespace xclin;

struct SizePair {
  int s = 0, r = 0;
};

SizePair parse_size(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw CLI::ValidationError("--size", "expected S,R");
  SizePair p;
  p.s = std::stoi(text.substr(0, comma));
  p.r = std::stoi(text.substr(comma + 1));
  return p;
}

int run_group_info(int order, int id, const std::string& format) {
  const Catalog& cat = Catalog::builtin();
  GroupPtr g = cat.group(order, id);
  auto sq = exterior_square(g);
  int z = center(g).order();
  int zw = exterior_center(g).order();
  int der = derived_subgroup(g).order();
  int wedge = sq->wedge->order();
  Rational d = commutative_degree(g);
  Rational dw = exterior_degree(g);
  bool stem = is_stem_group(g);
  bool estem = is_exterior_stem_group(g);
  if (format == "json") {
    nlohmann::json j = {{"order", order},       {"id", id},
                        {"name", g->name()},    {"center", z},
                        {"exteriorCenter", zw}, {"derived", der},
                        {"wedge", wedge},       {"degree", d.str()},
                        {"exteriorDegree", dw.str()},
                        {"stem", stem},         {"exteriorStem", estem}};
    std::cout << j.dump(2) << "\n";
  } else if (format == "tsv") {
    std::cout << "order\tid\tname\t|Z|\t|Z^|\t|G'|\t|G^G|\td\td^\tstem\texteriorStem\n"
              << order << "\t" << id << "\t" << g->name() << "\t" << z << "\t" << zw
              << "\t" << der << "\t" << wedge << "\t" << d.str() << "\t" << dw.str()
              << "\t" << (stem ? "true" : "false") << "\t"
              << (estem ? "true" : "false") << "\n";
  } else {
    std::cout << "group: (" << order << "," << id << ") " << g->name() << "\n"
              << "|G|=" << g->order() << " |Z|=" << z << " |Z^|=" << zw
              << " |G'|=" << der << " |G^G|=" << wedge << "\n"
              << "d(G)=" << d.str() << " d^(G)=" << dw.str() << "\n"
              << "stem=" << (stem ? "true" : "false")
              << " exterior-stem=" << (estem ? "true" : "false") << "\n";
  }
  return 0;
}

int run_families(int order, const std::string& size_text, const std::string& relation,
                 const std::string& format, int jobs) {
  FamilyReport report;
  if (!size_text.empty()) {
    SizePair p = parse_size(size_text);
    report = xmod_family_report(p.s, p.r, relation, jobs);
  } else {
    report = group_family_report(order, relation, jobs);
  }
  if (format == "json")
    std::cout << report.to_json() << "\n";
  else if (format == "tsv")
    std::cout << report.to_tsv();
  else
    std::cout << report.to_table();
  return 0;
}

int run_stem_ids(int order, bool exterior, const std::string& format) {
  const Catalog& cat = Catalog::builtin();
  std::vector<CatalogId> ids;
  if (exterior) {
    ids = all_exterior_stem_group_ids(order, cat);
  } else {
    for (int id : cat.ids_of_order(order))
      if (is_stem_group(cat.group(order, id))) ids.push_back(CatalogId{order, id});
  }
  if (format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (auto& i : ids) j.push_back({i.order, i.id});
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "[";
    for (size_t i = 0; i < ids.size(); ++i) {
      if (i) std::cout << ", ";
      std::cout << "[" << ids[i].order << "," << ids[i].id << "]";
    }
    std::cout << "]\n";
  }
  return 0;
}

int run_xmod_enumerate(const std::string& size_text, bool up_to_iso,
                       const std::string& format) {
  SizePair p = parse_size(size_text);
  auto xs = all_xmods(p.s, p.r);
  if (up_to_iso) xs = all_xmods_up_to_isomorphism(xs);
  if (format == "json") {
    nlohmann::json j;
    j["sizeS"] = p.s;
    j["sizeR"] = p.r;
    j["upToIsomorphism"] = up_to_iso;
    j["count"] = xs.size();
    j["xmods"] = nlohmann::json::array();
    for (const auto& x : xs) j["xmods"].push_back(nlohmann::json::parse(xmod_to_json(*x)));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "count=" << xs.size() << "\n";
    if (format == "tsv") {
      std::cout << "position\tsourceOrder\trangeOrder\t|S^R|\t|St|\t|D|\n";
      for (size_t i = 0; i < xs.size(); ++i)
        std::cout << i + 1 << "\t" << xs[i]->source()->order() << "\t"
                  << xs[i]->range()->order() << "\t" << fixed_points(*xs[i]).order()
                  << "\t" << stabilizer(*xs[i]).order() << "\t"
                  << displacement(*xs[i]).order() << "\n";
    }
  }
  return 0;
}

int run_wedge(int order, int id, bool dump_table, int max_cosets) {
  const Catalog& cat = Catalog::builtin();
  GroupPtr g = cat.group(order, id);
  auto sq = exterior_square(g, max_cosets);
  std::cout << "|G^G|=" << sq->wedge->order();
  auto invs = abelian_invariants(sq->wedge);
  if (sq->wedge->is_abelian()) {
    std::cout << " invariants=[";
    for (size_t i = 0; i < invs.size(); ++i) std::cout << (i ? "," : "") << invs[i];
    std::cout << "]";
  }
  std::cout << "\n";
  if (dump_table) {
    CosetTable table = coset_enumeration(sq->presentation, max_cosets > 0 ? max_cosets
                                                                          : default_max_cosets());
    std::cout << table.to_tsv();
  }
  return 0;
}

int run_cross_order(bool slow, int jobs) {
  (void)jobs;
  if (!slow) {
    std::cerr << "cross-order check is expensive; pass --slow to run it\n";
    return 2;
  }
  auto classes4 = all_xmods_up_to_isomorphism(all_xmods(4, 4));
  auto all18 = all_xmods(18, 18);
  std::cerr << "searching " << all18.size() << " crossed modules of size (18,18) against "
            << classes4.size() << " classes of size (4,4)\n";
  for (size_t i = 0; i < all18.size(); ++i) {
    for (size_t j = 0; j < classes4.size(); ++j) {
      if (are_exterior_isoclinic_xmods(all18[i], classes4[j])) {
        std::cout << "found: (18,18) crossed module #" << i + 1
                  << " is exterior isoclinic to (4,4) class #" << j + 1 << "\n";
        return 0;
      }
    }
  }
  std::cout << "no cross-order exterior isoclinism found\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exterior isoclinism toolkit for finite groups and crossed modules"};
  app.require_subcommand(1);

  int max_cosets = 0;
  int jobs = 1;
  app.add_option("--max-cosets", max_cosets, "coset enumeration bound")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", jobs, "parallel pairwise checks")->check(CLI::PositiveNumber);

  int order = 0, id = 0;
  std::string format = "table";
  std::string relation = "isoclinism";
  std::string size_text;
  bool exterior = false, up_to_iso = false, dump_table = false, slow = false;

  auto* info = app.add_subcommand("group-info", "invariants of one catalog group");
  info->add_option("--order", order)->required();
  info->add_option("--id", id)->required();
  info->add_option("--format", format)->check(CLI::IsMember({"table", "tsv", "json"}));

  auto* fam = app.add_subcommand("families", "partition a scope into families");
  fam->add_option("--order", order, "group scope: catalog order");
  fam->add_option("--size", size_text, "xmod scope: S,R");
  fam->add_option("--relation", relation)->check(CLI::IsMember({"isoclinism", "exterior"}));
  fam->add_option("--format", format)->check(CLI::IsMember({"table", "tsv", "json"}));

  auto* stem = app.add_subcommand("stem-ids", "stem groups of one order");
  stem->add_option("--order", order)->required();
  stem->add_flag("--exterior", exterior, "exterior stem instead of classical");
  stem->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

  auto* xen = app.add_subcommand("xmod-enumerate", "all crossed modules of a size");
  xen->add_option("--size", size_text, "S,R")->required();
  xen->add_flag("--up-to-iso", up_to_iso);
  xen->add_option("--format", format)->check(CLI::IsMember({"table", "tsv", "json"}));

  auto* wedge = app.add_subcommand("wedge", "exterior square of one catalog group");
  wedge->add_option("--order", order)->required();
  wedge->add_option("--id", id)->required();
  wedge->add_flag("--coset-table", dump_table, "dump the coset table as TSV");

  auto* cross = app.add_subcommand("cross-order", "search a (18,18) vs (4,4) witness");
  cross->add_flag("--slow", slow, "confirm the long-running search");

  CLI11_PARSE(app, argc, argv);

  try {
    if (max_cosets > 0) set_default_max_cosets(max_cosets);
    if (info->parsed()) return run_group_info(order, id, format);
    if (fam->parsed()) {
      if (size_text.empty() == (order == 0))
        throw CLI::ValidationError("families", "pass exactly one of --order or --size");
      return run_families(order, size_text, relation, format, jobs);
    }
    if (stem->parsed()) return run_stem_ids(order, exterior, format);
    if (xen->parsed()) return run_xmod_enumerate(size_text, up_to_iso, format);
    if (wedge->parsed()) return run_wedge(order, id, dump_table, max_cosets);
    if (cross->parsed()) return run_cross_order(slow, jobs);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
