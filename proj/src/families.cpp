#include "xclin/families.hpp"

#include <atomic>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "xclin/exterior.hpp"
#include "xclin/isoclinism.hpp"
#include "xclin/xmod.hpp"

namespace xclin {

std::vector<std::vector<int>> partition_by_relation(
    int count, const std::function<bool(int, int)>& related, int jobs) {
  std::vector<int> cls(count, -1);
  if (jobs <= 1) {
    std::vector<int> reps;
    for (int i = 0; i < count; ++i) {
      for (size_t c = 0; c < reps.size(); ++c) {
        if (related(reps[c], i)) {
          cls[i] = static_cast<int>(c);
          break;
        }
      }
      if (cls[i] < 0) {
        cls[i] = static_cast<int>(reps.size());
        reps.push_back(i);
      }
    }
  } else {
    // all-pairs matrix computed in parallel, then a deterministic merge
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < count; ++i)
      for (int j = i + 1; j < count; ++j) pairs.emplace_back(i, j);
    std::vector<char> rel(pairs.size(), 0);
    std::atomic<size_t> next{0};
    auto worker = [&] {
      for (;;) {
        size_t k = next.fetch_add(1);
        if (k >= pairs.size()) return;
        rel[k] = related(pairs[k].first, pairs[k].second) ? 1 : 0;
      }
    };
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    std::vector<int> parent(count);
    for (int i = 0; i < count; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (size_t k = 0; k < pairs.size(); ++k) {
      if (!rel[k]) continue;
      int a = find(pairs[k].first), b = find(pairs[k].second);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<int> root_class(count, -1);
    int nclasses = 0;
    for (int i = 0; i < count; ++i) {
      int r = find(i);
      if (root_class[r] < 0) root_class[r] = nclasses++;
      cls[i] = root_class[r];
    }
  }
  int nclasses = 0;
  for (int c : cls) nclasses = std::max(nclasses, c + 1);
  std::vector<std::vector<int>> out(nclasses);
  for (int i = 0; i < count; ++i) out[cls[i]].push_back(i);
  return out;
}

namespace {

void check_relation_name(const std::string& relation) {
  if (relation != "isoclinism" && relation != "exterior")
    throw std::invalid_argument("relation must be 'isoclinism' or 'exterior'");
}

}  // namespace

FamilyReport group_family_report(int order, const std::string& relation, int jobs,
                                 const Catalog& cat) {
  check_relation_name(relation);
  if (!cat.has_order(order)) throw CatalogError("families: order outside catalog");
  std::vector<int> ids = cat.ids_of_order(order);
  std::vector<GroupPtr> groups;
  for (int id : ids) groups.push_back(cat.group(order, id));
  auto related = [&](int i, int j) {
    if (relation == "isoclinism")
      return are_isoclinic_groups(groups[i], groups[j]).has_value();
    return are_exterior_isoclinic_groups(groups[i], groups[j]).has_value();
  };
  auto classes = partition_by_relation(static_cast<int>(groups.size()), related, jobs);
  FamilyReport report;
  report.relation = relation;
  report.group_scope = true;
  report.order = order;
  for (auto& c : classes) {
    FamilyEntry e;
    e.representative_id = CatalogId{order, ids[c.front()]};
    for (int i : c) e.members.push_back(ids[i]);
    e.degree = relation == "isoclinism" ? commutative_degree(groups[c.front()])
                                        : exterior_degree(groups[c.front()]);
    report.families.push_back(std::move(e));
  }
  return report;
}

FamilyReport xmod_family_report(int size_s, int size_r, const std::string& relation,
                                int jobs, const Catalog& cat) {
  check_relation_name(relation);
  auto classes_list = all_xmods_up_to_isomorphism(all_xmods(size_s, size_r, cat));
  auto related = [&](int i, int j) {
    if (relation == "isoclinism")
      return are_isoclinic_xmods(classes_list[i], classes_list[j]).has_value();
    return are_exterior_isoclinic_xmods(classes_list[i], classes_list[j]).has_value();
  };
  auto classes =
      partition_by_relation(static_cast<int>(classes_list.size()), related, jobs);
  FamilyReport report;
  report.relation = relation;
  report.group_scope = false;
  report.size_s = size_s;
  report.size_r = size_r;
  for (auto& c : classes) {
    FamilyEntry e;
    e.representative_position = c.front() + 1;
    for (int i : c) e.members.push_back(i + 1);
    report.families.push_back(std::move(e));
  }
  return report;
}

namespace {

std::string scope_text(const FamilyReport& r) {
  if (r.group_scope) return "groups(" + std::to_string(r.order) + ")";
  return "xmods(" + std::to_string(r.size_s) + "," + std::to_string(r.size_r) + ")";
}

std::string members_text(const std::vector<int>& members) {
  std::string out;
  for (size_t i = 0; i < members.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(members[i]);
  }
  return out;
}

}  // namespace

std::string FamilyReport::to_table() const {
  std::ostringstream out;
  out << "scope=" << scope_text(*this) << " relation=" << relation << "\n";
  int num = 1;
  for (const auto& f : families) {
    out << "family " << num++ << ": representative=";
    if (f.representative_id)
      out << "(" << f.representative_id->order << "," << f.representative_id->id << ")";
    else
      out << f.representative_position;
    out << " members=[" << members_text(f.members) << "]";
    if (f.degree) out << " degree=" << f.degree->str();
    out << "\n";
  }
  return out.str();
}

std::string FamilyReport::to_tsv() const {
  std::ostringstream out;
  out << "representative\tmembers\tdegree\n";
  for (const auto& f : families) {
    if (f.representative_id)
      out << f.representative_id->order << "," << f.representative_id->id;
    else
      out << f.representative_position;
    out << "\t" << members_text(f.members) << "\t";
    out << (f.degree ? f.degree->str() : "-");
    out << "\n";
  }
  return out.str();
}

std::string FamilyReport::to_json() const {
  nlohmann::json j;
  if (group_scope)
    j["scope"] = {{"type", "groups"}, {"order", order}};
  else
    j["scope"] = {{"type", "xmods"}, {"sizeS", size_s}, {"sizeR", size_r}};
  j["relation"] = relation;
  j["families"] = nlohmann::json::array();
  for (const auto& f : families) {
    nlohmann::json jf;
    if (f.representative_id)
      jf["representative"] = {{"order", f.representative_id->order},
                              {"id", f.representative_id->id}};
    else
      jf["representative"] = {{"position", f.representative_position}};
    jf["members"] = f.members;
    if (f.degree) jf["degree"] = f.degree->str();
    j["families"].push_back(std::move(jf));
  }
  return j.dump(2);
}

FamilyReport FamilyReport::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  FamilyReport r;
  r.relation = j.at("relation").get<std::string>();
  const auto& scope = j.at("scope");
  if (scope.at("type") == "groups") {
    r.group_scope = true;
    r.order = scope.at("order").get<int>();
  } else {
    r.group_scope = false;
    r.size_s = scope.at("sizeS").get<int>();
    r.size_r = scope.at("sizeR").get<int>();
  }
  for (const auto& jf : j.at("families")) {
    FamilyEntry e;
    const auto& rep = jf.at("representative");
    if (rep.contains("order"))
      e.representative_id = CatalogId{rep.at("order").get<int>(), rep.at("id").get<int>()};
    else
      e.representative_position = rep.at("position").get<int>();
    e.members = jf.at("members").get<std::vector<int>>();
    if (jf.contains("degree")) e.degree = Rational::parse(jf.at("degree").get<std::string>());
    r.families.push_back(std::move(e));
  }
  return r;
}

}  // namespace xclin
