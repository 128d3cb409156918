#include "hidecs/datasets.hpp"

#include <algorithm>
#include <sstream>

namespace hidecs {

namespace {

#include "datasets_data.inc"

std::vector<Requirement> parse_requirements(const std::string& text,
                                            std::vector<std::string>* groups) {
  std::vector<Requirement> out;
  std::string group;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("# ", 0) == 0) {
      group = line.substr(2);
      if (groups) groups->push_back(group);
      continue;
    }
    const auto dot = line.find(". ");
    Requirement req;
    req.id = std::stoi(line.substr(0, dot));
    req.text = line.substr(dot + 2);
    req.group = group;
    out.push_back(std::move(req));
  }
  return out;
}

Partition make_partition(const std::vector<std::vector<int>>& sets_1based) {
  std::vector<std::vector<Vertex>> cells;
  std::vector<Vertex> universe;
  for (const auto& set : sets_1based) {
    std::vector<Vertex> cell;
    for (int id : set) cell.push_back(id - 1);
    universe.insert(universe.end(), cell.begin(), cell.end());
    cells.push_back(std::move(cell));
  }
  return Partition(std::move(universe), std::move(cells));
}

ReferencePartitions build_reference_partitions() {
  ReferencePartitions ref;
  for (const auto& [name, set] :
       {std::pair<const char*, const std::vector<int>*>{"A", &kSetA},
        {"B", &kSetB},
        {"C", &kSetC},
        {"D", &kSetD}}) {
    std::vector<Vertex> vs;
    for (int id : *set) vs.push_back(id - 1);
    std::sort(vs.begin(), vs.end());
    ref.named_sets.emplace(name, std::move(vs));
  }
  for (const auto& [name, set] : kTwelveSets) {
    std::vector<Vertex> vs;
    for (int id : set) vs.push_back(id - 1);
    std::sort(vs.begin(), vs.end());
    ref.named_sets.emplace(name, std::move(vs));
  }

  auto union_sets = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
  };
  ref.partitions.emplace(
      "ca-pi1",
      make_partition({union_sets(kSetA, kSetC), union_sets(kSetB, kSetD)}));
  ref.labels["ca-pi1"] = {"A+C", "B+D"};
  ref.partitions.emplace("ca-pi2", make_partition({kSetA, kSetB, kSetC, kSetD}));
  ref.labels["ca-pi2"] = {"A", "B", "C", "D"};
  {
    std::vector<std::vector<int>> sets;
    std::vector<std::string> labels;
    for (const auto& [name, set] : kTwelveSets) {
      sets.push_back(set);
      labels.emplace_back(name);
    }
    ref.partitions.emplace("ca-pi4", make_partition(sets));
    ref.labels["ca-pi4"] = labels;
  }
  auto numbered = [](int n) {
    std::vector<std::string> out;
    for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
    return out;
  };
  ref.partitions.emplace("rpg1-pi4", make_partition(kRpg1Sets));
  ref.labels["rpg1-pi4"] = numbered(static_cast<int>(kRpg1Sets.size()));
  ref.partitions.emplace("rpg2-pi4", make_partition(kRpg2Sets));
  ref.labels["rpg2-pi4"] = numbered(static_cast<int>(kRpg2Sets.size()));
  ref.partitions.emplace("newman-4", make_partition(kNewmanSets));
  ref.labels["newman-4"] = numbered(static_cast<int>(kNewmanSets.size()));

  for (const auto& [id, p] : ref.partitions)
    if (p.universe().size() != 141 || p.universe().front() != 0 ||
        p.universe().back() != 140)
      throw Error("embedded partition '" + id + "' does not cover 1..141");
  return ref;
}

}  // namespace

Graph DatasetBundle::graph() const { return symmetrize(table).first; }

AsymmetryReport DatasetBundle::asymmetries() const {
  return symmetrize(table).second;
}

std::string DatasetBundle::interactions_text() const {
  return serialize_interactions(table);
}

std::string DatasetBundle::requirements_text() const {
  std::ostringstream out;
  std::string group;
  for (const auto& req : requirements) {
    if (req.group != group) {
      group = req.group;
      if (!group.empty()) out << "# " << group << "\n";
    }
    out << req.id << ". " << req.text << "\n";
  }
  return out.str();
}

DatasetBundle load_dataset(const std::string& name) {
  DatasetBundle bundle;
  bundle.name = name;
  if (name == "indian-village") {
    bundle.requirements =
        parse_requirements(kIndianVillageRequirements, &bundle.groups);
    bundle.table = parse_interactions(kIndianVillageInteractions);
    bundle.provenance =
        "Indian Village redesign problem: 141 requirements in 13 groups with "
        "their interaction table, transcribed as printed (50 one-way entries "
        "preserved).";
  } else if (name == "community-privacy") {
    bundle.requirements =
        parse_requirements(kCommunityPrivacyRequirements, nullptr);
    bundle.table = parse_interactions(kCommunityPrivacyInteractions);
    bundle.provenance =
        "Community and Privacy dwelling problem: 33 requirements with their "
        "interaction table, transcribed as printed (2 one-way entries "
        "preserved).";
  } else {
    throw Error("unknown dataset '" + name +
                "' (expected indian-village or community-privacy)");
  }
  return bundle;
}

std::vector<std::string> dataset_names() {
  return {"indian-village", "community-privacy"};
}

const ReferencePartitions& reference_partitions() {
  static const ReferencePartitions ref = build_reference_partitions();
  return ref;
}

const Partition& ReferencePartitions::get(const std::string& id) const {
  auto it = partitions.find(id);
  if (it == partitions.end()) throw Error("unknown partition id '" + id + "'");
  return it->second;
}

const std::vector<Vertex>& ReferencePartitions::set(
    const std::string& name) const {
  auto it = named_sets.find(name);
  if (it == named_sets.end()) throw Error("unknown set '" + name + "'");
  return it->second;
}

std::uint64_t dataset_checksum() {
  std::uint64_t hash = 1469598103934665603ULL;  // FNV-1a 64
  auto feed = [&hash](const std::string& text) {
    for (unsigned char c : text) {
      hash ^= c;
      hash *= 1099511628211ULL;
    }
  };
  for (const auto& name : dataset_names()) {
    const DatasetBundle bundle = load_dataset(name);
    feed(bundle.name);
    feed(bundle.interactions_text());
    feed(bundle.requirements_text());
  }
  return hash;
}

}  // namespace hidecs
