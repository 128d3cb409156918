#include <doctest.h>

#include <algorithm>
#include <set>

#include "hidecs/datasets.hpp"
#include "hidecs/graph.hpp"

using namespace hidecs;

TEST_CASE("village dataset") {
  const DatasetBundle bundle = load_dataset("indian-village");
  CHECK(bundle.requirements.size() == 141);
  CHECK(bundle.groups.size() == 13);
  CHECK(bundle.groups.front() == "Religion and Caste");
  CHECK(bundle.groups.back() == "Regional, Political, and National Development");
  CHECK(bundle.requirements[32].id == 33);
  CHECK(bundle.requirements[32].text == "Fertile land to be used to best advantage.");
  CHECK(bundle.requirements[32].group == "Agriculture");

  const Graph g = bundle.graph();
  CHECK(g.vertex_count() == 141);
  CHECK(g.link_count() == 1383);
  CHECK(bundle.table.directed_entry_count() == 2816);
  const AsymmetryReport report = bundle.asymmetries();
  CHECK(report.count() == 50);
  CHECK(report.touching(32) == 30);
}

TEST_CASE("dwelling dataset") {
  const DatasetBundle bundle = load_dataset("community-privacy");
  CHECK(bundle.requirements.size() == 33);
  const AsymmetryReport report = bundle.asymmetries();
  REQUIRE(report.count() == 2);
  CHECK(report.one_way[0] == std::pair<Vertex, Vertex>{20, 29});
  CHECK(report.one_way[1] == std::pair<Vertex, Vertex>{30, 20});

  CHECK_THROWS_AS(load_dataset("nonexistent"), Error);
}

TEST_CASE("transcriptions round-trip byte for byte") {
  for (const auto& name : dataset_names()) {
    const DatasetBundle bundle = load_dataset(name);
    const std::string text = bundle.interactions_text();
    const RawInteractionTable reparsed = parse_interactions(text);
    CHECK(serialize_interactions(reparsed) == text);
    CHECK(reparsed.entries == bundle.table.entries);
  }
}

TEST_CASE("transcription checksum is pinned") {
  // guards the embedded tables against accidental edits
  CHECK(dataset_checksum() == 0xe081c7ba985c251bULL);
}

TEST_CASE("reference partitions") {
  const auto& ref = reference_partitions();

  std::vector<Vertex> a1;
  for (int id : {7, 53, 57, 59, 60, 72, 125, 126, 128}) a1.push_back(id - 1);
  CHECK(ref.set("A1") == a1);

  // every reference partition covers exactly 1..141 (validated at load; the
  // accessor would have thrown otherwise)
  for (const char* id : {"ca-pi1", "ca-pi2", "ca-pi4", "rpg1-pi4", "rpg2-pi4",
                         "newman-4"}) {
    const Partition& p = ref.get(id);
    CHECK(p.universe().size() == 141);
  }

  // the twelve subsets union letter by letter to the four big sets
  for (const auto& [letter, members] :
       {std::pair<const char*, int>{"A", 3}, {"B", 4}, {"C", 2}, {"D", 3}}) {
    std::set<Vertex> from_subsets;
    for (int i = 1; i <= members; ++i) {
      const auto& sub = ref.set(std::string(letter) + std::to_string(i));
      from_subsets.insert(sub.begin(), sub.end());
    }
    const auto& whole = ref.set(letter);
    CHECK(from_subsets == std::set<Vertex>(whole.begin(), whole.end()));
  }

  // the 4-community reference sizes
  const Partition& newman = ref.get("newman-4");
  std::vector<std::size_t> sizes;
  for (const auto& cell : newman.cells()) sizes.push_back(cell.size());
  CHECK(sizes == std::vector<std::size_t>{44, 52, 42, 3});

  CHECK_THROWS_AS(ref.get("nope"), Error);
  CHECK_THROWS_AS(ref.set("nope"), Error);
}
