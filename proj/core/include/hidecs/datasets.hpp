#pragma once

#include <map>
#include <string>
#include <vector>

#include "hidecs/graph.hpp"

namespace hidecs {

struct Requirement {
  int id = 0;  // 1-based, as published
  std::string text;
  std::string group;
};

// An embedded dataset: requirement texts plus the raw (still asymmetric)
// interaction table, transcribed verbatim. The known one-way entries are
// part of the data and are reported, never silently repaired.
struct DatasetBundle {
  std::string name;
  std::vector<Requirement> requirements;
  std::vector<std::string> groups;  // in published order; may be empty
  RawInteractionTable table;
  std::string provenance;

  Graph graph() const;                 // symmetrized
  AsymmetryReport asymmetries() const;
  std::string interactions_text() const;   // canonical serialization
  std::string requirements_text() const;   // "# group" headers + "id. text"
};

// name is "indian-village" or "community-privacy"
DatasetBundle load_dataset(const std::string& name);
std::vector<std::string> dataset_names();

// The embedded reference partitions of the 141-vertex problem, addressable
// by id. Letter sets A-D are also available individually for restriction.
struct ReferencePartitions {
  // ids: ca-pi1, ca-pi2, ca-pi4, rpg1-pi4, rpg2-pi4, newman-4
  std::map<std::string, Partition> partitions;
  // cell labels for the partitions above, keyed by the same ids
  std::map<std::string, std::vector<std::string>> labels;
  // A, B, C, D and A1..D3
  std::map<std::string, std::vector<Vertex>> named_sets;

  const Partition& get(const std::string& id) const;
  const std::vector<Vertex>& set(const std::string& name) const;
};

const ReferencePartitions& reference_partitions();

// FNV-1a over the canonical serializations; the tests pin this value to
// guard against transcription drift.
std::uint64_t dataset_checksum();

}  // namespace hidecs
