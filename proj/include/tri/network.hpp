#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tri/ugraph.hpp"

namespace tri {

struct Vertex {
  int id = 0;
  std::string name;
  std::int64_t cardinality = 1;
  bool deterministic = false;
  bool observed = false;
  std::vector<int> parents;  // order preserved for serialization

  bool operator==(const Vertex& o) const = default;
};

// Directed acyclic model: structure, cardinality and flags only. No tables,
// parameters or evidence values. Immutable after construction by convention.
struct Network {
  std::string name;
  std::vector<Vertex> vertices;

  int size() const { return static_cast<int>(vertices.size()); }
  const Vertex& operator[](int id) const { return vertices.at(id); }
  std::optional<int> find_vertex(const std::string& name) const;
  bool is_parent(int p, int v) const;  // p in pa(v)

  bool operator==(const Network& o) const = default;
};

// Throws Error unless all structural invariants hold: dense ids matching
// declaration order, unique valid names, cardinality >= 1, parent ids valid
// without duplicates or self-reference, acyclic, parents declared first.
void validate_network(const Network& net);

enum class EdgeTag { directed_child, moral, both };

struct MoralGraph {
  UGraph graph;
  std::map<Edge, EdgeTag> edge_provenance;
};

// Line-based format:
//   net <name>
//   var <name> <cardinality> <flags>[ | <parent> ...]
// <flags> is '-' or a comma-separated subset of {det, obs}. '#' starts a
// comment, blank lines are ignored, parents must be declared earlier.
Network parse_network(const std::string& text);
std::string serialize_network(const Network& net);

// Drops directions and marries each vertex's parents.
MoralGraph moralize(const Network& net);

}  // namespace tri
