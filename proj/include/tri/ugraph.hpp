#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tri {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using VertexSet = boost::dynamic_bitset<std::uint64_t>;

// Undirected edge, normalized so that first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Simple undirected graph over a fixed index space 0..n-1 with an alive mask,
// so vertex ids stay stable across eliminations. Edges exist only between
// alive vertices. Values are cheap to copy and treated as immutable once
// built; operations that change a graph return a new one.
class UGraph {
 public:
  UGraph() = default;
  explicit UGraph(int n);

  int capacity() const { return n_; }
  int alive_count() const { return static_cast<int>(alive_.count()); }
  bool is_alive(int v) const { return v >= 0 && v < n_ && alive_.test(v); }
  const VertexSet& alive_mask() const { return alive_; }
  std::vector<int> alive_vertices() const;

  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  const VertexSet& neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).count()); }
  int edge_count() const;
  std::vector<Edge> edges() const;  // sorted

  // Remove v and its incident edges without adding any fill.
  void kill_vertex(int v);

  bool operator==(const UGraph& o) const = default;

 private:
  int n_ = 0;
  VertexSet alive_;
  std::vector<VertexSet> adj_;

  void check_vertex(int v) const;
};

// Sequence of vertices; order[i] is eliminated at step i. Must be a
// bijection over the alive vertices of the graph it is applied to.
struct EliminationOrder {
  std::vector<int> order;

  bool operator==(const EliminationOrder& o) const = default;
};

// Throws unless `a` is a permutation of g's alive vertices.
void check_order(const UGraph& g, const EliminationOrder& a);

struct ChordalityWitness {
  bool chordal = false;
  EliminationOrder peo;    // perfect elimination order, when chordal
  std::vector<int> hole;   // a chordless cycle of length >= 4, when not
};

// Missing edges among v's neighbors, sorted.
std::vector<Edge> deficiency(const UGraph& g, int v);
int deficiency_count(const UGraph& g, int v);

// Adds v's deficiency edges, then removes v. In-place variant mutates g.
UGraph eliminate_vertex(const UGraph& g, int v);
void eliminate_in_place(UGraph& g, int v);

bool is_simplicial(const UGraph& g, int v);

// Maximum cardinality search plus a zero-fill verification pass. When the
// graph is not chordal the witness carries some chordless cycle; tests must
// not pin a particular one.
ChordalityWitness is_chordal(const UGraph& g);
bool is_chordal_quick(const UGraph& g);  // verdict only, no hole extraction

// Maximal cliques of a chordal graph, each sorted, list sorted; throws if the
// graph is not chordal. The overload taking a perfect order skips the test.
std::vector<std::vector<int>> maximal_cliques_chordal(const UGraph& g);
std::vector<std::vector<int>> maximal_cliques_chordal(
    const UGraph& g, const EliminationOrder& peo);

UGraph with_edges(const UGraph& g, const std::vector<Edge>& extra);

}  // namespace tri
