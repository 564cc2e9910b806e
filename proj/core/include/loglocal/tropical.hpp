#pragma once

#include <string>
#include <vector>

#include "loglocal/multivector.hpp"
#include "loglocal/toric.hpp"

namespace loglocal {

/* Combinatorial marked tree underlying a genus-0 maximally tangent tropical
   curve. No vertex positions are stored: the multiplicity recursion only
   needs the graph, the ray directions and weights, and the markings. Leaf
   edges are either exterior rays (carrying a divisor index, a positive
   weight and a primitive direction) or interior point markings; compact
   edges join two vertices. Exactly one vertex is the sink of the flow. */
class TropTree {
 public:
  enum class EdgeKind { Ray, Mark, Compact };

  struct Edge {
    EdgeKind kind;
    int tail = -1;      // vertex of a leaf edge; first endpoint of a compact edge
    int head = -1;      // second endpoint of a compact edge, else -1
    int divisor = -1;   // Ray: global divisor index
    Int weight = 0;     // Ray: tangency weight, positive
    IntVec direction;   // Ray: primitive direction in Z^rank
  };

  explicit TropTree(int rank);

  int rank() const { return rank_; }
  int add_vertex();
  int add_ray(int vertex, int divisor, const Int& weight, IntVec direction);
  int add_mark(int vertex);
  int add_compact(int a, int b);
  void set_sink(int vertex);

  int sink() const { return sink_; }
  int num_vertices() const { return static_cast<int>(incident_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& incident(int vertex) const;

 private:
  int check_vertex(int v) const;
  int rank_;
  int sink_ = -1;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
};

// Structural validation: connected, acyclic, positive ray weights, a sink,
// at least one marking, and no unmarked vertex of valency < 3 (markings do
// not count toward valency).
void validate_tree(const TropTree& t);

/* Flow evaluation toward the sink. Exterior rays seed z^{weight*direction},
   interior markings seed the top generator of the exterior algebra; every
   non-sink vertex applies the ell operation to its incoming edge values (in
   edge-creation order), and the sink takes the plain product. The
   multiplicity is the index of the sink value in the top grade. */
struct TreeEval {
  std::vector<AMonomial> edge_value;
  AMonomial sink_value;
  Int mult;
};

TreeEval evaluate(const TropTree& t);
Int multiplicity(const TropTree& t);

// The unique one-point curve: a single vertex carrying all rays (weights
// e_j(d)) and the marked point. Requires every tangency positive.
TropTree build_p_curve(const NefToricProduct& x, const CurveClass& d);

// The unique two-point curve as a caterpillar: the first marked vertex
// carries the leading non-last ray, a chain of trivalent vertices attaches
// the remaining non-last rays in the frozen divisor order, and the sink
// carries the final compact edge, the r last rays, and the second marking.
TropTree build_q_curve(const NefToricProduct& x, const CurveClass& d);

// Same caterpillar with the non-last rays attached in a chosen order
// (a permutation of 0..|n|-1); the multiplicity does not depend on it.
TropTree build_q_curve_ordered(const NefToricProduct& x, const CurveClass& d,
                               const std::vector<int>& order);

// Closed forms for the log invariants: both vanish when some tangency is
// zero; otherwise the one-point count is 1 and the two-point count is
// K * prod_i d_i^{n_i}.
struct LogInvariantPair {
  Rat rp;
  Rat rq;
};
Rat rp_log(const NefToricProduct& x, const CurveClass& d);
Rat rq_log(const NefToricProduct& x, const CurveClass& d);
LogInvariantPair log_invariants(const NefToricProduct& x, const CurveClass& d);

// Debug dump: vertices, edges, and (when an evaluation is supplied) the
// per-edge exponent and grade of the flow values.
std::string tree_to_json(const TropTree& t, const TreeEval* eval = nullptr,
                         int indent = 2);

}  // namespace loglocal
