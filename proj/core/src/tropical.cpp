#include "loglocal/tropical.hpp"

#include <algorithm>
#include <deque>

#include "json.hpp"

namespace loglocal {

TropTree::TropTree(int rank) : rank_(rank) {
  if (rank < 1 || rank > 64) throw InputError("tree rank must be in 1..64");
}

int TropTree::check_vertex(int v) const {
  if (v < 0 || v >= num_vertices())
    throw InputError("vertex " + std::to_string(v) + " out of range");
  return v;
}

int TropTree::add_vertex() {
  incident_.emplace_back();
  return num_vertices() - 1;
}

int TropTree::add_ray(int vertex, int divisor, const Int& weight, IntVec direction) {
  check_vertex(vertex);
  if (static_cast<int>(direction.size()) != rank_)
    throw InputError("ray direction length must equal the tree rank");
  Edge e;
  e.kind = EdgeKind::Ray;
  e.tail = vertex;
  e.divisor = divisor;
  e.weight = weight;
  e.direction = std::move(direction);
  edges_.push_back(std::move(e));
  incident_[vertex].push_back(static_cast<int>(edges_.size()) - 1);
  return static_cast<int>(edges_.size()) - 1;
}

int TropTree::add_mark(int vertex) {
  check_vertex(vertex);
  Edge e;
  e.kind = EdgeKind::Mark;
  e.tail = vertex;
  edges_.push_back(std::move(e));
  incident_[vertex].push_back(static_cast<int>(edges_.size()) - 1);
  return static_cast<int>(edges_.size()) - 1;
}

int TropTree::add_compact(int a, int b) {
  check_vertex(a);
  check_vertex(b);
  if (a == b) throw InputError("compact edge endpoints must differ");
  Edge e;
  e.kind = EdgeKind::Compact;
  e.tail = a;
  e.head = b;
  edges_.push_back(std::move(e));
  incident_[a].push_back(static_cast<int>(edges_.size()) - 1);
  incident_[b].push_back(static_cast<int>(edges_.size()) - 1);
  return static_cast<int>(edges_.size()) - 1;
}

void TropTree::set_sink(int vertex) { sink_ = check_vertex(vertex); }

const std::vector<int>& TropTree::incident(int vertex) const {
  check_vertex(vertex);
  return incident_[vertex];
}

void validate_tree(const TropTree& t) {
  if (t.num_vertices() == 0) throw InputError("tree has no vertices");
  if (t.sink() < 0) throw InputError("tree has no sink vertex");

  int compact = 0;
  int marks = 0;
  for (const TropTree::Edge& e : t.edges()) {
    switch (e.kind) {
      case TropTree::EdgeKind::Compact:
        ++compact;
        break;
      case TropTree::EdgeKind::Mark:
        ++marks;
        break;
      case TropTree::EdgeKind::Ray:
        if (e.weight < 1) throw InputError("exterior ray weight must be positive");
        break;
    }
  }
  if (marks == 0) throw InputError("tree has no interior marking");
  if (compact != t.num_vertices() - 1)
    throw InputError("tree must have exactly #vertices - 1 compact edges");

  // connectivity over compact edges (b_1 = 0 then follows from the count)
  std::vector<bool> seen(t.num_vertices(), false);
  std::deque<int> queue{t.sink()};
  seen[t.sink()] = true;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int id : t.incident(v)) {
      const TropTree::Edge& e = t.edges()[id];
      if (e.kind != TropTree::EdgeKind::Compact) continue;
      int w = e.tail == v ? e.head : e.tail;
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  for (int v = 0; v < t.num_vertices(); ++v)
    if (!seen[v])
      throw InputError("vertex " + std::to_string(v) + " not connected to the sink");

  for (int v = 0; v < t.num_vertices(); ++v) {
    int valency = 0;
    int own_marks = 0;
    for (int id : t.incident(v)) {
      if (t.edges()[id].kind == TropTree::EdgeKind::Mark)
        ++own_marks;
      else
        ++valency;
    }
    if (valency < 3 && own_marks == 0)
      throw InputError("vertex " + std::to_string(v) +
                       " has valency < 3 and no marking");
  }
}

TreeEval evaluate(const TropTree& t) {
  validate_tree(t);
  const int rank = t.rank();

  // orient toward the sink: per-vertex outgoing compact edge and depth
  std::vector<int> out_edge(t.num_vertices(), -1);
  std::vector<int> depth(t.num_vertices(), 0);
  std::vector<int> bfs{t.sink()};
  std::vector<bool> seen(t.num_vertices(), false);
  seen[t.sink()] = true;
  for (size_t q = 0; q < bfs.size(); ++q) {
    int v = bfs[q];
    for (int id : t.incident(v)) {
      const TropTree::Edge& e = t.edges()[id];
      if (e.kind != TropTree::EdgeKind::Compact) continue;
      int w = e.tail == v ? e.head : e.tail;
      if (seen[w]) continue;
      seen[w] = true;
      out_edge[w] = id;
      depth[w] = depth[v] + 1;
      bfs.push_back(w);
    }
  }

  std::vector<int> order(bfs.rbegin(), bfs.rend());  // deepest first, sink last

  const AMonomial blank{IntVec(rank, Int(0)), MultiVector(rank)};
  TreeEval eval{std::vector<AMonomial>(t.edges().size(), blank), blank, Int(0)};
  std::vector<bool> ready(t.edges().size(), false);
  for (size_t id = 0; id < t.edges().size(); ++id) {
    const TropTree::Edge& e = t.edges()[id];
    if (e.kind == TropTree::EdgeKind::Ray) {
      IntVec expo(rank);
      for (int c = 0; c < rank; ++c) expo[c] = e.weight * e.direction[c];
      eval.edge_value[id] = {std::move(expo), MultiVector::unit(rank)};
      ready[id] = true;
    } else if (e.kind == TropTree::EdgeKind::Mark) {
      eval.edge_value[id] = {IntVec(rank, Int(0)), MultiVector::top_generator(rank)};
      ready[id] = true;
    }
  }

  for (int v : order) {
    std::vector<int> ids = t.incident(v);
    std::sort(ids.begin(), ids.end());
    if (v != t.sink()) {
      std::vector<AMonomial> incoming;
      for (int id : ids) {
        if (id == out_edge[v]) continue;
        if (!ready[id])
          throw MathError("evaluation order violated at vertex " + std::to_string(v));
        incoming.push_back(eval.edge_value[id]);
      }
      if (incoming.empty())
        throw InputError("vertex " + std::to_string(v) + " has no incoming edges");
      eval.edge_value[out_edge[v]] = ell(incoming);
      ready[out_edge[v]] = true;
    } else {
      std::vector<AMonomial> incoming;
      for (int id : ids) {
        if (!ready[id])
          throw MathError("evaluation order violated at the sink");
        incoming.push_back(eval.edge_value[id]);
      }
      eval.sink_value = a_product(incoming);
    }
  }
  eval.mult = top_index(eval.sink_value);
  return eval;
}

Int multiplicity(const TropTree& t) { return evaluate(t).mult; }

namespace {

std::vector<Int> all_tangencies_positive(const NefToricProduct& x, const CurveClass& d) {
  check_curve_class(x, d);
  std::vector<Int> e(x.num_divisors());
  for (int j = 0; j < x.num_divisors(); ++j) {
    e[j] = tangency(x, d, j);
    if (e[j] == 0)
      throw InputError("zero tangency along divisor " + std::to_string(j) +
                       ": no maximally tangent curve in this class");
  }
  return e;
}

}  // namespace

TropTree build_p_curve(const NefToricProduct& x, const CurveClass& d) {
  std::vector<Int> e = all_tangencies_positive(x, d);
  TropTree t(x.total_dim());
  int v = t.add_vertex();
  for (int j = 0; j < x.num_divisors(); ++j)
    t.add_ray(v, j, e[j], x.divisor(j).direction);
  t.add_mark(v);
  t.set_sink(v);
  return t;
}

TropTree build_q_curve(const NefToricProduct& x, const CurveClass& d) {
  std::vector<int> order(x.total_dim());
  for (int j = 0; j < x.total_dim(); ++j) order[j] = j;
  return build_q_curve_ordered(x, d, order);
}

TropTree build_q_curve_ordered(const NefToricProduct& x, const CurveClass& d,
                               const std::vector<int>& order) {
  std::vector<Int> e = all_tangencies_positive(x, d);
  const int n = x.total_dim();
  if (static_cast<int>(order.size()) != n)
    throw InputError("ray order must list every non-last divisor once");
  std::vector<bool> seen(n, false);
  for (int j : order) {
    if (j < 0 || j >= n || seen[j])
      throw InputError("ray order must be a permutation of the non-last divisors");
    seen[j] = true;
  }

  TropTree t(n);
  int v = t.add_vertex();
  t.add_ray(v, order[0], e[order[0]], x.divisor(order[0]).direction);
  t.add_mark(v);
  for (int k = 1; k < n; ++k) {
    int w = t.add_vertex();
    t.add_compact(v, w);
    t.add_ray(w, order[k], e[order[k]], x.divisor(order[k]).direction);
    v = w;
  }
  int sink = t.add_vertex();
  t.add_compact(v, sink);
  for (int j = n; j < x.num_divisors(); ++j)
    t.add_ray(sink, j, e[j], x.divisor(j).direction);
  t.add_mark(sink);
  t.set_sink(sink);
  return t;
}

Rat rp_log(const NefToricProduct& x, const CurveClass& d) {
  return log_invariants(x, d).rp;
}

Rat rq_log(const NefToricProduct& x, const CurveClass& d) {
  return log_invariants(x, d).rq;
}

LogInvariantPair log_invariants(const NefToricProduct& x, const CurveClass& d) {
  check_curve_class(x, d);
  for (int j = 0; j < x.num_divisors(); ++j)
    if (tangency(x, d, j) == 0) return {Rat(0), Rat(0)};
  Int rq = x.point_constant();
  for (int i = 0; i < x.num_factors(); ++i)
    rq *= int_pow(d.d[i], static_cast<unsigned long>(x.dims()[i]));
  return {Rat(1), Rat(rq)};
}

std::string tree_to_json(const TropTree& t, const TreeEval* eval, int indent) {
  using ordered_json = nlohmann::ordered_json;
  ordered_json out;
  out["rank"] = t.rank();
  out["sink"] = t.sink();
  ordered_json jv = ordered_json::array();
  for (int v = 0; v < t.num_vertices(); ++v) {
    ordered_json o;
    o["id"] = v;
    o["edges"] = t.incident(v);
    jv.push_back(o);
  }
  out["vertices"] = jv;
  ordered_json je = ordered_json::array();
  for (size_t id = 0; id < t.edges().size(); ++id) {
    const TropTree::Edge& e = t.edges()[id];
    ordered_json o;
    o["id"] = static_cast<int>(id);
    switch (e.kind) {
      case TropTree::EdgeKind::Ray: {
        o["kind"] = "ray";
        o["vertex"] = e.tail;
        o["divisor"] = e.divisor;
        o["weight"] = int_str(e.weight);
        ordered_json dir = ordered_json::array();
        for (const Int& c : e.direction) dir.push_back(int_str(c));
        o["direction"] = dir;
        break;
      }
      case TropTree::EdgeKind::Mark:
        o["kind"] = "mark";
        o["vertex"] = e.tail;
        break;
      case TropTree::EdgeKind::Compact:
        o["kind"] = "compact";
        o["tail"] = e.tail;
        o["head"] = e.head;
        break;
    }
    if (eval) {
      const AMonomial& z = eval->edge_value[id];
      ordered_json expo = ordered_json::array();
      for (const Int& c : z.exponent) expo.push_back(int_str(c));
      o["zeta_exponent"] = expo;
      int grade = -1;
      z.alpha.is_homogeneous(&grade);
      o["zeta_grade"] = grade;
    }
    je.push_back(o);
  }
  out["edges"] = je;
  if (eval) out["multiplicity"] = int_str(eval->mult);
  return out.dump(indent);
}

}  // namespace loglocal
