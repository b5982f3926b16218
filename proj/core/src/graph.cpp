#include "rw/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "rw/errors.hpp"

namespace rw {
namespace {

const EdgeKind kAllKinds[] = {EdgeKind::Rim, EdgeKind::Inspoke, EdgeKind::Outspoke, EdgeKind::Hub};

} // namespace

std::string edge_kind_name(EdgeKind k) {
  switch (k) {
    case EdgeKind::Rim: return "rim";
    case EdgeKind::Inspoke: return "inspoke";
    case EdgeKind::Outspoke: return "outspoke";
    case EdgeKind::Hub: return "hub";
  }
  throw ParameterError("unknown edge kind");
}

RWGraph::RWGraph(const RoseWindowParams& params) : params_(params) {
  validate(params_);
  degenerate_ = is_degenerate(params_);
  const int n = params_.n;
  const int nv = 2 * n;
  adj_.assign(static_cast<std::size_t>(nv), {});
  adj_matrix_.assign(static_cast<std::size_t>(nv) * static_cast<std::size_t>(nv), 0);
  for (int i = 0; i < n; ++i) {
    add_edge(vertex_A(n, i), vertex_A(n, i + 1), EdgeKind::Rim);
    add_edge(vertex_A(n, i), vertex_B(n, i), EdgeKind::Inspoke);
    add_edge(vertex_A(n, i + params_.a), vertex_B(n, i), EdgeKind::Outspoke);
    add_edge(vertex_B(n, i), vertex_B(n, i + params_.r), EdgeKind::Hub);
  }
  std::sort(edges_.begin(), edges_.end());
  for (auto& nbrs : adj_) {
    std::sort(nbrs.begin(), nbrs.end());
  }
}

void RWGraph::add_edge(int u, int v, EdgeKind kind) {
  if (u == v) {
    throw InternalConsistencyError("rose window construction produced a loop at vertex " +
                                   std::to_string(u) + " for " + to_string(params_));
  }
  if (u > v) std::swap(u, v);
  for (auto& e : edges_) {
    if (e.u == u && e.v == v) {
      e.kinds |= static_cast<unsigned>(kind);
      return;
    }
  }
  edges_.push_back(Edge{u, v, static_cast<unsigned>(kind)});
  adj_[static_cast<std::size_t>(u)].push_back(v);
  adj_[static_cast<std::size_t>(v)].push_back(u);
  const auto nv = static_cast<std::size_t>(vertex_count());
  adj_matrix_[static_cast<std::size_t>(u) * nv + static_cast<std::size_t>(v)] = 1;
  adj_matrix_[static_cast<std::size_t>(v) * nv + static_cast<std::size_t>(u)] = 1;
}

bool RWGraph::adjacent(int u, int v) const {
  const int nv = vertex_count();
  if (u < 0 || u >= nv || v < 0 || v >= nv) {
    throw ParameterError("vertex id out of range in adjacency query");
  }
  return adj_matrix_[static_cast<std::size_t>(u) * static_cast<std::size_t>(nv) +
                     static_cast<std::size_t>(v)] != 0;
}

unsigned RWGraph::edge_kinds(int u, int v) const {
  if (u > v) std::swap(u, v);
  for (const auto& e : edges_) {
    if (e.u == u && e.v == v) return e.kinds;
  }
  throw ParameterError("{" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge of " +
                       to_string(params_));
}

int RWGraph::degree(int v) const {
  const int nv = vertex_count();
  if (v < 0 || v >= nv) {
    throw ParameterError("vertex id out of range in degree query");
  }
  return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

bool RWGraph::connected() const {
  const int nv = vertex_count();
  std::vector<char> seen(static_cast<std::size_t>(nv), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int w : adj_[static_cast<std::size_t>(u)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++count;
        q.push(w);
      }
    }
  }
  return count == nv;
}

std::string RWGraph::export_dot() const {
  const int n = params_.n;
  std::ostringstream out;
  out << "graph rosewindow_" << n << "_" << params_.a << "_" << params_.r << " {\n";
  for (int v = 0; v < vertex_count(); ++v) {
    out << "  v" << v << " [label=\"" << vertex_label(n, v) << "\"];\n";
  }
  for (const auto& e : edges_) {
    std::string kinds;
    for (EdgeKind k : kAllKinds) {
      if (e.kinds & static_cast<unsigned>(k)) {
        if (!kinds.empty()) kinds += ",";
        kinds += edge_kind_name(k);
      }
    }
    out << "  v" << e.u << " -- v" << e.v << " [kind=\"" << kinds << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string RWGraph::export_json() const {
  std::ostringstream out;
  out << "{\"n\":" << params_.n << ",\"a\":" << params_.a << ",\"r\":" << params_.r
      << ",\"degenerate\":" << (degenerate_ ? "true" : "false") << ",\"edges\":[";
  bool first = true;
  for (const auto& e : edges_) {
    for (EdgeKind k : kAllKinds) {
      if (e.kinds & static_cast<unsigned>(k)) {
        if (!first) out << ",";
        first = false;
        out << "[" << e.u << "," << e.v << ",\"" << edge_kind_name(k) << "\"]";
      }
    }
  }
  out << "]}";
  return out.str();
}

} // namespace rw
