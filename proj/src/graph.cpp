#include "lpa/graph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lpa {

namespace {

std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ", ";
    out += names[i];
  }
  return out;
}

}  // namespace

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::unknown_vertex: return "unknown_vertex";
    case ErrorKind::unknown_edge: return "unknown_edge";
    case ErrorKind::duplicate_name: return "duplicate_name";
    case ErrorKind::not_hereditary: return "not_hereditary";
    case ErrorKind::not_saturated: return "not_saturated";
    case ErrorKind::not_breaking_subset: return "not_breaking_subset";
    case ErrorKind::invalid_cycle: return "invalid_cycle";
    case ErrorKind::invalid_presentation: return "invalid_presentation";
    case ErrorKind::invalid_polynomial: return "invalid_polynomial";
    case ErrorKind::graph_mismatch: return "graph_mismatch";
    case ErrorKind::not_annihilator_ideal: return "not_annihilator_ideal";
    case ErrorKind::unnamed_edge: return "unnamed_edge";
    case ErrorKind::parse: return "parse";
    case ErrorKind::capacity: return "capacity";
    case ErrorKind::contract: return "contract";
  }
  return "unknown";
}

const char* to_string(VertexClass c) {
  switch (c) {
    case VertexClass::sink: return "sink";
    case VertexClass::regular: return "regular";
    case VertexClass::infinite_emitter: return "infinite_emitter";
  }
  return "unknown";
}

bool set_order_less(VertexSet a, VertexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a == b) return false;
  // Equal cardinality: the ascending index sequences first differ at the
  // lowest bit present in exactly one of the two masks.
  std::uint64_t diff = a.bits() ^ b.bits();
  std::uint64_t low = diff & (~diff + 1);
  return (a.bits() & low) != 0;
}

VertexIndex Graph::vertex(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw ValidationError(ErrorKind::unknown_vertex,
                        "unknown vertex: " + std::string(name), {std::string(name)});
}

std::optional<VertexIndex> Graph::find_vertex(std::string_view name) const {
  auto it = std::lower_bound(vertex_names_.begin(), vertex_names_.end(), name);
  if (it == vertex_names_.end() || *it != name) return std::nullopt;
  return static_cast<VertexIndex>(it - vertex_names_.begin());
}

EdgeIndex Graph::edge_index(std::string_view name) const {
  if (auto e = find_edge(name)) return *e;
  throw ValidationError(ErrorKind::unknown_edge, "unknown edge: " + std::string(name), {},
                        {std::string(name)});
}

std::optional<EdgeIndex> Graph::find_edge(std::string_view name) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), name,
                             [](const NamedEdge& e, std::string_view n) { return e.name < n; });
  if (it == edges_.end() || it->name != name) return std::nullopt;
  return static_cast<EdgeIndex>(it - edges_.begin());
}

VertexSet Graph::resolve(const std::vector<std::string>& names) const {
  VertexSet out;
  std::vector<std::string> missing;
  for (const auto& n : names) {
    if (auto v = find_vertex(n)) {
      out.insert(*v);
    } else {
      missing.push_back(n);
    }
  }
  if (!missing.empty()) {
    std::sort(missing.begin(), missing.end());
    missing.erase(std::unique(missing.begin(), missing.end()), missing.end());
    throw ValidationError(ErrorKind::unknown_vertex, "unknown vertices: " + join_names(missing),
                          missing);
  }
  return out;
}

std::vector<std::string> Graph::names_of(VertexSet s) const {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (VertexIndex v : s) out.push_back(vertex_names_[v]);
  return out;
}

bool Graph::operator==(const Graph& o) const {
  if (vertex_names_ != o.vertex_names_) return false;
  if (edges_.size() != o.edges_.size()) return false;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].name != o.edges_[i].name || edges_[i].source != o.edges_[i].source ||
        edges_[i].target != o.edges_[i].target) {
      return false;
    }
  }
  if (bundles_.size() != o.bundles_.size()) return false;
  for (std::size_t i = 0; i < bundles_.size(); ++i) {
    const auto& a = bundles_[i];
    const auto& b = o.bundles_[i];
    if (a.source != b.source || a.target != b.target || !(a.mult == b.mult) || a.named != b.named) {
      return false;
    }
  }
  return true;
}

GraphBuilder& GraphBuilder::add_vertex(std::string name) {
  vertex_order_.push_back(std::move(name));
  return *this;
}

GraphBuilder& GraphBuilder::add_vertices(std::initializer_list<const char*> names) {
  for (const char* n : names) vertex_order_.emplace_back(n);
  return *this;
}

GraphBuilder& GraphBuilder::add_edge(std::string name, const std::string& source,
                                     const std::string& target) {
  return add_bundle(source, target, Multiplicity::finite(1), {std::move(name)});
}

GraphBuilder& GraphBuilder::add_bundle(const std::string& source, const std::string& target,
                                       Multiplicity mult, std::vector<std::string> names) {
  auto& slot = pending_[{source, target}];
  if (mult.is_infinite() || slot.mult.is_infinite()) {
    slot.mult = Multiplicity::infinite();
  } else {
    slot.mult = Multiplicity::finite(slot.mult.count() + mult.count());
  }
  for (auto& n : names) slot.names.push_back(std::move(n));
  return *this;
}

Graph GraphBuilder::build() {
  Graph g;

  std::vector<std::string> names = vertex_order_;
  std::sort(names.begin(), names.end());
  auto dup = std::adjacent_find(names.begin(), names.end());
  if (dup != names.end()) {
    throw ValidationError(ErrorKind::duplicate_name, "duplicate vertex: " + *dup, {*dup});
  }
  if (names.size() > kMaxVertices) {
    std::ostringstream msg;
    msg << "graph has " << names.size() << " vertices; this build supports at most "
        << kMaxVertices;
    throw CapacityError(msg.str());
  }
  for (const auto& n : names) {
    if (n.empty()) {
      throw ValidationError(ErrorKind::duplicate_name, "empty vertex name");
    }
  }
  g.vertex_names_ = std::move(names);

  const std::size_t n = g.vertex_names_.size();

  struct RawBundle {
    VertexIndex source, target;
    Multiplicity mult;
    std::vector<std::string> names;
  };
  std::vector<RawBundle> raw;
  raw.reserve(pending_.size());
  for (const auto& [key, pb] : pending_) {
    auto src = g.find_vertex(key.first);
    auto tgt = g.find_vertex(key.second);
    std::vector<std::string> missing;
    if (!src) missing.push_back(key.first);
    if (!tgt) missing.push_back(key.second);
    if (!missing.empty()) {
      throw ValidationError(ErrorKind::unknown_vertex,
                            "edge endpoint not declared: " + join_names(missing), missing);
    }
    if (pb.mult.is_zero() && !pb.names.empty()) {
      throw ValidationError(ErrorKind::invalid_cycle,
                            "bundle " + key.first + " -> " + key.second +
                                " has multiplicity 0 but named edges",
                            {}, pb.names);
    }
    if (!pb.mult.is_infinite() && pb.names.size() > pb.mult.count()) {
      std::ostringstream msg;
      msg << "bundle " << key.first << " -> " << key.second << " declares " << pb.names.size()
          << " edge names for multiplicity " << pb.mult.count();
      throw ValidationError(ErrorKind::invalid_cycle, msg.str(), {}, pb.names);
    }
    raw.push_back({*src, *tgt, pb.mult, pb.names});
  }

  // Collect user edge names, then pad finite bundles up to their multiplicity
  // with generated names source_target_k (skipping collisions).
  std::vector<std::string> all_names;
  for (const auto& rb : raw) {
    for (const auto& nm : rb.names) all_names.push_back(nm);
  }
  {
    auto sorted = all_names;
    std::sort(sorted.begin(), sorted.end());
    auto d = std::adjacent_find(sorted.begin(), sorted.end());
    if (d != sorted.end()) {
      throw ValidationError(ErrorKind::duplicate_name, "duplicate edge name: " + *d, {}, {*d});
    }
  }
  auto name_taken = [&](const std::string& nm) {
    return std::find(all_names.begin(), all_names.end(), nm) != all_names.end();
  };
  for (auto& rb : raw) {
    if (rb.mult.is_infinite()) continue;
    std::uint32_t k = 0;
    while (rb.names.size() < rb.mult.count()) {
      ++k;
      std::string candidate = g.vertex_names_[rb.source] + "_" + g.vertex_names_[rb.target] + "_" +
                              std::to_string(k);
      if (name_taken(candidate)) continue;
      rb.names.push_back(candidate);
      all_names.push_back(candidate);
    }
  }

  struct NamedEdgeRaw {
    std::string name;
    VertexIndex source, target;
    std::size_t bundle;
  };
  std::vector<NamedEdgeRaw> edges;
  for (std::size_t bi = 0; bi < raw.size(); ++bi) {
    for (const auto& nm : raw[bi].names) {
      edges.push_back({nm, raw[bi].source, raw[bi].target, bi});
    }
  }
  std::sort(edges.begin(), edges.end(),
            [](const NamedEdgeRaw& a, const NamedEdgeRaw& b) { return a.name < b.name; });

  g.edges_.reserve(edges.size());
  std::vector<std::vector<EdgeIndex>> bundle_edges(raw.size());
  for (std::size_t ei = 0; ei < edges.size(); ++ei) {
    g.edges_.push_back({edges[ei].name, edges[ei].source, edges[ei].target});
    bundle_edges[edges[ei].bundle].push_back(static_cast<EdgeIndex>(ei));
  }

  g.bundles_.reserve(raw.size());
  for (std::size_t bi = 0; bi < raw.size(); ++bi) {
    if (raw[bi].mult.is_zero() && bundle_edges[bi].empty()) {
      // Multiplicity-0 bundles carry no edges; keep them so the declared pair
      // survives round-trips, they are ignored by every traversal.
    }
    g.bundles_.push_back({raw[bi].source, raw[bi].target, raw[bi].mult, bundle_edges[bi]});
  }
  std::sort(g.bundles_.begin(), g.bundles_.end(), [](const EdgeBundle& a, const EdgeBundle& b) {
    return std::pair(a.source, a.target) < std::pair(b.source, b.target);
  });

  g.out_bundles_.assign(n, {});
  g.out_edges_.assign(n, {});
  g.out_neighbors_.assign(n, {});
  g.in_neighbors_.assign(n, {});
  for (std::size_t bi = 0; bi < g.bundles_.size(); ++bi) {
    const auto& b = g.bundles_[bi];
    g.out_bundles_[b.source].push_back(static_cast<std::uint32_t>(bi));
    if (!b.mult.is_zero()) {
      g.out_neighbors_[b.source].insert(b.target);
      g.in_neighbors_[b.target].insert(b.source);
    }
  }
  for (std::size_t ei = 0; ei < g.edges_.size(); ++ei) {
    g.out_edges_[g.edges_[ei].source].push_back(static_cast<EdgeIndex>(ei));
  }
  for (auto& v : g.out_edges_) std::sort(v.begin(), v.end());

  g.classes_.assign(n, VertexClass::sink);
  for (VertexIndex v = 0; v < n; ++v) {
    bool infinite = false;
    std::uint64_t total = 0;
    for (auto bi : g.out_bundles_[v]) {
      const auto& b = g.bundles_[bi];
      if (b.mult.is_infinite()) infinite = true;
      else total += b.mult.count();
    }
    g.classes_[v] = infinite ? VertexClass::infinite_emitter
                  : total > 0 ? VertexClass::regular
                              : VertexClass::sink;
  }

  // An infinite bundle with no named representatives may close a cycle that
  // find_cycles cannot see; warn so the user can name a representative.
  for (const auto& b : g.bundles_) {
    if (!b.mult.is_infinite() || !b.named.empty()) continue;
    VertexSet from_target = root(g, VertexSet::from_bits(std::uint64_t{1} << b.source));
    if (from_target.contains(b.target)) {
      g.warnings_.push_back("infinite bundle " + g.vertex_names_[b.source] + " -> " +
                            g.vertex_names_[b.target] +
                            " lies on a cycle but names no representative edge; such cycles are "
                            "invisible to cycle enumeration");
    }
  }

  return g;
}

VertexClass classify_vertex(const Graph& g, VertexIndex v) {
  if (v >= g.vertex_count()) {
    throw ValidationError(ErrorKind::unknown_vertex,
                          "vertex index out of range: " + std::to_string(v));
  }
  return g.vertex_class(v);
}

VertexSet root(const Graph& g, VertexSet targets) {
  // Fixpoint of "emits an edge into the current set", seeded with targets.
  VertexSet reach = targets;
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      if (reach.contains(v)) continue;
      if (!(g.out_neighbors(v) & reach).empty()) {
        reach.insert(v);
        changed = true;
      }
    }
  }
  return reach;
}

VertexSet Cycle::vertices(const Graph& g) const {
  VertexSet out;
  for (EdgeIndex e : edges_) out.insert(g.edge(e).source);
  return out;
}

Cycle Cycle::make(const Graph& g, std::vector<EdgeIndex> edges) {
  if (edges.empty()) {
    throw ValidationError(ErrorKind::invalid_cycle, "a cycle needs at least one edge");
  }
  std::vector<std::string> edge_names;
  for (EdgeIndex e : edges) {
    if (e >= g.edge_count()) {
      throw ValidationError(ErrorKind::invalid_cycle, "edge index out of range");
    }
    edge_names.push_back(g.edge(e).name);
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& cur = g.edge(edges[i]);
    const auto& nxt = g.edge(edges[(i + 1) % edges.size()]);
    if (cur.target != nxt.source) {
      throw ValidationError(ErrorKind::invalid_cycle,
                            "edges " + cur.name + " and " + nxt.name + " do not chain", {},
                            {cur.name, nxt.name});
    }
  }
  VertexSet seen;
  for (EdgeIndex e : edges) {
    VertexIndex s = g.edge(e).source;
    if (seen.contains(s)) {
      throw ValidationError(ErrorKind::invalid_cycle,
                            "cycle revisits vertex " + g.vertex_name(s), {g.vertex_name(s)},
                            edge_names);
    }
    seen.insert(s);
  }

  std::vector<EdgeIndex> best = edges;
  std::vector<EdgeIndex> rot = edges;
  for (std::size_t i = 1; i < edges.size(); ++i) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best) best = rot;
  }
  VertexIndex base = g.edge(best.front()).source;
  return Cycle(&g, std::move(best), base);
}

namespace {

void cycles_from(const Graph& g, VertexIndex base, std::vector<EdgeIndex>& path, VertexSet visited,
                 std::vector<Cycle>& out) {
  VertexIndex at = path.empty() ? base : g.edge(path.back()).target;
  for (EdgeIndex e : g.out_edges(at)) {
    VertexIndex to = g.edge(e).target;
    if (to == base) {
      path.push_back(e);
      out.push_back(Cycle::make(g, path));
      path.pop_back();
    } else if (to > base && !visited.contains(to)) {
      path.push_back(e);
      VertexSet v2 = visited;
      v2.insert(to);
      cycles_from(g, base, path, v2, out);
      path.pop_back();
    }
  }
}

}  // namespace

std::vector<Cycle> find_cycles(const Graph& g) {
  std::vector<Cycle> out;
  // Enumerate each simple cycle once, from its minimal vertex.
  for (VertexIndex base = 0; base < g.vertex_count(); ++base) {
    std::vector<EdgeIndex> path;
    VertexSet visited;
    visited.insert(base);
    cycles_from(g, base, path, visited, out);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool cycle_has_exit(const Graph& g, const Cycle& c) {
  if (c.graph() != &g) {
    throw ValidationError(ErrorKind::graph_mismatch, "cycle belongs to a different graph");
  }
  // Re-derive and revalidate so a stale cycle cannot slip through.
  Cycle checked = Cycle::make(g, c.edges());

  for (std::size_t i = 0; i < checked.edges().size(); ++i) {
    VertexIndex v = g.edge(checked.edges()[i]).source;
    // The cycle uses exactly one out-edge at v; anything beyond it exits.
    bool infinite = false;
    std::uint64_t total = 0;
    for (auto bi : g.out_bundles(v)) {
      const auto& b = g.bundles()[bi];
      if (b.mult.is_infinite()) infinite = true;
      else total += b.mult.count();
    }
    if (infinite || total > 1) return true;
  }
  return false;
}

}  // namespace lpa
