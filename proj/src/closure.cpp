#include "lpa/closure.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <string>

namespace lpa {

namespace {

std::string set_to_string(const Graph& g, VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (VertexIndex v : s) {
    if (!first) out += ", ";
    out += g.vertex_name(v);
    first = false;
  }
  return out + "}";
}

[[noreturn]] void throw_not_hereditary(const Graph& g, VertexSet h) {
  auto bad = hereditary_violations(g, h);
  std::vector<std::string> names;
  for (VertexIndex v : bad) names.push_back(g.vertex_name(v));
  throw ValidationError(ErrorKind::not_hereditary,
                        "set " + set_to_string(g, h) + " is not hereditary", names);
}

}  // namespace

bool is_hereditary(const Graph& g, VertexSet h) {
  for (VertexIndex v : h) {
    if (!g.out_neighbors(v).is_subset_of(h)) return false;
  }
  return true;
}

bool is_saturated(const Graph& g, VertexSet h) {
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (h.contains(v)) continue;
    if (g.vertex_class(v) == VertexClass::regular && g.out_neighbors(v).is_subset_of(h)) {
      return false;
    }
  }
  return true;
}

std::vector<VertexIndex> hereditary_violations(const Graph& g, VertexSet h) {
  std::vector<VertexIndex> out;
  for (VertexIndex v : h) {
    if (!g.out_neighbors(v).is_subset_of(h)) out.push_back(v);
  }
  return out;
}

std::vector<VertexIndex> saturation_violations(const Graph& g, VertexSet h) {
  std::vector<VertexIndex> out;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (h.contains(v)) continue;
    if (g.vertex_class(v) == VertexClass::regular && g.out_neighbors(v).is_subset_of(h)) {
      out.push_back(v);
    }
  }
  return out;
}

HsSet HsSet::checked(const Graph& g, VertexSet members) {
  if (!is_hereditary(g, members)) throw_not_hereditary(g, members);
  auto bad = saturation_violations(g, members);
  if (!bad.empty()) {
    std::vector<std::string> names;
    for (VertexIndex v : bad) names.push_back(g.vertex_name(v));
    throw ValidationError(ErrorKind::not_saturated,
                          "set " + set_to_string(g, members) + " is not saturated", names);
  }
  return HsSet{&g, members};
}

VertexSet hereditary_closure(const Graph& g, VertexSet seed) {
  VertexSet reach = seed;
  VertexSet frontier = seed;
  while (!frontier.empty()) {
    VertexSet next;
    for (VertexIndex v : frontier) next |= g.out_neighbors(v);
    frontier = next - reach;
    reach |= next;
  }
  return reach;
}

HsSet s_saturation(const Graph& g, VertexSet h, VertexSet s, std::size_t* rounds_out) {
  if (!is_hereditary(g, h)) throw_not_hereditary(g, h);

  VertexSet cur = h;
  std::size_t rounds = 0;
  for (;;) {
    VertexSet add;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      if (cur.contains(v)) continue;
      bool eligible = g.vertex_class(v) == VertexClass::regular || s.contains(v);
      if (eligible && g.out_neighbors(v).is_subset_of(cur)) add.insert(v);
    }
    if (add.empty()) break;
    cur |= add;
    ++rounds;
  }
  if (rounds_out) *rounds_out = rounds;
  return HsSet{&g, cur};
}

VertexSet breaking_vertices(const Graph& g, VertexSet h) {
  if (!is_hereditary(g, h)) throw_not_hereditary(g, h);

  VertexSet out;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (h.contains(v)) continue;
    if (g.vertex_class(v) != VertexClass::infinite_emitter) continue;
    bool any = false;
    bool infinite = false;
    for (auto bi : g.out_bundles(v)) {
      const auto& b = g.bundles()[bi];
      if (h.contains(b.target) || b.mult.is_zero()) continue;
      if (b.mult.is_infinite()) infinite = true;
      else any = true;
    }
    if (any && !infinite) out.insert(v);
  }
  return out;
}

HsSet perp(const Graph& g, VertexSet h) {
  // Always hereditary; saturated whenever h is hereditary.
  return HsSet{&g, g.all_vertices() - root(g, h)};
}

std::size_t enumeration_cap() {
  if (const char* env = std::getenv("LPA_MAX_VERTICES")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0 && v <= kMaxVertices) return static_cast<std::size_t>(v);
  }
  return 20;
}

namespace {

void check_enumeration_capacity(const Graph& g, std::size_t& cap) {
  if (cap == 0) cap = enumeration_cap();
  if (g.vertex_count() > cap) {
    std::ostringstream msg;
    msg << "hereditary-saturated enumeration needs 2^" << g.vertex_count()
        << " subset checks; the cap is " << cap
        << " vertices (set LPA_MAX_VERTICES to raise it)";
    throw CapacityError(msg.str());
  }
}

bool is_hs_mask(const Graph& g, std::uint64_t mask) {
  VertexSet h = VertexSet::from_bits(mask);
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    VertexSet out = g.out_neighbors(v);
    if (h.contains(v)) {
      if (!out.is_subset_of(h)) return false;
    } else if (g.vertex_class(v) == VertexClass::regular && out.is_subset_of(h)) {
      return false;
    }
  }
  return true;
}

void sort_family(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end(), set_order_less);
}

}  // namespace

HsFamily enumerate_hs_serial(const Graph& g, std::size_t cap) {
  check_enumeration_capacity(g, cap);
  const std::uint64_t total = std::uint64_t{1} << g.vertex_count();
  std::vector<VertexSet> sets;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (is_hs_mask(g, mask)) sets.push_back(VertexSet::from_bits(mask));
  }
  sort_family(sets);
  return HsFamily{&g, std::move(sets)};
}

HsFamily enumerate_hs(const Graph& g, std::size_t cap) {
  check_enumeration_capacity(g, cap);
  const std::uint64_t total = std::uint64_t{1} << g.vertex_count();
  std::vector<VertexSet> sets;

#pragma omp parallel
  {
    std::vector<VertexSet> local;
#pragma omp for schedule(static) nowait
    for (std::int64_t mask = 0; mask < static_cast<std::int64_t>(total); ++mask) {
      if (is_hs_mask(g, static_cast<std::uint64_t>(mask))) {
        local.push_back(VertexSet::from_bits(static_cast<std::uint64_t>(mask)));
      }
    }
#pragma omp critical
    sets.insert(sets.end(), local.begin(), local.end());
  }

  sort_family(sets);
  return HsFamily{&g, std::move(sets)};
}

}  // namespace lpa
