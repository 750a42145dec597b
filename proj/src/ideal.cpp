#include "lpa/ideal.hpp"

#include <algorithm>
#include <sstream>

namespace lpa {

namespace {

std::vector<std::string> names_of(const Graph& g, VertexSet s) { return g.names_of(s); }

void require_same_graph(const AdmissiblePair& a, const AdmissiblePair& b) {
  if (&a.graph() != &b.graph()) {
    throw ValidationError(ErrorKind::graph_mismatch, "pairs belong to different graphs");
  }
}

void check_pair(const Graph& g, VertexSet h, VertexSet s, bool trusted) {
  auto bad_h = hereditary_violations(g, h);
  if (!bad_h.empty()) {
    std::vector<std::string> names;
    for (VertexIndex v : bad_h) names.push_back(g.vertex_name(v));
    std::string msg = "H is not hereditary; offending vertices: ";
    for (std::size_t i = 0; i < names.size(); ++i) msg += (i ? ", " : "") + names[i];
    if (trusted) throw ContractViolation(msg);
    throw ValidationError(ErrorKind::not_hereditary, msg, names);
  }
  auto bad_s = saturation_violations(g, h);
  if (!bad_s.empty()) {
    std::vector<std::string> names;
    for (VertexIndex v : bad_s) names.push_back(g.vertex_name(v));
    std::string msg = "H is not saturated; missing regular vertices: ";
    for (std::size_t i = 0; i < names.size(); ++i) msg += (i ? ", " : "") + names[i];
    if (trusted) throw ContractViolation(msg);
    throw ValidationError(ErrorKind::not_saturated, msg, names);
  }
  VertexSet breaking = breaking_vertices(g, h);
  if (!s.is_subset_of(breaking)) {
    auto extra = names_of(g, s - breaking);
    std::string msg = "S is not contained in the breaking vertices of H; offending vertices: ";
    for (std::size_t i = 0; i < extra.size(); ++i) msg += (i ? ", " : "") + extra[i];
    if (trusted) throw ContractViolation(msg);
    throw ValidationError(ErrorKind::not_breaking_subset, msg, extra);
  }
}

}  // namespace

AdmissiblePair validate_pair(const Graph& g, VertexSet h, VertexSet s) {
  check_pair(g, h, s, /*trusted=*/false);
  return AdmissiblePair(&g, h, s);
}

AdmissiblePair trusted_pair(const Graph& g, VertexSet h, VertexSet s) {
  check_pair(g, h, s, /*trusted=*/true);
  return AdmissiblePair(&g, h, s);
}

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2) {
    throw ValidationError(ErrorKind::invalid_polynomial,
                          "polynomial must be nonconstant (degree >= 1)");
  }
  if (coeffs_.front() != 1) {
    throw ValidationError(ErrorKind::invalid_polynomial,
                          "polynomial constant coefficient must be 1, got " +
                              to_string(coeffs_.front()));
  }
  if (coeffs_.back() == 0) {
    throw ValidationError(ErrorKind::invalid_polynomial,
                          "polynomial leading coefficient must be nonzero");
  }
}

IdealPresentation IdealPresentation::make(AdmissiblePair pair, std::vector<Cycle> cycles,
                                          std::vector<RationalPolynomial> polys) {
  const Graph& g = pair.graph();

  for (const Cycle& c : cycles) {
    if (c.graph() != &g) {
      throw ValidationError(ErrorKind::graph_mismatch, "cycle belongs to a different graph");
    }
    Cycle checked = Cycle::make(g, c.edges());  // structural revalidation
    VertexSet on_cycle = checked.vertices(g);
    if (!(on_cycle & pair.h()).empty()) {
      auto inside = names_of(g, on_cycle & pair.h());
      std::string msg = "cycle vertices must lie outside H; offending: ";
      for (std::size_t i = 0; i < inside.size(); ++i) msg += (i ? ", " : "") + inside[i];
      throw ValidationError(ErrorKind::invalid_presentation, msg, inside);
    }
    // Each cycle vertex uses one cycle edge; everything else it emits is an
    // exit and must land in H (infinite bundles included).
    for (std::size_t i = 0; i < checked.edges().size(); ++i) {
      EdgeIndex cycle_edge = checked.edges()[i];
      VertexIndex v = g.edge(cycle_edge).source;
      for (auto bi : g.out_bundles(v)) {
        const auto& b = g.bundles()[bi];
        if (b.mult.is_zero()) continue;
        bool bundle_holds_cycle_edge =
            std::find(b.named.begin(), b.named.end(), cycle_edge) != b.named.end();
        std::uint64_t exits = b.mult.is_infinite()
                                  ? 1
                                  : b.mult.count() - (bundle_holds_cycle_edge ? 1 : 0);
        if (exits > 0 && !pair.h().contains(b.target)) {
          throw ValidationError(
              ErrorKind::invalid_presentation,
              "exit from cycle vertex " + g.vertex_name(v) + " has range " +
                  g.vertex_name(b.target) + " outside H",
              {g.vertex_name(v), g.vertex_name(b.target)});
        }
      }
    }
  }

  std::sort(cycles.begin(), cycles.end());
  cycles.erase(std::unique(cycles.begin(), cycles.end()), cycles.end());
  std::sort(polys.begin(), polys.end());
  polys.erase(std::unique(polys.begin(), polys.end()), polys.end());

  // (C, P) contribute only through the products p(c): one half empty means
  // no contribution, so normalize both away.
  if (cycles.empty() || polys.empty()) {
    cycles.clear();
    polys.clear();
  }

  return IdealPresentation(std::move(pair), std::move(cycles), std::move(polys));
}

VertexSet IdealPresentation::cycle_vertices() const {
  VertexSet out;
  for (const Cycle& c : cycles_) out |= c.vertices(graph());
  return out;
}

bool pair_leq(const AdmissiblePair& a, const AdmissiblePair& b) {
  require_same_graph(a, b);
  return a.h().is_subset_of(b.h()) && a.s().is_subset_of(b.h() | b.s());
}

AdmissiblePair graded_join(const AdmissiblePair& a, const AdmissiblePair& b) {
  require_same_graph(a, b);
  const Graph& g = a.graph();
  VertexSet s_union = a.s() | b.s();
  VertexSet closure = s_saturation(g, a.h() | b.h(), s_union).members;
  return trusted_pair(g, closure, s_union - closure);
}

AdmissiblePair graded_envelope(const IdealPresentation& pres) {
  const Graph& g = pres.graph();
  VertexSet seed = pres.pair().h() | pres.cycle_vertices();
  VertexSet big = s_saturation(g, seed, pres.pair().s()).members;
  VertexSet t = pres.pair().s() - big;
  AdmissiblePair out = trusted_pair(g, big, t);
  if (!t.is_subset_of(breaking_vertices(g, big))) {
    throw ContractViolation("graded envelope: T escaped the breaking vertices of G");
  }
  if (!pair_leq(pres.pair(), out)) {
    throw ContractViolation("graded envelope does not dominate the input pair");
  }
  return out;
}

AdmissiblePair largest_graded_subideal(const IdealPresentation& pres) { return pres.pair(); }

AdmissiblePair ann_of_graded(const AdmissiblePair& pair) {
  const Graph& g = pair.graph();
  VertexSet hp = perp(g, pair.h()).members;
  return trusted_pair(g, hp, breaking_vertices(g, hp));
}

AdmissiblePair annihilator(const IdealPresentation& pres) {
  return ann_of_graded(graded_envelope(pres));
}

VertexSet s_perp(const AdmissiblePair& pair) {
  const Graph& g = pair.graph();
  VertexSet hp = perp(g, pair.h()).members;
  return breaking_vertices(g, hp) - pair.s();
}

bool is_reflexive(const AdmissiblePair& pair) {
  const Graph& g = pair.graph();
  VertexSet hp = perp(g, pair.h()).members;
  VertexSet hpp = perp(g, hp).members;
  if (!(pair.h() == hpp)) return false;
  VertexSet s_perp_once = breaking_vertices(g, hp) - pair.s();
  VertexSet s_perp_twice = breaking_vertices(g, hpp) - s_perp_once;
  return pair.s() == s_perp_twice;
}

bool is_annihilator_ideal(const AdmissiblePair& pair) {
  if (!is_reflexive(pair)) return false;
  if (!(pair.s() == breaking_vertices(pair.graph(), pair.h()))) {
    throw ContractViolation("reflexive pair whose S differs from the breaking vertices of H");
  }
  return true;
}

namespace {

void require_annihilator(const AdmissiblePair& p, const char* which) {
  if (!is_annihilator_ideal(p)) {
    throw ValidationError(ErrorKind::not_annihilator_ideal,
                          std::string(which) + " operand is not an annihilator ideal",
                          p.graph().names_of(p.h()));
  }
}

}  // namespace

AdmissiblePair boolean_join(const AdmissiblePair& a, const AdmissiblePair& b) {
  require_same_graph(a, b);
  require_annihilator(a, "left");
  require_annihilator(b, "right");
  return ann_of_graded(ann_of_graded(graded_join(a, b)));
}

AdmissiblePair boolean_meet(const AdmissiblePair& a, const AdmissiblePair& b) {
  require_same_graph(a, b);
  require_annihilator(a, "left");
  require_annihilator(b, "right");
  return ann_of_graded(graded_join(ann_of_graded(a), ann_of_graded(b)));
}

namespace {

// One quantifier step of the quasi-Baer scan: does the perp of h joined with
// its double perp cover the whole vertex set?
bool perp_join_covers(const Graph& g, VertexSet h, AdmissiblePair* join_out) {
  VertexSet hp = perp(g, h).members;
  VertexSet hpp = perp(g, hp).members;
  AdmissiblePair left = trusted_pair(g, hp, breaking_vertices(g, hp));
  AdmissiblePair right = trusted_pair(g, hpp, breaking_vertices(g, hpp));
  AdmissiblePair joined = graded_join(left, right);
  if (join_out) *join_out = joined;
  return joined.h() == g.all_vertices() && joined.s().empty();
}

}  // namespace

QuasiBaerResult is_quasi_baer_serial(const Graph& g, std::size_t cap) {
  HsFamily family = enumerate_hs_serial(g, cap);
  for (VertexSet h : family.sets) {
    AdmissiblePair joined = trusted_pair(g, {}, {});
    if (!perp_join_covers(g, h, &joined)) {
      return QuasiBaerResult{false, h, joined};
    }
  }
  return QuasiBaerResult{true, std::nullopt, std::nullopt};
}

QuasiBaerResult is_quasi_baer(const Graph& g, std::size_t cap) {
  HsFamily family = enumerate_hs(g, cap);
  const std::int64_t n = static_cast<std::int64_t>(family.sets.size());
  std::int64_t first_fail = n;

  // The family is (size, lex)-sorted, so reducing to the minimal failing
  // index keeps the reported witness deterministic.
#pragma omp parallel for schedule(dynamic, 16) reduction(min : first_fail)
  for (std::int64_t i = 0; i < n; ++i) {
    if (!perp_join_covers(g, family.sets[i], nullptr)) {
      first_fail = std::min(first_fail, i);
    }
  }

  if (first_fail == n) return QuasiBaerResult{true, std::nullopt, std::nullopt};
  VertexSet h = family.sets[static_cast<std::size_t>(first_fail)];
  AdmissiblePair joined = trusted_pair(g, {}, {});
  perp_join_covers(g, h, &joined);
  return QuasiBaerResult{false, h, joined};
}

bool is_baer(const Graph& g) {
  for (const auto& b : g.bundles()) {
    if (b.mult.is_infinite()) return false;
  }
  for (const Cycle& c : find_cycles(g)) {
    if (cycle_has_exit(g, c)) return false;
  }
  return true;
}

bool is_rickart(const Graph&) { return true; }

QuasiBaerResult is_quasi_baer_star(const Graph& g, std::size_t cap) {
  return is_quasi_baer(g, cap);
}

}  // namespace lpa
