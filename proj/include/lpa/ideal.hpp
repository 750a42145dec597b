#pragma once

#include <optional>
#include <vector>

#include "lpa/closure.hpp"
#include "lpa/graph.hpp"
#include "lpa/rational.hpp"

namespace lpa {

// (H, S) with H hereditary saturated and S a set of breaking vertices of H.
// Each such pair names one graded ideal; the pair order below mirrors the
// inclusion order of those ideals.
class AdmissiblePair {
 public:
  const Graph& graph() const { return *graph_; }
  VertexSet h() const { return h_; }
  VertexSet s() const { return s_; }

  bool operator==(const AdmissiblePair& o) const {
    return graph_ == o.graph_ && h_ == o.h_ && s_ == o.s_;
  }

 private:
  friend AdmissiblePair validate_pair(const Graph&, VertexSet, VertexSet);
  friend AdmissiblePair trusted_pair(const Graph&, VertexSet, VertexSet);
  AdmissiblePair(const Graph* g, VertexSet h, VertexSet s) : graph_(g), h_(h), s_(s) {}

  const Graph* graph_;
  VertexSet h_;
  VertexSet s_;
};

// Checks H hereditary, H saturated, and S inside the breaking vertices of H,
// raising a distinct error for each failure with the offending vertices.
AdmissiblePair validate_pair(const Graph& g, VertexSet h, VertexSet s);

// For results guaranteed valid by construction; still verifies, but reports
// a failure as a ContractViolation (an implementation bug, not bad input).
AdmissiblePair trusted_pair(const Graph& g, VertexSet h, VertexSet s);

// Nonconstant polynomial over the rationals with constant coefficient 1.
class RationalPolynomial {
 public:
  // coeffs[i] is the degree-i coefficient; requires coeffs[0] == 1,
  // degree >= 1, and a nonzero leading coefficient.
  explicit RationalPolynomial(std::vector<Rational> coeffs);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  std::size_t degree() const { return coeffs_.size() - 1; }

  bool operator==(const RationalPolynomial& o) const { return coeffs_ == o.coeffs_; }
  bool operator<(const RationalPolynomial& o) const { return coeffs_ < o.coeffs_; }

 private:
  std::vector<Rational> coeffs_;
};

// ((H,S), C, P): an admissible pair, a set of cycles disjoint from H whose
// every exit lands in H, and a set of unit-constant polynomials. The (C, P)
// halves only matter together, so a presentation with one of them empty
// normalizes to both empty.
class IdealPresentation {
 public:
  static IdealPresentation make(AdmissiblePair pair, std::vector<Cycle> cycles,
                                std::vector<RationalPolynomial> polys);

  const Graph& graph() const { return pair_.graph(); }
  const AdmissiblePair& pair() const { return pair_; }
  const std::vector<Cycle>& cycles() const { return cycles_; }
  const std::vector<RationalPolynomial>& polynomials() const { return polys_; }

  // Vertices lying on cycles of C.
  VertexSet cycle_vertices() const;

 private:
  IdealPresentation(AdmissiblePair pair, std::vector<Cycle> cycles,
                    std::vector<RationalPolynomial> polys)
      : pair_(std::move(pair)), cycles_(std::move(cycles)), polys_(std::move(polys)) {}

  AdmissiblePair pair_;
  std::vector<Cycle> cycles_;
  std::vector<RationalPolynomial> polys_;
};

// Inclusion order of graded ideals: H1 in H2 and S1 in H2 union S2.
bool pair_leq(const AdmissiblePair& a, const AdmissiblePair& b);

// Smallest graded ideal containing both: saturate the union of the H parts
// against the union of the S parts, then drop absorbed S vertices.
AdmissiblePair graded_join(const AdmissiblePair& a, const AdmissiblePair& b);

// Smallest graded ideal containing the presented ideal: (G, T) with
// G the S-saturation of H with the cycle vertices adjoined and T = S - G.
AdmissiblePair graded_envelope(const IdealPresentation& pres);

// Largest graded ideal inside the presented ideal: its (H, S) pair.
AdmissiblePair largest_graded_subideal(const IdealPresentation& pres);

// Annihilator of the graded ideal I(H,S): (H-perp, breaking(H-perp)).
// Independent of S.
AdmissiblePair ann_of_graded(const AdmissiblePair& pair);

// Two-sided (= left = right) annihilator of the presented ideal.
AdmissiblePair annihilator(const IdealPresentation& pres);

// Breaking vertices of H-perp minus S (always equal to the former; tested).
VertexSet s_perp(const AdmissiblePair& pair);

// True iff the pair equals its double perp, part for part.
bool is_reflexive(const AdmissiblePair& pair);

// A graded ideal is an annihilator ideal iff its pair is reflexive; when it
// is, S is forced to equal the breaking vertices of H (contract-checked).
bool is_annihilator_ideal(const AdmissiblePair& pair);

// Join/meet of annihilator ideals in their Boolean algebra. Both reject
// arguments that are not annihilator ideals.
AdmissiblePair boolean_join(const AdmissiblePair& a, const AdmissiblePair& b);
AdmissiblePair boolean_meet(const AdmissiblePair& a, const AdmissiblePair& b);

struct QuasiBaerResult {
  bool quasi_baer = false;
  // First hereditary saturated H (in (size, lex) order) whose perp join
  // double-perp misses a vertex, with that failing join; absent when true.
  std::optional<VertexSet> witness;
  std::optional<AdmissiblePair> witness_join;
};

// Scans every hereditary saturated set; parallel scan and plain serial
// reference. `cap` as in enumerate_hs.
QuasiBaerResult is_quasi_baer(const Graph& g, std::size_t cap = 0);
QuasiBaerResult is_quasi_baer_serial(const Graph& g, std::size_t cap = 0);

// Finite multiplicities everywhere and no cycle with an exit.
bool is_baer(const Graph& g);

// Every representable graph has finitely many vertices, so this holds
// unconditionally for this data model.
bool is_rickart(const Graph& g);

// The star variant coincides with the plain one.
QuasiBaerResult is_quasi_baer_star(const Graph& g, std::size_t cap = 0);

}  // namespace lpa
