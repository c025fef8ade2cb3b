#pragma once

#include <map>
#include <string>
#include <vector>

#include "topdeg/poly.hpp"

namespace topdeg {

// Term of a free-module element.
struct MTerm {
  FieldElement c;
  uint32_t comp = 0;
  Monomial m;
};

// Element of R^rank: terms strictly descending under the module order in use.
using ModVec = std::vector<MTerm>;

// Position-over-term order: components compared first (smaller rank wins),
// monomials after.  The syzygy computation relies on this being a module
// elimination order for the low-rank components.
struct ModuleOrder {
  MonomialOrder mono;
  std::vector<uint32_t> rank;  // empty = identity ranking by component index

  int compare(const MTerm& a, const MTerm& b) const {
    if (a.comp != b.comp) {
      uint32_t ra = rank.empty() ? a.comp : rank[a.comp];
      uint32_t rb = rank.empty() ? b.comp : rank[b.comp];
      if (ra != rb) return ra < rb ? 1 : -1;
      return a.comp < b.comp ? 1 : -1;
    }
    return mono.compare(a.m, b.m);
  }
};

class GroebnerBasis {
 public:
  RingPtr ring;
  ModuleOrder order;
  uint32_t rank = 1;
  std::vector<ModVec> elems;  // reduced: monic, pairwise non-divisible leads, tails reduced

  const MTerm& lead(size_t i) const { return elems[i].front(); }
  bool is_zero_module() const { return elems.empty(); }
  bool contains_unit() const;  // rank-1: some element is a constant

  std::vector<Polynomial> polys() const;  // rank-1 view
};

// Buchberger with Gebauer-Moeller pair pruning; deterministic for a fixed
// input sequence (pair selection by lcm degree, ties by insertion index).
GroebnerBasis buchberger_module(RingPtr ring, std::vector<ModVec> gens, ModuleOrder order,
                                uint32_t rank, const std::vector<Deg>& comp_twist = {});
GroebnerBasis buchberger(RingPtr ring, const std::vector<Polynomial>& gens,
                         const MonomialOrder& order);

ModVec normal_form_vec(ModVec f, const GroebnerBasis& gb);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

ModVec poly_to_vec(const Polynomial& f, uint32_t comp = 0);
Polynomial vec_to_poly(RingPtr ring, const ModVec& v);

// Matrix of polynomial entries with graded twists: column j is homogeneous of
// degree col_deg[j] relative to the row degrees.
struct PresentationMatrix {
  RingPtr ring;
  size_t rows = 0, cols = 0;
  std::vector<Polynomial> entries;  // row-major
  std::vector<Deg> row_deg, col_deg;

  const Polynomial& at(size_t i, size_t j) const { return entries[i * cols + j]; }
  Polynomial& at(size_t i, size_t j) { return entries[i * cols + j]; }

  std::vector<ModVec> columns() const;
  static PresentationMatrix from_columns(RingPtr ring, const std::vector<ModVec>& cols,
                                         size_t rows, std::vector<Deg> row_deg);
  void validate_grading() const;
};

// Chain of matrices composing to zero; steps[0] presents the resolved module
// inside its ambient free module, steps[s >= 1] are successive syzygies.
struct GradedResolution {
  std::vector<PresentationMatrix> steps;
  bool minimal = false;
};

// Full first-syzygy matrix of module columns, by an elimination-order module
// Groebner computation; output is not yet minimal.
PresentationMatrix syzygy_raw(RingPtr ring, const std::vector<ModVec>& cols, size_t rows,
                              const std::vector<Deg>& row_deg);

// Raw syzygy chain of the given generators, then minimized.
GradedResolution resolve_ideal(RingPtr ring, const std::vector<Polynomial>& gens, int max_steps);
GradedResolution resolve_matrix(PresentationMatrix m0, int max_steps);

// Cancels nonzero-constant entries by row/column elimination until none are
// left in steps >= 1; verifies Hilbert data of every cokernel is unchanged.
GradedResolution minimize_resolution(GradedResolution res);

// Minimal first syzygies of ideal generators (rows = generators).
PresentationMatrix syzygy_module(RingPtr ring, const std::vector<Polynomial>& gens);

// ---- Hilbert series ----

// Numerator of the Hilbert series over (1-t1)^v1 (1-t2)^v2; standard-graded
// data lives entirely in the first exponent.
struct HilbertData {
  std::map<std::pair<int32_t, int32_t>, long long> numer;
  uint32_t v1 = 0, v2 = 0;

  long long hilbert_function(int64_t a, int64_t b = 0) const;
  // standard grading only: Krull dimension of the quotient and, for
  // one-dimensional quotients, the constant Hilbert polynomial value
  int krull_dim() const;
  long long degree() const;
  bool is_zero_quotient() const;
};

HilbertData hilbert_series(const RingPtr& ring, std::vector<Monomial> lt_gens);
// Sum of per-component numerators shifted by the row twists.
HilbertData hilbert_numerator_module(const RingPtr& ring, const GroebnerBasis& gb,
                                     const std::vector<Deg>& row_deg, size_t rows);

}  // namespace topdeg
