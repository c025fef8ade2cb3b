#pragma once

#include <optional>

#include "topdeg/ideals.hpp"

namespace topdeg {

// The symmetric-algebra picture of a map with zero-dimensional base locus in
// P^n x P^n coordinates: I_X cut out by (y0..yn) * M, the graph (Rees) ideal
// obtained by saturating with the pulled-back base ideal, and the torsion
// part obtained by saturating I_X with the graph.
struct BlowupModel {
  RingPtr xring;
  RingPtr biring;
  size_t n = 0;
  std::vector<Polynomial> forms;       // in xring
  PresentationMatrix presentation;     // minimal first syzygies of the forms
  Ideal symmetric_ideal;               // I_X in biring
  Ideal rees_ideal;                    // I_X~ = sat(I_X, I * S)
  Ideal torsion_ideal;                 // I_T = sat(I_X, I_X~); (1) when linear type
  bool linear_type = false;
};

struct TorsionReport {
  long long degree = 0;
  std::vector<PointP> support;          // rational points of V(Fitt_n I), x-coords
  std::vector<long long> point_degree;  // aligned with support
  bool per_point_valid = false;
  std::vector<uint64_t> seeds;
  uint32_t ext_used = 1;
};

BlowupModel build_blowup_model(RingPtr xring, const std::vector<Polynomial>& forms);

// lift an x-ring ideal into the model's bigraded ring
Ideal pullback_to_biring(const BlowupModel& model, const Ideal& I);

// stable value of the bigraded Hilbert function of a finite bigraded scheme;
// the input must already be saturated by both irrelevant ideals
long long bigraded_length(const Ideal& I);

// slice a bigraded ideal with n seeded (0,1)-linear forms, saturate by both
// irrelevant ideals and measure; one draw, no agreement protocol
long long sliced_length(const BlowupModel& model, const Ideal& I, uint64_t seed);

// deg T with the two-seed agreement protocol; on disagreement the model is
// rebuilt over F_{p^{2k}}, at most three times
TorsionReport torsion_degree(const BlowupModel& model, uint64_t seed);

bool is_linear_type(const BlowupModel& model);
// saturation of Fitt_n of the presentation; the unit ideal iff Z is a local
// complete intersection everywhere
Ideal lci_defect(RingPtr xring, const std::vector<Polynomial>& forms);

// first naive topological degree data: sliced length of I_X with the same
// protocol as torsion_degree
long long naive_degree_first(const BlowupModel& model, uint64_t seed, std::vector<uint64_t>* seeds_used,
                             uint32_t* ext_used);

BlowupModel extend_model(const BlowupModel& model, uint32_t new_ext);

uint64_t derive_seed(uint64_t base, uint64_t salt);

}  // namespace topdeg
