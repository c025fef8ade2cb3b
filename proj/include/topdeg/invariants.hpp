#pragma once

#include <optional>

#include "topdeg/blowup.hpp"

namespace topdeg {

// Rational map P^n -> P^n given by n+1 forms of equal degree with gcd 1.
// The fixed divisor of the input system is stripped at construction and kept.
struct RationalMap {
  RingPtr ring;
  size_t n = 0;
  std::vector<Polynomial> forms;
  uint32_t delta = 0;
  Polynomial stripped_divisor;  // monic; 1 when nothing was stripped
  std::optional<Polynomial> source_poly;
  uint32_t source_degree = 0;       // deg f for polar maps
  bool char_divides_degree = false;  // polar maps with p | deg f
  Ideal base;                        // ideal of the stripped forms
};

RationalMap map_from_forms(RingPtr ring, std::vector<Polynomial> forms);
// partial derivatives divided by their gcd; p | deg f requires the
// warn-and-proceed flag and disables the Euler-identity cross-checks
RationalMap polar_map(const Polynomial& f, bool allow_char_divides_degree = false);
RationalMap extend_map(const RationalMap& map, uint32_t new_ext);

// throws PositiveDimensionalBaseLocus unless dim V(base) <= 0
void require_finite_base_locus(const RationalMap& map);

bool is_dominant(const RationalMap& map, uint64_t seed);
long long topological_degree(const RationalMap& map, uint64_t seed);

long long tjurina(const RationalMap& map);
long long tjurina_local(const RationalMap& map, const PointP& z);
long long milnor(const RationalMap& map, uint64_t seed);
long long milnor_local(const RationalMap& map, const PointP& z, uint64_t seed);

// classical affine numbers at a rational singular point of {f = 0}, via
// dehomogenization, translation to the origin and re-homogenization
struct ClassicalLocal {
  long long tjurina = 0;
  long long milnor = 0;
};
ClassicalLocal classical_local_invariants(const Polynomial& f, const PointP& z);

// (first, second) naive topological degrees; the first is measured on the
// sliced symmetric-algebra scheme, the second is delta^n - tau
std::pair<long long, long long> naive_degrees(const RationalMap& map, uint64_t seed);

std::pair<long long, long long> chern_classes(const RationalMap& map);  // n = 2 only

struct Classification {
  enum class Kind { free_bundle, nearly_free, other };
  Kind kind = Kind::other;
  std::vector<int32_t> exponents;      // (d1, d2) for free / nearly free
  std::vector<int32_t> gen_twists;     // generator degrees of E
  std::vector<int32_t> rel_twists;     // relation degrees
  bool operator==(const Classification&) const = default;
  std::string to_string() const;
};
Classification classify_relation_bundle(const RationalMap& map);  // n = 2 only

bool is_homaloidal(const RationalMap& map, uint64_t seed);
bool verify_inverse(const RationalMap& map, const std::vector<Polynomial>& candidate);

struct LocalRow {
  PointP z;
  long long tau = 0;
  long long mu = 0;
  long long torsion = 0;
  bool operator==(const LocalRow&) const = default;
};

// The full invariant bundle; construction asserts the cross-identities
//   second naive = delta^n - tau,  d_t = delta^n - mu,
//   first naive = second naive = d_t + deg T,  mu - tau = deg T
// and throws ConsistencyViolation if any of them breaks.
struct InvariantReport {
  uint32_t characteristic = 0;
  uint32_t ext = 1;  // extension degree actually used after escalations
  uint32_t n = 0;
  uint32_t delta = 0;
  long long tau = 0;
  long long mu = 0;
  long long dt = 0;
  long long naive_first = 0;
  long long naive_second = 0;
  long long torsion_deg = 0;
  std::optional<int32_t> c1, c2;              // n = 2 only
  std::optional<Classification> classification;  // n = 2 only
  bool homaloidal = false;
  std::vector<LocalRow> local_table;
  std::vector<uint64_t> seeds;
  std::string stripped_divisor;
  bool operator==(const InvariantReport&) const = default;
};

InvariantReport full_report(const RationalMap& map, uint64_t seed);

}  // namespace topdeg
