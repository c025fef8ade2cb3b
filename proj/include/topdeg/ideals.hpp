#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "topdeg/groebner.hpp"

namespace topdeg {

// Point of P^n with coordinates in the coefficient field, stored in the
// canonical scaling (first nonzero coordinate = 1).
struct PointP {
  std::vector<FieldElement> coords;

  static PointP make(const FieldCtx& F, std::vector<FieldElement> coords);
  bool operator==(const PointP& o) const { return coords == o.coords; }
  std::string to_string(const FieldCtx& F) const;
};

// Generator list plus a cache of reduced Groebner bases per monomial order.
// The cache is internally synchronized; Ideal values can be shared across
// threads once built.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  bool is_zero() const;
  bool is_homogeneous() const;

  std::shared_ptr<const GroebnerBasis> groebner() const;  // ring default order
  std::shared_ptr<const GroebnerBasis> groebner(const MonomialOrder& ord) const;

  bool contains(const Polynomial& f) const;
  bool contains_unit() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  struct Cache {
    std::mutex mu;
    std::map<std::string, std::shared_ptr<const GroebnerBasis>> by_order;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
bool ideal_equal(const Ideal& a, const Ideal& b);

// I : J via per-generator colon ideals computed by tag elimination
Ideal ideal_quotient(const Ideal& I, const Ideal& J);
// intersection by tag elimination
Ideal ideal_intersect(const Ideal& a, const Ideal& b);

// stable value of I : J : J : ...; throws NoStabilization past 64 rounds
Ideal saturate(const Ideal& I, const Ideal& J);

// I with the listed variables eliminated (block order GB); generators of the
// result do not involve the dropped variables
Ideal eliminate(const Ideal& I, const std::vector<size_t>& drop);

Ideal irrelevant_ideal(const RingPtr& ring);                   // all graded variables
Ideal block_irrelevant_ideal(const RingPtr& ring, int block);  // 0 = x-block, 1 = y-block
Ideal point_ideal(const RingPtr& ring, const PointP& z);

// degree of the zero-dimensional projective scheme V(I); 0 for empty
long long projective_degree(const Ideal& I);
// multiplicity of V(I) at the rational point z
long long local_length(const Ideal& I, const PointP& z);

// ideal of (rows - index)-minors of the presentation matrix
Ideal fitting_ideal(const PresentationMatrix& M, int index);

// all F_q-rational points of V(I) in P^n, by enumeration; requires the ring
// standard-graded and the field of size <= 2^20
std::vector<PointP> rational_points(const Ideal& I);

}  // namespace topdeg
