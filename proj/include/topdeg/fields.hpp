#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "topdeg/errors.hpp"

namespace topdeg {

// Element of F_{p^k}: exactly k coefficients in [0,p), index i holds the
// coefficient of t^i.  Two elements of the same field are equal iff the
// sequences are equal, so FieldElement works as a hash/map key directly.
using FieldElement = boost::container::small_vector<uint32_t, 2>;

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

// Arithmetic context for F_{p^k}.  Immutable after construction and safe to
// share across threads.  For k > 1 the modulus is the monic irreducible of
// degree k whose coefficient vector (c_0,...,c_{k-1}) is smallest when read
// as the base-p integer sum c_i p^i; the search is exhaustive from 0 up.
class FieldCtx {
 public:
  static FieldPtr make(uint32_t p, uint32_t k = 1);

  uint32_t characteristic() const { return p_; }
  uint32_t ext_degree() const { return k_; }
  uint64_t order() const { return order_; }
  // Dense c_0..c_k with c_k = 1; empty for k == 1.
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  FieldElement zero() const { return FieldElement(k_, 0u); }
  FieldElement one() const;
  FieldElement from_int(int64_t v) const;
  FieldElement from_coeffs(const std::vector<uint32_t>& c) const;

  bool is_zero(const FieldElement& a) const;
  bool is_one(const FieldElement& a) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement inv(const FieldElement& a) const;
  FieldElement div(const FieldElement& a, const FieldElement& b) const { return mul(a, inv(b)); }
  FieldElement pow(const FieldElement& a, uint64_t e) const;

  // In-place accumulate: a += c * b.  The workhorse of polynomial merges.
  void add_mul(FieldElement& a, const FieldElement& c, const FieldElement& b) const;

  FieldElement random_element(std::mt19937_64& rng) const;
  FieldElement random_nonzero(std::mt19937_64& rng) const;

  // Text form: plain integer for k = 1, "[c0,c1,...]" for k > 1.
  std::string to_string(const FieldElement& a) const;
  FieldElement parse_element(const std::string& text) const;

  bool same_field(const FieldCtx& o) const {
    return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
  }

 private:
  FieldCtx() = default;

  uint32_t p_ = 0;
  uint32_t k_ = 1;
  uint64_t order_ = 0;
  std::vector<uint32_t> modulus_;  // c0..ck, monic; empty when k == 1
};

// Field embedding F_{p^k} -> F_{p^m} with k | m, realized by mapping the
// generator t of the small field to a root of its modulus in the big field.
struct FieldEmbedding {
  FieldPtr from;
  FieldPtr to;
  FieldElement gen_image;  // image of t in `to`; unused when from->ext_degree() == 1

  FieldElement map(const FieldElement& a) const;

  static FieldEmbedding find(FieldPtr from, FieldPtr to);
};

bool is_prime_u32(uint32_t n);

}  // namespace topdeg
