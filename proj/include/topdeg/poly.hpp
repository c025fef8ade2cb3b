#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "topdeg/fields.hpp"

namespace topdeg {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

// Hard cap on ring size: the largest ring this library ever builds is
// k[x0..x3, y0..y3] plus one tag variable.
inline constexpr size_t kMaxVars = 12;

// Exponent vector with cached total degree.  Unused slots stay zero, so a
// monomial lifts to a ring with extra trailing variables unchanged.
struct Monomial {
  std::array<uint16_t, kMaxVars> e{};
  uint32_t deg = 0;

  bool operator==(const Monomial& o) const { return deg == o.deg && e == o.e; }

  bool divides(const Monomial& o) const {
    if (deg > o.deg) return false;
    for (size_t i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }

  bool is_one() const { return deg == 0; }
};

Monomial mono_one();
Monomial mono_var(size_t i, uint16_t exp = 1);
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b);  // assumes divisibility
Monomial mono_lcm(const Monomial& a, const Monomial& b);
Monomial mono_gcd(const Monomial& a, const Monomial& b);

struct MonoHash {
  size_t operator()(const Monomial& m) const {
    uint64_t h = 1469598103934665603ull;
    for (size_t i = 0; i < kMaxVars; ++i) {
      h ^= m.e[i];
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

// Graded degree: total degree in `a` for standard rings, (x-degree, y-degree)
// for bigraded ones (b stays 0 in the standard case).
struct Deg {
  int32_t a = 0;
  int32_t b = 0;
  bool operator==(const Deg&) const = default;
  Deg operator+(const Deg& o) const { return {a + o.a, b + o.b}; }
  Deg operator-(const Deg& o) const { return {a - o.a, b - o.b}; }
  int32_t total() const { return a + b; }
};

// Term orders: a sequence of blocks compared in turn, each block either
// grevlex or lex on its listed variables.  Covers grevlex, lex, elimination
// orders and variable permutations.
struct OrderBlock {
  std::vector<uint8_t> vars;
  bool lex = false;
};

struct MonomialOrder {
  std::vector<OrderBlock> blocks;

  static MonomialOrder grevlex(size_t nvars);
  static MonomialOrder lex(size_t nvars);
  // dropped-first block order used for elimination
  static MonomialOrder elimination(size_t nvars, const std::vector<uint8_t>& first_block);

  // +1 if a > b, 0 if equal, -1 if a < b
  int compare(const Monomial& a, const Monomial& b) const;
  std::string key() const;

 private:
  bool plain_grevlex_ = false;  // single grevlex block 0..n-1
  size_t plain_nvars_ = 0;
  friend struct OrderedLess;
  void detect_plain();
};

struct Term {
  FieldElement c;
  Monomial m;
};

// Sparse polynomial: terms strictly descending in the ring's default
// (grevlex) order, no zero coefficients.  Value semantics throughout.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(RingPtr ring, std::vector<Term> terms);  // canonicalizes

  static Polynomial zero(RingPtr ring);
  static Polynomial constant(RingPtr ring, const FieldElement& c);
  static Polynomial variable(RingPtr ring, size_t i);
  static Polynomial monomial_term(RingPtr ring, const FieldElement& c, const Monomial& m);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
  bool is_unit() const { return terms_.size() == 1 && terms_[0].m.is_one(); }
  size_t size() const { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }
  int32_t total_degree() const;  // max over terms, counting graded vars only; -1 for 0

  bool is_homogeneous() const;     // all terms share the same Deg
  Deg degree() const;              // requires homogeneous (or zero -> {0,0})
  bool involves(size_t var) const;

  bool operator==(const Polynomial& o) const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a);
Polynomial scale(const Polynomial& a, const FieldElement& c);
Polynomial shift_mul(const Polynomial& a, const FieldElement& c, const Monomial& m);
Polynomial poly_pow(const Polynomial& a, uint32_t e);
Polynomial monic(const Polynomial& a);

// Polynomial ring with variable names, a coefficient field and a grading.
// Tag variables appended by with_tag() take part in term orders but count
// zero toward the grading, so tagged lifts of homogeneous inputs stay
// homogeneous.
class PolyRing : public std::enable_shared_from_this<PolyRing> {
 public:
  static RingPtr standard(FieldPtr field, std::vector<std::string> vars);
  // x0..xn of degree 1 in P^n coordinates
  static RingPtr projective(FieldPtr field, size_t n);
  // x0..xn, y0..yn with blocks of size n+1 each
  static RingPtr bigraded(FieldPtr field, size_t n);

  size_t nvars() const { return vars_.size(); }
  size_t graded_vars() const { return graded_count_; }
  const std::vector<std::string>& var_names() const { return vars_; }
  const std::string& var_name(size_t i) const { return vars_[i]; }
  std::optional<size_t> var_index(const std::string& name) const;
  const FieldPtr& field() const { return field_; }

  bool is_bigraded() const { return block1_ != SIZE_MAX; }
  size_t block1_size() const { return block1_; }
  Deg degree_of(const Monomial& m) const;

  MonomialOrder default_order() const { return MonomialOrder::grevlex(vars_.size()); }

  RingPtr with_tag(const std::string& name) const;
  bool same_ring(const PolyRing& o) const;

  // re-interpret a polynomial of a prefix ring in this ring (tag lifting)
  Polynomial lift(const Polynomial& f) const;
  // drop trailing tag variables; every term must be free of them
  Polynomial restrict_from(const Polynomial& f) const;
  // map coefficients through a field embedding into an identically-shaped ring
  static Polynomial map_coefficients(const Polynomial& f, const FieldEmbedding& emb, RingPtr target);

 private:
  PolyRing() = default;
  std::vector<std::string> vars_;
  FieldPtr field_;
  size_t block1_ = SIZE_MAX;   // first-block size for bigraded rings
  size_t graded_count_ = 0;    // vars participating in the grading (tags excluded)
};

// calculus / structure ops
Polynomial differentiate(const Polynomial& f, size_t var);
Polynomial dehomogenize(const Polynomial& f, size_t chart);  // requires homogeneous
Polynomial homogenize(const Polynomial& f, size_t var);      // to its own degree, using `var`
Polynomial compose(const Polynomial& f, const std::vector<Polynomial>& subs);
Polynomial substitute_var(const Polynomial& f, size_t var, const Polynomial& value);
FieldElement evaluate(const Polynomial& f, const std::vector<FieldElement>& point);

// exact division; throws InexactDivision when the remainder is nonzero
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

// monic gcd via monomial-content stripping, dehomogenization and
// tag-variable elimination; gcd(f, 0) = monic(f)
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// text form per the CLI grammar; aliases x,y,z for x0,x1,x2 on 3-variable rings
Polynomial parse_polynomial(const std::string& text, RingPtr ring);

}  // namespace topdeg
