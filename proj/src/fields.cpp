#include "topdeg/fields.hpp"

#include <algorithm>
#include <cctype>

namespace topdeg {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::composite_characteristic: return "CompositeCharacteristic";
    case Errc::unsupported_size: return "UnsupportedSize";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::unknown_variable: return "UnknownVariable";
    case Errc::not_homogeneous: return "NotHomogeneous";
    case Errc::inexact_division: return "InexactDivision";
    case Errc::degree_overflow: return "DegreeOverflow";
    case Errc::no_stabilization: return "NoStabilization";
    case Errc::not_zero_dimensional: return "NotZeroDimensional";
    case Errc::genericity_failure: return "GenericityFailure";
    case Errc::not_dominant: return "NotDominant";
    case Errc::degenerate_linear_system: return "DegenerateLinearSystem";
    case Errc::characteristic_divides_degree: return "CharacteristicDividesDegree";
    case Errc::not_square_free: return "NotSquareFree";
    case Errc::point_not_on_singular_locus: return "PointNotOnSingularLocus";
    case Errc::unsupported_dimension: return "UnsupportedDimension";
    case Errc::positive_dimensional_base_locus: return "PositiveDimensionalBaseLocus";
    case Errc::field_too_large: return "FieldTooLarge";
    case Errc::consistency_violation: return "ConsistencyViolation";
    case Errc::usage_error: return "UsageError";
    case Errc::internal_error: return "InternalError";
  }
  return "UnknownError";
}

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

// ---- dense univariate arithmetic over F_p (coefficients uint32, index = power) ----

using UPoly = std::vector<uint32_t>;

void utrim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

UPoly umul(const UPoly& a, const UPoly& b, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<uint32_t>((r[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p);
    }
  }
  utrim(r);
  return r;
}

// a mod m, m monic
UPoly urem(UPoly a, const UPoly& m, uint64_t p) {
  utrim(a);
  const size_t dm = m.size() - 1;
  while (a.size() > dm) {
    uint64_t c = a.back();
    size_t shift = a.size() - 1 - dm;
    if (c) {
      for (size_t i = 0; i < m.size(); ++i) {
        uint64_t sub = (c * m[i]) % p;
        uint64_t cur = a[shift + i];
        a[shift + i] = static_cast<uint32_t>((cur + p - sub) % p);
      }
    }
    a.pop_back();
    utrim(a);
    if (a.size() <= dm) break;
  }
  return a;
}

UPoly umulmod(const UPoly& a, const UPoly& b, const UPoly& m, uint64_t p) {
  return urem(umul(a, b, p), m, p);
}

UPoly upowmod(UPoly a, uint64_t e, const UPoly& m, uint64_t p) {
  UPoly r = {1};
  a = urem(std::move(a), m, p);
  while (e) {
    if (e & 1) r = umulmod(r, a, m, p);
    a = umulmod(a, a, m, p);
    e >>= 1;
  }
  return r;
}

UPoly uscale(UPoly a, uint64_t c, uint64_t p) {
  for (auto& x : a) x = static_cast<uint32_t>((x * c) % p);
  return a;
}

UPoly usub(const UPoly& a, const UPoly& b, uint64_t p) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    uint64_t x = i < a.size() ? a[i] : 0;
    uint64_t y = i < b.size() ? b[i] : 0;
    r[i] = static_cast<uint32_t>((x + p - y) % p);
  }
  utrim(r);
  return r;
}

UPoly ugcd(UPoly a, UPoly b, uint64_t p) {
  utrim(a);
  utrim(b);
  while (!b.empty()) {
    // make b monic, then a mod b
    uint64_t il = powmod_u64(b.back(), p - 2, p);
    UPoly bm = uscale(b, il, p);
    UPoly r = urem(std::move(a), bm, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    uint64_t il = powmod_u64(a.back(), p - 2, p);
    a = uscale(a, il, p);
  }
  return a;
}

// extended euclid: returns g = gcd(a,b) monic with u*a + v*b = g; only u needed.
UPoly uext_gcd_u(UPoly a, UPoly b, uint64_t p, UPoly* u_out) {
  UPoly u0 = {1}, u1 = {};
  utrim(a);
  utrim(b);
  while (!b.empty()) {
    // divide a by b: quotient q
    UPoly q;
    UPoly r = a;
    uint64_t il = powmod_u64(b.back(), p - 2, p);
    while (r.size() >= b.size() && !r.empty()) {
      uint64_t c = (static_cast<uint64_t>(r.back()) * il) % p;
      size_t shift = r.size() - b.size();
      if (q.size() < shift + 1) q.resize(shift + 1, 0);
      q[shift] = static_cast<uint32_t>((q[shift] + c) % p);
      for (size_t i = 0; i < b.size(); ++i) {
        uint64_t sub = (c * b[i]) % p;
        r[shift + i] = static_cast<uint32_t>((r[shift + i] + p - sub) % p);
      }
      utrim(r);
    }
    UPoly u2 = usub(u0, umul(q, u1, p), p);
    a = std::move(b);
    b = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  if (!a.empty()) {
    uint64_t il = powmod_u64(a.back(), p - 2, p);
    a = uscale(a, il, p);
    u0 = uscale(u0, il, p);
  }
  *u_out = std::move(u0);
  return a;
}

bool is_irreducible(const UPoly& m, uint32_t p, uint32_t k) {
  // m monic of degree k; irreducible iff x^(p^k) = x mod m and
  // gcd(x^(p^(k/q)) - x, m) = 1 for every prime q | k.
  UPoly x = {0, 1};
  UPoly h = x;  // x^(p^i) mod m after i steps
  std::vector<UPoly> frob(k + 1);
  frob[0] = x;
  for (uint32_t i = 1; i <= k; ++i) {
    h = upowmod(h, p, m, p);
    frob[i] = h;
  }
  if (usub(frob[k], x, p) != UPoly{}) return false;
  for (uint32_t q = 2; q <= k; ++q) {
    if (k % q) continue;
    bool prime = is_prime_u32(q);
    if (!prime) continue;
    UPoly g = ugcd(usub(frob[k / q], x, p), m, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t q : {2u, 3u, 5u, 7u}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  // deterministic Miller-Rabin, bases 2,3,5,7 suffice below 3.2e9
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldPtr FieldCtx::make(uint32_t p, uint32_t k) {
  if (!is_prime_u32(p)) fail(Errc::composite_characteristic, "characteristic " + std::to_string(p) + " is not prime");
  if (p >= (1u << 31)) fail(Errc::unsupported_size, "characteristic must be < 2^31");
  if (k < 1) fail(Errc::unsupported_size, "extension degree must be >= 1");
  // p^k < 2^62
  uint64_t order = 1;
  for (uint32_t i = 0; i < k; ++i) {
    if (order > (1ull << 62) / p) fail(Errc::unsupported_size, "p^k exceeds 2^62");
    order *= p;
  }
  auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
  ctx->p_ = p;
  ctx->k_ = k;
  ctx->order_ = order;
  if (k > 1) {
    // Scan c = 0,1,2,... encoding the non-leading coefficients base p.
    for (uint64_t c = 0;; ++c) {
      if (c >= order) fail(Errc::internal_error, "no irreducible modulus found");
      UPoly m(k + 1, 0);
      uint64_t v = c;
      for (uint32_t i = 0; i < k; ++i) {
        m[i] = static_cast<uint32_t>(v % p);
        v /= p;
      }
      m[k] = 1;
      if (is_irreducible(m, p, k)) {
        ctx->modulus_ = std::move(m);
        break;
      }
    }
  }
  return ctx;
}

FieldElement FieldCtx::one() const {
  FieldElement e(k_, 0u);
  e[0] = 1;
  return e;
}

FieldElement FieldCtx::from_int(int64_t v) const {
  FieldElement e(k_, 0u);
  int64_t r = v % static_cast<int64_t>(p_);
  if (r < 0) r += p_;
  e[0] = static_cast<uint32_t>(r);
  return e;
}

FieldElement FieldCtx::from_coeffs(const std::vector<uint32_t>& c) const {
  if (c.size() > k_) fail(Errc::usage_error, "too many coefficients for field element");
  FieldElement e(k_, 0u);
  for (size_t i = 0; i < c.size(); ++i) e[i] = c[i] % p_;
  return e;
}

bool FieldCtx::is_zero(const FieldElement& a) const {
  for (uint32_t c : a)
    if (c) return false;
  return true;
}

bool FieldCtx::is_one(const FieldElement& a) const {
  if (a.empty() || a[0] != 1) return false;
  for (size_t i = 1; i < a.size(); ++i)
    if (a[i]) return false;
  return true;
}

FieldElement FieldCtx::add(const FieldElement& a, const FieldElement& b) const {
  FieldElement r(k_, 0u);
  for (uint32_t i = 0; i < k_; ++i) {
    uint32_t s = a[i] + b[i];
    r[i] = s >= p_ ? s - p_ : s;
  }
  return r;
}

FieldElement FieldCtx::sub(const FieldElement& a, const FieldElement& b) const {
  FieldElement r(k_, 0u);
  for (uint32_t i = 0; i < k_; ++i) {
    r[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + p_ - b[i];
  }
  return r;
}

FieldElement FieldCtx::neg(const FieldElement& a) const {
  FieldElement r(k_, 0u);
  for (uint32_t i = 0; i < k_; ++i) r[i] = a[i] ? p_ - a[i] : 0;
  return r;
}

FieldElement FieldCtx::mul(const FieldElement& a, const FieldElement& b) const {
  if (k_ == 1) {
    FieldElement r(1, 0u);
    r[0] = static_cast<uint32_t>((static_cast<uint64_t>(a[0]) * b[0]) % p_);
    return r;
  }
  UPoly prod(2 * k_ - 1, 0);
  for (uint32_t i = 0; i < k_; ++i) {
    if (!a[i]) continue;
    for (uint32_t j = 0; j < k_; ++j) {
      prod[i + j] = static_cast<uint32_t>((prod[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p_);
    }
  }
  UPoly red = urem(std::move(prod), modulus_, p_);
  FieldElement r(k_, 0u);
  for (size_t i = 0; i < red.size(); ++i) r[i] = red[i];
  return r;
}

void FieldCtx::add_mul(FieldElement& a, const FieldElement& c, const FieldElement& b) const {
  if (k_ == 1) {
    a[0] = static_cast<uint32_t>((a[0] + static_cast<uint64_t>(c[0]) * b[0]) % p_);
    return;
  }
  FieldElement t = mul(c, b);
  for (uint32_t i = 0; i < k_; ++i) {
    uint32_t s = a[i] + t[i];
    a[i] = s >= p_ ? s - p_ : s;
  }
}

FieldElement FieldCtx::inv(const FieldElement& a) const {
  if (is_zero(a)) fail(Errc::division_by_zero, "inverse of zero");
  if (k_ == 1) {
    FieldElement r(1, 0u);
    r[0] = static_cast<uint32_t>(powmod_u64(a[0], p_ - 2, p_));
    return r;
  }
  UPoly ap(a.begin(), a.end());
  utrim(ap);
  UPoly u;
  UPoly g = uext_gcd_u(ap, modulus_, p_, &u);
  if (g.size() != 1) fail(Errc::internal_error, "modulus not coprime to element");
  // g == 1 already (monic degree 0), u is the inverse mod modulus
  u = urem(std::move(u), modulus_, p_);
  FieldElement r(k_, 0u);
  for (size_t i = 0; i < u.size(); ++i) r[i] = u[i];
  return r;
}

FieldElement FieldCtx::pow(const FieldElement& a, uint64_t e) const {
  FieldElement r = one();
  FieldElement base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

FieldElement FieldCtx::random_element(std::mt19937_64& rng) const {
  FieldElement r(k_, 0u);
  for (uint32_t i = 0; i < k_; ++i) r[i] = static_cast<uint32_t>(rng() % p_);
  return r;
}

FieldElement FieldCtx::random_nonzero(std::mt19937_64& rng) const {
  for (;;) {
    FieldElement r = random_element(rng);
    if (!is_zero(r)) return r;
  }
}

std::string FieldCtx::to_string(const FieldElement& a) const {
  if (k_ == 1) return std::to_string(a[0]);
  std::string s = "[";
  for (uint32_t i = 0; i < k_; ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  s += "]";
  return s;
}

FieldElement FieldCtx::parse_element(const std::string& text) const {
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos < text.size() && text[pos] == '[') {
    ++pos;
    std::vector<uint32_t> coeffs;
    for (;;) {
      skip_ws();
      size_t start = pos;
      bool negative = pos < text.size() && text[pos] == '-';
      if (negative) ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) fail(Errc::syntax_error, "bad field element: " + text);
      int64_t v = std::stoll(text.substr(start, pos - start));
      int64_t r = v % static_cast<int64_t>(p_);
      if (r < 0) r += p_;
      coeffs.push_back(static_cast<uint32_t>(r));
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
    skip_ws();
    if (pos >= text.size() || text[pos] != ']') fail(Errc::syntax_error, "bad field element: " + text);
    return from_coeffs(coeffs);
  }
  try {
    return from_int(std::stoll(text));
  } catch (const std::exception&) {
    fail(Errc::syntax_error, "bad field element: " + text);
  }
}

// ---- embeddings ----

namespace {

// dense univariate polys with FieldElement coefficients, for root finding in
// the big field; index = power, trailing zeros trimmed.
using EPoly = std::vector<FieldElement>;

void etrim(const FieldCtx& F, EPoly& a) {
  while (!a.empty() && F.is_zero(a.back())) a.pop_back();
}

EPoly erem(const FieldCtx& F, EPoly a, const EPoly& m) {
  etrim(F, a);
  while (a.size() >= m.size() && !a.empty()) {
    FieldElement c = F.div(a.back(), m.back());
    size_t shift = a.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i) {
      a[shift + i] = F.sub(a[shift + i], F.mul(c, m[i]));
    }
    etrim(F, a);
  }
  return a;
}

EPoly emulmod(const FieldCtx& F, const EPoly& a, const EPoly& b, const EPoly& m) {
  if (a.empty() || b.empty()) return {};
  EPoly r(a.size() + b.size() - 1, F.zero());
  for (size_t i = 0; i < a.size(); ++i) {
    if (F.is_zero(a[i])) continue;
    for (size_t j = 0; j < b.size(); ++j) F.add_mul(r[i + j], a[i], b[j]);
  }
  return erem(F, std::move(r), m);
}

EPoly epowmod(const FieldCtx& F, EPoly a, uint64_t e, const EPoly& m) {
  EPoly r = {F.one()};
  a = erem(F, std::move(a), m);
  while (e) {
    if (e & 1) r = emulmod(F, r, a, m);
    a = emulmod(F, a, a, m);
    e >>= 1;
  }
  return r;
}

EPoly egcd(const FieldCtx& F, EPoly a, EPoly b) {
  etrim(F, a);
  etrim(F, b);
  while (!b.empty()) {
    FieldElement il = F.inv(b.back());
    EPoly bm = b;
    for (auto& c : bm) c = F.mul(c, il);
    a = erem(F, std::move(a), bm);
    std::swap(a, b);
  }
  if (!a.empty()) {
    FieldElement il = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, il);
  }
  return a;
}

FieldElement eval_upoly(const FieldCtx& F, const std::vector<uint32_t>& m, const FieldElement& x) {
  FieldElement acc = F.zero();
  for (size_t i = m.size(); i-- > 0;) {
    acc = F.mul(acc, x);
    acc = F.add(acc, F.from_int(m[i]));
  }
  return acc;
}

// one root of the split monic polynomial f over F (f splits into linear
// factors by construction)
FieldElement find_root(const FieldCtx& F, EPoly f, std::mt19937_64& rng) {
  etrim(F, f);
  while (f.size() > 2) {
    EPoly g;
    if (F.characteristic() != 2) {
      // (T + alpha)^((q-1)/2) - 1 splits the roots in two
      FieldElement alpha = F.random_element(rng);
      EPoly t = {alpha, F.one()};
      EPoly s = epowmod(F, t, (F.order() - 1) / 2, f);
      if (s.empty()) continue;
      s[0] = F.sub(s[0], F.one());
      g = egcd(F, s, f);
    } else {
      // trace splitting for characteristic 2
      FieldElement c = F.random_nonzero(rng);
      EPoly ct = {F.zero(), c};
      EPoly s = {F.zero()};
      EPoly cur = erem(F, ct, f);
      uint64_t q = F.order();
      for (uint64_t bits = 1; bits < q; bits <<= 1) {
        if (s.size() < cur.size()) s.resize(cur.size(), F.zero());
        for (size_t i = 0; i < cur.size(); ++i) s[i] = F.add(s[i], cur[i]);
        cur = emulmod(F, cur, cur, f);
      }
      etrim(F, s);
      g = egcd(F, s, f);
    }
    if (g.size() > 1 && g.size() < f.size()) {
      f = std::move(g);
    }
  }
  if (f.size() != 2) fail(Errc::internal_error, "root finding did not converge");
  return F.neg(F.div(f[0], f[1]));
}

}  // namespace

FieldElement FieldEmbedding::map(const FieldElement& a) const {
  if (from->ext_degree() == 1) {
    return to->from_int(a[0]);
  }
  FieldElement acc = to->zero();
  for (size_t i = a.size(); i-- > 0;) {
    acc = to->mul(acc, gen_image);
    acc = to->add(acc, to->from_int(a[i]));
  }
  return acc;
}

FieldEmbedding FieldEmbedding::find(FieldPtr from, FieldPtr to) {
  if (from->characteristic() != to->characteristic())
    fail(Errc::usage_error, "embedding requires equal characteristic");
  if (to->ext_degree() % from->ext_degree() != 0)
    fail(Errc::usage_error, "embedding requires divisible extension degrees");
  FieldEmbedding e;
  e.from = from;
  e.to = to;
  if (from->ext_degree() == 1) return e;

  // deterministic seed from the field data
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ (static_cast<uint64_t>(from->characteristic()) << 32) ^
                      from->ext_degree() ^ (static_cast<uint64_t>(to->ext_degree()) << 16));
  if (to->order() <= (1ull << 20)) {
    // brute scan is cheap at this size
    const auto& m = from->modulus();
    uint64_t q = to->order();
    uint32_t p = to->characteristic();
    uint32_t k = to->ext_degree();
    for (uint64_t v = 0; v < q; ++v) {
      std::vector<uint32_t> cs(k);
      uint64_t w = v;
      for (uint32_t i = 0; i < k; ++i) {
        cs[i] = static_cast<uint32_t>(w % p);
        w /= p;
      }
      FieldElement cand = to->from_coeffs(cs);
      if (to->is_zero(eval_upoly(*to, m, cand))) {
        e.gen_image = cand;
        return e;
      }
    }
    fail(Errc::internal_error, "no root of modulus in extension");
  }
  EPoly f;
  for (uint32_t c : from->modulus()) f.push_back(to->from_int(c));
  e.gen_image = find_root(*to, std::move(f), rng);
  if (!to->is_zero(eval_upoly(*to, from->modulus(), e.gen_image)))
    fail(Errc::internal_error, "embedding root check failed");
  return e;
}

}  // namespace topdeg
