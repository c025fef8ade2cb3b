#include "topdeg/poly.hpp"

#include <algorithm>
#include <unordered_map>

namespace topdeg {

Monomial mono_one() { return Monomial{}; }

Monomial mono_var(size_t i, uint16_t exp) {
  Monomial m;
  m.e[i] = exp;
  m.deg = exp;
  return m;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  uint32_t deg = 0;
  for (size_t i = 0; i < kMaxVars; ++i) {
    uint32_t s = static_cast<uint32_t>(a.e[i]) + b.e[i];
    if (s > 0xffff) fail(Errc::degree_overflow, "exponent exceeds 16 bits");
    r.e[i] = static_cast<uint16_t>(s);
    deg += s;
  }
  r.deg = deg;
  return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial r;
  uint32_t deg = 0;
  for (size_t i = 0; i < kMaxVars; ++i) {
    r.e[i] = static_cast<uint16_t>(a.e[i] - b.e[i]);
    deg += r.e[i];
  }
  r.deg = deg;
  return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  uint32_t deg = 0;
  for (size_t i = 0; i < kMaxVars; ++i) {
    r.e[i] = std::max(a.e[i], b.e[i]);
    deg += r.e[i];
  }
  r.deg = deg;
  return r;
}

Monomial mono_gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  uint32_t deg = 0;
  for (size_t i = 0; i < kMaxVars; ++i) {
    r.e[i] = std::min(a.e[i], b.e[i]);
    deg += r.e[i];
  }
  r.deg = deg;
  return r;
}

// ---- orders ----

MonomialOrder MonomialOrder::grevlex(size_t nvars) {
  MonomialOrder o;
  OrderBlock b;
  for (size_t i = 0; i < nvars; ++i) b.vars.push_back(static_cast<uint8_t>(i));
  o.blocks.push_back(std::move(b));
  o.detect_plain();
  return o;
}

MonomialOrder MonomialOrder::lex(size_t nvars) {
  MonomialOrder o;
  OrderBlock b;
  b.lex = true;
  for (size_t i = 0; i < nvars; ++i) b.vars.push_back(static_cast<uint8_t>(i));
  o.blocks.push_back(std::move(b));
  o.detect_plain();
  return o;
}

MonomialOrder MonomialOrder::elimination(size_t nvars, const std::vector<uint8_t>& first_block) {
  MonomialOrder o;
  OrderBlock b1, b2;
  std::vector<bool> in_first(nvars, false);
  for (uint8_t v : first_block) {
    b1.vars.push_back(v);
    in_first[v] = true;
  }
  for (size_t i = 0; i < nvars; ++i)
    if (!in_first[i]) b2.vars.push_back(static_cast<uint8_t>(i));
  o.blocks.push_back(std::move(b1));
  o.blocks.push_back(std::move(b2));
  o.detect_plain();
  return o;
}

void MonomialOrder::detect_plain() {
  plain_grevlex_ = false;
  if (blocks.size() != 1 || blocks[0].lex) return;
  for (size_t i = 0; i < blocks[0].vars.size(); ++i)
    if (blocks[0].vars[i] != i) return;
  plain_grevlex_ = true;
  plain_nvars_ = blocks[0].vars.size();
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (plain_grevlex_) {
    if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
    for (size_t i = plain_nvars_; i-- > 0;) {
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
  }
  for (const OrderBlock& blk : blocks) {
    if (blk.lex) {
      for (uint8_t v : blk.vars) {
        if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? 1 : -1;
      }
    } else {
      uint32_t da = 0, db = 0;
      for (uint8_t v : blk.vars) {
        da += a.e[v];
        db += b.e[v];
      }
      if (da != db) return da > db ? 1 : -1;
      for (size_t i = blk.vars.size(); i-- > 0;) {
        uint8_t v = blk.vars[i];
        if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? 1 : -1;
      }
    }
  }
  return 0;
}

std::string MonomialOrder::key() const {
  std::string s;
  for (const OrderBlock& b : blocks) {
    s += b.lex ? "L" : "G";
    for (uint8_t v : b.vars) {
      s += std::to_string(int(v));
      s += ".";
    }
    s += "|";
  }
  return s;
}

// ---- ring ----

RingPtr PolyRing::standard(FieldPtr field, std::vector<std::string> vars) {
  if (vars.size() > kMaxVars) fail(Errc::unsupported_size, "too many variables");
  auto r = std::shared_ptr<PolyRing>(new PolyRing());
  r->field_ = std::move(field);
  r->vars_ = std::move(vars);
  r->graded_count_ = r->vars_.size();
  return r;
}

RingPtr PolyRing::projective(FieldPtr field, size_t n) {
  std::vector<std::string> vars;
  for (size_t i = 0; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  return standard(std::move(field), std::move(vars));
}

RingPtr PolyRing::bigraded(FieldPtr field, size_t n) {
  if (2 * (n + 1) > kMaxVars) fail(Errc::unsupported_size, "too many variables");
  auto r = std::shared_ptr<PolyRing>(new PolyRing());
  r->field_ = std::move(field);
  for (size_t i = 0; i <= n; ++i) r->vars_.push_back("x" + std::to_string(i));
  for (size_t i = 0; i <= n; ++i) r->vars_.push_back("y" + std::to_string(i));
  r->block1_ = n + 1;
  r->graded_count_ = r->vars_.size();
  return r;
}

std::optional<size_t> PolyRing::var_index(const std::string& name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

Deg PolyRing::degree_of(const Monomial& m) const {
  Deg d;
  size_t b1 = is_bigraded() ? block1_ : graded_count_;
  for (size_t i = 0; i < b1; ++i) d.a += m.e[i];
  for (size_t i = b1; i < graded_count_; ++i) d.b += m.e[i];
  if (!is_bigraded()) {
    d.a += d.b;
    d.b = 0;
  }
  return d;
}

RingPtr PolyRing::with_tag(const std::string& name) const {
  if (vars_.size() + 1 > kMaxVars) fail(Errc::unsupported_size, "too many variables");
  auto r = std::shared_ptr<PolyRing>(new PolyRing());
  r->field_ = field_;
  r->vars_ = vars_;
  r->vars_.push_back(name);
  r->block1_ = block1_;
  r->graded_count_ = graded_count_;  // tag carries degree zero
  return r;
}

bool PolyRing::same_ring(const PolyRing& o) const {
  return vars_ == o.vars_ && block1_ == o.block1_ && graded_count_ == o.graded_count_ &&
         field_->same_field(*o.field_);
}

Polynomial PolyRing::lift(const Polynomial& f) const {
  const PolyRing& src = *f.ring();
  if (src.vars_.size() > vars_.size()) fail(Errc::internal_error, "lift into smaller ring");
  return Polynomial(shared_from_this(), f.terms());
}

Polynomial PolyRing::restrict_from(const Polynomial& f) const {
  const PolyRing& src = *f.ring();
  for (const Term& t : f.terms()) {
    for (size_t i = vars_.size(); i < src.vars_.size(); ++i) {
      if (t.m.e[i]) fail(Errc::internal_error, "restriction drops a used variable");
    }
  }
  return Polynomial(shared_from_this(), f.terms());
}

Polynomial PolyRing::map_coefficients(const Polynomial& f, const FieldEmbedding& emb, RingPtr target) {
  std::vector<Term> ts;
  ts.reserve(f.size());
  for (const Term& t : f.terms()) ts.push_back({emb.map(t.c), t.m});
  return Polynomial(std::move(target), std::move(ts));
}

// ---- polynomial core ----

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const FieldCtx& F = *ring_->field();
  MonomialOrder ord = ring_->default_order();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.compare(a.m, b.m) > 0; });
  terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (F.is_zero(t.c)) continue;
    if (!terms_.empty() && terms_.back().m == t.m) {
      terms_.back().c = F.add(terms_.back().c, t.c);
      if (F.is_zero(terms_.back().c)) terms_.pop_back();
    } else {
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::zero(RingPtr ring) { return Polynomial(std::move(ring), {}); }

Polynomial Polynomial::constant(RingPtr ring, const FieldElement& c) {
  return Polynomial(std::move(ring), {Term{c, mono_one()}});
}

Polynomial Polynomial::variable(RingPtr ring, size_t i) {
  FieldElement one = ring->field()->one();
  return Polynomial(std::move(ring), {Term{one, mono_var(i)}});
}

Polynomial Polynomial::monomial_term(RingPtr ring, const FieldElement& c, const Monomial& m) {
  return Polynomial(std::move(ring), {Term{c, m}});
}

int32_t Polynomial::total_degree() const {
  int32_t d = -1;
  for (const Term& t : terms_) {
    Deg td = ring_->degree_of(t.m);
    d = std::max(d, td.a + td.b);
  }
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  Deg d = ring_->degree_of(terms_[0].m);
  for (const Term& t : terms_)
    if (!(ring_->degree_of(t.m) == d)) return false;
  return true;
}

Deg Polynomial::degree() const {
  if (terms_.empty()) return {};
  if (!is_homogeneous()) fail(Errc::not_homogeneous, "degree of non-homogeneous polynomial");
  return ring_->degree_of(terms_[0].m);
}

bool Polynomial::involves(size_t var) const {
  for (const Term& t : terms_)
    if (t.m.e[var]) return true;
  return false;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].m == o.terms_[i].m) || terms_[i].c != o.terms_[i].c) return false;
  }
  return true;
}

namespace {

// merge two descending term lists, coefficients of b scaled by c (and b
// optionally shifted by a monomial)
std::vector<Term> merge_scaled(const PolyRing& ring, const std::vector<Term>& a,
                               const std::vector<Term>& b, const FieldElement& c,
                               const Monomial* shift) {
  const FieldCtx& F = *ring.field();
  MonomialOrder ord = ring.default_order();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j >= b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Monomial bm = shift ? mono_mul(b[j].m, *shift) : b[j].m;
    if (i >= a.size()) {
      FieldElement bc = F.mul(c, b[j].c);
      if (!F.is_zero(bc)) out.push_back({std::move(bc), bm});
      ++j;
      continue;
    }
    int cmp = ord.compare(a[i].m, bm);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      FieldElement bc = F.mul(c, b[j].c);
      if (!F.is_zero(bc)) out.push_back({std::move(bc), bm});
      ++j;
    } else {
      FieldElement s = a[i].c;
      F.add_mul(s, c, b[j].c);
      if (!F.is_zero(s)) out.push_back({std::move(s), a[i].m});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Term> ts = merge_scaled(*a.ring(), a.terms(), b.terms(), a.ring()->field()->one(), nullptr);
  return Polynomial(a.ring(), std::move(ts));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  FieldElement minus_one = a.ring()->field()->neg(a.ring()->field()->one());
  std::vector<Term> ts = merge_scaled(*a.ring(), a.terms(), b.terms(), minus_one, nullptr);
  return Polynomial(a.ring(), std::move(ts));
}

Polynomial operator-(const Polynomial& a) {
  const FieldCtx& F = *a.ring()->field();
  std::vector<Term> ts = a.terms();
  for (Term& t : ts) t.c = F.neg(t.c);
  return Polynomial(a.ring(), std::move(ts));
}

Polynomial scale(const Polynomial& a, const FieldElement& c) {
  const FieldCtx& F = *a.ring()->field();
  if (F.is_zero(c)) return Polynomial::zero(a.ring());
  std::vector<Term> ts = a.terms();
  for (Term& t : ts) t.c = F.mul(t.c, c);
  return Polynomial(a.ring(), std::move(ts));
}

Polynomial shift_mul(const Polynomial& a, const FieldElement& c, const Monomial& m) {
  std::vector<Term> ts = merge_scaled(*a.ring(), {}, a.terms(), c, &m);
  return Polynomial(a.ring(), std::move(ts));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  const FieldCtx& F = *a.ring()->field();
  if (a.is_zero() || b.is_zero()) return Polynomial::zero(a.ring());
  std::unordered_map<Monomial, FieldElement, MonoHash> acc;
  acc.reserve(a.size() * b.size());
  for (const Term& ta : a.terms()) {
    for (const Term& tb : b.terms()) {
      Monomial m = mono_mul(ta.m, tb.m);
      auto it = acc.find(m);
      if (it == acc.end()) {
        acc.emplace(m, F.mul(ta.c, tb.c));
      } else {
        F.add_mul(it->second, ta.c, tb.c);
      }
    }
  }
  std::vector<Term> ts;
  ts.reserve(acc.size());
  for (auto& [m, c] : acc) ts.push_back({std::move(c), m});
  return Polynomial(a.ring(), std::move(ts));
}

Polynomial poly_pow(const Polynomial& a, uint32_t e) {
  Polynomial r = Polynomial::constant(a.ring(), a.ring()->field()->one());
  Polynomial base = a;
  while (e) {
    if (e & 1) r = r * base;
    if (e >>= 1) base = base * base;
  }
  return r;
}

Polynomial monic(const Polynomial& a) {
  if (a.is_zero()) return a;
  return scale(a, a.ring()->field()->inv(a.leading().c));
}

// ---- calculus / structural ops ----

Polynomial differentiate(const Polynomial& f, size_t var) {
  const FieldCtx& F = *f.ring()->field();
  std::vector<Term> ts;
  for (const Term& t : f.terms()) {
    uint16_t e = t.m.e[var];
    if (!e) continue;
    FieldElement c = F.mul(t.c, F.from_int(e));
    if (F.is_zero(c)) continue;
    Monomial m = t.m;
    m.e[var] -= 1;
    m.deg -= 1;
    ts.push_back({std::move(c), m});
  }
  return Polynomial(f.ring(), std::move(ts));
}

Polynomial dehomogenize(const Polynomial& f, size_t chart) {
  if (!f.is_homogeneous()) fail(Errc::not_homogeneous, "dehomogenize needs a homogeneous input");
  std::vector<Term> ts = f.terms();
  for (Term& t : ts) {
    t.m.deg -= t.m.e[chart];
    t.m.e[chart] = 0;
  }
  return Polynomial(f.ring(), std::move(ts));
}

Polynomial homogenize(const Polynomial& f, size_t var) {
  int32_t d = -1;
  for (const Term& t : f.terms()) d = std::max<int32_t>(d, t.m.deg);
  if (d < 0) return f;
  std::vector<Term> ts = f.terms();
  for (Term& t : ts) {
    uint32_t pad = static_cast<uint32_t>(d) - t.m.deg;
    if (t.m.e[var]) fail(Errc::internal_error, "homogenization variable already used");
    if (pad > 0xffff) fail(Errc::degree_overflow, "exponent exceeds 16 bits");
    t.m.e[var] = static_cast<uint16_t>(pad);
    t.m.deg += pad;
  }
  return Polynomial(f.ring(), std::move(ts));
}

Polynomial compose(const Polynomial& f, const std::vector<Polynomial>& subs) {
  if (subs.size() != f.ring()->nvars()) fail(Errc::usage_error, "compose needs one substitution per variable");
  RingPtr target = subs.empty() ? f.ring() : subs[0].ring();
  const FieldCtx& F = *target->field();
  // memoized powers per variable
  std::vector<std::vector<Polynomial>> pows(subs.size());
  auto power = [&](size_t i, uint16_t e) -> const Polynomial& {
    auto& table = pows[i];
    if (table.empty()) table.push_back(Polynomial::constant(target, F.one()));
    while (table.size() <= e) table.push_back(table.back() * subs[i]);
    return table[e];
  };
  Polynomial acc = Polynomial::zero(target);
  for (const Term& t : f.terms()) {
    Polynomial prod = Polynomial::constant(target, t.c);
    for (size_t i = 0; i < subs.size(); ++i) {
      if (t.m.e[i]) prod = prod * power(i, t.m.e[i]);
    }
    acc = acc + prod;
  }
  return acc;
}

Polynomial substitute_var(const Polynomial& f, size_t var, const Polynomial& value) {
  const FieldCtx& F = *f.ring()->field();
  std::vector<Polynomial> pows = {Polynomial::constant(f.ring(), F.one())};
  Polynomial acc = Polynomial::zero(f.ring());
  for (const Term& t : f.terms()) {
    uint16_t e = t.m.e[var];
    while (pows.size() <= e) pows.push_back(pows.back() * value);
    Monomial rest = t.m;
    rest.deg -= rest.e[var];
    rest.e[var] = 0;
    acc = acc + shift_mul(pows[e], t.c, rest);
  }
  return acc;
}

FieldElement evaluate(const Polynomial& f, const std::vector<FieldElement>& point) {
  const FieldCtx& F = *f.ring()->field();
  if (point.size() != f.ring()->nvars()) fail(Errc::usage_error, "evaluate needs one value per variable");
  size_t n = point.size();
  // power tables
  std::vector<std::vector<FieldElement>> pows(n);
  for (size_t i = 0; i < n; ++i) pows[i].push_back(F.one());
  FieldElement acc = F.zero();
  for (const Term& t : f.terms()) {
    FieldElement v = t.c;
    for (size_t i = 0; i < n; ++i) {
      uint16_t e = t.m.e[i];
      if (!e) continue;
      auto& table = pows[i];
      while (table.size() <= e) table.push_back(F.mul(table.back(), point[i]));
      v = F.mul(v, table[e]);
    }
    acc = F.add(acc, v);
  }
  return acc;
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  const FieldCtx& F = *a.ring()->field();
  if (b.is_zero()) fail(Errc::division_by_zero, "division by zero polynomial");
  Polynomial rem = a;
  std::vector<Term> quot;
  FieldElement lead_inv = F.inv(b.leading().c);
  while (!rem.is_zero()) {
    const Term& lt = rem.leading();
    if (!b.leading().m.divides(lt.m))
      fail(Errc::inexact_division, "division leaves a remainder");
    Monomial q = mono_div(lt.m, b.leading().m);
    FieldElement c = F.mul(lt.c, lead_inv);
    quot.push_back({c, q});
    rem = rem - shift_mul(b, c, q);
  }
  return Polynomial(a.ring(), std::move(quot));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const FieldCtx& F = *ring_->field();
  std::string s;
  bool first = true;
  for (const Term& t : terms_) {
    if (!first) s += "+";
    first = false;
    bool coeff_printed = false;
    if (!F.is_one(t.c) || t.m.is_one()) {
      s += F.to_string(t.c);
      coeff_printed = true;
    }
    bool any_var = false;
    for (size_t i = 0; i < ring_->nvars(); ++i) {
      if (!t.m.e[i]) continue;
      if (coeff_printed || any_var) s += "*";
      any_var = true;
      s += ring_->var_name(i);
      if (t.m.e[i] > 1) {
        s += "^";
        s += std::to_string(t.m.e[i]);
      }
    }
  }
  return s;
}

}  // namespace topdeg
