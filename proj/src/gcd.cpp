#include "topdeg/groebner.hpp"
#include "topdeg/ideals.hpp"

namespace topdeg {

namespace {

Monomial content_monomial(const Polynomial& f) {
  Monomial g = f.terms()[0].m;
  for (const Term& t : f.terms()) g = mono_gcd(g, t.m);
  return g;
}

Polynomial strip_monomial(const Polynomial& f, const Monomial& m) {
  std::vector<Term> ts = f.terms();
  for (Term& t : ts) t.m = mono_div(t.m, m);
  return Polynomial(f.ring(), std::move(ts));
}

bool proportional(const Polynomial& a, const Polynomial& b) {
  if (a.size() != b.size()) return false;
  const FieldCtx& F = *a.ring()->field();
  FieldElement ratio = F.div(a.leading().c, b.leading().c);
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (size_t i = 0; i < ta.size(); ++i) {
    if (!(ta[i].m == tb[i].m)) return false;
    if (ta[i].c != F.mul(ratio, tb[i].c)) return false;
  }
  return true;
}

std::vector<size_t> present_vars(const Polynomial& a, const Polynomial& b) {
  std::vector<size_t> vars;
  for (size_t v = 0; v < a.ring()->nvars(); ++v) {
    if (a.involves(v) || b.involves(v)) vars.push_back(v);
  }
  return vars;
}

Polynomial univariate_gcd(const Polynomial& a, const Polynomial& b, size_t v) {
  const FieldCtx& F = *a.ring()->field();
  auto to_dense = [&](const Polynomial& f) {
    std::vector<FieldElement> c;
    for (const Term& t : f.terms()) {
      size_t e = t.m.e[v];
      if (c.size() <= e) c.resize(e + 1, F.zero());
      c[e] = F.add(c[e], t.c);
    }
    while (!c.empty() && F.is_zero(c.back())) c.pop_back();
    return c;
  };
  auto rem = [&](std::vector<FieldElement> x, const std::vector<FieldElement>& y) {
    FieldElement il = F.inv(y.back());
    while (x.size() >= y.size() && !x.empty()) {
      FieldElement c = F.mul(x.back(), il);
      size_t shift = x.size() - y.size();
      for (size_t i = 0; i < y.size(); ++i) x[shift + i] = F.sub(x[shift + i], F.mul(c, y[i]));
      while (!x.empty() && F.is_zero(x.back())) x.pop_back();
    }
    return x;
  };
  std::vector<FieldElement> x = to_dense(a), y = to_dense(b);
  while (!y.empty()) {
    std::vector<FieldElement> r = rem(std::move(x), y);
    x = std::move(y);
    y = std::move(r);
  }
  std::vector<Term> ts;
  FieldElement il = F.inv(x.back());
  for (size_t e = 0; e < x.size(); ++e) {
    if (F.is_zero(x[e])) continue;
    ts.push_back({F.mul(x[e], il), mono_var(v, static_cast<uint16_t>(e))});
  }
  return Polynomial(a.ring(), std::move(ts));
}

// (a) ∩ (b) is principal; its monic generator by tag elimination
Polynomial principal_lcm(const Polynomial& a, const Polynomial& b) {
  RingPtr base = a.ring();
  RingPtr big = base->with_tag("t#");
  size_t tvar = big->nvars() - 1;
  Polynomial t = Polynomial::variable(big, tvar);
  Polynomial one = Polynomial::constant(big, big->field()->one());
  std::vector<Polynomial> gens = {t * big->lift(a), (one - t) * big->lift(b)};
  Ideal elim = eliminate(Ideal(big, std::move(gens)), {tvar});
  if (elim.gens().size() != 1)
    fail(Errc::internal_error, "lcm elimination did not yield a principal ideal");
  return base->restrict_from(elim.gens()[0]);
}

Polynomial gcd_inner(const Polynomial& a0, const Polynomial& b0) {
  const FieldCtx& F = *a0.ring()->field();
  Monomial ca = content_monomial(a0);
  Monomial cb = content_monomial(b0);
  Monomial cg = mono_gcd(ca, cb);
  Polynomial a = strip_monomial(a0, ca);
  Polynomial b = strip_monomial(b0, cb);
  Polynomial mono_part = Polynomial::monomial_term(a.ring(), F.one(), cg);
  if (a.is_constant() || b.is_constant()) return mono_part;
  if (proportional(a, b)) return mono_part * monic(a);

  std::vector<size_t> vars = present_vars(a, b);
  if (vars.size() == 1) return mono_part * univariate_gcd(a, b, vars[0]);
  bool a_single = true, b_single = true;
  size_t va = SIZE_MAX, vb = SIZE_MAX;
  for (size_t v : vars) {
    if (a.involves(v)) {
      if (va != SIZE_MAX) a_single = false;
      va = v;
    }
    if (b.involves(v)) {
      if (vb != SIZE_MAX) b_single = false;
      vb = v;
    }
  }
  if (a_single && b_single && va != vb) return mono_part;

  if (a.is_homogeneous() && b.is_homogeneous() && !a.ring()->is_bigraded()) {
    // both contents are trivial, so the chart variable divides neither input
    // nor the gcd; the affine gcd rehomogenizes to the projective one
    size_t v = vars.back();
    Polynomial G = gcd_inner(dehomogenize(a, v), dehomogenize(b, v));
    return mono_part * homogenize(monic(G), v);
  }

  Polynomial l = principal_lcm(a, b);
  Polynomial g = exact_divide(a * b, l);
  return mono_part * monic(g);
}

}  // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) fail(Errc::usage_error, "gcd of two zero polynomials");
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  return monic(gcd_inner(a, b));
}

}  // namespace topdeg
