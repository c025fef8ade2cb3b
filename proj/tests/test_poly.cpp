#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "topdeg/poly.hpp"

using namespace topdeg;

namespace {

template <typename Fn>
Errc code_of(Fn&& fn) {
  try {
    fn();
  } catch (const AlgebraError& e) {
    return e.code();
  }
  return Errc::internal_error;
}

RingPtr ring_p2(uint32_t p) { return PolyRing::projective(FieldCtx::make(p, 1), 2); }

Polynomial random_poly(RingPtr ring, std::mt19937_64& rng, int max_deg, int terms) {
  const FieldCtx& F = *ring->field();
  std::vector<Term> ts;
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (size_t v = 0; v < ring->nvars(); ++v) {
      uint16_t e = static_cast<uint16_t>(rng() % (max_deg + 1));
      m.e[v] = e;
      m.deg += e;
    }
    ts.push_back({F.random_element(rng), m});
  }
  return Polynomial(ring, std::move(ts));
}

Polynomial random_homogeneous(RingPtr ring, std::mt19937_64& rng, uint32_t deg) {
  const FieldCtx& F = *ring->field();
  std::vector<Term> ts;
  size_t n = ring->nvars();
  for (int t = 0; t < 8; ++t) {
    Monomial m;
    uint32_t left = deg;
    for (size_t v = 0; v + 1 < n; ++v) {
      uint16_t e = static_cast<uint16_t>(rng() % (left + 1));
      m.e[v] = e;
      m.deg += e;
      left -= e;
    }
    m.e[n - 1] = static_cast<uint16_t>(left);
    m.deg += left;
    ts.push_back({F.random_element(rng), m});
  }
  return Polynomial(ring, std::move(ts));
}

const char* kQuintic = "(x1^2+x0*x2)*x0*(x1^2+x0*x2+x0^2)";

}  // namespace

TEST_CASE("parsing") {
  auto r3 = ring_p2(3);
  Polynomial q = parse_polynomial("x1^2+x0*x2", r3);
  CHECK(q.size() == 2);
  CHECK(q.is_homogeneous());
  CHECK(q.degree().a == 2);

  CHECK(parse_polynomial("0", r3).is_zero());
  CHECK(parse_polynomial("3*x0", r3).is_zero());

  CHECK(code_of([&] { parse_polynomial("x0 + ", r3); }) == Errc::syntax_error);
  CHECK(code_of([&] { parse_polynomial("x0 x1", r3); }) == Errc::syntax_error);
  CHECK(code_of([&] { parse_polynomial("w^2", r3); }) == Errc::unknown_variable);

  // x,y,z aliases in the plane
  auto r101 = ring_p2(101);
  CHECK(parse_polynomial("z*(y^3+x^2*z)", r101) ==
        parse_polynomial("x2*(x1^3+x0^2*x2)", r101));
  // leading-integer juxtaposition is allowed, other juxtaposition is not
  CHECK(parse_polynomial("2x0", r101) == parse_polynomial("2*x0", r101));
}

TEST_CASE("differentiate") {
  auto r7 = ring_p2(7);
  Polynomial f = parse_polynomial("x0*x2-x1^2", r7);
  CHECK(differentiate(f, 0) == parse_polynomial("x2", r7));

  auto r3 = ring_p2(3);
  CHECK(differentiate(parse_polynomial("x1^3", r3), 1).is_zero());

  // the paper's first polar coordinate of the characteristic-3 quintic
  Polynomial quintic = parse_polynomial(kQuintic, r3);
  CHECK(differentiate(quintic, 0) == parse_polynomial("x1^4+x0^3*x2+x0*x1^2*x2", r3));
  CHECK(differentiate(quintic, 1) == parse_polynomial("-x0^3*x1+x0*x1^3+x0^2*x1*x2", r3));
  CHECK(differentiate(quintic, 2) == parse_polynomial("x0^4-x0^2*x1^2-x0^3*x2", r3));
}

TEST_CASE("leibniz rule on random pairs") {
  auto r = ring_p2(101);
  std::mt19937_64 rng(42);
  for (int i = 0; i < 25; ++i) {
    Polynomial f = random_poly(r, rng, 3, 4);
    Polynomial g = random_poly(r, rng, 3, 4);
    for (size_t v = 0; v < 3; ++v) {
      CHECK(differentiate(f * g, v) == f * differentiate(g, v) + g * differentiate(f, v));
    }
  }
}

TEST_CASE("euler identity for homogeneous polynomials") {
  auto r = ring_p2(101);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    uint32_t d = 2 + static_cast<uint32_t>(rng() % 5);
    Polynomial f = random_homogeneous(r, rng, d);
    Polynomial sum = Polynomial::zero(r);
    for (size_t v = 0; v < 3; ++v) sum = sum + Polynomial::variable(r, v) * differentiate(f, v);
    CHECK(sum == scale(f, r->field()->from_int(d)));
  }
}

TEST_CASE("dehomogenize") {
  auto r7 = ring_p2(7);
  CHECK(dehomogenize(parse_polynomial("x0*x2-x1^2", r7), 0) == parse_polynomial("x2-x1^2", r7));
  CHECK(dehomogenize(parse_polynomial("x0^4", r7), 0) == parse_polynomial("1", r7));
  CHECK(code_of([&] { dehomogenize(parse_polynomial("x0+x1^2", r7), 0); }) == Errc::not_homogeneous);

  // dehomogenized Euler identity for the quintic in the chart x0 != 0:
  // d*fb = (f0)b + x1*(f1)b + x2*(f2)b
  auto r3 = ring_p2(3);
  Polynomial f = parse_polynomial(kQuintic, r3);
  Polynomial fb = dehomogenize(f, 0);
  Polynomial rhs = dehomogenize(differentiate(f, 0), 0);
  for (size_t v : {size_t(1), size_t(2)})
    rhs = rhs + Polynomial::variable(r3, v) * dehomogenize(differentiate(f, v), 0);
  CHECK(scale(fb, r3->field()->from_int(5)) == rhs);
}

TEST_CASE("compose") {
  auto r = ring_p2(7);
  Polynomial f = parse_polynomial("x0+x1", r);
  CHECK(compose(f, {parse_polynomial("x1", r), parse_polynomial("x0", r), Polynomial::zero(r)}) == f);
  Polynomial sq = parse_polynomial("x0^2", r);
  CHECK(compose(sq, {parse_polynomial("x0+x1", r), Polynomial::zero(r), Polynomial::zero(r)}) ==
        parse_polynomial("x0^2+2*x0*x1+x1^2", r));
}

TEST_CASE("ring axioms on random polynomials") {
  auto r = ring_p2(13);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 15; ++i) {
    Polynomial a = random_poly(r, rng, 2, 3);
    Polynomial b = random_poly(r, rng, 2, 3);
    Polynomial c = random_poly(r, rng, 2, 3);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == Polynomial::zero(r));
  }
}

TEST_CASE("exact division") {
  auto r = ring_p2(101);
  Polynomial a = parse_polynomial("x0^2+x1*x2", r);
  Polynomial b = parse_polynomial("x0-x1", r);
  CHECK(exact_divide(a * b, b) == a);
  CHECK(code_of([&] { exact_divide(parse_polynomial("x0^2+x1^2", r), b); }) == Errc::inexact_division);
}

TEST_CASE("print/parse round trip") {
  auto r = ring_p2(101);
  std::mt19937_64 rng(4);
  for (int i = 0; i < 20; ++i) {
    Polynomial f = random_poly(r, rng, 4, 5);
    CHECK(parse_polynomial(f.to_string(), r) == f);
  }
}

TEST_CASE("gcd basics") {
  auto r = ring_p2(101);
  CHECK(poly_gcd(parse_polynomial("x0^2", r), parse_polynomial("x0*x1", r)) ==
        parse_polynomial("x0", r));
  Polynomial f = parse_polynomial("3*x0^2+x1*x2", r);
  CHECK(poly_gcd(f, Polynomial::zero(r)) == monic(f));
  CHECK(poly_gcd(Polynomial::zero(r), f) == monic(f));
}

TEST_CASE("gcd of the reduction-problem partials") {
  // partials of z^50 (y^3+x^2 z)^51 over F_101 share z^49 (y^3+x^2 z)^50
  auto r = ring_p2(101);
  Polynomial f = parse_polynomial("z^50*(y^3+x^2*z)^51", r);
  std::vector<Polynomial> parts;
  for (size_t v = 0; v < 3; ++v) parts.push_back(differentiate(f, v));
  Polynomial g = poly_gcd(poly_gcd(parts[0], parts[1]), parts[2]);
  Polynomial expected = monic(parse_polynomial("z^49*(y^3+x^2*z)^50", r));
  CHECK(g == expected);

  // oracle: each partial divides exactly, quotients pairwise coprime
  std::vector<Polynomial> quots;
  for (const Polynomial& d : parts) quots.push_back(exact_divide(d, g));
  CHECK(poly_gcd(poly_gcd(quots[0], quots[1]), quots[2]).is_unit());
}

TEST_CASE("gcd divides and cofactors are coprime") {
  auto r = ring_p2(101);
  std::mt19937_64 rng(6);
  for (int i = 0; i < 10; ++i) {
    Polynomial u = random_poly(r, rng, 2, 3);
    Polynomial v = random_poly(r, rng, 2, 3);
    Polynomial w = random_poly(r, rng, 2, 3);
    if (u.is_zero() || v.is_zero() || w.is_zero()) continue;
    Polynomial a = u * w;
    Polynomial b = v * w;
    Polynomial g = poly_gcd(a, b);
    Polynomial qa = exact_divide(a, g);
    Polynomial qb = exact_divide(b, g);
    CHECK(poly_gcd(qa, qb).is_unit());
  }
}
