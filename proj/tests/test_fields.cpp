#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "topdeg/fields.hpp"

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

}  // namespace

TEST_CASE("field construction") {
  auto f3 = FieldCtx::make(3, 1);
  CHECK(f3->characteristic() == 3);
  CHECK(f3->modulus().empty());

  auto f101 = FieldCtx::make(101, 1);
  CHECK(f101->order() == 101);

  // only monic irreducible quadratic over F_2 is t^2 + t + 1
  auto f4 = FieldCtx::make(2, 2);
  CHECK(f4->modulus() == std::vector<uint32_t>{1, 1, 1});
  CHECK(f4->order() == 4);

  CHECK(code_of([] { FieldCtx::make(4, 1); }) == Errc::composite_characteristic);
  CHECK(code_of([] { FieldCtx::make(91, 1); }) == Errc::composite_characteristic);
  CHECK(code_of([] { FieldCtx::make(2147483647u, 3); }) == Errc::unsupported_size);
}

TEST_CASE("inverses") {
  auto f3 = FieldCtx::make(3, 1);
  CHECK(f3->inv(f3->from_int(2)) == f3->from_int(2));
  CHECK(f3->inv(f3->one()) == f3->one());

  auto f101 = FieldCtx::make(101, 1);
  CHECK(f101->inv(f101->from_int(37)) == f101->from_int(71));
  CHECK(code_of([&] { f101->inv(f101->zero()); }) == Errc::division_by_zero);

  auto f9 = FieldCtx::make(3, 2);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    FieldElement a = f9->random_nonzero(rng);
    CHECK(f9->is_one(f9->mul(a, f9->inv(a))));
  }
}

TEST_CASE("field axioms on seeded triples") {
  for (auto field : {FieldCtx::make(101, 1), FieldCtx::make(3, 2), FieldCtx::make(7, 3)}) {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 60; ++i) {
      FieldElement a = field->random_element(rng);
      FieldElement b = field->random_element(rng);
      FieldElement c = field->random_element(rng);
      CHECK(field->mul(field->mul(a, b), c) == field->mul(a, field->mul(b, c)));
      CHECK(field->add(field->add(a, b), c) == field->add(a, field->add(b, c)));
      CHECK(field->mul(a, field->add(b, c)) == field->add(field->mul(a, b), field->mul(a, c)));
      CHECK(field->sub(a, a) == field->zero());
    }
  }
}

TEST_CASE("frobenius is additive") {
  for (auto field : {FieldCtx::make(3, 2), FieldCtx::make(5, 2), FieldCtx::make(2, 4)}) {
    std::mt19937_64 rng(11);
    uint64_t p = field->characteristic();
    for (int i = 0; i < 40; ++i) {
      FieldElement a = field->random_element(rng);
      FieldElement b = field->random_element(rng);
      CHECK(field->pow(field->add(a, b), p) == field->add(field->pow(a, p), field->pow(b, p)));
    }
  }
}

TEST_CASE("element text round trip") {
  for (auto field : {FieldCtx::make(101, 1), FieldCtx::make(3, 3)}) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 40; ++i) {
      FieldElement a = field->random_element(rng);
      std::string s = field->to_string(a);
      CHECK(field->parse_element(s) == a);
      CHECK(field->to_string(field->parse_element(s)) == s);
    }
  }
}

TEST_CASE("embeddings preserve arithmetic") {
  auto small = FieldCtx::make(2, 2);
  auto big = FieldCtx::make(2, 4);
  FieldEmbedding emb = FieldEmbedding::find(small, big);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    FieldElement a = small->random_element(rng);
    FieldElement b = small->random_element(rng);
    CHECK(emb.map(small->mul(a, b)) == big->mul(emb.map(a), emb.map(b)));
    CHECK(emb.map(small->add(a, b)) == big->add(emb.map(a), emb.map(b)));
  }

  auto f101 = FieldCtx::make(101, 1);
  auto f101_2 = FieldCtx::make(101, 2);
  FieldEmbedding e2 = FieldEmbedding::find(f101, f101_2);
  CHECK(e2.map(f101->from_int(37)) == f101_2->from_int(37));

  // nontrivial root search above the brute-force range
  auto f101_4 = FieldCtx::make(101, 4);
  FieldEmbedding e4 = FieldEmbedding::find(f101_2, f101_4);
  FieldElement x = f101_2->from_coeffs({5, 7});
  FieldElement y = f101_2->from_coeffs({11, 2});
  CHECK(e4.map(f101_2->mul(x, y)) == f101_4->mul(e4.map(x), e4.map(y)));
}
