#include <catch2/catch_amalgamated.hpp>

#include "msc3/field.hpp"

#include <random>

using namespace msc3;

namespace {

// Deterministic random scalars for the property checks.
struct Rng {
  std::mt19937_64 g;
  explicit Rng(std::uint64_t seed) : g(seed) {}
  long long small_int() { return static_cast<long long>(g() % 21) - 10; }
  Scalar level0(const Field& f) {
    if (f.characteristic() == 0) {
      long long n = small_int();
      long long d = 1 + static_cast<long long>(g() % 7);
      return f.from_rat(BigRat(n) / d);
    }
    return f.from_int(static_cast<long long>(g() % f.characteristic()));
  }
  Scalar any(const Field& f, int max_level) {
    Scalar x = level0(f);
    for (int l = 1; l <= std::min(max_level, f.levels()); ++l)
      if (g() % 2) x = f.add(f.mul(x, f.gen(l)), level0(f));
    return x;
  }
};

}  // namespace

TEST_CASE("rational arithmetic basics") {
  Field q = Field::rationals();
  Scalar a = q.from_rat(BigRat(1) / 5);
  Scalar b = q.from_rat(BigRat(2) / 5);
  CHECK(q.add(a, b) == q.from_rat(BigRat(3) / 5));
  CHECK(q.encode(q.add(a, b)) == "3/5");
  CHECK(q.encode(q.from_int(-7)) == "-7");
}

TEST_CASE("prime field basics") {
  Field f7 = Field::prime(7);
  CHECK(f7.mul(f7.from_int(3), f7.from_int(5)) == f7.one());
  CHECK_THROWS_AS(f7.div(f7.one(), f7.zero()), DivisionByZero);
  CHECK_THROWS_AS(Field::prime(6), UnsupportedField);
}

TEST_CASE("tower generator squares to its defining value") {
  Field f7 = Field::prime(7);
  auto [r, f] = f7.sqrt(f7.from_int(3));  // 3 is a non-residue mod 7
  REQUIRE(f.levels() == 1);
  CHECK(r.level() == 1);
  CHECK(f.mul(r, r) == f.from_int(3));
}

TEST_CASE("sqrt examples") {
  Field q = Field::rationals();
  auto [r4, q1] = q.sqrt(q.from_int(4));
  CHECK(r4 == q.from_int(2));
  CHECK(q1.levels() == 0);

  Field f7 = Field::prime(7);
  auto [r2, f7b] = f7.sqrt(f7.from_int(2));
  CHECK(r2 == f7.from_int(3));  // 3^2 = 2 and 3 < 4
  CHECK(f7b.levels() == 0);
}

TEST_CASE("sqrt reuses existing levels instead of extending") {
  Field q = Field::rationals();
  auto [s2, q1] = q.sqrt(q.from_int(2));
  REQUIRE(q1.levels() == 1);
  auto [s8, q2] = q1.sqrt(q1.from_int(8));
  CHECK(q2.levels() == 1);  // sqrt(8) = 2 sqrt(2) lives in the same level
  CHECK(q2.mul(s8, s8) == q2.from_int(8));
  // And the returned root is the canonical minimum of the pair.
  CHECK(canonical_cmp(s8, q2.neg(s8)) <= 0);
}

TEST_CASE("solve_quadratic over Q picks the least root") {
  Field q = Field::rationals();
  auto [r, q1] = q.solve_quadratic(q.from_int(-5), q.from_int(6));
  CHECK(r == q.from_int(2));
  CHECK(q1.levels() == 0);
}

TEST_CASE("solve_quadratic over F2 builds F4") {
  Field f2 = Field::prime(2);
  auto [r, f4] = f2.solve_quadratic(f2.one(), f2.one());
  REQUIRE(f4.levels() == 1);
  Scalar lhs = f4.add(f4.add(f4.mul(r, r), r), f4.one());
  CHECK(f4.is_zero(lhs));
}

TEST_CASE("char-2 sqrt is inverse Frobenius") {
  Field f2 = Field::prime(2);
  auto [w, f4] = f2.solve_quadratic(f2.one(), f2.one());
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    Scalar a = rng.any(f4, 1);
    auto [r, f4b] = f4.sqrt(f4.mul(a, a));
    CHECK(f4b.levels() == f4.levels());
    CHECK(r == a);
  }
}

TEST_CASE("canonical order examples and totality") {
  Field q = Field::rationals();
  CHECK(canonical_cmp(q.from_int(2), q.from_int(3)) < 0);
  Field f7 = Field::prime(7);
  CHECK(canonical_cmp(f7.from_int(3), f7.from_int(4)) < 0);
  auto [t, f] = f7.sqrt(f7.from_int(3));
  CHECK(canonical_cmp(t, f.from_int(5)) > 0);  // higher level compares greater

  Rng rng(5);
  std::vector<Scalar> xs;
  for (int i = 0; i < 40; ++i) xs.push_back(rng.any(f, 1));
  for (const auto& a : xs)
    for (const auto& b : xs) {
      int ab = canonical_cmp(a, b), ba = canonical_cmp(b, a);
      CHECK(ab == -ba);
      if (ab == 0) CHECK(a == b);
      for (const auto& c : xs)
        if (ab <= 0 && canonical_cmp(b, c) <= 0) CHECK(canonical_cmp(a, c) <= 0);
    }
}

TEST_CASE("field axioms hold on random scalars at every level") {
  Rng rng(123);
  std::vector<Field> fields;
  {
    Field q = Field::rationals();
    auto [s2, q1] = q.sqrt(q.from_int(2));
    auto [s3, q2] = q1.sqrt(q1.from_int(3));
    fields.push_back(q2);
  }
  {
    Field f = Field::prime(7);
    auto [a, f1] = f.sqrt(f.from_int(3));
    auto [b, f2] = f1.sqrt(a);
    fields.push_back(f2);
  }
  {
    Field f = Field::prime(2);
    auto [r1, f1] = f.solve_quadratic(f.one(), f.one());
    auto [r2, f2] = f1.solve_quadratic(f1.one(), f1.gen(1));
    fields.push_back(f2);
  }
  for (const Field& f : fields) {
    for (int i = 0; i < 120; ++i) {
      Scalar a = rng.any(f, f.levels());
      Scalar b = rng.any(f, f.levels());
      Scalar c = rng.any(f, f.levels());
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.sub(a, a) == f.zero());
      if (!f.is_zero(a)) {
        CHECK(f.mul(a, f.inv(a)) == f.one());
        CHECK(f.div(b, a) == f.mul(b, f.inv(a)));
      }
    }
  }
}

TEST_CASE("sqrt and solve_quadratic residuals vanish") {
  Rng rng(77);
  std::vector<Field> bases = {Field::rationals(), Field::prime(3), Field::prime(7), Field::prime(2)};
  for (Field f : bases) {
    for (int i = 0; i < 60; ++i) {
      Scalar x = rng.any(f, f.levels());
      auto [r, nf] = f.sqrt(x);
      CHECK(nf.mul(r, r) == x);
      f = nf;
      Scalar b = rng.any(f, f.levels());
      Scalar c = rng.any(f, f.levels());
      auto [root, nf2] = f.solve_quadratic(b, c);
      Scalar resid = nf2.add(nf2.add(nf2.mul(root, root), nf2.mul(b, root)), c);
      CHECK(nf2.is_zero(resid));
      f = nf2;
      if (f.levels() > 4) break;  // keep towers at desk depth
    }
  }
}

TEST_CASE("embeddings commute with arithmetic") {
  Field f = Field::prime(5);
  auto [s, f1] = f.sqrt(f.from_int(2));  // 2 is a non-residue mod 5
  REQUIRE(f1.levels() == 1);
  Rng rng(9);
  for (int i = 0; i < 40; ++i) {
    Scalar a = rng.level0(f);
    Scalar b = rng.level0(f);
    CHECK(f1.add(a, b) == f.add(a, b));
    CHECK(f1.mul(a, b) == f.mul(a, b));
  }
}

TEST_CASE("scalar text encoding round-trips and pads levels") {
  Field f3 = Field::prime(3);
  auto [t, f] = f3.sqrt(f3.from_int(2));
  REQUIRE(f.levels() == 1);
  // t + 1 generates the multiplicative group of the 9-element level, so it is
  // not a square there and forces level 2.
  auto [u, g] = f.sqrt(f.add(t, f.one()));
  REQUIRE(g.levels() == 2);
  Scalar x = g.add(g.mul(u, g.from_int(4)), g.add(t, g.from_int(2)));
  std::string s = g.encode(x);
  CHECK(g.decode(s) == x);
  // A level-2 generator is distinguishable from a level-1 generator.
  CHECK(g.encode(g.gen(1)) == "[0,1]");
  CHECK(g.encode(g.gen(2)) == "[[0,0],[1,0]]");
  CHECK(g.decode(g.encode(g.gen(2))) == g.gen(2));

  Field q = Field::rationals();
  CHECK(q.decode("3/5") == q.from_rat(BigRat(3) / 5));
  CHECK_THROWS_AS(q.decode("3/"), ParseError);
  CHECK_THROWS_AS(f3.decode("9"), ParseError);
}
