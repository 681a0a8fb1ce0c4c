#include <catch2/catch_amalgamated.hpp>

#include "msc3/selftest.hpp"

using namespace msc3;

TEST_CASE("catalog covers 47 odd and 62 characteristic-2 families") {
  CHECK(family_count(Parity::Odd) == 47);
  CHECK(family_count(Parity::Char2) == 62);
  for (int i = 1; i <= 47; ++i) CHECK(family_def(Parity::Odd, i).index == i);
  for (int i = 1; i <= 62; ++i) CHECK(family_def(Parity::Char2, i).index == i);
}

TEST_CASE("rank-zone template with zero parameters matches the display") {
  Field q = Field::rationals();
  const FamilyDef& def = family_def(Parity::Odd, 32);
  std::vector<Scalar> zeros(def.param_slots.size(), q.zero());
  Msc A = canonical_msc(q, def, zeros);
  // third row (0,0,0,0,0,1,1,0,0); first two rows zero
  for (int c = 0; c < 9; ++c) {
    CHECK(q.is_zero(A.e(0, c)));
    CHECK(q.is_zero(A.e(1, c)));
  }
  std::vector<int> expect = {0, 0, 0, 0, 0, 1, 1, 0, 0};
  for (int c = 0; c < 9; ++c) CHECK(A.e(2, c) == q.from_int(expect[static_cast<size_t>(c)]));
}

TEST_CASE("sixteenth family realizes the classical slice at beta8 = 1") {
  Field q = Field::rationals();
  const FamilyDef& def = family_def(Parity::Odd, 16);
  std::vector<Scalar> params(def.param_slots.size(), q.zero());
  for (size_t i = 0; i < def.param_slots.size(); ++i)
    if (def.param_slots[i] == 16 /* beta8 */) params[i] = q.one();
  Msc A = canonical_msc(q, def, params);
  std::vector<int> alpha_row = {0, 0, 1, 0, 0, 1, -1, -1, 0};
  for (int c = 0; c < 9; ++c) CHECK(A.e(0, c) == q.from_int(alpha_row[static_cast<size_t>(c)]));
  CHECK(A.e(1, 2) == q.from_int(-1));  // beta3 = -beta8^2
  CHECK(A.e(1, 6) == q.one());         // beta7 = beta8^2
}

TEST_CASE("canonical templates are trace normalized") {
  Field f3 = Field::prime(3);
  Field f2 = selftest_field(2);
  SplitMix64 rng(999);
  for (Parity parity : {Parity::Odd, Parity::Char2}) {
    const Field& f = parity == Parity::Odd ? f3 : f2;
    for (const auto& def : family_table(parity)) {
      auto params = sample_family_params(f, def, rng);
      REQUIRE(params.has_value());
      Msc A = canonical_msc(f, def, *params);
      CHECK(is_trace_normalized(f, A));
    }
  }
}

TEST_CASE("guard violations are reported") {
  Field q = Field::rationals();
  const FamilyDef& def = family_def(Parity::Odd, 3);  // alpha8 != -1
  std::vector<Scalar> params(def.param_slots.size(), q.zero());
  for (size_t i = 0; i < def.param_slots.size(); ++i)
    if (def.param_slots[i] == 7 /* alpha8 */) params[i] = q.from_int(-1);
  CHECK_THROWS_AS(canonical_msc(q, def, params), GuardViolated);
  CHECK_THROWS_AS(canonical_msc(q, def, {q.zero()}), MissingParam);
}

TEST_CASE("family self test over F3, F2 tower and Q") {
  SplitMix64 rng(20240809);
  {
    Field f = selftest_field(3);
    SelftestReport rep;
    for (int i = 1; i <= 47; ++i) selftest_family(f, Parity::Odd, i, 4, rng, rep);
    for (auto& m : rep.messages) INFO(m);
    CHECK(rep.failures == 0);
    CHECK(rep.trials == 47 * 4);
  }
  {
    Field f = selftest_field(2);
    SelftestReport rep;
    for (int i = 1; i <= 62; ++i) selftest_family(f, Parity::Char2, i, 4, rng, rep);
    std::string all;
    for (auto& m : rep.messages) all += m + "; ";
    INFO(all);
    CHECK(rep.failures == 0);
  }
  {
    Field f = selftest_field(0);
    SelftestReport rep;
    for (int i : {1, 2, 3, 9, 15, 16, 22, 28, 32, 44, 45, 46, 47}) selftest_family(f, Parity::Odd, i, 2, rng, rep);
    std::string all;
    for (auto& m : rep.messages) all += m + "; ";
    INFO(all);
    CHECK(rep.failures == 0);
  }
}

TEST_CASE("first-family involution identifies sign-flipped parameters") {
  Field q = Field::rationals();
  const FamilyDef& def = family_def(Parity::Odd, 1);
  SplitMix64 rng(5150);
  for (int t = 0; t < 25; ++t) {
    std::vector<Scalar> params;
    for (size_t i = 0; i < def.param_slots.size(); ++i) params.push_back(draw_scalar(q, rng, false));
    Msc A = canonical_msc(q, def, params);
    Mat d = Mat::identity(3, q);
    d.at(2, 2) = q.from_int(-1);
    Msc flipped = act(q, d, A);
    std::vector<Scalar> fp = involution_flip_params(q, def, params);
    CHECK(canonical_msc(q, def, fp) == flipped);
    // involution_reduce collapses the pair to one representative.
    auto r1 = involution_reduce(q, Parity::Odd, 1, params);
    auto r2 = involution_reduce(q, Parity::Odd, 1, fp);
    CHECK(params_cmp(r1, r2) == 0);
  }
}

TEST_CASE("classification of a canonical instance keeps the classical A4 values") {
  // Family 4 over Q with a handful of nonzero parameters.
  Field q = Field::rationals();
  const FamilyDef& def = family_def(Parity::Odd, 4);
  SplitMix64 rng(31337);
  auto params = sample_family_params(q, def, rng);
  REQUIRE(params.has_value());
  Msc A = canonical_msc(q, def, *params);
  auto r = classify_normalized(q, NormalizedMsc{A, {Mat::identity(3, q)}}, Parity::Odd);
  CHECK(r.family.index == 4);
  CHECK(r.guard_text == std::string("alpha7 + 2 beta8 - alpha3 != 0"));
}
