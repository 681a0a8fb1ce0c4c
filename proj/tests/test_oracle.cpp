#include <catch2/catch_amalgamated.hpp>

#include "msc3/oracle.hpp"

#include <random>

using namespace msc3;

namespace {

struct Rng {
  std::mt19937_64 g;
  explicit Rng(std::uint64_t seed) : g(seed) {}
  Scalar pick(const Field& f) { return f.from_int(static_cast<long long>(g() % f.characteristic())); }
  Msc normalized(const Field& f, bool sparse) {
    Msc A(f);
    for (int s : independent_slots())
      A.m.a[static_cast<size_t>(s)] = (sparse && g() % 3 != 0) ? f.zero() : pick(f);
    fix_dependent_entries(f, A);
    return A;
  }
  StabilizerParams stab(const Field& f) {
    for (;;) {
      Scalar c = pick(f);
      if (!f.is_zero(c)) return {pick(f), pick(f), c};
    }
  }
};

}  // namespace

TEST_CASE("stabilizer search space size over F3") {
  Field f3 = Field::prime(3);
  int count = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 1; c < 3; ++c) ++count, (void)a, (void)b;
  CHECK(count == 18);
}

TEST_CASE("planted stabilizer witnesses are recovered") {
  Field f3 = Field::prime(3);
  Rng rng(71);
  for (int i = 0; i < 40; ++i) {
    Msc A = rng.normalized(f3, i % 2 == 0);
    StabilizerParams p = rng.stab(f3);
    Msc B = act_stabilizer(f3, p, A);
    auto w = brute_force_iso(f3, A, B, IsoSearchMode::Stabilizer);
    REQUIRE(w.has_value());
    CHECK(act(f3, w->g, A) == B);
  }
}

TEST_CASE("non-isomorphic pair over F3 is rejected by both search modes") {
  Field f3 = Field::prime(3);
  // Two rank-zone forms differing only in alpha_1 (0 vs 1), other params 0.
  Msc A(f3), B(f3);
  fix_dependent_entries(f3, A);
  B.e(0, 0) = f3.one();
  fix_dependent_entries(f3, B);
  CHECK_FALSE(brute_force_iso(f3, A, B, IsoSearchMode::Stabilizer).has_value());
  CHECK_FALSE(brute_force_iso(f3, A, B, IsoSearchMode::FullGl3).has_value());
  // Sanity: they classify differently as well.
  RawResult ra = classify_raw(f3, NormalizedMsc{A, {Mat::identity(3, f3)}}, Parity::Odd);
  RawResult rb = classify_raw(f3, NormalizedMsc{B, {Mat::identity(3, f3)}}, Parity::Odd);
  CHECK((ra.index == 32 && rb.index == 32));
  CHECK(!(ra.canonical == rb.canonical));
}

TEST_CASE("classification agrees with stabilizer brute force over F3") {
  Field f3 = Field::prime(3);
  Rng rng(1234);
  int checked = 0;
  for (int i = 0; i < 160; ++i) {
    Msc A = rng.normalized(f3, true);
    Msc B = (i % 2 == 0) ? act_stabilizer(f3, rng.stab(f3), A) : rng.normalized(f3, true);
    bool iso = brute_force_iso(f3, A, B, IsoSearchMode::Stabilizer).has_value();
    RawResult ra = classify_raw(f3, NormalizedMsc{A, {Mat::identity(3, f3)}}, Parity::Odd);
    RawResult rb = classify_raw(f3, NormalizedMsc{B, {Mat::identity(3, f3)}}, Parity::Odd);
    bool same = ra.index == rb.index && ra.canonical == rb.canonical;
    INFO("trial " << i << " families " << ra.index << " vs " << rb.index);
    CHECK(iso == same);
    ++checked;
    // Constructive converse: equal classifications compose to a witness.
    if (same) {
      Field big = Field::common_tower(ra.field, rb.field);
      Mat w = mat_mul(big, mat_inv3(big, rb.witness), ra.witness);
      CHECK(act(big, w, A) == B);
    }
  }
  CHECK(checked == 160);
}

TEST_CASE("classification agrees with full GL(3) search over F2 and F3") {
  for (std::uint64_t p : {2ull, 3ull}) {
    Field f = Field::prime(p);
    Parity parity = p == 2 ? Parity::Char2 : Parity::Odd;
    Rng rng(p * 99 + 5);
    for (int i = 0; i < (p == 2 ? 60 : 30); ++i) {
      Msc A = rng.normalized(f, true);
      Msc B;
      if (i % 3 == 0) {
        B = rng.normalized(f, true);
      } else {
        // Plant a general GL(3) move and renormalize.
        Mat g(3, 3, f);
        do {
          for (auto& v : g.a) v = rng.pick(f);
        } while (f.is_zero(det3(f, g)));
        Msc moved = act(f, g, A);
        B = normalize_traces(f, moved).msc;
      }
      bool iso = brute_force_iso(f, A, B, IsoSearchMode::FullGl3).has_value();
      RawResult ra = classify_raw(f, NormalizedMsc{A, {Mat::identity(3, f)}}, parity);
      RawResult rb = classify_raw(f, NormalizedMsc{B, {Mat::identity(3, f)}}, parity);
      bool same = ra.index == rb.index && ra.canonical == rb.canonical;
      INFO("p=" << p << " trial " << i << " families " << ra.index << " vs " << rb.index);
      CHECK(iso == same);
    }
  }
}

TEST_CASE("census is reproducible and rejects trace-dependent draws") {
  CensusResult a = census(3, 300, 42);
  CensusResult b = census(3, 300, 42);
  CHECK(a.histogram == b.histogram);
  CHECK(a.rejected == b.rejected);
  CHECK(a.samples == 300);
  long long total = a.rejected;
  for (auto& [k, v] : a.histogram) total += v;
  CHECK(total == 300);

  CensusResult zero = census(3, 0, 7);
  CHECK(zero.histogram.empty());
}

TEST_CASE("census over F3 concentrates on the first family") {
  CensusResult c = census(3, 400, 2024);
  long long accepted = c.samples - c.rejected;
  REQUIRE(accepted > 0);
  CHECK(c.histogram[1] * 2 > accepted);  // alpha_9 != 0 is the generic stratum
}
