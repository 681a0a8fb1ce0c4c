#include <catch2/catch_amalgamated.hpp>

#include "msc3/matrix.hpp"
#include "msc3/normalize.hpp"

#include <random>

using namespace msc3;

namespace {

struct Rng {
  std::mt19937_64 g;
  explicit Rng(std::uint64_t seed) : g(seed) {}
  Scalar pick(const Field& f) {
    if (f.characteristic() == 0) return f.from_int(static_cast<long long>(g() % 11) - 5);
    return f.from_int(static_cast<long long>(g() % f.characteristic()));
  }
  Msc msc(const Field& f) {
    Msc A(f);
    for (auto& v : A.m.a) v = pick(f);
    return A;
  }
  Msc normalized_msc(const Field& f) {
    Msc A(f);
    for (int s : independent_slots()) A.m.a[static_cast<size_t>(s)] = pick(f);
    fix_dependent_entries(f, A);
    return A;
  }
  Mat invertible3(const Field& f) {
    for (;;) {
      Mat g(3, 3, f);
      for (auto& v : g.a) v = pick(f);
      if (!f.is_zero(det3(f, g))) return g;
    }
  }
  StabilizerParams stab(const Field& f) {
    for (;;) {
      Scalar c = pick(f);
      if (!f.is_zero(c)) return {pick(f), pick(f), c};
    }
  }
};

Mat from_rows(const Field& f, std::initializer_list<std::initializer_list<int>> rows) {
  Mat m(static_cast<int>(rows.size()), static_cast<int>(rows.begin()->size()), f);
  int r = 0;
  for (auto& row : rows) {
    int c = 0;
    for (int v : row) m.at(r, c++) = f.from_int(v);
    ++r;
  }
  return m;
}

}  // namespace

TEST_CASE("kron identity and worked example") {
  Field q = Field::rationals();
  Mat i2 = Mat::identity(2, q);
  CHECK(kron(q, i2, i2) == Mat::identity(4, q));

  Mat x = from_rows(q, {{1, 2}, {3, 4}});
  Mat y = from_rows(q, {{0, 1}, {1, 0}});
  Mat expect = from_rows(q, {{0, 1, 0, 2}, {1, 0, 2, 0}, {0, 3, 0, 4}, {3, 0, 4, 0}});
  CHECK(kron(q, x, y) == expect);
}

TEST_CASE("kron of standard basis vectors selects the matching column") {
  Field q = Field::rationals();
  Mat e1(3, 1, q), e2(3, 1, q);
  e1.at(0, 0) = q.one();
  e2.at(1, 0) = q.one();
  Mat k = kron(q, e1, e2);
  REQUIRE(k.rows == 9);
  for (int i = 0; i < 9; ++i) CHECK(k.at(i, 0) == (i == 1 ? q.one() : q.zero()));
}

TEST_CASE("multiply reads single structure constants") {
  Field q = Field::rationals();
  Msc A(q);
  CHECK(multiply(q, A, {q.one(), q.zero(), q.zero()}, {q.one(), q.zero(), q.zero()}) ==
        std::array<Scalar, 3>{q.zero(), q.zero(), q.zero()});
  A.e(0, 5) = q.one();  // coefficient of e1 in e2.e3
  auto r = multiply(q, A, {q.zero(), q.one(), q.zero()}, {q.zero(), q.zero(), q.one()});
  CHECK(r == std::array<Scalar, 3>{q.one(), q.zero(), q.zero()});
}

TEST_CASE("act is a group action") {
  for (std::uint64_t p : {0ull, 3ull, 5ull}) {
    Field f = p ? Field::prime(p) : Field::rationals();
    Rng rng(42 + p);
    for (int i = 0; i < 20; ++i) {
      Msc A = rng.msc(f);
      Mat g = rng.invertible3(f);
      Mat h = rng.invertible3(f);
      CHECK(act(f, Mat::identity(3, f), A) == A);
      CHECK(act(f, mat_mul(f, g, h), A) == act(f, g, act(f, h, A)));
    }
  }
}

TEST_CASE("trace vectors transform covariantly") {
  for (std::uint64_t p : {0ull, 3ull, 7ull}) {
    Field f = p ? Field::prime(p) : Field::rationals();
    Rng rng(17 + p);
    for (int i = 0; i < 25; ++i) {
      Msc A = rng.msc(f);
      Mat g = rng.invertible3(f);
      Mat gi = mat_inv3(f, g);
      TraceVectors before = traces(f, A);
      TraceVectors after = traces(f, act(f, g, A));
      for (int j = 0; j < 3; ++j) {
        Scalar t1 = f.zero(), t2 = f.zero();
        for (int k = 0; k < 3; ++k) {
          t1 = f.add(t1, f.mul(before.tr1[static_cast<size_t>(k)], gi.at(k, j)));
          t2 = f.add(t2, f.mul(before.tr2[static_cast<size_t>(k)], gi.at(k, j)));
        }
        CHECK(after.tr1[static_cast<size_t>(j)] == t1);
        CHECK(after.tr2[static_cast<size_t>(j)] == t2);
      }
    }
  }
}

TEST_CASE("trace formula worked example") {
  Field q = Field::rationals();
  Msc A(q);
  for (int i = 0; i < 9; ++i) A.e(0, i) = q.from_int(i + 1);
  TraceVectors t = traces(q, A);
  CHECK(t.tr1 == std::array<Scalar, 3>{q.from_int(1), q.from_int(2), q.from_int(3)});
  CHECK(t.tr2 == std::array<Scalar, 3>{q.from_int(1), q.from_int(4), q.from_int(7)});
}

TEST_CASE("expanded stabilizer action agrees with the generic action") {
  for (std::uint64_t p : {0ull, 3ull, 5ull, 2ull}) {
    Field f = p ? Field::prime(p) : Field::rationals();
    Rng rng(91 + p);
    for (int i = 0; i < 60; ++i) {
      Msc A = rng.normalized_msc(f);
      StabilizerParams s = rng.stab(f);
      Msc via_formulas = act_stabilizer(f, s, A);
      Msc via_action = act(f, stabilizer_matrix(f, s), A);
      CHECK(via_formulas == via_action);
      CHECK(is_trace_normalized(f, via_formulas));
    }
  }
}

TEST_CASE("stabilizer with identity parameters is the identity") {
  Field q = Field::rationals();
  Rng rng(5);
  Msc A = rng.normalized_msc(q);
  CHECK(act_stabilizer(q, {q.zero(), q.zero(), q.one()}, A) == A);
  CHECK_THROWS_AS(act_stabilizer(q, {q.zero(), q.zero(), q.zero()}, A), ZeroC);
}

TEST_CASE("third block third column scales by c squared") {
  for (std::uint64_t p : {0ull, 5ull}) {
    Field f = p ? Field::prime(p) : Field::rationals();
    Rng rng(7 + p);
    for (int i = 0; i < 20; ++i) {
      Msc A = rng.normalized_msc(f);
      StabilizerParams s = rng.stab(f);
      Msc B = act_stabilizer(f, s, A);
      Scalar c2 = f.mul(s.c, s.c);
      CHECK(B.alpha(9) == f.mul(c2, A.alpha(9)));
      CHECK(B.beta(9) == f.mul(c2, A.beta(9)));
      Scalar expect = f.mul(s.c, f.sub(f.sub(f.neg(f.mul(s.a, A.alpha(9))), f.mul(s.b, A.beta(9))),
                                       f.add(A.alpha(7), A.beta(8))));
      CHECK(B.gamma(9) == expect);
    }
  }
}

TEST_CASE("diag(1,1,-1) flips the documented entries of a first-family form") {
  Field q = Field::rationals();
  Rng rng(23);
  // Shape: alpha_7 = alpha_8 = 0, alpha_9 = 1, normalized.
  Msc A(q);
  for (int s : independent_slots()) A.m.a[static_cast<size_t>(s)] = rng.pick(q);
  A.e(0, 6) = q.zero();
  A.e(0, 7) = q.zero();
  A.e(0, 8) = q.one();
  fix_dependent_entries(q, A);

  Mat d = Mat::identity(3, q);
  d.at(2, 2) = q.from_int(-1);
  Msc B = act(q, d, A);

  auto N = [&](const Scalar& x) { return q.neg(x); };
  CHECK(B.alpha(1) == A.alpha(1));
  CHECK(B.alpha(2) == A.alpha(2));
  CHECK(B.alpha(3) == N(A.alpha(3)));
  CHECK(B.alpha(4) == A.alpha(4));
  CHECK(B.alpha(5) == A.alpha(5));
  CHECK(B.alpha(6) == N(A.alpha(6)));
  CHECK(B.alpha(9) == A.alpha(9));
  CHECK(B.beta(3) == N(A.beta(3)));
  CHECK(B.beta(6) == N(A.beta(6)));
  CHECK(B.beta(7) == N(A.beta(7)));
  CHECK(B.beta(8) == N(A.beta(8)));
  CHECK(B.beta(9) == A.beta(9));
  CHECK(B.gamma(1) == N(A.gamma(1)));
  CHECK(B.gamma(2) == N(A.gamma(2)));
  CHECK(B.gamma(4) == N(A.gamma(4)));
  CHECK(B.gamma(5) == N(A.gamma(5)));
  CHECK(B.gamma(9) == N(A.gamma(9)));  // -beta_8 becomes beta_8
}

TEST_CASE("product compatibility under basis change") {
  Field f = Field::prime(7);
  Rng rng(3);
  for (int i = 0; i < 25; ++i) {
    Msc A = rng.msc(f);
    Mat g = rng.invertible3(f);
    std::array<Scalar, 3> u = {rng.pick(f), rng.pick(f), rng.pick(f)};
    std::array<Scalar, 3> v = {rng.pick(f), rng.pick(f), rng.pick(f)};
    auto mv = [&](const Mat& m, const std::array<Scalar, 3>& x) {
      std::array<Scalar, 3> r = {f.zero(), f.zero(), f.zero()};
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          r[static_cast<size_t>(a)] = f.add(r[static_cast<size_t>(a)], f.mul(m.at(a, b), x[static_cast<size_t>(b)]));
      return r;
    };
    auto lhs = multiply(f, act(f, g, A), mv(g, u), mv(g, v));
    auto rhs = mv(g, multiply(f, A, u, v));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("poly ring evaluation matches scalar action") {
  Field f = Field::prime(5);
  Rng rng(31);
  for (int i = 0; i < 20; ++i) {
    Msc A = rng.normalized_msc(f);
    // Move family u |-> (a0 + a1 u, u, 1).
    Scalar a0 = rng.pick(f), a1 = rng.pick(f);
    PolyRing R{&f};
    std::array<Poly, 27> in;
    for (int k = 0; k < 27; ++k) in[static_cast<size_t>(k)] = Poly::constant(f, A.m.a[static_cast<size_t>(k)]);
    Poly a = poly_add(f, Poly::constant(f, a0), poly_mul(f, Poly::constant(f, a1), Poly::unknown(f)));
    Poly b = Poly::unknown(f);
    Poly one = Poly::constant(f, f.one());
    auto out = act_stabilizer_entries(R, a, b, one, one, in);
    Scalar u = rng.pick(f);
    StabilizerParams s{f.add(a0, f.mul(a1, u)), u, f.one()};
    Msc direct = act_stabilizer(f, s, A);
    for (int k = 0; k < 27; ++k)
      CHECK(poly_eval(f, out[static_cast<size_t>(k)], u) == direct.m.a[static_cast<size_t>(k)]);
  }
}

TEST_CASE("normalization examples") {
  Field q = Field::rationals();
  Msc A(q);
  for (int i = 0; i < 9; ++i) A.e(0, i) = q.from_int(i + 1);  // traces (1,2,3), (1,4,7)
  REQUIRE(trace_independent(q, A));
  NormalizedMsc n = normalize_traces(q, A);
  // e_1 already completes the trace rows to an invertible matrix.
  Mat expect = from_rows(q, {{1, 2, 3}, {1, 4, 7}, {1, 0, 0}});
  CHECK(n.g0.g == expect);
  CHECK(det3(q, n.g0.g) == q.from_int(2));
  CHECK(is_trace_normalized(q, n.msc));
  CHECK(act(q, n.g0.g, A) == n.msc);

  Msc zero(q);
  CHECK(!trace_independent(q, zero));
  CHECK_THROWS_AS(normalize_traces(q, zero), TraceDependent);
}

TEST_CASE("already normalized input gets the identity witness") {
  Field f = Field::prime(5);
  Rng rng(8);
  Msc A = rng.normalized_msc(f);
  NormalizedMsc n = normalize_traces(f, A);
  CHECK(n.g0.g == Mat::identity(3, f));
  CHECK(n.msc == A);
}

TEST_CASE("stabilizer moves preserve normalization") {
  for (std::uint64_t p : {2ull, 3ull}) {
    Field f = Field::prime(p);
    Rng rng(p);
    for (int i = 0; i < 30; ++i) {
      Msc A = rng.normalized_msc(f);
      StabilizerParams s = rng.stab(f);
      CHECK(is_trace_normalized(f, act_stabilizer(f, s, A)));
    }
  }
}

TEST_CASE("normalization soundness on random accepted inputs") {
  for (std::uint64_t p : {0ull, 2ull, 3ull, 7ull}) {
    Field f = p ? Field::prime(p) : Field::rationals();
    Rng rng(100 + p);
    int accepted = 0;
    for (int i = 0; i < 60 && accepted < 25; ++i) {
      Msc A = rng.msc(f);
      if (!trace_independent(f, A)) continue;
      ++accepted;
      NormalizedMsc n = normalize_traces(f, A);
      CHECK(is_trace_normalized(f, n.msc));
      CHECK(act(f, n.g0.g, A) == n.msc);
    }
    CHECK(accepted >= 10);
  }
}
