#pragma once

// Reduction of a structure-constant matrix with independent trace vectors to
// the stratum Tr1 = (1,0,0), Tr2 = (0,1,0).

#include "msc3/matrix.hpp"

namespace msc3 {

struct TraceDependent : Error {
  TraceDependent() : Error("trace vectors are linearly dependent") {}
};

struct NormalizedMsc {
  Msc msc;
  BasisChange g0;  // act(g0, original) == msc
};

inline bool trace_independent(const Field& f, const Msc& A) {
  TraceVectors t = traces(f, A);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      Scalar minor = f.sub(f.mul(t.tr1[static_cast<size_t>(i)], t.tr2[static_cast<size_t>(j)]),
                           f.mul(t.tr1[static_cast<size_t>(j)], t.tr2[static_cast<size_t>(i)]));
      if (!f.is_zero(minor)) return true;
    }
  return false;
}

// g has rows Tr1(A), Tr2(A) and the least-index standard basis row making the
// determinant nonzero; then Tr_i(act(g, A)) = Tr_i(A) g^-1 = e_i.
inline NormalizedMsc normalize_traces(const Field& f, const Msc& A) {
  if (!trace_independent(f, A)) throw TraceDependent();
  TraceVectors t = traces(f, A);
  for (int j = 0; j < 3; ++j) {
    Mat g(3, 3, f);
    for (int c = 0; c < 3; ++c) {
      g.at(0, c) = t.tr1[static_cast<size_t>(c)];
      g.at(1, c) = t.tr2[static_cast<size_t>(c)];
    }
    g.at(2, j) = f.one();
    if (f.is_zero(det3(f, g))) continue;
    NormalizedMsc n;
    n.g0.g = g;
    n.msc = act(f, g, A);
    return n;
  }
  throw TraceDependent();  // unreachable when the rank-2 test passed
}

// Indices (into the 27-slot row-major layout) of the 21 entries that remain
// free on the normalized stratum, in display order.
inline const std::array<int, 21>& independent_slots() {
  static const std::array<int, 21> s = {0, 1, 2,  3,  4,  5,  6,  7,  8,   // alpha_1..alpha_9
                                        9, 10, 11, 12, 13, 15, 16, 17,     // beta_1..beta_5, beta_7..beta_9
                                        18, 19, 21, 22};                   // gamma_1, gamma_2, gamma_4, gamma_5
  return s;
}

// Recomputes the six entries the normalization determines:
//   beta_6 = alpha_7 + beta_8 - alpha_3,    gamma_3 = -alpha_1 - beta_2,
//   gamma_6 = 1 - alpha_4 - beta_5,         gamma_7 = 1 - alpha_1 - beta_4,
//   gamma_8 = -alpha_2 - beta_5,            gamma_9 = -alpha_7 - beta_8.
inline void fix_dependent_entries(const Field& f, Msc& A) {
  A.e(1, 5) = f.sub(f.add(A.e(0, 6), A.e(1, 7)), A.e(0, 2));
  A.e(2, 2) = f.neg(f.add(A.e(0, 0), A.e(1, 1)));
  A.e(2, 5) = f.sub(f.one(), f.add(A.e(0, 3), A.e(1, 4)));
  A.e(2, 6) = f.sub(f.one(), f.add(A.e(0, 0), A.e(1, 3)));
  A.e(2, 7) = f.neg(f.add(A.e(0, 1), A.e(1, 4)));
  A.e(2, 8) = f.neg(f.add(A.e(0, 6), A.e(1, 7)));
}

inline bool is_trace_normalized(const Field& f, const Msc& A) {
  TraceVectors t = traces(f, A);
  return t.tr1[0] == f.one() && f.is_zero(t.tr1[1]) && f.is_zero(t.tr1[2]) &&
         f.is_zero(t.tr2[0]) && t.tr2[1] == f.one() && f.is_zero(t.tr2[2]);
}

}  // namespace msc3
