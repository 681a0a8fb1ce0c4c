#pragma once

// Row vectors and rank tests driving the final dispatch (the stratum where
// both upper blocks of columns 3,6,7,8,9 vanish).  There the residual moves
// act on (gamma_1, gamma_2, gamma_4, gamma_5) alone:
//
//   gamma' = c^-1 (gamma - M (a, b)^T)
//
// with M the 4x2 matrix of rows
//   1: (3a1 + b2 + b4 - 1,  b1)
//   2: (2a2 + b5,           a1 + 2b2)
//   3: (2a4 + b5 - 1,       a1 + 2b4 - 1)
//   4: (a5,                 a2 + a4 + 3b5 - 1)
// computed here from scratch on every call, never cached across moves.

#include "msc3/matrix.hpp"

#include <array>
#include <optional>
#include <vector>

namespace msc3 {

using RankRow = std::array<Scalar, 2>;

inline std::array<RankRow, 4> rank_rows(const Field& f, const Msc& A) {
  auto a = [&](int i) { return A.alpha(i); };
  auto b = [&](int i) { return A.beta(i); };
  Scalar one = f.one(), two = f.from_int(2), three = f.from_int(3);
  std::array<RankRow, 4> r;
  r[0] = {f.sub(f.add(f.add(f.mul(three, a(1)), b(2)), b(4)), one), b(1)};
  r[1] = {f.add(f.mul(two, a(2)), b(5)), f.add(a(1), f.mul(two, b(2)))};
  r[2] = {f.sub(f.add(f.mul(two, a(4)), b(5)), one), f.sub(f.add(a(1), f.mul(two, b(4))), one)};
  r[3] = {a(5), f.sub(f.add(f.add(a(2), a(4)), f.mul(three, b(5))), one)};
  return r;
}

// (gamma_1, gamma_2, gamma_4, gamma_5).
inline std::array<Scalar, 4> gamma_vector(const Field& f, const Msc& A) {
  (void)f;
  return {A.gamma(1), A.gamma(2), A.gamma(4), A.gamma(5)};
}

// lambda x row_i + mu x row_j.
inline RankRow combine_rows(const Field& f, const Scalar& lambda, const RankRow& ri, const Scalar& mu,
                            const RankRow& rj) {
  return {f.add(f.mul(lambda, ri[0]), f.mul(mu, rj[0])), f.add(f.mul(lambda, ri[1]), f.mul(mu, rj[1]))};
}

inline int rank(const Field& f, std::vector<std::vector<Scalar>> m) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  int rk = 0;
  for (int c = 0; c < cols && rk < rows; ++c) {
    int pivot = -1;
    for (int r = rk; r < rows; ++r)
      if (!f.is_zero(m[static_cast<size_t>(r)][static_cast<size_t>(c)])) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(m[static_cast<size_t>(pivot)], m[static_cast<size_t>(rk)]);
    Scalar inv = f.inv(m[static_cast<size_t>(rk)][static_cast<size_t>(c)]);
    for (int r = rk + 1; r < rows; ++r) {
      Scalar factor = f.mul(m[static_cast<size_t>(r)][static_cast<size_t>(c)], inv);
      if (f.is_zero(factor)) continue;
      for (int k = c; k < cols; ++k)
        m[static_cast<size_t>(r)][static_cast<size_t>(k)] =
            f.sub(m[static_cast<size_t>(r)][static_cast<size_t>(k)],
                  f.mul(factor, m[static_cast<size_t>(rk)][static_cast<size_t>(k)]));
    }
    ++rk;
  }
  return rk;
}

// Rank of M restricted to `subset` (1-based row labels), optionally extended
// by the matching gamma entries.
inline int rank_rows_subset(const Field& f, const std::array<RankRow, 4>& rows,
                            const std::vector<int>& subset) {
  std::vector<std::vector<Scalar>> m;
  for (int i : subset) m.push_back({rows[static_cast<size_t>(i - 1)][0], rows[static_cast<size_t>(i - 1)][1]});
  return rank(f, m);
}
inline int rank_rows_subset_primed(const Field& f, const std::array<RankRow, 4>& rows,
                                   const std::array<Scalar, 4>& g, const std::vector<int>& subset) {
  std::vector<std::vector<Scalar>> m;
  for (int i : subset)
    m.push_back({rows[static_cast<size_t>(i - 1)][0], rows[static_cast<size_t>(i - 1)][1], g[static_cast<size_t>(i - 1)]});
  return rank(f, m);
}

// Solves M_subset v = gamma_subset exactly.  Returns the reduced-echelon
// particular solution (free coordinates zero) or nullopt.
inline std::optional<std::array<Scalar, 2>> solve_subset(const Field& f, const std::array<RankRow, 4>& rows,
                                                         const std::array<Scalar, 4>& g,
                                                         const std::vector<int>& subset) {
  if (subset.empty()) return std::array<Scalar, 2>{f.zero(), f.zero()};
  std::vector<std::vector<Scalar>> m;
  for (int i : subset)
    m.push_back({rows[static_cast<size_t>(i - 1)][0], rows[static_cast<size_t>(i - 1)][1], g[static_cast<size_t>(i - 1)]});
  int nr = static_cast<int>(m.size());
  int lead[2] = {-1, -1};
  int rk = 0;
  for (int c = 0; c < 2 && rk < nr; ++c) {
    int pivot = -1;
    for (int r = rk; r < nr; ++r)
      if (!f.is_zero(m[static_cast<size_t>(r)][static_cast<size_t>(c)])) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(m[static_cast<size_t>(pivot)], m[static_cast<size_t>(rk)]);
    Scalar inv = f.inv(m[static_cast<size_t>(rk)][static_cast<size_t>(c)]);
    for (int k = 0; k < 3; ++k) m[static_cast<size_t>(rk)][static_cast<size_t>(k)] = f.mul(m[static_cast<size_t>(rk)][static_cast<size_t>(k)], inv);
    for (int r = 0; r < nr; ++r) {
      if (r == rk) continue;
      Scalar factor = m[static_cast<size_t>(r)][static_cast<size_t>(c)];
      if (f.is_zero(factor)) continue;
      for (int k = 0; k < 3; ++k)
        m[static_cast<size_t>(r)][static_cast<size_t>(k)] =
            f.sub(m[static_cast<size_t>(r)][static_cast<size_t>(k)], f.mul(factor, m[static_cast<size_t>(rk)][static_cast<size_t>(k)]));
    }
    lead[rk] = c;
    ++rk;
  }
  for (int r = rk; r < nr; ++r)
    if (!f.is_zero(m[static_cast<size_t>(r)][2])) return std::nullopt;
  std::array<Scalar, 2> v = {f.zero(), f.zero()};
  for (int r = 0; r < rk; ++r) v[static_cast<size_t>(lead[r])] = m[static_cast<size_t>(r)][2];
  return v;
}

}  // namespace msc3
