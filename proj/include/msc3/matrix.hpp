#pragma once

// 3x9 matrices of structure constants, the Kronecker product, the change of
// basis action A -> g A (g^-1 tensor g^-1), and the trace vectors.
//
// Conventions.  Column j of the 3x9 matrix holds the coordinates of
// e_i . e_k for (i,k) enumerated row-major: (1,1),(1,2),(1,3),(2,1),...,(3,3).
// Row 1 entries are written alpha_1..alpha_9, row 2 beta_1..beta_9 and row 3
// gamma_1..gamma_9; blocks B1/B2/B3 are the three consecutive 3x3 column
// slices.

#include "msc3/field.hpp"
#include "msc3/poly.hpp"

#include <array>
#include <vector>

namespace msc3 {

struct SingularMatrix : Error {
  SingularMatrix() : Error("basis change must be invertible") {}
};
struct ZeroC : Error {
  ZeroC() : Error("stabilizer parameter c must be nonzero") {}
};

// Generic small dense matrix over Scalar.
struct Mat {
  int rows = 0, cols = 0;
  std::vector<Scalar> a;

  Mat() = default;
  Mat(int r, int c, const Field& f) : rows(r), cols(c), a(static_cast<size_t>(r * c), f.zero()) {}
  Scalar& at(int r, int c) { return a[static_cast<size_t>(r * cols + c)]; }
  const Scalar& at(int r, int c) const { return a[static_cast<size_t>(r * cols + c)]; }

  static Mat identity(int n, const Field& f) {
    Mat m(n, n, f);
    for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
  }
  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
  friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }
};

inline Mat mat_mul(const Field& f, const Mat& x, const Mat& y) {
  if (x.cols != y.rows) throw Error("matrix shape mismatch");
  Mat r(x.rows, y.cols, f);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Scalar& xv = x.at(i, k);
      if (f.is_zero(xv)) continue;
      for (int j = 0; j < y.cols; ++j)
        r.at(i, j) = f.add(r.at(i, j), f.mul(xv, y.at(k, j)));
    }
  return r;
}

inline Mat mat_add(const Field& f, const Mat& x, const Mat& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw Error("matrix shape mismatch");
  Mat r(x.rows, x.cols, f);
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = f.add(x.a[i], y.a[i]);
  return r;
}

inline Mat mat_scale(const Field& f, const Scalar& s, const Mat& x) {
  Mat r = x;
  for (auto& v : r.a) v = f.mul(s, v);
  return r;
}

// Kronecker product: block matrix (x_ij * y).
inline Mat kron(const Field& f, const Mat& x, const Mat& y) {
  Mat r(x.rows * y.rows, x.cols * y.cols, f);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) {
      const Scalar& v = x.at(i, j);
      if (f.is_zero(v)) continue;
      for (int p = 0; p < y.rows; ++p)
        for (int q = 0; q < y.cols; ++q)
          r.at(i * y.rows + p, j * y.cols + q) = f.mul(v, y.at(p, q));
    }
  return r;
}

inline Scalar det3(const Field& f, const Mat& g) {
  auto m = [&](int r, int c) { return g.at(r, c); };
  Scalar d = f.zero();
  d = f.add(d, f.mul(m(0, 0), f.sub(f.mul(m(1, 1), m(2, 2)), f.mul(m(1, 2), m(2, 1)))));
  d = f.sub(d, f.mul(m(0, 1), f.sub(f.mul(m(1, 0), m(2, 2)), f.mul(m(1, 2), m(2, 0)))));
  d = f.add(d, f.mul(m(0, 2), f.sub(f.mul(m(1, 0), m(2, 1)), f.mul(m(1, 1), m(2, 0)))));
  return d;
}

// Exact inverse by adjugate; throws SingularMatrix.
inline Mat mat_inv3(const Field& f, const Mat& g) {
  Scalar d = det3(f, g);
  if (f.is_zero(d)) throw SingularMatrix();
  Scalar di = f.inv(d);
  Mat r(3, 3, f);
  auto m = [&](int rr, int cc) { return g.at(rr, cc); };
  auto cof = [&](int rr, int cc) {
    int r1 = (rr + 1) % 3, r2 = (rr + 2) % 3, c1 = (cc + 1) % 3, c2 = (cc + 2) % 3;
    return f.sub(f.mul(m(r1, c1), m(r2, c2)), f.mul(m(r1, c2), m(r2, c1)));
  };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.at(i, j) = f.mul(di, cof(j, i));
  return r;
}

// --- structure constants ----------------------------------------------------

struct Msc {
  Mat m;  // 3x9

  Msc() = default;
  explicit Msc(const Field& f) : m(3, 9, f) {}

  const Scalar& e(int row, int col) const { return m.at(row, col); }
  Scalar& e(int row, int col) { return m.at(row, col); }
  // 1-based accessors following the alpha/beta/gamma naming.
  const Scalar& alpha(int i) const { return m.at(0, i - 1); }
  const Scalar& beta(int i) const { return m.at(1, i - 1); }
  const Scalar& gamma(int i) const { return m.at(2, i - 1); }

  Mat block(const Field& f, int k) const {  // k = 1, 2, 3
    Mat b(3, 3, f);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) b.at(r, c) = m.at(r, (k - 1) * 3 + c);
    return b;
  }
  friend bool operator==(const Msc& x, const Msc& y) { return x.m == y.m; }
  friend bool operator!=(const Msc& x, const Msc& y) { return !(x == y); }
};

struct BasisChange {
  Mat g;  // 3x3, invertible
};

struct StabilizerParams {
  Scalar a, b, c;  // c != 0
};

struct TraceVectors {
  std::array<Scalar, 3> tr1, tr2;
};

// Tr1 = (a1+b4+g7, a2+b5+g8, a3+b6+g9), Tr2 = (a1+b2+g3, a4+b5+g6, a7+b8+g9).
inline TraceVectors traces(const Field& f, const Msc& A) {
  TraceVectors t;
  for (int j = 0; j < 3; ++j) {
    t.tr1[static_cast<size_t>(j)] =
        f.add(f.add(A.e(0, j), A.e(1, 3 + j)), A.e(2, 6 + j));
    t.tr2[static_cast<size_t>(j)] =
        f.add(f.add(A.e(0, 3 * j), A.e(1, 3 * j + 1)), A.e(2, 3 * j + 2));
  }
  return t;
}

// u.v = A (u tensor v); u, v are column coordinate 3-vectors.
inline std::array<Scalar, 3> multiply(const Field& f, const Msc& A, const std::array<Scalar, 3>& u,
                                      const std::array<Scalar, 3>& v) {
  std::array<Scalar, 3> r = {f.zero(), f.zero(), f.zero()};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Scalar uv = f.mul(u[static_cast<size_t>(i)], v[static_cast<size_t>(j)]);
      if (f.is_zero(uv)) continue;
      int col = 3 * i + j;
      for (int k = 0; k < 3; ++k) r[static_cast<size_t>(k)] = f.add(r[static_cast<size_t>(k)], f.mul(A.e(k, col), uv));
    }
  return r;
}

// A' = g A (g^-1 tensor g^-1).
inline Msc act(const Field& f, const Mat& g, const Msc& A) {
  Mat gi = mat_inv3(f, g);  // throws SingularMatrix
  Msc r(f);
  r.m = mat_mul(f, g, mat_mul(f, A.m, kron(f, gi, gi)));
  return r;
}
inline Msc act(const Field& f, const BasisChange& g, const Msc& A) { return act(f, g.g, A); }

// The g with g^-1 = [[1,0,0],[0,1,0],[a,b,c]].
inline Mat stabilizer_matrix(const Field& f, const StabilizerParams& p) {
  if (f.is_zero(p.c)) throw ZeroC();
  Mat g = Mat::identity(3, f);
  Scalar ci = f.inv(p.c);
  g.at(2, 0) = f.neg(f.mul(p.a, ci));
  g.at(2, 1) = f.neg(f.mul(p.b, ci));
  g.at(2, 2) = ci;
  return g;
}
inline Mat stabilizer_matrix_inv(const Field& f, const StabilizerParams& p) {
  if (f.is_zero(p.c)) throw ZeroC();
  Mat gi = Mat::identity(3, f);
  gi.at(2, 0) = p.a;
  gi.at(2, 1) = p.b;
  gi.at(2, 2) = p.c;
  return gi;
}

// Expanded column formulas for the stabilizer action, written once over a
// generic coefficient ring so the classifier can run them over polynomials in
// a residual move parameter.  Requires c * c_inv = 1.
//
// For X = B1 + a B3 (resp. B2 + b B3, B3) the conjugate g X g^-1 has columns
//   1: (x1 + a x3, y1 + a y3, c_inv (z1 + a z3 - a (x1 + a x3) - b (y1 + a y3)))
//   2: (x2 + b x3, y2 + b y3, c_inv (z2 + b z3 - a (x2 + b x3) - b (y2 + b y3)))
//   3: (c x3, c y3, z3 - a x3 - b y3)
// and the third block is additionally scaled by c.
template <class Ring>
std::array<typename Ring::Elem, 27> act_stabilizer_entries(const Ring& R,
                                                           const typename Ring::Elem& a,
                                                           const typename Ring::Elem& b,
                                                           const typename Ring::Elem& c,
                                                           const typename Ring::Elem& c_inv,
                                                           const std::array<typename Ring::Elem, 27>& m) {
  using E = typename Ring::Elem;
  auto at = [&](int row, int col) -> const E& { return m[static_cast<size_t>(row * 9 + col)]; };
  std::array<E, 27> out;
  for (int blk = 0; blk < 3; ++blk) {
    // X = B_{blk+1} + s B3 with s = a, b, 0.
    const E* s = blk == 0 ? &a : (blk == 1 ? &b : nullptr);
    E X[3][3];
    for (int r = 0; r < 3; ++r)
      for (int j = 0; j < 3; ++j) {
        E v = at(r, blk * 3 + j);
        if (s) v = R.add(v, R.mul(*s, at(r, 6 + j)));
        X[r][j] = v;
      }
    E col1x = R.add(X[0][0], R.mul(a, X[0][2]));
    E col1y = R.add(X[1][0], R.mul(a, X[1][2]));
    E col1z = R.mul(c_inv, R.sub(R.sub(R.add(X[2][0], R.mul(a, X[2][2])), R.mul(a, col1x)), R.mul(b, col1y)));
    E col2x = R.add(X[0][1], R.mul(b, X[0][2]));
    E col2y = R.add(X[1][1], R.mul(b, X[1][2]));
    E col2z = R.mul(c_inv, R.sub(R.sub(R.add(X[2][1], R.mul(b, X[2][2])), R.mul(a, col2x)), R.mul(b, col2y)));
    E col3x = R.mul(c, X[0][2]);
    E col3y = R.mul(c, X[1][2]);
    E col3z = R.sub(R.sub(X[2][2], R.mul(a, X[0][2])), R.mul(b, X[1][2]));
    std::array<E, 9> blkout = {col1x, col2x, col3x, col1y, col2y, col3y, col1z, col2z, col3z};
    if (blk == 2)
      for (auto& v : blkout) v = R.mul(c, v);
    for (int r = 0; r < 3; ++r)
      for (int j = 0; j < 3; ++j) out[static_cast<size_t>(r * 9 + blk * 3 + j)] = blkout[static_cast<size_t>(r * 3 + j)];
  }
  return out;
}

struct ScalarRing {
  const Field* f;
  using Elem = Scalar;
  Scalar add(const Scalar& x, const Scalar& y) const { return f->add(x, y); }
  Scalar sub(const Scalar& x, const Scalar& y) const { return f->sub(x, y); }
  Scalar mul(const Scalar& x, const Scalar& y) const { return f->mul(x, y); }
};

struct PolyRing {
  const Field* f;
  using Elem = Poly;
  Poly add(const Poly& x, const Poly& y) const { return poly_add(*f, x, y); }
  Poly sub(const Poly& x, const Poly& y) const { return poly_sub(*f, x, y); }
  Poly mul(const Poly& x, const Poly& y) const { return poly_mul(*f, x, y); }
};

// act(g, A) for the stabilizer element determined by p, via the expanded
// column formulas.  The input is expected to be trace-normalized.
inline Msc act_stabilizer(const Field& f, const StabilizerParams& p, const Msc& A) {
  if (f.is_zero(p.c)) throw ZeroC();
  ScalarRing R{&f};
  std::array<Scalar, 27> in;
  for (int i = 0; i < 27; ++i) in[static_cast<size_t>(i)] = A.m.a[static_cast<size_t>(i)];
  auto out = act_stabilizer_entries(R, p.a, p.b, p.c, f.inv(p.c), in);
  Msc r(f);
  for (int i = 0; i < 27; ++i) r.m.a[static_cast<size_t>(i)] = out[static_cast<size_t>(i)];
  return r;
}

}  // namespace msc3
