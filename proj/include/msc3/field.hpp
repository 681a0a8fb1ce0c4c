#pragma once

// Exact arithmetic in Q and in towers of quadratic extensions over Q or F_p.
//
// A Field value is an immutable handle to a tower description: the
// characteristic (0 or an odd/even prime) plus, per level i >= 1, the monic
// defining quadratic x^2 + b_i x + c_i of the level-i generator t_i over
// level i-1.  Scalars store their own level; elements with a zero top
// coefficient are demoted so that equality is plain structural equality.
//
// Operations that may need a new root (sqrt, solve_quadratic) never mutate a
// Field in place: they return the possibly extended tower alongside the root.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace msc3 {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};
struct UnsupportedField : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

struct ScalarExt;

// An exact element of the working field.  Representation:
//   level 0, char 0:  reduced fraction (BigRat)
//   level 0, char p:  residue in [0, p)
//   level n >= 1:     lo + hi * t_n with lo, hi of strictly smaller level
//                     and hi != 0 (auto-demotion keeps levels minimal).
class Scalar {
 public:
  Scalar() : v_(BigRat(0)) {}
  explicit Scalar(BigRat q) : v_(std::move(q)) {}
  explicit Scalar(std::uint64_t r) : v_(r) {}

  static Scalar ext(int level, Scalar lo, Scalar hi);

  int level() const;
  bool is_rat() const { return std::holds_alternative<BigRat>(v_); }
  bool is_res() const { return std::holds_alternative<std::uint64_t>(v_); }
  bool is_ext() const { return level() > 0; }

  const BigRat& rat() const { return std::get<BigRat>(v_); }
  std::uint64_t res() const { return std::get<std::uint64_t>(v_); }
  const Scalar& lo() const;
  const Scalar& hi() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  explicit Scalar(std::shared_ptr<const ScalarExt> e) : v_(std::move(e)) {}
  std::variant<BigRat, std::uint64_t, std::shared_ptr<const ScalarExt>> v_;
};

struct ScalarExt {
  int level = 0;
  Scalar lo, hi;
};

inline Scalar Scalar::ext(int level, Scalar lo, Scalar hi) {
  auto node = std::make_shared<ScalarExt>();
  node->level = level;
  node->lo = std::move(lo);
  node->hi = std::move(hi);
  return Scalar(std::move(node));
}
inline int Scalar::level() const {
  if (auto* e = std::get_if<std::shared_ptr<const ScalarExt>>(&v_)) return (*e)->level;
  return 0;
}
inline const Scalar& Scalar::lo() const { return std::get<std::shared_ptr<const ScalarExt>>(v_)->lo; }
inline const Scalar& Scalar::hi() const { return std::get<std::shared_ptr<const ScalarExt>>(v_)->hi; }

inline bool operator==(const Scalar& a, const Scalar& b) {
  if (a.v_.index() != b.v_.index()) return false;
  if (a.is_rat()) return a.rat() == b.rat();
  if (a.is_res()) return a.res() == b.res();
  return a.level() == b.level() && a.lo() == b.lo() && a.hi() == b.hi();
}

// Total order used for deterministic root picking: level first, then the
// representation (char 0: sign, numerator, denominator; char p: residue;
// extensions: (lo, hi) lexicographically).
inline int canonical_cmp(const Scalar& a, const Scalar& b) {
  if (a.level() != b.level()) return a.level() < b.level() ? -1 : 1;
  if (a.is_ext()) {
    if (int c = canonical_cmp(a.lo(), b.lo())) return c;
    return canonical_cmp(a.hi(), b.hi());
  }
  if (a.is_rat()) {
    const BigRat& x = a.rat();
    const BigRat& y = b.rat();
    // Nonnegative values sort before negative ones so that the preferred
    // square root of a rational square is the positive one.
    int sx = x.sign() < 0 ? 1 : 0, sy = y.sign() < 0 ? 1 : 0;
    if (sx != sy) return sx < sy ? -1 : 1;
    const BigInt nx = numerator(x), ny = numerator(y);
    if (nx != ny) return nx < ny ? -1 : 1;
    const BigInt dx = denominator(x), dy = denominator(y);
    if (dx != dy) return dx < dy ? -1 : 1;
    return 0;
  }
  if (a.res() != b.res()) return a.res() < b.res() ? -1 : 1;
  return 0;
}
inline const Scalar& canonical_min(const Scalar& a, const Scalar& b) {
  return canonical_cmp(a, b) <= 0 ? a : b;
}

// Tower description shared by all Scalars produced through one Field handle.
class Field {
 public:
  // Characteristic 0 (rationals) or prime p.
  static Field rationals() { return Field(0); }
  static Field prime(std::uint64_t p) { return Field(p); }

  explicit Field(std::uint64_t characteristic = 0)
      : data_(std::make_shared<const Data>(Data{characteristic, {}})) {
    if (characteristic != 0 && !is_prime(characteristic))
      throw UnsupportedField("characteristic must be 0 or prime");
  }

  std::uint64_t characteristic() const { return data_->p; }
  int levels() const { return static_cast<int>(data_->quads.size()); }
  // Defining quadratic x^2 + b x + c of level i (1-based).
  const std::pair<Scalar, Scalar>& quad(int i) const { return data_->quads.at(static_cast<size_t>(i - 1)); }

  bool same_tower(const Field& o) const {
    if (data_ == o.data_) return true;
    if (data_->p != o.data_->p || data_->quads.size() != o.data_->quads.size()) return false;
    for (size_t i = 0; i < data_->quads.size(); ++i)
      if (!(data_->quads[i].first == o.data_->quads[i].first &&
            data_->quads[i].second == o.data_->quads[i].second))
        return false;
    return true;
  }
  // True when o extends this tower (prefix match).
  bool prefix_of(const Field& o) const {
    if (data_->p != o.data_->p || data_->quads.size() > o.data_->quads.size()) return false;
    for (size_t i = 0; i < data_->quads.size(); ++i)
      if (!(data_->quads[i].first == o.data_->quads[i].first &&
            data_->quads[i].second == o.data_->quads[i].second))
        return false;
    return true;
  }
  // The taller of two prefix-compatible towers.
  static Field common_tower(const Field& a, const Field& b) {
    if (a.prefix_of(b)) return b;
    if (b.prefix_of(a)) return a;
    throw UnsupportedField("towers are not prefix-compatible");
  }

  // --- element construction -------------------------------------------------
  Scalar zero() const { return from_int(0); }
  Scalar one() const { return from_int(1); }
  Scalar from_int(long long n) const {
    if (data_->p == 0) return Scalar(BigRat(n));
    long long m = n % static_cast<long long>(data_->p);
    if (m < 0) m += static_cast<long long>(data_->p);
    return Scalar(static_cast<std::uint64_t>(m));
  }
  Scalar from_rat(const BigRat& q) const {
    if (data_->p == 0) return Scalar(q);
    Scalar n = from_bigint(numerator(q));
    Scalar d = from_bigint(denominator(q));
    return div(n, d);
  }
  Scalar from_bigint(const BigInt& n) const {
    if (data_->p == 0) return Scalar(BigRat(n));
    BigInt m = n % data_->p;
    if (m < 0) m += data_->p;
    return Scalar(static_cast<std::uint64_t>(m));
  }
  // Generator t_level of tower level >= 1.
  Scalar gen(int level) const {
    if (level < 1 || level > levels()) throw Error("generator level out of range");
    return Scalar::ext(level, zero(), one());
  }

  bool is_zero(const Scalar& x) const { return x == zero(); }

  // --- ring/field operations ------------------------------------------------
  Scalar add(const Scalar& a, const Scalar& b) const { return bin(a, b, Op::Add); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return bin(a, b, Op::Sub); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return bin(a, b, Op::Mul); }
  Scalar neg(const Scalar& a) const { return sub(zero(), a); }
  Scalar div(const Scalar& a, const Scalar& b) const {
    if (is_zero(b)) throw DivisionByZero();
    return mul(a, inv(b));
  }
  Scalar inv(const Scalar& x) const {
    if (is_zero(x)) throw DivisionByZero();
    if (!x.is_ext()) {
      if (x.is_rat()) return Scalar(BigRat(1) / x.rat());
      return Scalar(mod_inv(x.res(), data_->p));
    }
    // (lo + hi t)^-1 = conj / norm with conj = (lo - qb hi) - hi t and
    // norm = lo^2 - qb lo hi + qc hi^2 living strictly below this level.
    const auto& [qb, qc] = quad(x.level());
    Scalar lo = x.lo(), hi = x.hi();
    Scalar conj_lo = sub(lo, mul(qb, hi));
    Scalar conj_hi = neg(hi);
    Scalar norm = add(sub(mul(lo, lo), mul(qb, mul(lo, hi))), mul(qc, mul(hi, hi)));
    if (norm.level() >= x.level()) throw Error("norm failed to drop level");
    Scalar ninv = inv(norm);
    return make_ext(x.level(), mul(conj_lo, ninv), mul(conj_hi, ninv));
  }

  Scalar pow(Scalar base, BigInt e) const {
    Scalar r = one();
    while (e > 0) {
      if ((e & 1) != 0) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  // --- roots ------------------------------------------------------------
  // Square root; extends the tower by one level exactly when x is not a
  // square anywhere in the current tower.  Returns the canonical_cmp-minimal
  // root.  Characteristic 2 never extends (Frobenius is bijective).
  std::pair<Scalar, Field> sqrt(const Scalar& x) const {
    if (is_zero(x)) return {zero(), *this};
    if (characteristic() == 2) return {frobenius_sqrt(x), *this};
    if (auto r = try_sqrt(x, levels())) {
      Scalar other = neg(*r);
      return {canonical_min(*r, other), *this};
    }
    // Extend by a canonical generator of the square class of x, so that
    // inputs differing by square factors grow identical towers.  Level-0
    // radicands reduce to the squarefree kernel (char 0) or the least
    // non-residue (char p); deeper radicands are used as-is.
    Scalar radicand = x;
    Scalar multiplier = one();
    if (x.level() == 0) {
      if (characteristic() == 0) {
        BigInt ker = squarefree_kernel(numerator(x.rat()) * denominator(x.rat()));
        radicand = Scalar(BigRat(ker));
        auto m = try_sqrt(div(x, radicand), 0);
        if (!m) throw Error("kernel reduction failed");
        multiplier = *m;
      } else {
        std::uint64_t p = characteristic();
        std::uint64_t n = 2;
        while (try_sqrt(Scalar(n), 0).has_value()) ++n;
        radicand = Scalar(n);
        auto m = try_sqrt(div(x, radicand), 0);
        if (!m) throw Error("non-residue reduction failed");
        multiplier = *m;
      }
    }
    Field bigger = extended(zero(), neg(radicand));
    Scalar t = bigger.gen(bigger.levels());
    Scalar r = bigger.mul(multiplier, t);
    Scalar other = bigger.neg(r);
    return {canonical_min(r, other), bigger};
  }

  // Signed squarefree part: v = kernel * square.
  static BigInt squarefree_kernel(BigInt v) {
    if (v == 0) return 0;
    BigInt ker = v < 0 ? -1 : 1;
    if (v < 0) v = -v;
    for (BigInt d = 2; d * d <= v && d < 1000000; ++d) {
      if (v % d != 0) continue;
      int e = 0;
      while (v % d == 0) {
        v /= d;
        ++e;
      }
      if (e % 2) ker *= d;
    }
    if (v > 1) {
      BigInt s = boost::multiprecision::sqrt(v);
      if (s * s == v) {
        // leftover cofactor is a perfect square
      } else {
        ker *= v;
      }
    }
    return ker;
  }

  // Least root of x^2 + b x + c = 0 under canonical_cmp; the tower grows at
  // most one level.  both_roots exposes the full root pair for callers that
  // quotient over the choice.
  std::pair<Scalar, Field> solve_quadratic(const Scalar& b, const Scalar& c) const {
    auto [roots, fld] = both_roots(b, c);
    return {canonical_min(roots.first, roots.second), fld};
  }

  std::pair<std::pair<Scalar, Scalar>, Field> both_roots(const Scalar& b, const Scalar& c) const {
    if (characteristic() == 2) return both_roots_char2(b, c);
    // x = (-b +- s)/2 with s^2 = b^2 - 4c.
    Scalar disc = sub(mul(b, b), mul(from_int(4), c));
    auto [s, fld] = sqrt(disc);
    Scalar half = fld.inv(fld.from_int(2));
    Scalar r1 = fld.mul(fld.sub(s, b), half);
    Scalar r2 = fld.mul(fld.sub(fld.neg(s), b), half);
    return {{r1, r2}, fld};
  }

  // --- text encoding ----------------------------------------------------
  // level 0 char 0 -> "n" or "n/d"; level 0 char p -> decimal residue;
  // level n -> "[LO,HI]" with LO, HI written as level-(n-1) encodings, so the
  // nesting depth always equals the level.
  std::string encode(const Scalar& x) const { return encode_at(x, x.level()); }
  std::string encode_at(const Scalar& x, int level) const {
    if (level == 0) {
      if (x.is_rat()) {
        const BigRat& q = x.rat();
        std::ostringstream os;
        os << numerator(q);
        if (denominator(q) != 1) os << "/" << denominator(q);
        return os.str();
      }
      return std::to_string(x.res());
    }
    Scalar lo = x.level() == level ? x.lo() : x;
    Scalar hi = x.level() == level ? x.hi() : zero();
    return "[" + encode_at(lo, level - 1) + "," + encode_at(hi, level - 1) + "]";
  }
  Scalar decode(const std::string& s) const {
    size_t pos = 0;
    auto [r, height] = parse(s, pos);
    if (pos != s.size()) throw ParseError("trailing characters in scalar: " + s);
    if (height > levels()) throw ParseError("scalar level exceeds tower height");
    return r;
  }

  // Appends one level with defining quadratic x^2 + b x + c (coefficients at
  // the current top level or below).  Existing levels are never touched.
  Field extended(Scalar b, Scalar c) const {
    auto nd = std::make_shared<Data>(*data_);
    nd->quads.emplace_back(std::move(b), std::move(c));
    Field f;
    f.data_ = std::move(nd);
    return f;
  }

  static bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

 private:
  struct Data {
    std::uint64_t p = 0;
    std::vector<std::pair<Scalar, Scalar>> quads;
  };
  std::shared_ptr<const Data> data_;

  enum class Op { Add, Sub, Mul };

  static Scalar make_ext(int level, Scalar lo, Scalar hi) {
    if (hi == Scalar(BigRat(0)) || (hi.is_res() && hi.res() == 0)) return lo;
    return Scalar::ext(level, std::move(lo), std::move(hi));
  }

  Scalar bin(const Scalar& a, const Scalar& b, Op op) const {
    int lvl = std::max(a.level(), b.level());
    if (lvl == 0) {
      if (data_->p == 0) {
        const BigRat &x = a.rat(), &y = b.rat();
        switch (op) {
          case Op::Add: return Scalar(BigRat(x + y));
          case Op::Sub: return Scalar(BigRat(x - y));
          case Op::Mul: return Scalar(BigRat(x * y));
        }
      }
      std::uint64_t p = data_->p, x = a.res(), y = b.res();
      switch (op) {
        case Op::Add: return Scalar((x + y) % p);
        case Op::Sub: return Scalar((x + p - y) % p);
        case Op::Mul: return Scalar(mod_mul(x, y, p));
      }
    }
    Scalar alo = a.level() == lvl ? a.lo() : a;
    Scalar ahi = a.level() == lvl ? a.hi() : zero();
    Scalar blo = b.level() == lvl ? b.lo() : b;
    Scalar bhi = b.level() == lvl ? b.hi() : zero();
    switch (op) {
      case Op::Add: return make_ext(lvl, add(alo, blo), add(ahi, bhi));
      case Op::Sub: return make_ext(lvl, sub(alo, blo), sub(ahi, bhi));
      case Op::Mul: {
        // (alo + ahi t)(blo + bhi t) with t^2 = -qb t - qc.
        const auto& [qb, qc] = quad(lvl);
        Scalar cross = add(mul(alo, bhi), mul(ahi, blo));
        Scalar hh = mul(ahi, bhi);
        Scalar lo = sub(mul(alo, blo), mul(qc, hh));
        Scalar hi = sub(cross, mul(qb, hh));
        return make_ext(lvl, lo, hi);
      }
    }
    throw Error("unreachable");
  }

  static std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
  }
  static std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
    // Extended Euclid.
    long long t = 0, nt = 1;
    long long r = static_cast<long long>(p), nr = static_cast<long long>(a % p);
    while (nr != 0) {
      long long q = r / nr;
      std::swap(t -= q * nt, nt);
      std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw Error("not invertible");
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<std::uint64_t>(t);
  }

  // Recursive square-root search inside the existing tower (char != 2).
  // Levels here are t^2 = d extensions (qb = 0) for levels created by sqrt;
  // generic (qb, qc) levels are handled by completing the square.
  std::optional<Scalar> try_sqrt(const Scalar& x, int lvl) const {
    if (is_zero(x)) return zero();
    if (lvl == 0) {
      if (x.level() > 0) throw Error("level mismatch in try_sqrt");
      if (data_->p == 0) {
        const BigRat& q = x.rat();
        if (q.sign() < 0) return std::nullopt;
        BigInt n = numerator(q), d = denominator(q);
        BigInt sn = boost::multiprecision::sqrt(n), sd = boost::multiprecision::sqrt(d);
        if (sn * sn == n && sd * sd == d) return Scalar(BigRat(sn) / BigRat(sd));
        return std::nullopt;
      }
      std::uint64_t p = data_->p, r = x.res();
      for (std::uint64_t i = 0; i <= p / 2; ++i)
        if (mod_mul(i, i, p) == r) return Scalar(i);
      return std::nullopt;
    }
    if (x.level() < lvl) return try_sqrt_lift(x, lvl);
    // x = u + v t at level lvl, t^2 = -qb t - qc; char != 2 lets us reduce to
    // the shifted generator s = t + qb/2 with s^2 = qb^2/4 - qc =: d.
    const auto& [qb, qc] = quad(lvl);
    Scalar half = inv(from_int(2));
    Scalar shift = mul(qb, half);
    Scalar d = sub(mul(shift, shift), qc);
    Scalar v = x.hi();
    Scalar u = add(x.lo(), mul(v, shift));  // x = u + v s
    if (is_zero(v)) return try_sqrt_lift(u, lvl);
    // (p0 + q0 s)^2 = x needs w = u^2 - v^2 d to be a square below.
    Scalar w = sub(mul(u, u), mul(d, mul(v, v)));
    auto s_root = try_sqrt(w, lvl - 1);
    if (!s_root) return std::nullopt;
    for (int sign = 0; sign < 2; ++sign) {
      Scalar s = sign ? neg(*s_root) : *s_root;
      Scalar cap = mul(add(u, s), half);
      auto p0 = try_sqrt(cap, lvl - 1);
      if (!p0 || is_zero(*p0)) continue;
      Scalar q0 = mul(v, inv(mul(from_int(2), *p0)));
      Scalar cand_lo = sub(*p0, mul(q0, shift));
      Scalar cand = make_ext(lvl, cand_lo, q0);  // p0 + q0 s = cand_lo + q0 t
      if (mul(cand, cand) == x) return cand;
    }
    return std::nullopt;
  }
  // x already lives below lvl: a root may still involve the level-lvl
  // generator (u = (r t)^2 = r^2 d).
  std::optional<Scalar> try_sqrt_lift(const Scalar& x, int lvl) const {
    if (auto r = try_sqrt(x, lvl - 1)) return r;
    const auto& [qb, qc] = quad(lvl);
    Scalar half = inv(from_int(2));
    Scalar shift = mul(qb, half);
    Scalar d = sub(mul(shift, shift), qc);
    if (is_zero(d)) return std::nullopt;
    if (auto r = try_sqrt(div(x, d), lvl - 1)) {
      // (r s)^2 = x with s = t + shift.
      Scalar lo = mul(*r, shift);
      return make_ext(lvl, lo, *r);
    }
    return std::nullopt;
  }

  // Characteristic 2: x -> x^2 is bijective; sqrt(x) = x^(2^(D-1)) with
  // D = 2^levels the absolute degree over F_2.
  Scalar frobenius_sqrt(const Scalar& x) const {
    Scalar r = x;
    int squarings = (1 << levels()) - 1;
    for (int i = 0; i < squarings; ++i) r = mul(r, r);
    return r;
  }

  std::pair<std::pair<Scalar, Scalar>, Field> both_roots_char2(const Scalar& b, const Scalar& c) const {
    if (characteristic() != 2) throw UnsupportedField("char-2 quadratic path misused");
    if (is_zero(b)) {
      Scalar r = frobenius_sqrt(c);  // x^2 = c exactly once
      return {{r, r}, *this};
    }
    // y^2 + y = e with y = x/b, e = c/b^2 (Artin-Schreier).
    Scalar binv = inv(b);
    Scalar e = mul(c, mul(binv, binv));
    if (auto y = artin_schreier_root(e)) {
      Scalar r1 = mul(b, *y);
      Scalar r2 = add(r1, b);
      return {{r1, r2}, *this};
    }
    Field bigger = extended(one(), e);
    Scalar t = bigger.gen(bigger.levels());
    Scalar r1 = bigger.mul(b, t);
    Scalar r2 = bigger.add(r1, b);
    return {{r1, r2}, bigger};
  }

  // Solve y^2 + y = e inside the current tower via F_2-linear algebra on the
  // product basis of the generators.
  std::optional<Scalar> artin_schreier_root(const Scalar& e) const {
    int D = 1 << levels();
    std::vector<Scalar> basis(static_cast<size_t>(D));
    basis[0] = one();
    int filled = 1;
    for (int l = 1; l <= levels(); ++l) {
      Scalar t = gen(l);
      for (int i = 0; i < filled; ++i) basis[static_cast<size_t>(filled + i)] = mul(basis[static_cast<size_t>(i)], t);
      filled *= 2;
    }
    // Column j of the map y -> y^2 + y.
    std::vector<std::vector<bool>> M(static_cast<size_t>(D), std::vector<bool>(static_cast<size_t>(D + 1), false));
    for (int j = 0; j < D; ++j) {
      Scalar img = add(mul(basis[static_cast<size_t>(j)], basis[static_cast<size_t>(j)]), basis[static_cast<size_t>(j)]);
      std::vector<bool> col(static_cast<size_t>(D), false);
      coords_char2(img, levels(), col, 0);
      for (int i = 0; i < D; ++i) M[static_cast<size_t>(i)][static_cast<size_t>(j)] = col[static_cast<size_t>(i)];
    }
    std::vector<bool> rhs(static_cast<size_t>(D), false);
    coords_char2(e, levels(), rhs, 0);
    for (int i = 0; i < D; ++i) M[static_cast<size_t>(i)][static_cast<size_t>(D)] = rhs[static_cast<size_t>(i)];
    // Gauss over F_2.
    std::vector<int> pivot_col(static_cast<size_t>(D), -1);
    int row = 0;
    for (int col = 0; col < D && row < D; ++col) {
      int pr = -1;
      for (int i = row; i < D; ++i)
        if (M[static_cast<size_t>(i)][static_cast<size_t>(col)]) { pr = i; break; }
      if (pr < 0) continue;
      std::swap(M[static_cast<size_t>(pr)], M[static_cast<size_t>(row)]);
      for (int i = 0; i < D; ++i) {
        if (i != row && M[static_cast<size_t>(i)][static_cast<size_t>(col)]) {
          for (int k = col; k <= D; ++k)
            M[static_cast<size_t>(i)][static_cast<size_t>(k)] =
                M[static_cast<size_t>(i)][static_cast<size_t>(k)] ^ M[static_cast<size_t>(row)][static_cast<size_t>(k)];
        }
      }
      pivot_col[static_cast<size_t>(row)] = col;
      ++row;
    }
    for (int i = row; i < D; ++i)
      if (M[static_cast<size_t>(i)][static_cast<size_t>(D)]) return std::nullopt;
    Scalar y = zero();
    for (int i = 0; i < row; ++i)
      if (M[static_cast<size_t>(i)][static_cast<size_t>(D)]) y = add(y, basis[static_cast<size_t>(pivot_col[static_cast<size_t>(i)])]);
    return y;
  }

  void coords_char2(const Scalar& x, int lvl, std::vector<bool>& out, int offset) const {
    if (lvl == 0) {
      out[static_cast<size_t>(offset)] = !is_zero(x);
      return;
    }
    Scalar lo = x.level() == lvl ? x.lo() : x;
    Scalar hi = x.level() == lvl ? x.hi() : zero();
    coords_char2(lo, lvl - 1, out, offset);
    coords_char2(hi, lvl - 1, out, offset + (1 << (lvl - 1)));
  }

  // Returns the value together with its syntactic nesting depth; the encoder
  // pads every component to full depth, so depth alone determines the level.
  std::pair<Scalar, int> parse(const std::string& s, size_t& pos) const {
    if (pos >= s.size()) throw ParseError("empty scalar");
    if (s[pos] == '[') {
      ++pos;
      auto [lo, hlo] = parse(s, pos);
      if (pos >= s.size() || s[pos] != ',') throw ParseError("expected ',' in scalar");
      ++pos;
      auto [hi, hhi] = parse(s, pos);
      if (pos >= s.size() || s[pos] != ']') throw ParseError("expected ']' in scalar");
      ++pos;
      if (hlo != hhi) throw ParseError("ragged nesting in scalar");
      return {make_ext(hlo + 1, lo, hi), hlo + 1};
    }
    size_t start = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '-' || s[pos] == '/')) ++pos;
    std::string tok = s.substr(start, pos - start);
    if (tok.empty()) throw ParseError("bad scalar literal");
    if (data_->p == 0) {
      if (tok.back() == '/' || tok.find("//") != std::string::npos) throw ParseError("bad rational literal: " + tok);
      try {
        return {Scalar(BigRat(tok)), 0};
      } catch (...) {
        throw ParseError("bad rational literal: " + tok);
      }
    }
    if (tok.find('/') != std::string::npos || tok.find('-') != std::string::npos)
      throw ParseError("residue literal must be a plain decimal: " + tok);
    BigInt n(tok);
    if (n < 0 || n >= BigInt(data_->p)) throw ParseError("residue out of range: " + tok);
    return {Scalar(static_cast<std::uint64_t>(n)), 0};
  }
};

// Mutable convenience wrapper: one classification run owns one Tower and lets
// root extraction grow it in place.
class Tower {
 public:
  explicit Tower(Field f) : f_(std::move(f)) {}
  const Field& field() const { return f_; }
  Field& field() { return f_; }

  Scalar sqrt(const Scalar& x) {
    auto [r, nf] = f_.sqrt(x);
    f_ = nf;
    return r;
  }
  Scalar solve_quadratic(const Scalar& b, const Scalar& c) {
    auto [r, nf] = f_.solve_quadratic(b, c);
    f_ = nf;
    return r;
  }
  std::pair<Scalar, Scalar> both_roots(const Scalar& b, const Scalar& c) {
    auto [rs, nf] = f_.both_roots(b, c);
    f_ = nf;
    return rs;
  }

 private:
  Field f_;
};

}  // namespace msc3
