#pragma once

// Brute-force isomorphism search over small prime fields and the sampling
// census.  This is the ground truth the classifiers are validated against:
// two matrices are isomorphic iff some basis change maps one to the other,
// and after trace normalization only stabilizer elements can.

#include "msc3/classify.hpp"
#include "msc3/matrix.hpp"
#include "msc3/normalize.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace msc3 {

struct FieldTooLarge : Error {
  explicit FieldTooLarge(const std::string& m) : Error(m) {}
};

enum class IsoSearchMode { Stabilizer, FullGl3 };

struct IsoWitness {
  Mat g;
  IsoSearchMode search_space = IsoSearchMode::Stabilizer;
};

// SplitMix64: the fixed, documented census generator.  state advances by the
// golden-gamma increment; output is the finalized mix.
struct SplitMix64 {
  std::uint64_t state = 0;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
};

// Enumerates stabilizer candidates (a, b, c) in lexicographic residue order
// (a major, then b, then c over nonzero residues) and returns the first g
// with act(g, A) = B.  Requires trace-normalized inputs at tower level 0.
inline std::optional<IsoWitness> brute_force_iso_stabilizer(const Field& f, const Msc& A, const Msc& B) {
  std::uint64_t p = f.characteristic();
  if (p == 0 || p > 13) throw FieldTooLarge("stabilizer search supports 2 <= p <= 13");
  for (const Scalar& v : A.m.a)
    if (v.level() != 0) throw FieldTooLarge("entries must live at tower level 0");
  for (std::uint64_t a = 0; a < p; ++a)
    for (std::uint64_t b = 0; b < p; ++b)
      for (std::uint64_t c = 1; c < p; ++c) {
        StabilizerParams s{f.from_int(static_cast<long long>(a)), f.from_int(static_cast<long long>(b)),
                           f.from_int(static_cast<long long>(c))};
        if (act_stabilizer(f, s, A) == B)
          return IsoWitness{stabilizer_matrix(f, s), IsoSearchMode::Stabilizer};
      }
  return std::nullopt;
}

// Enumerates all of GL(3, p).
inline std::optional<IsoWitness> brute_force_iso_full(const Field& f, const Msc& A, const Msc& B) {
  std::uint64_t p = f.characteristic();
  if (p == 0 || p > 7) throw FieldTooLarge("full GL(3) search supports 2 <= p <= 7");
  for (const Scalar& v : A.m.a)
    if (v.level() != 0) throw FieldTooLarge("entries must live at tower level 0");
  std::uint64_t total = 1;
  for (int i = 0; i < 9; ++i) total *= p;
  for (std::uint64_t code = 0; code < total; ++code) {
    Mat g(3, 3, f);
    std::uint64_t c = code;
    for (int i = 0; i < 9; ++i) {
      g.a[static_cast<size_t>(i)] = f.from_int(static_cast<long long>(c % p));
      c /= p;
    }
    if (f.is_zero(det3(f, g))) continue;
    if (act(f, g, A) == B) return IsoWitness{g, IsoSearchMode::FullGl3};
  }
  return std::nullopt;
}

inline std::optional<IsoWitness> brute_force_iso(const Field& f, const Msc& A, const Msc& B,
                                                 IsoSearchMode mode) {
  return mode == IsoSearchMode::Stabilizer ? brute_force_iso_stabilizer(f, A, B)
                                           : brute_force_iso_full(f, A, B);
}

// --- census -----------------------------------------------------------------

struct CensusResult {
  std::map<int, long long> histogram;  // family index -> count
  long long rejected = 0;              // trace-dependent draws
  long long samples = 0;
};

// Entry draw documented in the README: char p uses splitmix64() mod p per
// entry; char 0 uses splitmix64() mod 21 - 10.
inline Msc draw_msc(const Field& f, SplitMix64& rng) {
  Msc A(f);
  for (auto& v : A.m.a) {
    std::uint64_t r = rng.next();
    if (f.characteristic() == 0)
      v = f.from_int(static_cast<long long>(r % 21) - 10);
    else
      v = f.from_int(static_cast<long long>(r % f.characteristic()));
  }
  return A;
}

inline CensusResult census(std::uint64_t characteristic, long long samples, std::uint64_t seed,
                           bool project_degenerate = false) {
  Field f = characteristic == 0 ? Field::rationals() : Field::prime(characteristic);
  Parity parity = characteristic == 2 ? Parity::Char2 : Parity::Odd;
  SplitMix64 rng(seed);
  CensusResult r;
  r.samples = samples;
  for (long long i = 0; i < samples; ++i) {
    Msc A = draw_msc(f, rng);
    if (project_degenerate) {
      // Directed sampling of the stratum where both upper third-blocks and
      // the 3,6 columns vanish (the rank-dispatch zone).
      for (int s : {2, 5, 6, 7, 8, 11, 14, 15, 16, 17}) A.m.a[static_cast<size_t>(s)] = f.zero();
    }
    if (!trace_independent(f, A)) {
      ++r.rejected;
      continue;
    }
    NormalizedMsc n = normalize_traces(f, A);
    RawResult res = classify_raw(f, n, parity);
    ++r.histogram[res.index];
  }
  return r;
}

}  // namespace msc3
