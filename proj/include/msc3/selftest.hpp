#pragma once

// Randomized per-family self checks: draw admissible parameters, rebuild the
// canonical matrix, reclassify, and demand the exact same family, parameters
// and a sound witness.  Used by the selftest subcommand and the test suites.

#include "msc3/catalog.hpp"
#include "msc3/oracle.hpp"

#include <optional>
#include <sstream>

namespace msc3 {

// A sampling field rich enough to populate every family: the base field plus
// one canonical quadratic level (some strata only exist over extensions).
inline Field selftest_field(std::uint64_t characteristic) {
  if (characteristic == 0) return Field::rationals();
  Field f = Field::prime(characteristic);
  if (characteristic == 2) {
    auto [r, f4] = f.solve_quadratic(f.one(), f.one());
    (void)r;
    return f4;
  }
  // Adjoin the canonical square root of the least non-residue.
  for (std::uint64_t n = 2; n < characteristic; ++n) {
    Scalar s = f.from_int(static_cast<long long>(n));
    auto [root, nf] = f.sqrt(s);
    (void)root;
    if (nf.levels() == 1) return nf;
  }
  return f;
}

inline Scalar draw_scalar(const Field& f, SplitMix64& rng, bool allow_level1) {
  auto level0 = [&]() {
    if (f.characteristic() == 0) {
      long long n = static_cast<long long>(rng.next() % 9) - 4;
      long long d = 1 + static_cast<long long>(rng.next() % 3);
      return f.from_rat(BigRat(n) / d);
    }
    return f.from_int(static_cast<long long>(rng.next() % f.characteristic()));
  };
  Scalar v = level0();
  if (allow_level1 && f.levels() >= 1 && rng.next() % 4 == 0)
    v = f.add(v, f.mul(level0(), f.gen(1)));
  return v;
}

// Draws admissible parameters for one family: random values filtered through
// the guard, then projected onto the classifier's canonical gauge by one
// classification round.  Returns the projected parameters.
inline std::optional<std::vector<Scalar>> sample_family_params(const Field& f, const FamilyDef& def,
                                                               SplitMix64& rng, int max_tries = 400) {
  bool allow_level1 = f.levels() >= 1;
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    std::vector<Scalar> params;
    params.reserve(def.param_slots.size());
    for (size_t i = 0; i < def.param_slots.size(); ++i)
      params.push_back(draw_scalar(f, rng, allow_level1));
    Msc A;
    try {
      A = canonical_msc(f, def, params);
    } catch (const GuardViolated&) {
      continue;
    }
    ClassificationResult r;
    try {
      r = classify_normalized(f, NormalizedMsc{A, {Mat::identity(3, f)}}, def.parity);
    } catch (const TraceDependent&) {
      continue;
    }
    if (r.family.index != def.index) continue;
    std::vector<Scalar> projected;
    projected.reserve(r.params.size());
    for (auto& [name, v] : r.params) projected.push_back(v);
    return projected;
  }
  return std::nullopt;
}

struct SelftestReport {
  long long trials = 0;
  long long failures = 0;
  std::vector<std::string> messages;
};

// Idempotence and witness soundness over randomized admissible parameters of
// one family.
inline void selftest_family(const Field& f, Parity parity, int index, int trials, SplitMix64& rng,
                            SelftestReport& report) {
  const FamilyDef& def = family_def(parity, index);
  auto fail = [&](const std::string& msg) {
    ++report.failures;
    if (report.messages.size() < 32)
      report.messages.push_back(family_name({parity, index}) + ": " + msg);
  };
  for (int t = 0; t < trials; ++t) {
    ++report.trials;
    auto params = sample_family_params(f, def, rng);
    if (!params) {
      fail("no admissible parameters found");
      return;
    }
    Msc A = canonical_msc(f, def, *params);
    ClassificationResult r;
    try {
      r = classify_normalized(f, NormalizedMsc{A, {Mat::identity(3, f)}}, parity);
    } catch (const std::exception& e) {
      fail(std::string("classification failed: ") + e.what());
      continue;
    }
    if (r.family.index != index) {
      fail("classified into " + family_name(r.family));
      continue;
    }
    bool params_equal = r.params.size() == params->size();
    for (size_t i = 0; params_equal && i < params->size(); ++i)
      params_equal = r.params[i].second == (*params)[i];
    if (!params_equal) {
      fail("parameters not reproduced");
      continue;
    }
    if (!(act(r.field, r.witness.g, A) == r.canonical)) {
      fail("witness unsound");
      continue;
    }
    if (!(r.canonical == A)) {
      fail("canonical form moved away from the template");
      continue;
    }
  }
}

}  // namespace msc3
