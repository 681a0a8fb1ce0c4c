// Development aid: samples random normalized matrices, classifies them, and
// reports per-family entry patterns plus invariance spot checks.
#include "msc3/classify.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <map>
#include <random>
#include <set>
#include <vector>

using namespace msc3;

namespace {

struct Rng {
  std::mt19937_64 g;
  explicit Rng(std::uint64_t s) : g(s) {}
  Scalar pick(const Field& f, bool small = false) {
    if (f.characteristic() == 0) return f.from_int(static_cast<long long>(g() % 7) - 3);
    (void)small;
    return f.from_int(static_cast<long long>(g() % f.characteristic()));
  }
  Msc normalized(const Field& f) {
    Msc A(f);
    for (int s : independent_slots()) A.m.a[static_cast<size_t>(s)] = pick(f);
    fix_dependent_entries(f, A);
    return A;
  }
  Msc normalized_degenerate(const Field& f) {
    Msc A = normalized(f);
    for (int s : {2, 5, 6, 7, 8, 11, 15, 16, 17}) A.m.a[static_cast<size_t>(s)] = f.zero();
    fix_dependent_entries(f, A);
    return A;
  }
  Msc normalized_sparse(const Field& f) {
    Msc A(f);
    for (int s : independent_slots())
      A.m.a[static_cast<size_t>(s)] = (g() % 3) ? f.zero() : pick(f);
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

struct FamilyStats {
  int count = 0;
  std::vector<Msc> samples;
  Field field;
};

const char* slot_names[27] = {"a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8", "a9",
                              "b1", "b2", "b3", "b4", "b5", "b6", "b7", "b8", "b9",
                              "g1", "g2", "g3", "g4", "g5", "g6", "g7", "g8", "g9"};

void report(const char* label, std::map<int, FamilyStats>& stats) {
  printf("== %s\n", label);
  for (auto& [id, fs] : stats) {
    printf("A%-3d n=%-6d ", id, fs.count);
    const Field& f = fs.field;
    for (int s = 0; s < 27; ++s) {
      bool constant = true;
      for (auto& m : fs.samples)
        if (!(m.m.a[static_cast<size_t>(s)] == fs.samples[0].m.a[static_cast<size_t>(s)])) {
          constant = false;
          break;
        }
      if (constant) {
        Scalar v = fs.samples[0].m.a[static_cast<size_t>(s)];
        printf("%s=%s ", slot_names[s], f.encode(v).c_str());
      } else {
        printf("%s=* ", slot_names[s]);
      }
    }
    printf("\n");
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t p = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 3;
  int n = argc > 2 ? std::atoi(argv[2]) : 3000;
  int mode = argc > 3 ? (std::strcmp(argv[3], "deg") == 0 ? 1 : (std::strcmp(argv[3], "sparse") == 0 ? 2 : 0)) : 0;

  Field f = p == 0 ? Field::rationals() : Field::prime(p);
  Parity parity = p == 2 ? Parity::Char2 : Parity::Odd;
  Rng rng(12345);

  std::map<int, FamilyStats> stats;
  int errors = 0, invariance_failures = 0, idempotence_failures = 0;
  for (int i = 0; i < n; ++i) {
    Msc A = mode == 1 ? rng.normalized_degenerate(f) : (mode == 2 ? rng.normalized_sparse(f) : rng.normalized(f));
    if (!trace_independent(f, A)) continue;
    NormalizedMsc N{A, {Mat::identity(3, f)}};
    RawResult r1;
    try {
      r1 = classify_raw(f, N, parity);
    } catch (const std::exception& e) {
      if (errors < 6) printf("ERROR: %s\n", e.what());
      ++errors;
      continue;
    }
    auto& fs = stats[r1.index];
    fs.count++;
    fs.field = r1.field;
    if (fs.samples.size() < 40) fs.samples.push_back(r1.canonical);

    // Witness soundness.
    Msc check = act(r1.field, r1.witness, A);
    if (!(check == r1.canonical)) {
      printf("WITNESS MISMATCH at family %d\n", r1.index);
      ++errors;
    }

    if (i % 3 == 0) {  // invariance under a random stabilizer move
      StabilizerParams s = rng.stab(f);
      Msc B = act_stabilizer(f, s, A);
      try {
        RawResult r2 = classify_raw(f, NormalizedMsc{B, {Mat::identity(3, f)}}, parity);
        if (r2.index != r1.index || !(r2.canonical == r1.canonical)) {
          if (invariance_failures < 6)
            printf("INVARIANCE FAIL: family %d vs %d\n", r1.index, r2.index);
          ++invariance_failures;
        }
      } catch (const std::exception& e) {
        if (invariance_failures < 6) printf("INVARIANCE ERROR: %s (family %d)\n", e.what(), r1.index);
        ++invariance_failures;
      }
    }
    if (i % 5 == 0) {  // idempotence on the canonical output
      try {
        RawResult r3 = classify_raw(r1.field, NormalizedMsc{r1.canonical, {Mat::identity(3, r1.field)}}, parity);
        if (r3.index != r1.index || !(r3.canonical == r1.canonical)) {
          if (idempotence_failures < 6)
            printf("IDEMPOTENCE FAIL: family %d -> %d\n", r1.index, r3.index);
          ++idempotence_failures;
        }
      } catch (const std::exception& e) {
        if (idempotence_failures < 6) printf("IDEMPOTENCE ERROR: %s (family %d)\n", e.what(), r1.index);
        ++idempotence_failures;
      }
    }
  }
  char label[64];
  snprintf(label, sizeof label, "char %llu mode %d", static_cast<unsigned long long>(p), mode);
  report(label, stats);
  printf("errors=%d invariance_failures=%d idempotence_failures=%d\n", errors, invariance_failures,
         idempotence_failures);
  return errors + invariance_failures + idempotence_failures ? 1 : 0;
}
