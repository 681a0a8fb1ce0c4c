// Development aid: prints the classifier's canonical entries for inputs that
// land in a chosen family, to pin down template expressions.
#include "msc3/catalog.hpp"
#include "msc3/oracle.hpp"

#include <cstdio>
#include <cstdlib>

using namespace msc3;

int main(int argc, char** argv) {
  std::uint64_t p = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 3;
  int want = argc > 2 ? std::atoi(argv[2]) : 14;
  int shots = argc > 3 ? std::atoi(argv[3]) : 4;
  Field base = p == 0 ? Field::rationals() : Field::prime(p);
  Parity parity = p == 2 ? Parity::Char2 : Parity::Odd;
  SplitMix64 rng(42);
  auto pick = [&](const Field& f) {
    if (p == 0) return f.from_int(static_cast<long long>(rng.next() % 9) - 4);
    return f.from_int(static_cast<long long>(rng.next() % p));
  };
  const char* names[27] = {"a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8", "a9",
                           "b1", "b2", "b3", "b4", "b5", "b6", "b7", "b8", "b9",
                           "g1", "g2", "g3", "g4", "g5", "g6", "g7", "g8", "g9"};
  int found = 0;
  for (long long t = 0; t < 4000000 && found < shots; ++t) {
    Msc A(base);
    for (int s : independent_slots()) A.m.a[static_cast<size_t>(s)] = (rng.next() % 3) ? base.zero() : pick(base);
    fix_dependent_entries(base, A);
    if (!trace_independent(base, A)) continue;
    RawResult r;
    try {
      r = classify_raw(base, NormalizedMsc{A, {Mat::identity(3, base)}}, parity);
    } catch (const std::exception&) {
      continue;
    }
    if (r.index != want) continue;
    ++found;
    printf("canonical:");
    for (int i = 0; i < 27; ++i)
      printf(" %s=%s", names[i], r.field.encode(r.canonical.m.a[static_cast<size_t>(i)]).c_str());
    printf("\n");
  }
  if (!found) printf("family %d not reached\n", want);
  return 0;
}
