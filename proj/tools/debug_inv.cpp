// Development aid: finds and shrinks an invariance counterexample.
#include "msc3/classify.hpp"

#include <cstdio>
#include <cstdlib>
#include <random>

using namespace msc3;

int main(int argc, char** argv) {
  std::uint64_t p = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 5;
  Field f = p == 0 ? Field::rationals() : Field::prime(p);
  Parity parity = p == 2 ? Parity::Char2 : Parity::Odd;
  std::mt19937_64 g(9001);
  auto pick = [&]() {
    if (p == 0) return f.from_int(static_cast<long long>(g() % 7) - 3);
    return f.from_int(static_cast<long long>(g() % p));
  };

  for (int trial = 0; trial < 200000; ++trial) {
    Msc A(f);
    for (int s : independent_slots()) A.m.a[static_cast<size_t>(s)] = (g() % 3) ? f.zero() : pick();
    fix_dependent_entries(f, A);
    if (!trace_independent(f, A)) continue;
    StabilizerParams sp{pick(), pick(), f.zero()};
    while (f.is_zero(sp.c)) sp.c = pick();
    Msc B = act_stabilizer(f, sp, A);
    RawResult r1, r2;
    try {
      r1 = classify_raw(f, NormalizedMsc{A, {Mat::identity(3, f)}}, parity);
      r2 = classify_raw(f, NormalizedMsc{B, {Mat::identity(3, f)}}, parity);
    } catch (const std::exception& e) {
      printf("trial %d: exception %s\n", trial, e.what());
      continue;
    }
    if (r1.index == r2.index && r1.canonical == r2.canonical) continue;
    printf("trial %d: family %d vs %d  move a=%s b=%s c=%s\n", trial, r1.index, r2.index,
           f.encode(sp.a).c_str(), f.encode(sp.b).c_str(), f.encode(sp.c).c_str());
    printf("A entries:");
    for (int i = 0; i < 27; ++i) printf(" %s", f.encode(A.m.a[static_cast<size_t>(i)]).c_str());
    printf("\ncanon1:");
    for (int i = 0; i < 27; ++i) printf(" %s", r1.field.encode(r1.canonical.m.a[static_cast<size_t>(i)]).c_str());
    printf("\ncanon2:");
    for (int i = 0; i < 27; ++i) printf(" %s", r2.field.encode(r2.canonical.m.a[static_cast<size_t>(i)]).c_str());
    printf("\n");
    return 0;
  }
  printf("no counterexample found\n");
  return 0;
}
