// Development aid: finds a template mismatch and prints both sides.
#include "msc3/selftest.hpp"

#include <cstdio>
#include <cstdlib>

using namespace msc3;

int main(int argc, char** argv) {
  std::uint64_t p = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 3;
  int want = argc > 2 ? std::atoi(argv[2]) : 14;
  Field f = selftest_field(p);
  Parity parity = p == 2 ? Parity::Char2 : Parity::Odd;
  (void)want;
  SplitMix64 rng(999);
  const char* names[27] = {"a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8", "a9",
                           "b1", "b2", "b3", "b4", "b5", "b6", "b7", "b8", "b9",
                           "g1", "g2", "g3", "g4", "g5", "g6", "g7", "g8", "g9"};
  for (int attempt = 0; attempt < 40000; ++attempt) {
    const auto& table = family_table(parity);
    const FamilyDef& def = table[static_cast<size_t>(rng.next() % table.size())];
    std::vector<Scalar> params;
    for (size_t i = 0; i < def.param_slots.size(); ++i) params.push_back(draw_scalar(f, rng, true));
    Msc A;
    try {
      A = canonical_msc(f, def, params);
    } catch (const GuardViolated&) {
      continue;
    }
    RawResult raw;
    try {
      raw = classify_raw(f, NormalizedMsc{A, {Mat::identity(3, f)}}, parity);
    } catch (const std::exception& e) {
      printf("classify_raw error: %s\n", e.what());
      continue;
    }
    const FamilyDef& outdef = family_def(parity, raw.index);
    auto outparams = extract_params(outdef, raw.canonical);
    Msc rebuilt;
    try {
      rebuilt = canonical_msc(raw.field, outdef, outparams);
    } catch (const std::exception& e) {
      printf("rebuild of family %d threw: %s\n", raw.index, e.what());
      printf("canonical:");
      for (int i = 0; i < 27; ++i)
        printf(" %s=%s", names[i], raw.field.encode(raw.canonical.m.a[static_cast<size_t>(i)]).c_str());
      printf("\n");
      return 0;
    }
    if (rebuilt == raw.canonical) continue;
    printf("input landed in family %d; mismatch:\n", raw.index);
    for (int i = 0; i < 27; ++i) {
      std::string c = raw.field.encode(raw.canonical.m.a[static_cast<size_t>(i)]);
      std::string r = raw.field.encode(rebuilt.m.a[static_cast<size_t>(i)]);
      if (c != r) printf("  %s: canonical=%s rebuilt=%s\n", names[i], c.c_str(), r.c_str());
    }
    return 0;
  }
  printf("no mismatch found for family %d\n", want);
  return 0;
}
