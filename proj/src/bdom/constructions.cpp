#include "bdom/constructions.hpp"

#include "bdom/error.hpp"

namespace bdom {

BroadcastAssignment construct_path_standard(int n) {
  validate(FamilySpec(Path{n}));
  BroadcastAssignment f;
  if (n <= 2) {
    // n=2 admits either endpoint; the lower-indexed one is canonical.
    f.set(0, 1);
    return f;
  }
  const int k = n / 3;
  switch (n % 3) {
    case 0:
      // P_2, P_5, ..., P_{3k-1}, strength 1 each.
      for (int i = 0; i < k; ++i) f.set(3 * i + 1, 1);
      break;
    case 1:
      // P_1 plus P_3, P_6, ..., P_{3k}, strength 1 each. (The mirrored
      // variant starting at P_2 dominates too; this one is canonical.)
      f.set(0, 1);
      for (int i = 1; i <= k; ++i) f.set(3 * i - 1, 1);
      break;
    default:
      // P_3 at strength 2 plus P_7, P_10, ..., P_{3k+1}, strength 1 each.
      // Anchoring the strength-2 vertex at P_2 instead would leave P_5
      // uncovered (P_2 reaches P_4, P_7 reaches back only to P_6).
      f.set(2, 2);
      for (int i = 2; i <= k; ++i) f.set(3 * i, 1);
      break;
  }
  return f;
}

BroadcastAssignment construct_cycle(int n) {
  validate(FamilySpec(Cycle{n}));
  BroadcastAssignment f;
  const int k = n / 3;
  // P_3, P_6, ..., P_{3k}, strength 1 each; the two leftover residues add P_1.
  for (int i = 1; i <= k; ++i) f.set(3 * i - 1, 1);
  if (n % 3 != 0) f.set(0, 1);
  return f;
}

BroadcastAssignment construct_sunlet_deg(int m, int n) {
  validate(FamilySpec(SunletDeg{m, n}));
  BroadcastAssignment f;
  f.set(0, m / 2 + n);  // base vertex P_1 at its eccentricity
  return f;
}

std::optional<BroadcastAssignment> construct_for(const FamilySpec& spec) {
  validate(spec);
  return std::visit(
      [](const auto& s) -> std::optional<BroadcastAssignment> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Path>) {
          return construct_path_standard(s.n);
        } else if constexpr (std::is_same_v<T, Cycle>) {
          return construct_cycle(s.n);
        } else if constexpr (std::is_same_v<T, Sunlet>) {
          return construct_sunlet_deg(s.n, 1);
        } else if constexpr (std::is_same_v<T, SunletDeg>) {
          return construct_sunlet_deg(s.m, s.n);
        } else {
          return std::nullopt;
        }
      },
      spec);
}

}  // namespace bdom
