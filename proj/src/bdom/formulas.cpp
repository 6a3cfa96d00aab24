#include "bdom/formulas.hpp"

#include <sstream>

#include "bdom/constructions.hpp"
#include "bdom/error.hpp"
#include "bdom/families.hpp"
#include "bdom/solver.hpp"

namespace bdom {

std::optional<int> gamma_b_formula(const FamilySpec& spec) {
  validate(spec);
  return std::visit(
      [](const auto& s) -> std::optional<int> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Path>) {
          return (s.n + 2) / 3;
        } else if constexpr (std::is_same_v<T, Cycle>) {
          return (s.n + 2) / 3;
        } else if constexpr (std::is_same_v<T, Sunlet>) {
          return (s.n + 2) / 2;  // ceil((n + 1) / 2)
        } else if constexpr (std::is_same_v<T, SunletDeg>) {
          return s.n + s.m / 2;
        } else {
          return std::nullopt;
        }
      },
      spec);
}

std::optional<int> radius_formula(const FamilySpec& spec) {
  validate(spec);
  return std::visit(
      [](const auto& s) -> std::optional<int> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Sunlet>) {
          return s.n / 2 + 1;
        } else if constexpr (std::is_same_v<T, SunletDeg>) {
          return s.m / 2 + s.n;
        } else {
          return std::nullopt;
        }
      },
      spec);
}

VerificationRow verify_instance(const FamilySpec& spec) {
  VerificationRow row;
  row.spec = spec;
  row.formula_value = gamma_b_formula(spec);

  const Graph g = generate(spec);
  if (auto pattern = construct_for(spec)) {
    row.construction_cost = pattern->cost();
    row.construction_dominates = coverage(g, *pattern).is_dominating;
  }

  row.solver_value = solve_exact(g).gamma_b;
  row.all_match =
      (!row.formula_value || *row.formula_value == row.solver_value) &&
      (!row.construction_cost || *row.construction_cost == row.solver_value);
  return row;
}

std::vector<VerificationRow> verify_instances(
    std::span<const FamilySpec> specs) {
  std::vector<VerificationRow> rows;
  rows.reserve(specs.size());
  for (const auto& spec : specs) rows.push_back(verify_instance(spec));
  return rows;
}

std::vector<VerificationRow> verify_family(FamilyKind kind,
                                           const VerifyRanges& ranges) {
  auto require_range = [](int lo, int hi, const char* what) {
    if (lo > hi || lo < 0) {
      std::ostringstream msg;
      msg << "invalid " << what << " range [" << lo << "," << hi << "]";
      raise(ErrorCode::InvalidArgument, msg.str());
    }
  };

  std::vector<FamilySpec> specs;
  switch (kind) {
    case FamilyKind::Path:
      require_range(ranges.min, ranges.max, "n");
      for (int n = ranges.min; n <= ranges.max; ++n) specs.push_back(Path{n});
      break;
    case FamilyKind::Cycle:
      require_range(ranges.min, ranges.max, "n");
      for (int n = ranges.min; n <= ranges.max; ++n) specs.push_back(Cycle{n});
      break;
    case FamilyKind::Sunlet:
      require_range(ranges.min, ranges.max, "n");
      for (int n = ranges.min; n <= ranges.max; ++n) specs.push_back(Sunlet{n});
      break;
    case FamilyKind::SunletDeg:
      require_range(ranges.m_min, ranges.m_max, "m");
      require_range(ranges.n_min, ranges.n_max, "n");
      for (int m = ranges.m_min; m <= ranges.m_max; ++m) {
        for (int n = ranges.n_min; n <= ranges.n_max; ++n) {
          specs.push_back(SunletDeg{m, n});
        }
      }
      break;
    case FamilyKind::GeneralizedSunlet:
      raise(ErrorCode::InvalidArgument,
            "gen-sunlet has no parameter ranges; verify instances one at a "
            "time");
  }
  for (const auto& spec : specs) validate(spec);
  return verify_instances(specs);
}

}  // namespace bdom
