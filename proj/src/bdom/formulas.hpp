#pragma once

#include <optional>
#include <span>
#include <vector>

#include "bdom/family_spec.hpp"

namespace bdom {

// Closed-form broadcast domination number of a family instance:
//   path, cycle   -> ceil(n/3)
//   sunlet        -> ceil((n+1)/2)
//   sunlet-deg    -> n + floor(m/2)
// nullopt for gen-sunlet, which has no known closed form; solve those
// instances exactly instead.
std::optional<int> gamma_b_formula(const FamilySpec& spec);

// Closed-form radius, known for the sunlet variants only:
//   sunlet-deg    -> floor(m/2) + n      (sunlet is the n = 1 case)
// nullopt for path/cycle/gen-sunlet; compute those via metrics().
std::optional<int> radius_formula(const FamilySpec& spec);

// One cross-check of formula vs. emitted pattern vs. exact solver.
struct VerificationRow {
  FamilySpec spec;
  std::optional<int> formula_value;
  std::optional<int> construction_cost;
  int solver_value = 0;
  // Every present value equals the solver's exact optimum. Rows with neither
  // formula nor construction (gen-sunlet) match vacuously.
  bool all_match = false;
  // The emitted pattern, when one exists, passed domination re-validation.
  bool construction_dominates = true;
};

VerificationRow verify_instance(const FamilySpec& spec);

std::vector<VerificationRow> verify_instances(std::span<const FamilySpec> specs);

// Inclusive parameter ranges for verify_family. Path/cycle/sunlet sweep
// n = min..max; sunlet-deg sweeps the (m, n) grid.
struct VerifyRanges {
  int min = 0;
  int max = -1;
  int m_min = 0;
  int m_max = -1;
  int n_min = 0;
  int n_max = -1;
};

// Expands the ranges for `kind` and verifies every instance.
// GeneralizedSunlet is not range-expressible; verify those one instance at a
// time with verify_instance.
std::vector<VerificationRow> verify_family(FamilyKind kind,
                                           const VerifyRanges& ranges);

}  // namespace bdom
