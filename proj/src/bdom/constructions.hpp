#pragma once

#include <optional>

#include "bdom/broadcast.hpp"
#include "bdom/family_spec.hpp"

namespace bdom {

// Minimum-cost dominating broadcast patterns for the named families. Each
// returned assignment dominates its family instance at cost equal to the
// family's broadcast domination number.

// Standard pattern on the path P_n, by residue of n mod 3; cost ceil(n/3).
// The pattern overspills each end of the path by at most one position: the
// leftmost broadcast vertex at 1-based position i with strength s satisfies
// s - (i - 1) <= 1, and symmetrically on the right.
BroadcastAssignment construct_path_standard(int n);

// Strength-1 vertices spaced three apart around the cycle C_n; cost ceil(n/3).
BroadcastAssignment construct_cycle(int n);

// A single base vertex broadcasting at its eccentricity floor(m/2) + n, which
// covers all of SunletDeg{m, n}. Serves Sunlet{m} via n = 1.
BroadcastAssignment construct_sunlet_deg(int m, int n);

// Dispatches to the family's pattern; nullopt for GeneralizedSunlet, whose
// optimum has no known pattern and must come from the exact solver.
std::optional<BroadcastAssignment> construct_for(const FamilySpec& spec);

}  // namespace bdom
