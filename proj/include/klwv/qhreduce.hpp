#pragma once

// Minimal quantum Hamiltonian reduction of L_k(sl_{m+2}), k = -(m+3)/2:
// top-level data and the weight comparisons against induced W-modules.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "klwv/lie.hpp"
#include "klwv/mpoly.hpp"
#include "klwv/rat.hpp"
#include "klwv/report.hpp"

namespace klwv {

struct QhrData {
  int m = 4;
  WeightVec lambda;  // sl_{m+2}
  Rat mu;            // J(0) eigenvalue
  WeightVec bar;     // sl_m
  Rat delta;         // L(0) eigenvalue
};

/// Level -(m+3)/2 of sl_{m+2}.
LieLevel qhr_level(int m);

/// Throws on non-dominant lambda or a rank other than m+2.
QhrData qhr_top_data(int m, const WeightVec& lambda);

/// Closed form of the reduced top weight for lambda = l1 ω_1 + lL ω_{m+1}.
Rat delta_theta(int m, const Rat& l1, const Rat& l_last);

/// Polynomial identities behind the lower-bound argument and grid positivity.
Report sos_certificate(int m);

/// delta_theta against minimal_reduction_weight, and the two branch
/// differences delta_theta - Δ(a,b,0), b = l1 - lL + 1, as polynomial identities.
Report theta_consistency(int m);

/// Non-negative integer (l1, lL) with l1 = -(m+1) - (m²+m)/(2lL - m - 1).
std::vector<std::pair<std::int64_t, std::int64_t>> eq1_solutions(int m);

/// Pieri summands of V(l1 ω_1 + lL ω_{m+1}) ⊗ V(ω_1) tested against the matching condition.
Report pieri_obstruction(int m, std::int64_t l1, std::int64_t l_last);

struct MatchResult {
  WeightVec lambda;
  Rat delta_theta;
  Rat delta_induced;
  Rat mu;  // J(0) eigenvalue of lambda
};
/// Requires b = a(m+2)/m. Empty when the weights do not agree.
std::optional<MatchResult> match_reduction(int m, const Rat& a, std::int64_t b);

}  // namespace klwv
