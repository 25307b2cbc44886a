#pragma once

#include <cstdint>

namespace spincool {

// Conversions among polarization bias, spin temperature and entropy for
// two-level systems, plus the closed-system compression limits.
//
// Units: k_B = 1 throughout, so temperature is measured in energy units and
// the equilibrium bias of a spin with energy gap delta_e at temperature T is
// tanh(delta_e / (2 T)). Entropies are in bits (log base 2).

// Equilibrium polarization bias of a spin with the given energy gap in
// contact with a bath at the given temperature. Requires delta_e > 0, T > 0.
double bias_from_temperature(double delta_e, double temperature);

// Spin temperature assigned to a bias (also out of equilibrium).
// Requires delta_e > 0 and 0 < bias < 1; diverges as bias -> 0.
double temperature_from_bias(double delta_e, double bias);

// Energy gap of a spin-half particle with gyromagnetic constant gamma in a
// magnetic field: delta_e = 2 * gamma * field.
double delta_e_from_field(double gamma, double field);

// Exact binary entropy (bits) of a spin with bias eps, i.e. of the
// distribution {(1+eps)/2, (1-eps)/2}. For |eps| <= 0.1 this agrees with
// 1 - eps^2/ln4 to within eps^4.
double entropy_of_bias(double bias);

// Leading-order ceiling on the single-bit bias reachable by lossless
// compression of n equal-bias spins: min(1, bias * sqrt(n)). The clamp keeps
// the leading-order formula inside the physical range.
double shannon_bound_bias(long long n, double bias);

// Leading-order floor on one bit's entropy after compressing n equal-bias
// spins into n-1 fully random ones: 1 - n * bias^2 / ln4. May go negative
// for large n*bias^2; callers clamp at 0 where a physical entropy is needed.
double shannon_entropy_floor(long long n, double bias);

}  // namespace spincool
