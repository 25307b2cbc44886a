#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "spincool/common.hpp"
#include "spincool/program.hpp"

namespace spincool {

// Thermal environment of a register: per-bit equilibrium biases, relaxation
// times by role, and the wall-clock durations of compute and reset steps
// (used in finite mode).
struct ThermalConfig {
    std::vector<double> equilibrium_biases;
    double t1_compute = 0.0;           // 0 = no relaxation (ideal)
    double t1_reset = 0.0;
    double compute_step_duration = 0.0;
    double reset_step_duration = 0.0;

    static ThermalConfig uniform(double eps0, int n_bits);

    double t1_for(Role role) const;
    // R_relax-times = T1(computation) / T1(reset); must be >> 1 for many
    // reset rounds to fit before the cooled bits re-thermalize.
    double relax_ratio() const;
    bool finite_ready() const { return t1_compute > 0.0 && t1_reset > 0.0; }
};

// Exact classical distribution over the 2^n basis states of an n-bit
// register. Basis index x assigns bit i the value (x >> i) & 1 (probs are in
// little-endian bit order); bit value 0 means spin-up, so a bit's bias is
// P(bit = 0) - P(bit = 1).
//
// States own their storage; operations mutate under exclusive access.
// Independent states can evolve concurrently.
class DiagonalState {
  public:
    static constexpr int default_max_bits = 24;

    // Product of per-bit thermal distributions ((1+eps)/2, (1-eps)/2).
    static DiagonalState thermal(std::span<const double> biases,
                                 std::vector<Role> roles,
                                 int max_bits = default_max_bits);

    int n_bits() const { return n_bits_; }
    const std::vector<double>& probs() const { return probs_; }
    const std::vector<Role>& roles() const { return roles_; }

    // P(bit = 0) - P(bit = 1) under the joint distribution.
    double marginal_bias(int bit) const;

    // Re-indexes probability mass: the new probability of local pattern y on
    // the operand bits equals the old probability of table^-1(y). `bits[0]`
    // is the most significant bit of the local pattern. The table must be a
    // bijection on {0..2^k-1}; operands must be distinct.
    void apply_permutation(std::span<const uint8_t> table, std::span<const int> bits);

    void apply_gate(const GateSpec& gate);

    // Traces the bit out and installs a fresh independent thermal bit at
    // equilibrium_bias; marginals of all other bits are untouched. Resetting
    // a computation bit requires allow_computation_bit.
    void apply_reset(int bit, double equilibrium_bias, bool allow_computation_bit = false);

    // Each bit independently is replaced by a fresh equilibrium bit with
    // probability 1 - exp(-duration / T1(role)). duration 0 is the identity;
    // relax(t) then relax(s) equals relax(t+s).
    void relax(double duration, const ThermalConfig& config);

    double total_entropy() const;               // bits
    double single_bit_entropy(int bit) const;   // bits
    double probability_sum() const;

    // {n_bits, roles, probs} with probs in little-endian bit order.
    std::string to_json() const;
    static DiagonalState from_json(const std::string& text);

  private:
    DiagonalState() = default;
    void check_bit(int bit) const;

    int n_bits_ = 0;
    std::vector<double> probs_;
    std::vector<Role> roles_;
};

// Analytic per-bit bias vector: a cheap large-n companion to DiagonalState
// for programs whose schedule keeps every compression trio independent.
// While independence_valid holds, each entry equals the exact-state marginal
// at every program checkpoint.
struct BiasTracker {
    std::vector<double> biases;
    std::vector<Role> roles;
    bool independence_valid = true;

    static BiasTracker thermal(std::span<const double> biases, std::vector<Role> roles);

    // Analytic update for one step. SWAP/PT exchange entries, RESET pins
    // entries to equilibrium, WAIT applies the closed-form relaxation, and a
    // 3B-Comp with equal operand biases applies the enumeration-derived
    // polynomials. Anything else (or unequal comp operands) still updates
    // with the independent-input closed forms but clears independence_valid.
    void apply(const Step& step, const ThermalConfig& config);

    void relax(double duration, const ThermalConfig& config);
};

}  // namespace spincool
