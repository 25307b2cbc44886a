#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace spincool {

// The gate set used by the cooling programs, as permutation tables on local
// bit patterns, plus the closed-form bias effects of the 3-bit compression.
//
// Pattern convention: a k-bit operand list (A, B, C, ...) maps to the local
// pattern index with A as the most significant bit, so the 3-bit pattern
// "011" (A=0, B=1, C=1) is index 3. Bit value 0 means spin-up.

enum class GateKind : uint8_t {
    CNOT,            // (C,B) -> (C, B^C); C is the control
    CSWAP_VARIANT,   // (A,B,C): A and C are swapped if B = 0
    COMP3_TWO_GATE,  // CNOT(C->B) then the CSWAP variant, as one table
    COMP3_PERM,      // single-permutation 3-bit compression: 011 <-> 100
    SWAP,            // (X,Y) -> (Y,X)
};

struct GateSpec {
    GateKind kind;
    std::vector<int> operands;  // register bits, operands[0] = pattern MSB
};

const std::array<uint8_t, 4>& cnot_table();
const std::array<uint8_t, 8>& cswap_variant_table();
const std::array<uint8_t, 8>& comp3_two_gate_table();
const std::array<uint8_t, 8>& comp3_perm_table();
const std::array<uint8_t, 4>& pt_swap_table();

std::span<const uint8_t> gate_table(GateKind kind);
int gate_arity(GateKind kind);
// Time-step cost of the gate in the paper's counting: the two-gate 3B-Comp
// takes 2 steps, everything else 1.
int gate_time_cost(GateKind kind);
const char* gate_name(GateKind kind);
GateKind gate_kind_from_name(const std::string& name);

// Cooled-bit bias after a 3-bit compression on three independent bits of
// equal bias eps: (3*eps - eps^3)/2, which is 3*eps/2 to leading order.
double predicted_comp3_bias(double eps);

// Analytic recursion eps <- (3*eps - eps^3)/2 applied `levels` times.
double iterate_comp3_bias(double eps0, int levels);

// All three output marginals of a 3-bit compression applied to independent
// bits with biases (a, b, c), a being the cooled operand. Closed forms from
// the 8-outcome enumeration; the two constructions agree on the cooled bit
// but heat B differently.
struct Comp3Biases {
    double a, b, c;
};
Comp3Biases comp3_output_biases(GateKind kind, double a, double b, double c);

// Renders a permutation table in the 8-row truth-table text form
// ("011 -> 100" per line) used for documentation and diff tests.
std::string truth_table_text(std::span<const uint8_t> table, int arity);

}  // namespace spincool
