#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "spincool/common.hpp"
#include "spincool/gates.hpp"

namespace spincool {

// One primitive operation. PT is a polarization transfer (a SWAP whose
// source is expected to carry the fresher bias), RESET re-thermalizes the
// listed reset bits, WAIT lets the whole register relax for a duration.
enum class StepOp : uint8_t { gate, pt, reset, wait };

struct Step {
    StepOp op = StepOp::gate;
    GateSpec gate;           // op == gate
    std::vector<int> bits;   // pt: {src, dst}; reset: bits; gate: = gate.operands
    double duration = 0.0;   // op == wait

    static Step make_gate(GateKind kind, std::vector<int> operands);
    static Step make_pt(int src, int dst);
    static Step make_reset(std::vector<int> bits);
    static Step make_wait(double duration);
};

// Steps in one group act on disjoint bits and count as a single time step.
using StepGroup = std::vector<Step>;

struct ProgramCost {
    long long compute_steps = 0;    // gate/PT groups
    long long reset_steps = 0;      // RESET/WAIT groups
    long long total_time_steps = 0; // sum of group time costs, resets excluded

    bool operator==(const ProgramCost&) const = default;
};

struct Program {
    int n_bits = 0;
    std::vector<Role> roles;
    std::vector<StepGroup> groups;
    ProgramCost cost;

    std::string algorithm;          // pac1 | pac2 | fig2 | mj | custom
    int level = 0;                  // purification level of the target bit(s)
    int target_bit = -1;
    std::vector<int> target_bits;   // all cooled bits (multi-target PAC1)

    int computation_bits() const;
    bool contains_open_steps() const;  // any RESET or WAIT
};

// --- compilers ------------------------------------------------------------

// M_j(k): cool computation bit a_k to purification level j. The register
// interleaves computation and reset bits: a_i at index 2(i-1), its reset
// neighbour r_i at 2i-1, for i in 1..n_computation. Requires k >= 2j+1.
Program compile_m(int j, int k, int n_computation,
                  GateKind comp3 = GateKind::COMP3_PERM);

// PAC1: one bit cooled to level j_f on 2*j_f+1 computation bits, each with
// its own reset bit (4*j_f+2 bits total).
Program compile_pac1(int j_f, GateKind comp3 = GateKind::COMP3_PERM);

// PAC1 cooling m bits to level j_f: 2*j_f+m computation bits plus matching
// reset bits, m*T_{j_f} time steps.
Program compile_pac1_multi(int m, int j_f, GateKind comp3 = GateKind::COMP3_PERM);

// PAC2: one bit cooled to level j_f with 2*j_f computation bits and a single
// shared reset bit at index 0 (2*j_f+1 bits total).
Program compile_pac2(int j_f, GateKind comp3 = GateKind::COMP3_PERM);

// The three-step demo on A,B,C with attached reset bits: 3B-Comp(A;B;C),
// PT(r_B->B) PT(r_C->C), RESET(r_B,r_C).
Program compile_fig2_demo(GateKind comp3 = GateKind::COMP3_PERM);

// --- cost closed forms ------------------------------------------------------

struct ClosedFormCosts {
    long long time_steps;               // (5*3^(j_f-1) - 1)/2
    long long reset_steps;              // 3^(j_f-1)
    long long pac1_bits;                // 4*j_f + 2
    long long pac2_bits;                // 2*j_f + 1
    double bias_multiplier_smalleps;    // (3/2)^j_f
};
ClosedFormCosts closed_form_costs(int j_f);

// Published costs of the block algorithmic-cooling scheme (comparator only):
// bits ~ 40*j_f, time < 400*5^(j_f+1), bias multiplier 2^j_f. The time value
// is an upper bound, not an exact count.
struct BmrvvCosts {
    long long bits_approx;
    long long time_bound;
    double bias_multiplier;
};
BmrvvCosts bmrvv_reference_costs(int j_f);

// --- validation and inspection ---------------------------------------------

// Recounts cost from the group list; must equal the stored cost.
ProgramCost recount_cost(const Program& p);

// Structural checks: operand ranges, disjoint bits within each group,
// operand counts, stored-vs-recounted cost. Throws std::invalid_argument.
void validate_program(const Program& p);

// One-level recursion expansion in the paper-style notation,
// e.g. "B{0->1}(3) M0(1) M0(2) M0(3)".
std::string mj_notation(int j, int k);

// Compact one-line rendering of a step / parallel group (used in ledgers and
// the disassembly; contains no commas so it embeds in CSV unquoted).
std::string step_summary(const Step& s);
std::string group_summary(const StepGroup& g);

// Full human-readable listing: header, notation line where applicable, one
// line per parallel group, cost footer.
std::string disassemble(const Program& p);

// --- serialization -----------------------------------------------------------
// JSON lines: a header object, then one JSON array per parallel group with
// ops like {"op":"COMP3_PERM","bits":[4,2,0]}. Field order is stable.

std::string program_to_jsonl(const Program& p);
Program program_from_jsonl(const std::string& text);

}  // namespace spincool
