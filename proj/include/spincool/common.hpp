#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace spincool {

// Bit roles. Computation bits hold polarization between steps; reset bits are
// the fast-relaxing entropy drain.
enum class Role { computation, reset };

inline char role_letter(Role r) { return r == Role::computation ? 'c' : 'r'; }

inline std::string role_name(Role r) {
    return r == Role::computation ? "computation" : "reset";
}

inline Role role_from_name(const std::string& s) {
    if (s == "computation") return Role::computation;
    if (s == "reset") return Role::reset;
    throw std::invalid_argument("unknown role: " + s);
}

// Thrown when a dense state would exceed the representation cap.
class capacity_error : public std::runtime_error {
  public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a program cannot be compiled (e.g. a violated level bound).
class compile_error : public std::invalid_argument {
  public:
    explicit compile_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace spincool
