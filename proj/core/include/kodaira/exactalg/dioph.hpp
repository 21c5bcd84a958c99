#pragma once

#include "kodaira/exactalg/poly.hpp"
#include "kodaira/exactalg/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kodaira {

using IntMatrix = std::vector<std::vector<Int>>;
using IntVector = std::vector<Int>;

// A·x = b over the integers.
struct DiophSystem {
    IntMatrix a;
    IntVector b;
    std::vector<std::string> names;

    std::size_t unknowns() const { return names.size(); }
    // Throws InvalidArgument unless the dimensions agree.
    void check() const;
};

// Every solution is particular + Σ kᵢ·lattice[i], kᵢ ∈ Z.
struct DiophSolution {
    IntVector particular;
    std::vector<IntVector> lattice;
};

std::optional<DiophSolution> dioph_solve(const DiophSystem& sys);

// Integer points of a system of polynomial equations of total degree <= 2
// in the listed unknowns. Returns one witness aligned with `unknowns`, or
// nullopt when the system provably has no integer solution. Throws
// Unsupported for shapes outside the implemented elimination steps.
std::optional<std::vector<Int>> solve_integer_system(const std::vector<Poly>& equations,
                                                     const std::vector<Var>& unknowns);

}  // namespace kodaira
