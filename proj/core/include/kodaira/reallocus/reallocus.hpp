#pragma once

#include "kodaira/classify/classify.hpp"
#include "kodaira/exactalg/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kodaira {

using Plane = AffineSubspace;

// σ̃g with (σ̃g)² = 1, where σ̃ is rs.lifting_map().
struct InvolutiveLifting {
    NormalWord g;
    RatMap map;
    Plane plane;  // Fix(σ̃g), two-dimensional
};

// Exponent window used for b and t.
inline constexpr int kLiftingWindow = 2;

// Every involution σ̃g with b, t in [-window, window]; a and l are then
// determined. Empty exactly when the extension does not split.
std::vector<InvolutiveLifting> involutive_liftings(const RealStructure& rs, int window = kLiftingWindow);

// h ∈ G with h(Γ) = Γ', or nullopt when the integer conditions have no
// solution.
std::optional<NormalWord> components_equivalent(const Plane& gamma, const Plane& gamma2, const RealStructure& rs);
std::optional<NormalWord> brute_force_equivalence(const Plane& gamma, const Plane& gamma2, const RealStructure& rs,
                                                  int bound);

struct Stabilizer {
    std::vector<NormalWord> generators;
    int rank = 0;
    bool abelian = true;
};

Stabilizer stabilizer(const Plane& gamma, const RealStructure& rs);

enum class Topology { Torus, KleinBottle };
std::string to_string(Topology t);

struct ComponentClass {
    Plane plane;
    NormalWord g;  // the component is Fix(σ̃g)
    Stabilizer stabilizer;
};

struct RealPartReport {
    CaseLabel label;
    int m = 1;
    int count = 0;
    std::vector<Topology> topology;
    std::vector<ComponentClass> components;
    bool klein_tripwire = false;

    // "∅", "T", "2T", ...
    std::string summary() const;
};

// Throws when the b/t window fails to collapse onto b, t ∈ {0, 1}.
RealPartReport real_part(const RealStructure& rs, int window = kLiftingWindow);
std::vector<RealPartReport> full_table(int m);

// Published table, 0 meaning an empty real part.
struct TableEntry {
    CaseLabel label;
    int parity;  // -1 any m, 0 even m, 1 odd m
    int count;
};
const std::vector<TableEntry>& reference_table();
std::optional<int> reference_count(CaseLabel c, int m);
std::string count_summary(int count);
std::optional<int> parse_count_summary(std::string_view text);

}  // namespace kodaira
