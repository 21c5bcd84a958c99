#pragma once

#include "kodaira/exactalg/affine.hpp"
#include "kodaira/group/group.hpp"

#include <array>
#include <optional>
#include <string>

namespace kodaira {

// Linear part of the lifting on the base: c = 1 (A) or c = i (B).
enum class LinearCase { A, B };

std::string to_string(LinearCase c);

// Affine lifting with rows (c₁,c₂|0,0), (c₂,-c₁|0,0), (f₁,f₂|1,0),
// (f₂,-f₁|0,-1) and translation (d₁,d₂,γ₁,γ₂). Invariant: d₂ = 0 and γ₂ = 0.
struct Lifting {
    LinearCase kind = LinearCase::A;
    Rat f1, f2, d1, d2, gamma1, gamma2;

    // Conjugates by the central translation (0,0,0,-γ₂/2), which moves γ₂
    // to 0 and changes neither G nor the conjugation data.
    static Lifting make(LinearCase kind, const Rat& f1, const Rat& f2, const Rat& d1, const Rat& gamma1,
                        const Rat& gamma2 = Rat(0));

    Rat c1() const { return kind == LinearCase::A ? Rat(1) : Rat(0); }
    Rat c2() const { return kind == LinearCase::A ? Rat(0) : Rat(1); }

    friend bool operator==(const Lifting&, const Lifting&) = default;
};

RatMap lifting_to_affine(const Lifting& l);
// f₁, f₂, d₁, γ₁ as polynomial variables; d₂ = γ₂ = 0.
AffineMap4 lifting_to_affine_symbolic(LinearCase kind);

// Conjugation images σ̃gᵢσ̃⁻¹ of the four generators, as an automorphism ψ
// of G.
struct ConjugationData {
    int m = 1;
    std::array<NormalWord, 4> images{};

    NormalWord apply(const NormalWord& w) const;
    SymbolicWord apply(const SymbolicWord& w) const;
    friend bool operator==(const ConjugationData&, const ConjugationData&) = default;
};

// The lifting actually used: σ̃∘g with g = twist. The twist keeps composite
// liftings representable while Lifting itself stays in normal form.
struct RealStructure {
    KodairaParams params;
    Lifting lifting;
    NormalWord twist;

    // Throws NotAdmissible.
    static RealStructure make(const KodairaParams& params, const Lifting& lifting, const NormalWord& twist = {});
    RatMap lifting_map() const;
};

bool admissible(const Lifting& l, const KodairaParams& p);
bool admissible_map(const RatMap& sigma, const KodairaParams& p);
// Which admissibility condition fails first, if any.
std::optional<std::string> admissibility_failure(const RatMap& sigma, const KodairaParams& p);

// Throws NotAdmissible.
NormalWord conj_action(const Lifting& l, const KodairaParams& p, int i);
NormalWord conj_action_map(const RatMap& sigma, const KodairaParams& p, int i);
ConjugationData conjugation_data(const RatMap& sigma, const KodairaParams& p);
NormalWord square_in_G(const Lifting& l, const KodairaParams& p);
NormalWord square_in_G_map(const RatMap& sigma, const KodairaParams& p);

// The necessary lattice conditions on (c, f, d): |c|² = 1,
// c·f̄ + f = c·d̄ + d ∈ Γ_α, Γ̄_β = Γ_β, c·Γ̄_α = Γ_α, with Γ_α = Z + Zi and
// Γ_β = Zβ₁ + Zβ₂, β₁ = δ₁ + iε₁, β₂ = iε₂. Implied by admissibility.
bool lattice_conditions(const Lifting& l, const KodairaParams& p);

}  // namespace kodaira
