#pragma once

#include "kodaira/moduli/forms.hpp"
#include "kodaira/moduli/gaussian.hpp"
#include "kodaira/realstruct/realstruct.hpp"

#include <optional>
#include <string>
#include <utility>

namespace kodaira {

// Homogeneous coordinates of η = p₁₃θ₁₃ + p₂₃θ₂₃ + p₁₄θ₁₄ + p₂₄θ₂₄.
struct PeriodPoint {
    Gaussian p13, p23, p14, p24;

    // p₁₃p₂₄ − p₂₃p₁₄.
    Gaussian quadric() const;
    // −p₁₃p̄₂₄ + p₂₃p̄₁₄ + p₁₄p̄₂₃ − p₂₄p̄₁₃. The expression is a sum of
    // conjugate pairs, hence real; this is its value.
    Rat positivity() const;
    bool is_valid() const;

    PeriodPoint scaled(const Gaussian& c) const;
    // (xy, y, x, 1), the chart inverse to to_halfplanes.
    static PeriodPoint from_halfplanes(const Gaussian& x, const Gaussian& y);

    friend bool operator==(const PeriodPoint&, const PeriodPoint&) = default;
    std::string str() const;
};

// Block action [[M, −2k/m·M], [0, e·M]] on (p₁₃, p₂₃ | p₁₄, p₂₄).
struct ActionMatrix {
    Int a = 1, b = 0, c = 0, d = 1;
    Int k = 0;
    int e = 1;

    // Throws InvalidArgument unless ad − bc = e = ±1.
    void validate() const;
    friend bool operator==(const ActionMatrix&, const ActionMatrix&) = default;
};

// act(A₁)∘act(A₂) = act(compose(A₁, A₂)).
ActionMatrix compose(const ActionMatrix& a1, const ActionMatrix& a2);
// a = e = −d = −1: (x, y) ↦ (−x, −y).
ActionMatrix negation_automorphism();
// a = d = 0, b = c = −1, e = −1: x ↦ 1/x, y ↦ −p₂₃/p₂₄.
ActionMatrix swap_automorphism();

PeriodPoint borcea_act(const ActionMatrix& a, int m, const PeriodPoint& p);

// (p₁₄/p₂₄, p₁₃/p₁₄). Throws Degenerate when a denominator vanishes.
std::pair<Gaussian, Gaussian> to_halfplanes(const PeriodPoint& p);

ComplexForm eta(const PeriodPoint& p);
TwoForm pullback(const Lifting& l, const TwoForm& form);
ComplexForm pullback(const Lifting& l, const ComplexForm& form);

// λ with σ̃*(η) = λ·η̄ when it exists; |λ| is not checked.
std::optional<Gaussian> reality_multiplier(const Lifting& l, const PeriodPoint& p);
// σ̃*(η) = λ·η̄ for some λ with |λ| = 1.
bool reality_conditions(const Lifting& l, const PeriodPoint& p);

// The locus stated for each linear case, with or without f₂ = 0.
bool stated_locus(LinearCase kind, bool f2_nonzero, const Gaussian& x, const Gaussian& y);

// Sample points (x, y) on the stated locus, both half-plane components.
std::vector<std::pair<Gaussian, Gaussian>> locus_grid(LinearCase kind, bool f2_nonzero);

// True iff the exchange automorphism for this case keeps every grid point
// on the locus and moves it to the other half-plane component.
bool exchange_check(LinearCase kind, bool f2_zero, int m);
ActionMatrix exchange_automorphism(LinearCase kind, bool f2_zero);

}  // namespace kodaira
