#pragma once

#include "kodaira/exactalg/affine.hpp"
#include "kodaira/exactalg/poly.hpp"
#include "kodaira/moduli/gaussian.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace kodaira {

// Differential forms on R⁴ with coordinates (x₁, y₁, x₂, y₂), coefficients
// Poly in var::x1..var::y2. A basis element dxᵢ₁∧…∧dxᵢₖ with i₁ < … < iₖ is
// the bitmask of its indices, bit 0 = dx₁, 1 = dy₁, 2 = dx₂, 3 = dy₂.
class Form {
public:
    using Mask = std::uint8_t;

    explicit Form(int degree = 0) : degree_(degree) {}
    static Form function(const Poly& f);
    // dx₁, dy₁, dx₂, dy₂ for i = 0..3.
    static Form differential(int i);
    static Form basis(Mask mask, const Poly& coeff = Poly(1));

    int degree() const { return degree_; }
    const std::map<Mask, Poly>& coefficients() const { return coeffs_; }
    Poly coefficient(Mask mask) const;
    bool is_zero() const { return coeffs_.empty(); }

    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    Form scaled(const Poly& c) const;
    friend bool operator==(const Form&, const Form&) = default;

    std::string str() const;

private:
    void add(Mask mask, const Poly& c);

    int degree_;
    std::map<Mask, Poly> coeffs_;  // no zero entries
};

Form wedge(const Form& a, const Form& b);
Form exterior_derivative(const Form& f);
// F*(f) for an affine F acting on (x₁, y₁, x₂, y₂).
Form pullback(const RatMap& f, const Form& form);

// ∂p/∂v.
Poly derivative(const Poly& p, Var v);

// ω₁ = dx₁, ω₂ = dy₁, ω₃ = dx₂ − x₁dx₁ − y₁dy₁, ω₄ = dy₂ − x₁dy₁ + y₁dx₁.
Form omega(int i);
// θᵢⱼ = ωᵢ∧ωⱼ, 1 ≤ i < j ≤ 4.
Form theta(int i, int j);

// The two-forms met in the moduli computations use only dx₁∧dy₁,
// dx₁∧dx₂, dy₁∧dx₂, dx₁∧dy₂ and dy₁∧dy₂.
using TwoForm = Form;
bool in_twoform_basis(const Form& f);

// re + i·im.
struct ComplexForm {
    Form re{2}, im{2};

    ComplexForm scaled(const Gaussian& c) const;
    ComplexForm conj() const { return {re, Form(re.degree()) - im}; }
    friend ComplexForm operator+(const ComplexForm& a, const ComplexForm& b) { return {a.re + b.re, a.im + b.im}; }
    friend bool operator==(const ComplexForm&, const ComplexForm&) = default;
};

}  // namespace kodaira
