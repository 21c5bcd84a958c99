#pragma once

#include "kodaira/exactalg/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kodaira {

// Index into the fixed global variable universe. The order is part of the
// canonical form of every Poly and never changes at runtime.
using Var = std::uint8_t;

namespace var {
inline constexpr Var delta1 = 0;
inline constexpr Var eps1 = 1;
inline constexpr Var delta3 = 2;
inline constexpr Var eps3 = 3;
inline constexpr Var delta4 = 4;
inline constexpr Var eps4 = 5;
inline constexpr Var f1 = 6;
inline constexpr Var f2 = 7;
inline constexpr Var d1 = 8;
inline constexpr Var gamma1 = 9;
inline constexpr Var x1 = 10;
inline constexpr Var y1 = 11;
inline constexpr Var x2 = 12;
inline constexpr Var y2 = 13;
// Integer unknowns k0..k(kUnknownCount-1) used by the Diophantine layers.
inline constexpr Var first_unknown = 14;
inline constexpr int unknown_count = 34;
inline constexpr int count = first_unknown + unknown_count;

constexpr Var unknown(int i) { return static_cast<Var>(first_unknown + i); }
constexpr bool is_unknown(Var v) { return v >= first_unknown && v < count; }
}  // namespace var

std::string var_name(Var v);
std::optional<Var> var_by_name(std::string_view name);

// Exponent vector over the whole universe.
using Monomial = std::array<std::uint8_t, var::count>;

// Sparse polynomial over Rat. No zero coefficient is ever stored.
class Poly {
public:
    using Terms = std::map<Monomial, Rat>;

    Poly() = default;
    Poly(const Rat& c);  // NOLINT(google-explicit-constructor)
    Poly(long c) : Poly(Rat(c)) {}  // NOLINT(google-explicit-constructor)
    Poly(int c) : Poly(Rat(c)) {}   // NOLINT(google-explicit-constructor)
    static Poly variable(Var v);
    static Poly monomial(const Monomial& mono, const Rat& coeff);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Value of the constant term (0 when absent).
    Rat constant_term() const;
    // Throws unless the polynomial is constant.
    Rat constant_value() const;

    int degree_in(Var v) const;
    int total_degree() const;
    bool depends_on(Var v) const;
    std::vector<Var> variables() const;

    // Coefficient of v^1 viewed as a polynomial in the other variables.
    // Requires degree_in(v) <= 1.
    Poly coefficient_of(Var v) const;
    // The part free of v.
    Poly without(Var v) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    Poly pow(unsigned e) const;
    Poly scaled(const Rat& c) const;

    Poly substitute(Var v, const Poly& value) const;
    Poly substitute(const std::map<Var, Poly>& values) const;
    Poly instantiate(const std::map<Var, Rat>& values) const;
    // Requires every variable to be assigned.
    Rat evaluate(const std::map<Var, Rat>& values) const;

    // Product of denominators' lcm; scaling by it makes every coefficient integral.
    Int denominator_lcm() const;

    std::string str() const;

private:
    void add_term(const Monomial& mono, const Rat& coeff);
    Terms terms_;
};

Poly poly_arith(const Poly& a, const Poly& b, char op);

inline Poly operator*(const Rat& c, const Poly& p) { return p.scaled(c); }

}  // namespace kodaira
