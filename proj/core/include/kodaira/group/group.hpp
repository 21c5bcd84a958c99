#pragma once

#include "kodaira/exactalg/affine.hpp"
#include "kodaira/exactalg/poly.hpp"
#include "kodaira/exactalg/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kodaira {

// One primary Kodaira surface. Derived: δ₂ = 0, ε₂ = 2/m, and the lattice
// generators a₃ = 1, b₃ = 0, a₄ = 0, b₄ = 1.
struct KodairaParams {
    int m = 1;
    Rat delta1{1};
    Rat eps1{0};
    Rat delta3{1};
    Rat eps3{0};
    Rat delta4{0};
    Rat eps4{0};

    Rat eps2() const { return Rat(2, m); }
    // Throws InvalidArgument unless m >= 1 and δ₁ ≠ 0.
    void validate() const;

    friend bool operator==(const KodairaParams&, const KodairaParams&) = default;
};

// Generator data with ε₂ kept explicit so that broken relations can be built.
template <class T>
struct ParamValues {
    T delta1, eps1, eps2, delta3, eps3, delta4, eps4;
};

ParamValues<Rat> values_of(const KodairaParams& p);
// δ₁, ε₁, δ₃, ε₃, δ₄, ε₄ as polynomial variables; ε₂ = 2/m.
ParamValues<Poly> symbolic_values(int m);

// g₄^b g₃^a g₁^l g₂^t. Every integer tuple is a valid element.
struct NormalWord {
    std::int64_t b = 0, a = 0, l = 0, t = 0;

    bool is_identity() const { return b == 0 && a == 0 && l == 0 && t == 0; }
    bool is_central() const { return b == 0 && a == 0; }
    std::string str() const;
    friend bool operator==(const NormalWord&, const NormalWord&) = default;
    friend auto operator<=>(const NormalWord&, const NormalWord&) = default;
};

NormalWord gen_word(int index, std::int64_t exponent = 1);

// Closed-form group law of G for torsion m:
// (b,a,l,t)(b',a',l',t') = (b+b', a+a', l+l', t+t'+m·a·b').
NormalWord multiply(const NormalWord& x, const NormalWord& y, int m);
NormalWord inverse(const NormalWord& x, int m);
NormalWord power(const NormalWord& x, std::int64_t n, int m);
NormalWord commutator(const NormalWord& x, const NormalWord& y, int m);

struct Letter {
    int gen;  // 1..4
    std::int64_t exp;
};
using GroupWord = std::vector<Letter>;

// Normal form of a word using only g₃g₄ = g₄g₃g₂^m and centrality of g₁, g₂.
NormalWord collect(const GroupWord& w, int m);
GroupWord to_group_word(const NormalWord& w);

template <class T>
AffineMap<T> group_element(const T& a, const T& b, const T& delta, const T& eps) {
    AffineMap<T> f = AffineMap<T>::identity();
    f.linear[2][0] = a;
    f.linear[2][1] = b;
    f.linear[3][0] = -b;
    f.linear[3][1] = a;
    f.translation = {a, b, delta, eps};
    return f;
}

template <class T>
std::array<AffineMap<T>, 4> generators(const ParamValues<T>& v) {
    return {group_element<T>(T(0), T(0), v.delta1, v.eps1), group_element<T>(T(0), T(0), T(0), v.eps2),
            group_element<T>(T(1), T(0), v.delta3, v.eps3), group_element<T>(T(0), T(1), v.delta4, v.eps4)};
}

std::array<RatMap, 4> generators(const KodairaParams& p);

template <class T>
bool verify_relations(const std::array<AffineMap<T>, 4>& g, int m) {
    const auto& [g1, g2, g3, g4] = g;
    auto comm = g3 * g4 * affine_inverse(g3) * affine_inverse(g4);
    if (!(comm == affine_power(g2, m))) return false;
    for (const auto& z : {g1, g2}) {
        for (const auto& x : g) {
            if (!(z * x == x * z)) return false;
        }
    }
    return true;
}

bool verify_relations(const KodairaParams& p);

RatMap word_to_affine(const NormalWord& w, const KodairaParams& p);
RatMap word_to_affine(const GroupWord& w, const KodairaParams& p);

// g₄^b g₃^a g₁^l g₂^t with polynomial exponents, valid for every integer
// value of the exponents (g₃, g₄ are unipotent with (L - I)² = 0).
struct SymbolicWord {
    Poly b, a, l, t;
};
SymbolicWord to_symbolic(const NormalWord& w);
// The group law with polynomial exponents; exact as polynomial identities.
SymbolicWord multiply(const SymbolicWord& x, const SymbolicWord& y, int m);
SymbolicWord power(const NormalWord& x, const Poly& n, int m);

template <class T>
AffineMap4 word_to_affine_symbolic(const SymbolicWord& w, const ParamValues<T>& v);

// f^n for a unipotent f with (L - I)² = 0 and symbolic n.
AffineMap4 unipotent_power(const AffineMap4& f, const Poly& n);

std::optional<NormalWord> try_affine_to_word(const RatMap& f, const KodairaParams& p);
// Throws NotInG.
NormalWord affine_to_word(const RatMap& f, const KodairaParams& p);

}  // namespace kodaira
