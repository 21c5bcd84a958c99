#include "kodaira/realstruct/realstruct.hpp"

#include "kodaira/error.hpp"

namespace kodaira {

std::string to_string(LinearCase c) { return c == LinearCase::A ? "A" : "B"; }

Lifting Lifting::make(LinearCase kind, const Rat& f1, const Rat& f2, const Rat& d1, const Rat& gamma1,
                      const Rat& gamma2) {
    (void)gamma2;  // removed by the central translation conjugation
    Lifting l;
    l.kind = kind;
    l.f1 = f1;
    l.f2 = f2;
    l.d1 = d1;
    l.gamma1 = gamma1;
    return l;
}

namespace {

template <class T>
AffineMap<T> lifting_shape(const T& c1, const T& c2, const T& f1, const T& f2, const Vec4<T>& translation) {
    AffineMap<T> s;
    s.linear = {{{c1, c2, T(0), T(0)}, {c2, -c1, T(0), T(0)}, {f1, f2, T(1), T(0)}, {f2, -f1, T(0), T(-1)}}};
    s.translation = translation;
    return s;
}

}  // namespace

RatMap lifting_to_affine(const Lifting& l) {
    return lifting_shape<Rat>(l.c1(), l.c2(), l.f1, l.f2, {l.d1, l.d2, l.gamma1, l.gamma2});
}

AffineMap4 lifting_to_affine_symbolic(LinearCase kind) {
    Poly c1(kind == LinearCase::A ? 1 : 0), c2(kind == LinearCase::A ? 0 : 1);
    return lifting_shape<Poly>(c1, c2, Poly::variable(var::f1), Poly::variable(var::f2),
                               {Poly::variable(var::d1), Poly(0), Poly::variable(var::gamma1), Poly(0)});
}

NormalWord ConjugationData::apply(const NormalWord& w) const {
    NormalWord r = power(images[3], w.b, m);
    r = multiply(r, power(images[2], w.a, m), m);
    r = multiply(r, power(images[0], w.l, m), m);
    return multiply(r, power(images[1], w.t, m), m);
}


SymbolicWord ConjugationData::apply(const SymbolicWord& w) const {
    SymbolicWord r = power(images[3], w.b, m);
    r = multiply(r, power(images[2], w.a, m), m);
    r = multiply(r, power(images[0], w.l, m), m);
    return multiply(r, power(images[1], w.t, m), m);
}

RealStructure RealStructure::make(const KodairaParams& params, const Lifting& lifting, const NormalWord& twist) {
    params.validate();
    if (auto why = admissibility_failure(lifting_to_affine(lifting), params))
        throw Error(ErrorKind::NotAdmissible, *why);
    return RealStructure{params, lifting, twist};
}

RatMap RealStructure::lifting_map() const {
    RatMap s = lifting_to_affine(lifting);
    if (twist.is_identity()) return s;
    return s * word_to_affine(twist, params);
}

std::optional<std::string> admissibility_failure(const RatMap& sigma, const KodairaParams& p) {
    p.validate();
    RatMap inv;
    try {
        inv = affine_inverse(sigma);
    } catch (const Error&) {
        return "singular linear part";
    }
    auto g = generators(p);
    for (int i = 0; i < 4; ++i) {
        auto w = try_affine_to_word(sigma * g[i] * inv, p);
        const std::string name = "conjugate of g" + std::to_string(i + 1);
        if (!w) return name + " is not in G";
        if (i < 2 && !w->is_central()) return name + " is not central";
    }
    if (!try_affine_to_word(sigma * sigma, p)) return "square of the lifting is not in G";
    return std::nullopt;
}

bool admissible_map(const RatMap& sigma, const KodairaParams& p) { return !admissibility_failure(sigma, p); }

bool admissible(const Lifting& l, const KodairaParams& p) { return admissible_map(lifting_to_affine(l), p); }

NormalWord conj_action_map(const RatMap& sigma, const KodairaParams& p, int i) {
    if (i < 1 || i > 4) throw Error(ErrorKind::InvalidArgument, "generator index must be 1..4");
    if (!admissible_map(sigma, p)) throw Error(ErrorKind::NotAdmissible);
    return affine_to_word(sigma * generators(p)[i - 1] * affine_inverse(sigma), p);
}

NormalWord conj_action(const Lifting& l, const KodairaParams& p, int i) {
    return conj_action_map(lifting_to_affine(l), p, i);
}

ConjugationData conjugation_data(const RatMap& sigma, const KodairaParams& p) {
    if (!admissible_map(sigma, p)) throw Error(ErrorKind::NotAdmissible);
    ConjugationData d;
    d.m = p.m;
    RatMap inv = affine_inverse(sigma);
    auto g = generators(p);
    for (int i = 0; i < 4; ++i) d.images[i] = affine_to_word(sigma * g[i] * inv, p);
    return d;
}

NormalWord square_in_G_map(const RatMap& sigma, const KodairaParams& p) {
    if (!admissible_map(sigma, p)) throw Error(ErrorKind::NotAdmissible);
    return affine_to_word(sigma * sigma, p);
}

NormalWord square_in_G(const Lifting& l, const KodairaParams& p) {
    return square_in_G_map(lifting_to_affine(l), p);
}

namespace {

// x + iy ∈ Z + Zi.
bool in_gaussian_integers(const Rat& x, const Rat& y) { return x.is_integer() && y.is_integer(); }

// x + iy ∈ Zβ₁ + Zβ₂ with β₁ = δ₁ + iε₁, β₂ = iε₂.
bool in_beta_lattice(const Rat& x, const Rat& y, const KodairaParams& p) {
    Rat k1 = x / p.delta1;
    if (!k1.is_integer()) return false;
    return ((y - k1 * p.eps1) / p.eps2()).is_integer();
}

}  // namespace

bool lattice_conditions(const Lifting& l, const KodairaParams& p) {
    p.validate();
    const Rat c1 = l.c1(), c2 = l.c2();
    if (c1 * c1 + c2 * c2 != Rat(1)) return false;
    // c·conj(z) + z for z = u + iv.
    auto twisted = [&](const Rat& u, const Rat& v) {
        return std::pair<Rat, Rat>{c1 * u + c2 * v + u, c2 * u - c1 * v + v};
    };
    auto [fr, fi] = twisted(l.f1, l.f2);
    auto [dr, di] = twisted(l.d1, l.d2);
    if (fr != dr || fi != di || !in_gaussian_integers(dr, di)) return false;
    // conj(β₁) and conj(β₂) in Γ_β.
    if (!in_beta_lattice(p.delta1, -p.eps1, p) || !in_beta_lattice(Rat(0), -p.eps2(), p)) return false;
    // c·conj(1) = c and c·conj(i) = -ic in Z + Zi.
    return in_gaussian_integers(c1, c2) && in_gaussian_integers(c2, -c1);
}

}  // namespace kodaira
