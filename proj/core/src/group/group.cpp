#include "kodaira/group/group.hpp"

#include "kodaira/error.hpp"

#include <cstdlib>

namespace kodaira {

void KodairaParams::validate() const {
    if (m < 1) throw Error(ErrorKind::InvalidArgument, "m must be >= 1");
    if (delta1.is_zero()) throw Error(ErrorKind::InvalidArgument, "delta1 must be nonzero");
}

ParamValues<Rat> values_of(const KodairaParams& p) {
    return {p.delta1, p.eps1, p.eps2(), p.delta3, p.eps3, p.delta4, p.eps4};
}

ParamValues<Poly> symbolic_values(int m) {
    return {Poly::variable(var::delta1), Poly::variable(var::eps1), Poly(Rat(2, m)),
            Poly::variable(var::delta3), Poly::variable(var::eps3), Poly::variable(var::delta4),
            Poly::variable(var::eps4)};
}

std::string NormalWord::str() const {
    return "(" + std::to_string(b) + "," + std::to_string(a) + "," + std::to_string(l) + "," +
           std::to_string(t) + ")";
}

NormalWord gen_word(int index, std::int64_t e) {
    switch (index) {
        case 1: return {0, 0, e, 0};
        case 2: return {0, 0, 0, e};
        case 3: return {0, e, 0, 0};
        case 4: return {e, 0, 0, 0};
        default: throw Error(ErrorKind::InvalidArgument, "generator index must be 1..4");
    }
}

NormalWord multiply(const NormalWord& x, const NormalWord& y, int m) {
    return {x.b + y.b, x.a + y.a, x.l + y.l, x.t + y.t + static_cast<std::int64_t>(m) * x.a * y.b};
}

NormalWord inverse(const NormalWord& x, int m) {
    return {-x.b, -x.a, -x.l, -x.t + static_cast<std::int64_t>(m) * x.a * x.b};
}

NormalWord power(const NormalWord& x, std::int64_t n, int m) {
    // n(n-1)/2 is an integer for every integer n.
    std::int64_t tri = n * (n - 1) / 2;
    return {n * x.b, n * x.a, n * x.l, n * x.t + static_cast<std::int64_t>(m) * x.a * x.b * tri};
}

NormalWord commutator(const NormalWord& x, const NormalWord& y, int m) {
    return multiply(multiply(multiply(x, y, m), inverse(x, m), m), inverse(y, m), m);
}

NormalWord collect(const GroupWord& w, int m) {
    NormalWord acc;
    for (const auto& [gen, e] : w) {
        switch (gen) {
            case 1: acc.l += e; break;
            case 2: acc.t += e; break;
            case 3: acc.a += e; break;
            case 4: {
                // Move each g₄^{±1} left across g₃^{acc.a}, one swap at a time.
                const std::int64_t s_a = acc.a < 0 ? -1 : 1;
                const std::int64_t s_e = e < 0 ? -1 : 1;
                for (std::int64_t i = 0; i < std::llabs(acc.a); ++i)
                    for (std::int64_t j = 0; j < std::llabs(e); ++j) acc.t += static_cast<std::int64_t>(m) * s_a * s_e;
                acc.b += e;
                break;
            }
            default: throw Error(ErrorKind::InvalidArgument, "generator index must be 1..4");
        }
    }
    return acc;
}

GroupWord to_group_word(const NormalWord& w) { return {{4, w.b}, {3, w.a}, {1, w.l}, {2, w.t}}; }

std::array<RatMap, 4> generators(const KodairaParams& p) {
    p.validate();
    return generators(values_of(p));
}

bool verify_relations(const KodairaParams& p) { return verify_relations(generators(p), p.m); }

RatMap word_to_affine(const NormalWord& w, const KodairaParams& p) {
    auto g = generators(p);
    return affine_power(g[3], w.b) * affine_power(g[2], w.a) * affine_power(g[0], w.l) * affine_power(g[1], w.t);
}

RatMap word_to_affine(const GroupWord& w, const KodairaParams& p) {
    auto g = generators(p);
    RatMap f = RatMap::identity();
    for (const auto& [gen, e] : w) {
        if (gen < 1 || gen > 4) throw Error(ErrorKind::InvalidArgument, "generator index must be 1..4");
        f = f * affine_power(g[gen - 1], e);
    }
    return f;
}

SymbolicWord to_symbolic(const NormalWord& w) {
    return {Poly(Rat(w.b)), Poly(Rat(w.a)), Poly(Rat(w.l)), Poly(Rat(w.t))};
}

SymbolicWord multiply(const SymbolicWord& x, const SymbolicWord& y, int m) {
    return {x.b + y.b, x.a + y.a, x.l + y.l, x.t + y.t + (x.a * y.b).scaled(Rat(m))};
}

SymbolicWord power(const NormalWord& x, const Poly& n, int m) {
    Poly tri = (n * (n - Poly(1))).scaled(Rat(1, 2));
    return {n.scaled(Rat(x.b)), n.scaled(Rat(x.a)), n.scaled(Rat(x.l)),
            n.scaled(Rat(x.t)) + tri.scaled(Rat(static_cast<long>(m) * x.a * x.b))};
}

AffineMap4 unipotent_power(const AffineMap4& f, const Poly& n) {
    Mat4<Poly> nil = f.linear;
    for (int i = 0; i < 4; ++i) nil[i][i] -= Poly(1);
    AffineMap4 nn;
    nn.linear = nil;
    if (!((nn * nn).linear == Mat4<Poly>{})) throw Error(ErrorKind::InvalidArgument, "map is not 2-step unipotent");
    // f^n = (I + nN)x + (n + n(n-1)/2·N)v.
    Poly tri = (n * (n - Poly(1))).scaled(Rat(1, 2));
    AffineMap4 out = AffineMap4::identity();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out.linear[i][j] += n * nil[i][j];
    Vec4<Poly> nv = nn.apply_linear(f.translation);
    for (int i = 0; i < 4; ++i) out.translation[i] = n * f.translation[i] + tri * nv[i];
    return out;
}

template <class T>
AffineMap4 word_to_affine_symbolic(const SymbolicWord& w, const ParamValues<T>& v) {
    auto lift = [](const T& x) { return Poly(x); };
    AffineMap4 g3 = group_element<Poly>(Poly(1), Poly(0), lift(v.delta3), lift(v.eps3));
    AffineMap4 g4 = group_element<Poly>(Poly(0), Poly(1), lift(v.delta4), lift(v.eps4));
    AffineMap4 tail = AffineMap4::translation_by(
        {Poly(0), Poly(0), w.l * lift(v.delta1), w.l * lift(v.eps1) + w.t * lift(v.eps2)});
    return unipotent_power(g4, w.b) * unipotent_power(g3, w.a) * tail;
}

template AffineMap4 word_to_affine_symbolic<Rat>(const SymbolicWord&, const ParamValues<Rat>&);
template AffineMap4 word_to_affine_symbolic<Poly>(const SymbolicWord&, const ParamValues<Poly>&);

std::optional<NormalWord> try_affine_to_word(const RatMap& f, const KodairaParams& p) {
    p.validate();
    const auto& L = f.linear;
    const Rat& a = L[2][0];
    const Rat& b = L[2][1];
    const Mat4<Rat> expect = {{{1, 0, 0, 0}, {0, 1, 0, 0}, {a, b, 1, 0}, {-b, a, 0, 1}}};
    if (!(L == expect)) return std::nullopt;
    if (!a.is_integer() || !b.is_integer()) return std::nullopt;
    if (f.translation[0] != a || f.translation[1] != b) return std::nullopt;
    auto g = generators(p);
    NormalWord w{b.to_i64(), a.to_i64(), 0, 0};
    RatMap head = affine_power(g[3], w.b) * affine_power(g[2], w.a);
    RatMap rest = affine_inverse(head) * f;
    if (!rest.is_translation() || !rest.translation[0].is_zero() || !rest.translation[1].is_zero())
        return std::nullopt;
    Rat l = rest.translation[2] / p.delta1;
    if (!l.is_integer()) return std::nullopt;
    Rat t = (rest.translation[3] - l * p.eps1) / p.eps2();
    if (!t.is_integer()) return std::nullopt;
    w.l = l.to_i64();
    w.t = t.to_i64();
    return w;
}

NormalWord affine_to_word(const RatMap& f, const KodairaParams& p) {
    auto w = try_affine_to_word(f, p);
    if (!w) throw Error(ErrorKind::NotInG);
    return *w;
}

}  // namespace kodaira
