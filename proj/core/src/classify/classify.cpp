#include "kodaira/classify/classify.hpp"

#include "kodaira/error.hpp"
#include "kodaira/exactalg/dioph.hpp"

#include <algorithm>
#include <array>

namespace kodaira {

std::string to_string(EllipticCase e) {
    switch (e) {
        case EllipticCase::A1: return "A1";
        case EllipticCase::A2: return "A2";
        case EllipticCase::B: return "B";
    }
    return "?";
}

namespace {

struct LabelInfo {
    CaseLabel label;
    const char* name;
    int parity;  // -1 any, 0 even m, 1 odd m
};

constexpr std::array<LabelInfo, 18> kLabels = {{
    {CaseLabel::B1p, "1B'", -1},       {CaseLabel::B1pp, "1B''", -1},     {CaseLabel::B2, "2B", -1},
    {CaseLabel::A1aip, "1A1ai'", -1},  {CaseLabel::A1aipp, "1A1ai''", -1}, {CaseLabel::A1aiip, "1A1aii'", -1},
    {CaseLabel::A1aiipp, "1A1aii''", -1}, {CaseLabel::A1bip, "1A1bi'", -1}, {CaseLabel::A1bipp, "1A1bi''", -1},
    {CaseLabel::A1biip, "1A1bii'", -1}, {CaseLabel::A1biipp, "1A1bii''", -1}, {CaseLabel::A1_2, "2A1", -1},
    {CaseLabel::A2aip, "1A2ai'", 0},   {CaseLabel::A2aipp, "1A2ai''", 0},  {CaseLabel::A2aiip, "1A2aii'", 0},
    {CaseLabel::A2aiipp, "1A2aii''", 0}, {CaseLabel::A2_2i, "2A2i", 0},    {CaseLabel::A2_2ii, "2A2ii", 1},
}};

const LabelInfo& info(CaseLabel c) {
    for (const auto& li : kLabels)
        if (li.label == c) return li;
    throw Error(ErrorKind::InvalidArgument, "unknown case label");
}

[[noreturn]] void fail(const std::string& why) { throw Error(ErrorKind::InadmissibleExtension, why); }

std::int64_t floor_half(std::int64_t v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }

}  // namespace

const std::vector<CaseLabel>& all_labels() {
    static const std::vector<CaseLabel> labels = [] {
        std::vector<CaseLabel> out;
        for (const auto& li : kLabels) out.push_back(li.label);
        return out;
    }();
    return labels;
}

std::string label_name(CaseLabel c) { return info(c).name; }

std::optional<CaseLabel> parse_label(std::string_view name) {
    for (const auto& li : kLabels)
        if (name == li.name) return li.label;
    return std::nullopt;
}

bool label_occurs(CaseLabel c, int m) {
    int parity = info(c).parity;
    return parity < 0 || parity == m % 2;
}

Extension extension_of(const RealStructure& rs) { return extension_of_map(rs.params, rs.lifting_map()); }

Extension extension_of_map(const KodairaParams& p, const RatMap& sigma) {
    if (!admissible_map(sigma, p)) throw Error(ErrorKind::NotAdmissible);
    const auto& L = sigma.linear;
    bool case_a = L[0][0] == Rat(1) && L[0][1] == Rat(0);
    bool case_b = L[0][0] == Rat(0) && L[0][1] == Rat(1);
    if (!case_a && !case_b) throw Error(ErrorKind::NotAdmissible, "linear part is neither case A nor case B");

    NormalWord s = square_in_G_map(sigma, p);
    RatMap lift = sigma;
    if (case_a && s.a != 0 && s.a != 1) {
        lift = sigma * word_to_affine(gen_word(3, -floor_half(s.a)), p);
    } else if (case_b && s.b != 0) {
        lift = sigma * word_to_affine(gen_word(4, -s.b), p);
    }

    Extension e;
    e.params = p;
    e.conj = conjugation_data(lift, p);
    e.square = square_in_G_map(lift, p);
    e.lifting = lift;
    if (case_b) e.elliptic = EllipticCase::B;
    else e.elliptic = e.square.a == 0 ? EllipticCase::A1 : EllipticCase::A2;

    if (!(e.conj.images[1] == NormalWord{0, 0, 0, -1})) fail("conjugation of g2 is not g2^-1");
    bool head_ok = e.square.b == 0 && (e.square.a == 0 || (case_a && e.square.a == 1));
    if (!head_ok) fail("square " + e.square.str() + " has no normal head");
    return e;
}

std::string Move::str() const {
    auto n = [](std::int64_t v) { return std::to_string(v); };
    switch (kind) {
        case MoveKind::GeneratorG1: return "g1 -> g1*g2^" + n(y);
        case MoveKind::GeneratorG3: return "g3 -> g3*g1^" + n(x) + "*g2^" + n(y);
        case MoveKind::GeneratorG4: return "g4 -> g4*g1^" + n(x) + "*g2^" + n(y);
        case MoveKind::LiftingChange: return "sigma -> sigma*g1^" + n(x) + "*g2^" + n(y);
        case MoveKind::TranslationConj: return "sigma -> tau*sigma*tau^-1, tau = (0,0,0," + shift.pretty() + ")";
    }
    return "?";
}

namespace {

// New generators gᵢ' = α(gᵢ): ψ'(gᵢ') = α⁻¹ψα(gᵢ), s' = α⁻¹(s).
Extension change_generators(const Extension& e, const std::array<NormalWord, 4>& alpha,
                            const std::array<NormalWord, 4>& alpha_inv) {
    const int m = e.params.m;
    ConjugationData fwd{m, alpha}, back{m, alpha_inv};
    Extension out = e;
    for (int i = 0; i < 4; ++i) out.conj.images[i] = back.apply(e.conj.apply(fwd.apply(gen_word(i + 1))));
    out.square = back.apply(e.square);
    return out;
}

std::array<NormalWord, 4> generator_images() { return {gen_word(1), gen_word(2), gen_word(3), gen_word(4)}; }

bool trivial(const Move& mv) {
    if (mv.kind == MoveKind::TranslationConj) return mv.shift.is_zero();
    return mv.x == 0 && mv.y == 0;
}

}  // namespace

Extension apply_move(const Extension& e, const Move& mv) {
    const int m = e.params.m;
    auto fwd = generator_images();
    auto back = generator_images();
    Extension out = e;
    KodairaParams& p = out.params;
    switch (mv.kind) {
        case MoveKind::GeneratorG1:
            fwd[0] = {0, 0, 1, mv.y};
            back[0] = {0, 0, 1, -mv.y};
            out = change_generators(e, fwd, back);
            out.params.eps1 += Rat(mv.y) * e.params.eps2();
            return out;
        case MoveKind::GeneratorG3:
            fwd[2] = {0, 1, mv.x, mv.y};
            back[2] = {0, 1, -mv.x, -mv.y};
            out = change_generators(e, fwd, back);
            out.params.delta3 += Rat(mv.x) * e.params.delta1;
            out.params.eps3 += Rat(mv.x) * e.params.eps1 + Rat(mv.y) * e.params.eps2();
            return out;
        case MoveKind::GeneratorG4:
            fwd[3] = {1, 0, mv.x, mv.y};
            back[3] = {1, 0, -mv.x, -mv.y};
            out = change_generators(e, fwd, back);
            out.params.delta4 += Rat(mv.x) * e.params.delta1;
            out.params.eps4 += Rat(mv.x) * e.params.eps1 + Rat(mv.y) * e.params.eps2();
            return out;
        case MoveKind::LiftingChange: {
            NormalWord z{0, 0, mv.x, mv.y};
            out.square = multiply(multiply(e.conj.apply(z), e.square, m), z, m);
            if (out.lifting) out.lifting = *out.lifting * word_to_affine(z, p);
            return out;
        }
        case MoveKind::TranslationConj: {
            if (out.lifting) {
                RatMap tau = RatMap::translation_by({Rat(0), Rat(0), Rat(0), mv.shift});
                out.lifting = tau * *out.lifting * affine_inverse(tau);
            }
            return out;
        }
    }
    return out;
}

Extension replay(Extension e, const ReductionLog& log) {
    for (const auto& mv : log) e = apply_move(e, mv);
    return e;
}

std::pair<ConjugationData, NormalWord> normal_form_data(CaseLabel c, int m) {
    if (!label_occurs(c, m)) throw Error(ErrorKind::InvalidArgument, label_name(c) + " does not occur for this m");
    ConjugationData d;
    d.m = m;
    std::int64_t mu = 0, n = 0, u = 0, v = 0, p = 0;
    bool b_case = false, a2 = false;
    switch (c) {
        case CaseLabel::B1p: b_case = true; break;
        case CaseLabel::B1pp: b_case = true; p = 1; break;
        case CaseLabel::B2: b_case = true; mu = 1; break;
        case CaseLabel::A1aip: break;
        case CaseLabel::A1aipp: p = 1; break;
        case CaseLabel::A1aiip: u = 1; break;
        case CaseLabel::A1aiipp: u = 1; p = 1; break;
        case CaseLabel::A1bip: n = 1; break;
        case CaseLabel::A1bipp: n = 1; p = 1; break;
        case CaseLabel::A1biip: n = 1; u = 1; break;
        case CaseLabel::A1biipp: n = 1; u = 1; p = 1; break;
        case CaseLabel::A1_2: mu = 1; break;
        case CaseLabel::A2aip: a2 = true; v = -m / 2; break;
        case CaseLabel::A2aipp: a2 = true; v = -m / 2; p = 1; break;
        case CaseLabel::A2aiip: a2 = true; u = 1; v = -m / 2; break;
        case CaseLabel::A2aiipp: a2 = true; u = 1; v = -m / 2; p = 1; break;
        case CaseLabel::A2_2i: a2 = true; mu = 1; v = -m / 2; break;
        case CaseLabel::A2_2ii: a2 = true; mu = 1; u = 1; v = (1 - m) / 2; break;
    }
    d.images[0] = {0, 0, 1, mu};
    d.images[1] = {0, 0, 0, -1};
    if (b_case) {
        d.images[2] = gen_word(4);
        d.images[3] = gen_word(3);
    } else {
        d.images[2] = {0, 1, 0, n};
        d.images[3] = {-1, 0, u, v};
    }
    return {d, NormalWord{0, a2 ? 1 : 0, p, 0}};
}

Reduction reduce(const Extension& input) {
    Extension e = input;
    ReductionLog log;
    const int m = e.params.m;
    auto step = [&](const Move& mv) {
        if (trivial(mv)) return;
        e = apply_move(e, mv);
        log.push_back(mv);
    };
    auto img = [&](int i) -> const NormalWord& { return e.conj.images[i - 1]; };

    if (!(img(2) == NormalWord{0, 0, 0, -1})) fail("conjugation of g2 is not g2^-1");
    if (!(img(1).b == 0 && img(1).a == 0 && img(1).l == 1)) fail("conjugation of g1 is not g1*g2^mu");
    const bool b_case = e.elliptic == EllipticCase::B;
    const bool a2 = e.elliptic == EllipticCase::A2;
    if (b_case) {
        if (img(3).b != 1 || img(3).a != 0) fail("case B needs conjugation of g3 in g4*Z");
    } else {
        if (img(3).b != 0 || img(3).a != 1) fail("case A needs conjugation of g3 in g3*Z");
        if (img(4).b != -1 || img(4).a != 0) fail("case A needs conjugation of g4 in g4^-1*Z");
    }
    if (e.square.b != 0 || e.square.a != (a2 ? 1 : 0)) fail("square head does not match the elliptic case");

    // μ ↦ μ - 2t lands in {0, 1}.
    step({MoveKind::GeneratorG1, 0, floor_half(e.mu()), {}});
    const bool case2 = e.mu() == 1;

    if (b_case) {
        const std::int64_t r = img(3).l, n = img(3).t;
        step({MoveKind::GeneratorG3, -r, n - e.mu() * r, {}});
        if (!(img(3) == gen_word(4))) fail("conjugation of g3 did not normalize to g4");
        if (!(img(4) == gen_word(3))) fail("conjugation of g4 is not g3");
    } else {
        if (img(3).l != 0) fail("conjugation of g3 carries a g1 factor");
        const std::int64_t n = img(3).t;
        if (!case2) {
            step({MoveKind::GeneratorG3, 0, floor_half(n), {}});
        } else if (n % 2 == 0) {
            step({MoveKind::GeneratorG3, 0, n / 2, {}});
        } else {
            step({MoveKind::GeneratorG3, 1, (n + 1) / 2, {}});
        }
        if (case2 && img(3).t != 0) fail("conjugation of g3 did not normalize");

        const std::int64_t u = img(4).l, v = img(4).t;
        const std::int64_t defect = e.mu() * u - 2 * v;
        if (!a2 && defect != 0) fail("mu*u = 2v fails");
        if (a2 && defect != m) fail("mu*u - 2v = m fails");
        if (!a2 && case2 && u % 2 != 0) fail("case 2A1 needs u even");
        step({MoveKind::GeneratorG4, -floor_half(u), 0, {}});
    }

    if (!(e.conj.apply(e.square) == e.square)) {
        if (a2 && !case2 && img(3).t == 1) fail("case 1A2b does not occur");
        fail("square is not fixed by the conjugation");
    }
    if (a2 && !case2 && img(3).t != 0) fail("case 1A2b does not occur");

    const std::int64_t p = e.square.l, q = e.square.t;
    if (!case2) {
        if (q != 0) fail("square has a g2 factor in case 1");
        step({MoveKind::LiftingChange, -floor_half(p), 0, {}});
    } else {
        if (p != 2 * q) fail("p = 2q fails in case 2");
        step({MoveKind::LiftingChange, -q, 0, {}});
    }
    if (e.lifting && !e.lifting->translation[3].is_zero()) {
        step({MoveKind::TranslationConj, 0, 0, -e.lifting->translation[3] / Rat(2)});
    }

    CaseLabel label;
    const bool primed = e.square.l == 0;
    if (b_case) {
        label = case2 ? CaseLabel::B2 : (primed ? CaseLabel::B1p : CaseLabel::B1pp);
    } else if (!a2) {
        if (case2) {
            label = CaseLabel::A1_2;
        } else {
            static constexpr CaseLabel table[2][2][2] = {
                {{CaseLabel::A1aip, CaseLabel::A1aipp}, {CaseLabel::A1aiip, CaseLabel::A1aiipp}},
                {{CaseLabel::A1bip, CaseLabel::A1bipp}, {CaseLabel::A1biip, CaseLabel::A1biipp}}};
            label = table[img(3).t][img(4).l][primed ? 0 : 1];
        }
    } else if (case2) {
        label = m % 2 == 0 ? CaseLabel::A2_2i : CaseLabel::A2_2ii;
    } else {
        static constexpr CaseLabel table[2][2] = {{CaseLabel::A2aip, CaseLabel::A2aipp},
                                                  {CaseLabel::A2aiip, CaseLabel::A2aiipp}};
        label = table[img(4).l][primed ? 0 : 1];
    }

    auto [conj, square] = normal_form_data(label, m);
    if (!(conj == e.conj) || !(square == e.square)) fail("reduction did not reach the normal form of " + label_name(label));
    return {label, log, e};
}

std::optional<NormalWord> splitting_witness(const Extension& e) {
    const int m = e.params.m;
    SymbolicWord g{Poly::variable(var::unknown(0)), Poly::variable(var::unknown(1)),
                   Poly::variable(var::unknown(2)), Poly::variable(var::unknown(3))};
    // (σ̃g)² = ψ(g)·σ̃²·g.
    SymbolicWord sq = multiply(multiply(e.conj.apply(g), to_symbolic(e.square), m), g, m);
    auto sol = solve_integer_system({sq.b, sq.a, sq.l, sq.t},
                                    {var::unknown(0), var::unknown(1), var::unknown(2), var::unknown(3)});
    if (!sol) return std::nullopt;
    NormalWord w{(*sol)[0].get_si(), (*sol)[1].get_si(), (*sol)[2].get_si(), (*sol)[3].get_si()};
    if (!multiply(multiply(e.conj.apply(w), e.square, m), w, m).is_identity())
        throw Error(ErrorKind::Unsupported, "splitting witness failed verification");
    return w;
}

bool splits(const Extension& e) { return splitting_witness(e).has_value(); }

std::optional<NormalWord> brute_force_splitting_witness(const Extension& e, int bound) {
    const int m = e.params.m;
    for (std::int64_t b = -bound; b <= bound; ++b)
        for (std::int64_t a = -bound; a <= bound; ++a)
            for (std::int64_t l = -bound; l <= bound; ++l)
                for (std::int64_t t = -bound; t <= bound; ++t) {
                    NormalWord g{b, a, l, t};
                    if (multiply(multiply(e.conj.apply(g), e.square, m), g, m).is_identity()) return g;
                }
    return std::nullopt;
}

RealStructure representative(CaseLabel c, int m) {
    if (m < 1) throw Error(ErrorKind::InvalidArgument, "m must be >= 1");
    if (!label_occurs(c, m)) throw Error(ErrorKind::InvalidArgument, label_name(c) + " does not occur for this m");
    const Rat half(1, 2), inv_m(1, m), eps2(2, m);
    KodairaParams p;
    p.m = m;
    p.delta1 = 1;
    p.delta3 = 1;
    p.eps3 = 0;
    p.eps4 = 0;
    LinearCase kind = LinearCase::A;
    Rat f1, f2, d1, gamma1;
    switch (c) {
        case CaseLabel::B1p: kind = LinearCase::B; p.delta4 = 1; break;
        case CaseLabel::B1pp: kind = LinearCase::B; p.delta4 = 1; gamma1 = half; break;
        case CaseLabel::B2: kind = LinearCase::B; p.eps1 = -inv_m; p.delta4 = 1; break;
        case CaseLabel::A1aip: p.delta4 = half; break;
        case CaseLabel::A1aipp: p.delta4 = half; gamma1 = half; break;
        case CaseLabel::A1aiip: p.delta4 = 1; break;
        case CaseLabel::A1aiipp: p.delta4 = 1; gamma1 = half; break;
        case CaseLabel::A1bip: p.delta4 = half - inv_m; f2 = eps2; break;
        case CaseLabel::A1bipp: p.delta4 = half - inv_m; f2 = eps2; gamma1 = half; break;
        case CaseLabel::A1biip: p.delta4 = Rat(1) - inv_m; f2 = eps2; break;
        case CaseLabel::A1biipp: p.delta4 = Rat(1) - inv_m; f2 = eps2; gamma1 = half; break;
        case CaseLabel::A1_2: p.eps1 = -inv_m; p.delta4 = half; break;
        case CaseLabel::A2aip: p.delta4 = half; f1 = d1 = half; gamma1 = Rat(3, 8); break;
        case CaseLabel::A2aipp: p.delta4 = half; f1 = d1 = half; gamma1 = Rat(7, 8); break;
        case CaseLabel::A2aiip: p.delta4 = 1; f1 = d1 = half; gamma1 = Rat(3, 8); break;
        case CaseLabel::A2aiipp: p.delta4 = 1; f1 = d1 = half; gamma1 = Rat(7, 8); break;
        case CaseLabel::A2_2i: p.eps1 = -inv_m; p.delta4 = half; f1 = d1 = half; gamma1 = Rat(3, 8); break;
        case CaseLabel::A2_2ii: p.eps1 = -inv_m; p.delta4 = 1; f1 = d1 = half; gamma1 = Rat(3, 8); break;
    }
    return RealStructure::make(p, Lifting::make(kind, f1, f2, d1, gamma1));
}

std::vector<CaseRepresentative> enumerate_cases(int m) {
    std::vector<CaseRepresentative> out;
    for (CaseLabel c : all_labels()) {
        if (!label_occurs(c, m)) continue;
        RealStructure rs = representative(c, m);
        CaseLabel got = reduce(extension_of(rs)).label;
        if (got != c)
            throw Error(ErrorKind::InadmissibleExtension,
                        "representative of " + label_name(c) + " reduces to " + label_name(got));
        out.push_back({c, rs});
    }
    return out;
}

bool pair_equivalent(const Extension& e1, const Extension& e2) {
    if (e1.params.m != e2.params.m || !(e1.conj == e2.conj)) return false;
    if (e1.square.b != e2.square.b || e1.square.a != e2.square.a) return false;
    const int m = e1.params.m;
    SymbolicWord z{Poly(0), Poly(0), Poly::variable(var::unknown(0)), Poly::variable(var::unknown(1))};
    // (σ̃z)² = ψ(z)·σ̃²·z must equal σ̃'².
    SymbolicWord sq = multiply(multiply(e1.conj.apply(z), to_symbolic(e1.square), m), z, m);
    SymbolicWord target = to_symbolic(e2.square);
    auto sol = solve_integer_system({sq.b - target.b, sq.a - target.a, sq.l - target.l, sq.t - target.t},
                                    {var::unknown(0), var::unknown(1)});
    return sol.has_value();
}

std::vector<std::pair<CaseLabel, CaseLabel>> primed_pairs(int m) {
    const std::vector<std::pair<CaseLabel, CaseLabel>> all = {
        {CaseLabel::B1p, CaseLabel::B1pp},       {CaseLabel::A1aip, CaseLabel::A1aipp},
        {CaseLabel::A1aiip, CaseLabel::A1aiipp}, {CaseLabel::A1bip, CaseLabel::A1bipp},
        {CaseLabel::A1biip, CaseLabel::A1biipp}, {CaseLabel::A2aip, CaseLabel::A2aipp},
        {CaseLabel::A2aiip, CaseLabel::A2aiipp}};
    std::vector<std::pair<CaseLabel, CaseLabel>> out;
    for (const auto& pr : all)
        if (label_occurs(pr.first, m) && label_occurs(pr.second, m)) out.push_back(pr);
    return out;
}

bool distinct_pairs_check(int m) {
    for (const auto& [c1, c2] : primed_pairs(m)) {
        Extension e1 = reduce(extension_of(representative(c1, m))).normal;
        Extension e2 = reduce(extension_of(representative(c2, m))).normal;
        if (!(e1.conj == e2.conj)) throw Error(ErrorKind::InvalidArgument, "pair with different conjugation data");
        if (pair_equivalent(e1, e2)) return false;
    }
    return true;
}

}  // namespace kodaira
