#include "kodaira/error.hpp"
#include "kodaira/group/group.hpp"
#include "kodaira/sampling.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace kodaira;

namespace {

KodairaParams sample_params(int m) {
    KodairaParams p;
    p.m = m;
    p.delta1 = Rat(1);
    p.eps1 = Rat(0);
    p.delta3 = Rat(1);
    p.eps3 = Rat(0);
    p.delta4 = Rat(1, 2);
    p.eps4 = Rat(0);
    return p;
}

GroupWord inverse_word(const GroupWord& w) {
    GroupWord r;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back({it->gen, -it->exp});
    return r;
}

GroupWord concat(GroupWord a, const GroupWord& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

TEST_CASE("generators examples") {
    KodairaParams p = sample_params(2);
    auto g = generators(p);
    CHECK(g[1] == RatMap::translation_by({Rat(0), Rat(0), Rat(0), Rat(1)}));
    CHECK(g[0] == RatMap::translation_by({Rat(0), Rat(0), Rat(1), Rat(0)}));
    for (int i = 1; i <= 4; ++i) CHECK(g[i - 1] == oracle::generator(p, i));
    KodairaParams q = sample_params(3);
    CHECK(verify_relations(q));
    // Oracle: the relation checked by direct matrix composition.
    auto o = [&](int i) { return oracle::generator(q, i); };
    RatMap comm = oracle::compose(oracle::compose(o(3), o(4)),
                                  oracle::compose(*oracle::gauss_inverse(o(3)), *oracle::gauss_inverse(o(4))));
    CHECK(comm == oracle::power(o(2), 3));
}

TEST_CASE("KodairaParams validation") {
    KodairaParams p;
    p.m = 0;
    CHECK_THROWS_AS(p.validate(), Error);
    p.m = 2;
    p.delta1 = Rat(0);
    CHECK_THROWS_AS(p.validate(), Error);
    CHECK(sample_params(4).eps2() == Rat(1, 2));
}

TEST_CASE("verify_relations symbolic and broken") {
    for (int m = 1; m <= 5; ++m) CHECK(verify_relations(generators(symbolic_values(m)), m));
    ParamValues<Rat> v = values_of(sample_params(3));
    v.eps2 = Rat(1, 3);
    CHECK_FALSE(verify_relations(generators(v), 3));
}

TEST_CASE("collect examples") {
    for (int m : {1, 2, 5}) {
        GroupWord comm{{3, 1}, {4, 1}, {3, -1}, {4, -1}};
        CHECK(collect(comm, m) == NormalWord{0, 0, 0, m});
        GroupWord central{{1, 1}, {2, 1}, {1, -1}, {2, -1}};
        CHECK(collect(central, m).is_identity());
    }
    // g₃g₄ = g₄g₃g₂^m, one swap.
    CHECK(collect({{3, 1}, {4, 1}}, 3) == NormalWord{1, 1, 0, 3});
    CHECK(collect({{3, 2}, {4, 3}}, 1) == NormalWord{3, 2, 0, 6});
}

TEST_CASE("collect agrees with affine composition (m = 2, length 12)") {
    Sampler s(seed_from_env(21));
    KodairaParams p = sample_params(2);
    for (int i = 0; i < 200; ++i) {
        GroupWord w = s.word(12, 3);
        CHECK(word_to_affine(collect(w, 2), p) == oracle::word_map(w, p));
    }
}

TEST_CASE("oracle equivalence on random words and parameters") {
    Sampler s(seed_from_env(22));
    for (int i = 0; i < 400; ++i) {
        int m = static_cast<int>(s.integer(1, 6));
        KodairaParams p = s.params(m);
        GroupWord w = s.word(12, 3);
        NormalWord n = collect(w, m);
        CHECK(word_to_affine(n, p) == oracle::word_map(w, p));
        CHECK(word_to_affine(w, p) == oracle::word_map(w, p));
    }
}

TEST_CASE("collect is a homomorphism on concatenation") {
    Sampler s(seed_from_env(23));
    for (int i = 0; i < 300; ++i) {
        int m = static_cast<int>(s.integer(1, 5));
        GroupWord a = s.word(8, 3), b = s.word(8, 3);
        CHECK(collect(concat(a, b), m) == multiply(collect(a, m), collect(b, m), m));
        CHECK(collect(concat(a, inverse_word(a)), m).is_identity());
        CHECK(inverse(collect(a, m), m) == collect(inverse_word(a), m));
    }
}

TEST_CASE("conjugates of g1 and g2 are central") {
    Sampler s(seed_from_env(24));
    for (int i = 0; i < 200; ++i) {
        int m = static_cast<int>(s.integer(1, 5));
        GroupWord h = s.word(8, 3);
        for (int gen : {1, 2}) {
            GroupWord w = concat(concat(h, {{gen, s.integer(-3, 3)}}), inverse_word(h));
            CHECK(collect(w, m).is_central());
        }
    }
}

TEST_CASE("(b, a) projection is a surjective homomorphism with central kernel") {
    Sampler s(seed_from_env(25));
    for (int i = 0; i < 200; ++i) {
        int m = static_cast<int>(s.integer(1, 5));
        GroupWord a = s.word(8, 3), b = s.word(8, 3);
        NormalWord x = collect(a, m), y = collect(b, m), xy = collect(concat(a, b), m);
        CHECK(xy.b == x.b + y.b);
        CHECK(xy.a == x.a + y.a);
        // Kernel: words with zero head are products of g₁, g₂ only.
        if (x.is_central()) CHECK(word_to_affine(x, s.params(m)).is_translation());
        // Surjectivity: (b, a) is hit by g₄^b g₃^a.
        std::int64_t bb = s.integer(-5, 5), aa = s.integer(-5, 5);
        NormalWord hit = collect({{4, bb}, {3, aa}}, m);
        CHECK((hit.b == bb && hit.a == aa));
    }
}

TEST_CASE("word_to_affine examples") {
    KodairaParams p = sample_params(2);
    auto g = generators(p);
    CHECK(word_to_affine(NormalWord{}, p) == RatMap::identity());
    CHECK(word_to_affine(NormalWord{0, 0, 1, 0}, p) == g[0]);
    CHECK(word_to_affine(NormalWord{1, 1, 0, 0}, p) == oracle::compose(g[3], g[2]));
}

TEST_CASE("affine_to_word examples") {
    KodairaParams p = sample_params(2);
    CHECK(affine_to_word(RatMap::identity(), p) == NormalWord{});
    NormalWord w{2, -1, 3, 5};
    CHECK(affine_to_word(word_to_affine(w, p), p) == w);
    RatMap half = RatMap::translation_by({Rat(0), Rat(0), Rat(1, 2), Rat(0)});
    CHECK_THROWS_WITH_AS(affine_to_word(half, p), doctest::Contains("not in G"), Error);
    CHECK_FALSE(try_affine_to_word(half, p));
}

TEST_CASE("affine_to_word round trip on random words") {
    Sampler s(seed_from_env(26));
    for (int i = 0; i < 300; ++i) {
        KodairaParams p = s.params(static_cast<int>(s.integer(1, 5)));
        NormalWord w = s.normal_word(6);
        CHECK(affine_to_word(word_to_affine(w, p), p) == w);
    }
}

TEST_CASE("closed-form group law matches collection") {
    Sampler s(seed_from_env(27));
    for (int i = 0; i < 300; ++i) {
        int m = static_cast<int>(s.integer(1, 5));
        NormalWord x = s.normal_word(4), y = s.normal_word(4);
        CHECK(multiply(x, y, m) == collect(concat(to_group_word(x), to_group_word(y)), m));
        std::int64_t n = s.integer(-4, 4);
        GroupWord rep;
        for (std::int64_t k = 0; k < (n >= 0 ? n : -n); ++k) rep = concat(rep, to_group_word(n >= 0 ? x : inverse(x, m)));
        CHECK(power(x, n, m) == collect(rep, m));
    }
}

TEST_CASE("symbolic words instantiate to concrete words") {
    Sampler s(seed_from_env(28));
    const Var e = var::unknown(0);
    for (int i = 0; i < 50; ++i) {
        int m = static_cast<int>(s.integer(1, 4));
        KodairaParams p = s.params(m);
        NormalWord x = s.normal_word(3);
        SymbolicWord px = power(x, Poly::variable(e), m);
        for (std::int64_t n = -3; n <= 3; ++n) {
            std::map<Var, Rat> at{{e, Rat(n)}};
            NormalWord expect = power(x, n, m);
            CHECK(px.b.evaluate(at) == Rat(expect.b));
            CHECK(px.a.evaluate(at) == Rat(expect.a));
            CHECK(px.l.evaluate(at) == Rat(expect.l));
            CHECK(px.t.evaluate(at) == Rat(expect.t));
            AffineMap4 f = word_to_affine_symbolic(px, values_of(p));
            CHECK(instantiate(f, at) == word_to_affine(expect, p));
        }
    }
}
