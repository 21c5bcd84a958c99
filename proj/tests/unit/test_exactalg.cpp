#include "kodaira/error.hpp"
#include "kodaira/exactalg/dioph.hpp"
#include "kodaira/exactalg/linalg.hpp"
#include "kodaira/exactalg/poly.hpp"
#include "kodaira/group/group.hpp"
#include "kodaira/realstruct/realstruct.hpp"
#include "kodaira/classify/classify.hpp"
#include "kodaira/sampling.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace kodaira;

namespace {

Poly random_poly(Sampler& s) {
    const Var vars[] = {var::delta1, var::eps3, var::f2};
    Poly p;
    for (std::int64_t n = s.integer(0, 4); n > 0; --n) {
        Poly term(s.rational(6, 4));
        for (Var v : vars) term *= Poly::variable(v).pow(static_cast<unsigned>(s.integer(0, 2)));
        p += term;
    }
    return p;
}

bool satisfies(const DiophSystem& sys, const IntVector& x) {
    for (std::size_t r = 0; r < sys.a.size(); ++r) {
        Int acc = 0;
        for (std::size_t c = 0; c < x.size(); ++c) acc += sys.a[r][c] * x[c];
        if (acc != sys.b[r]) return false;
    }
    return true;
}

// Every integer point in the box [-bound, bound]^n.
template <class F>
void for_box(int n, int bound, F&& f) {
    std::vector<std::int64_t> x(n, -bound);
    while (true) {
        f(x);
        int k = 0;
        while (k < n && ++x[k] > bound) x[k++] = -bound;
        if (k == n) return;
    }
}

}  // namespace

TEST_CASE("Rat keeps canonical form") {
    Rat r(Int(6), Int(-4));
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(r.str() == "-3/2");
    CHECK(Rat(3).str() == "3/1");
    CHECK(Rat::parse(" -10/4 ") == Rat(-5, 2));
    CHECK_THROWS(Rat::parse("1/0"));
    CHECK_THROWS(Rat::parse("abc"));
}

TEST_CASE("poly_arith examples") {
    Poly x = Poly::variable(var::eps1);
    CHECK((x * Poly(0)).is_zero());
    Poly d = Poly::variable(var::delta1);
    CHECK((d + Poly(1)) * (d - Poly(1)) == d * d - Poly(1));
    CHECK(poly_arith(d + Poly(1), d - Poly(1), '*') == d.pow(2) - Poly(1));
    // a·δ₁ at a = 2, δ₁ = 3/2; the oracle is the product of the two values.
    Poly a = Poly::variable(var::eps1);
    CHECK((a * d).evaluate({{var::eps1, Rat(2)}, {var::delta1, Rat(3, 2)}}) == Rat(2) * Rat(3, 2));
}

TEST_CASE("Poly never stores zero coefficients") {
    Poly d = Poly::variable(var::delta1);
    Poly p = d + Poly(1) - d;
    CHECK(p.terms().size() == 1);
    CHECK(p.is_constant());
    CHECK((d - d).terms().empty());
}

TEST_CASE("Poly ring axioms on random inputs") {
    Sampler s(seed_from_env(11));
    for (int i = 0; i < 200; ++i) {
        Poly a = random_poly(s), b = random_poly(s), c = random_poly(s);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a - a == Poly());
    }
}

TEST_CASE("affine_compose examples") {
    KodairaParams p;
    p.m = 2;
    p.delta4 = Rat(1, 2);
    auto g = generators(p);
    CHECK(RatMap::identity() * g[2] == g[2]);
    CHECK(g[3] * affine_inverse(g[3]) == RatMap::identity());
    RatMap comm = g[2] * g[3] * affine_inverse(g[2]) * affine_inverse(g[3]);
    CHECK(comm.is_translation());
    CHECK(comm == RatMap::translation_by({Rat(0), Rat(0), Rat(0), Rat(2)}));
    CHECK(comm == affine_power(g[1], 2));
}

TEST_CASE("affine_compose matches direct matrix product") {
    Sampler s(seed_from_env(12));
    for (int i = 0; i < 100; ++i) {
        KodairaParams p = s.params(static_cast<int>(s.integer(1, 4)));
        RatMap f = word_to_affine(s.normal_word(3), p), g = word_to_affine(s.normal_word(3), p);
        RatMap h = word_to_affine(s.normal_word(3), p);
        CHECK(affine_compose(f, g) == oracle::compose(f, g));
        CHECK((f * g) * h == f * (g * h));
    }
}

TEST_CASE("affine_inverse examples") {
    CHECK(affine_inverse(RatMap::identity()) == RatMap::identity());
    RatMap t = RatMap::translation_by({Rat(1), Rat(-2), Rat(1, 3), Rat(0)});
    CHECK(affine_inverse(t) == RatMap::translation_by({Rat(-1), Rat(2), Rat(-1, 3), Rat(0)}));
    KodairaParams p;
    p.m = 3;
    p.delta4 = Rat(1, 2);
    p.eps4 = Rat(-2, 5);
    RatMap g4 = generators(p)[3];
    CHECK(affine_inverse(g4) == *oracle::gauss_inverse(g4));

    RatMap singular = RatMap::identity();
    singular.linear[1][1] = Rat(0);
    CHECK_THROWS_WITH_AS(affine_inverse(singular), "singular linear part", Error);
}

TEST_CASE("affine_inverse is a two-sided inverse and matches Gauss-Jordan") {
    Sampler s(seed_from_env(13));
    for (int i = 0; i < 100; ++i) {
        KodairaParams p = s.params(static_cast<int>(s.integer(1, 5)));
        RatMap f = word_to_affine(s.normal_word(4), p);
        if (i % 2 == 0) {
            // Involutions σ̃g₄^b g₂^t of case 1A1ai', which fix a plane.
            int m = static_cast<int>(s.integer(1, 4));
            p = representative(CaseLabel::A1aip, m).params;
            f = lifting_to_affine(representative(CaseLabel::A1aip, m).lifting) *
                word_to_affine(NormalWord{s.integer(-2, 2), 0, 0, s.integer(-2, 2)}, p);
        } else if (s.coin()) {
            f = lifting_to_affine(s.lifting(s.coin() ? LinearCase::A : LinearCase::B, s.coin())) * f;
        }
        RatMap inv = affine_inverse(f);
        CHECK(f * inv == RatMap::identity());
        CHECK(inv * f == RatMap::identity());
        CHECK(inv == *oracle::gauss_inverse(f));
    }
}

TEST_CASE("symbolic inverse needs a constant determinant") {
    AffineMap4 f = AffineMap4::identity();
    f.linear[0][0] = Poly::variable(var::delta1);
    CHECK_THROWS_AS(affine_inverse(f), Error);
    AffineMap4 g = lifting_to_affine_symbolic(LinearCase::B);
    CHECK(g * affine_inverse(g) == AffineMap4::identity());
}

TEST_CASE("fixed_locus examples") {
    auto all = fixed_locus(RatMap::identity());
    REQUIRE(all);
    CHECK(all->dimension() == 4);
    CHECK_FALSE(fixed_locus(RatMap::translation_by({Rat(0), Rat(0), Rat(1), Rat(0)})));

    // Case 1A1ai' lifting with ε₃ = 0: the plane y₁ = y₂ = 0.
    RealStructure rs = representative(CaseLabel::A1aip, 2);
    REQUIRE(rs.params.eps3 == Rat(0));
    auto plane = fixed_locus(rs.lifting_map());
    REQUIRE(plane);
    CHECK(plane->dimension() == 2);
    AffineSubspace expected({Rat(0), Rat(0), Rat(0), Rat(0)},
                            {{Rat(1), Rat(0), Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(1), Rat(0)}});
    CHECK(*plane == expected);
}

TEST_CASE("fixed_locus: fixed points and dimension 4 - rank(L - I)") {
    Sampler s(seed_from_env(14));
    int nonempty = 0;
    for (int i = 0; i < 200; ++i) {
        KodairaParams p = s.params(static_cast<int>(s.integer(1, 4)));
        RatMap f = word_to_affine(s.normal_word(2), p);
        if (i % 2 == 0) {
            // Involutions σ̃g₄^b g₂^t of case 1A1ai', which fix a plane.
            int m = static_cast<int>(s.integer(1, 4));
            p = representative(CaseLabel::A1aip, m).params;
            f = lifting_to_affine(representative(CaseLabel::A1aip, m).lifting) *
                word_to_affine(NormalWord{s.integer(-2, 2), 0, 0, s.integer(-2, 2)}, p);
        } else if (s.coin()) {
            f = lifting_to_affine(s.lifting(s.coin() ? LinearCase::A : LinearCase::B, s.coin())) * f;
        }
        auto fix = fixed_locus(f);
        if (!fix) continue;
        ++nonempty;
        RatMatrix lm(4, RatVector(4));
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) lm[r][c] = f.linear[r][c] - Rat(r == c ? 1 : 0);
        CHECK(fix->dimension() == 4 - rank(lm));
        CHECK(f.apply(fix->basepoint()) == fix->basepoint());
        for (const auto& d : fix->directions()) {
            Vec4<Rat> q = fix->basepoint();
            for (int k = 0; k < 4; ++k) q[k] += Rat(3) * d[k];
            CHECK(f.apply(q) == q);
            CHECK(fix->contains(q));
        }
    }
    CHECK(nonempty > 20);
}

TEST_CASE("AffineSubspace canonical form is representation independent") {
    AffineSubspace a({Rat(1), Rat(2), Rat(0), Rat(0)}, {{Rat(1), Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(1), Rat(0)}});
    AffineSubspace b({Rat(3), Rat(4), Rat(5), Rat(0)},
                     {{Rat(2), Rat(2), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(-2), Rat(0)}});
    CHECK(a == b);
    CHECK(a.normal_rows().size() == 2);
}

TEST_CASE("dioph_solve examples") {
    // 2n - 1 = 2r, unknowns (n, r).
    DiophSystem even{{{Int(2), Int(-2)}}, {Int(1)}, {"n", "r"}};
    CHECK_FALSE(dioph_solve(even));
    // 2n - 1 = r.
    DiophSystem odd{{{Int(2), Int(-1)}}, {Int(1)}, {"n", "r"}};
    auto sol = dioph_solve(odd);
    REQUIRE(sol);
    CHECK(satisfies(odd, sol->particular));
    CHECK(sol->lattice.size() == 1);
    // 0 = 0.
    DiophSystem trivial{{{Int(0), Int(0)}}, {Int(0)}, {"x", "y"}};
    auto all = dioph_solve(trivial);
    REQUIRE(all);
    CHECK(all->lattice.size() == 2);
}

TEST_CASE("dioph_solve rejects inconsistent dimensions") {
    DiophSystem bad{{{Int(1), Int(2)}}, {Int(1), Int(2)}, {"x", "y"}};
    CHECK_THROWS_AS(bad.check(), Error);
}

TEST_CASE("dioph_solve agrees with brute force") {
    Sampler s(seed_from_env(15));
    constexpr int kBox = 20;
    for (int trial = 0; trial < 150; ++trial) {
        const int n = static_cast<int>(s.integer(1, 3)), rows = static_cast<int>(s.integer(1, 3));
        DiophSystem sys;
        for (int k = 0; k < n; ++k) sys.names.push_back("x" + std::to_string(k));
        for (int r = 0; r < rows; ++r) {
            IntVector row;
            for (int k = 0; k < n; ++k) row.push_back(Int(s.integer(-5, 5)));
            sys.a.push_back(row);
            sys.b.push_back(Int(s.integer(-8, 8)));
        }
        auto sol = dioph_solve(sys);
        std::vector<IntVector> found;
        for_box(n, kBox, [&](const std::vector<std::int64_t>& x) {
            IntVector v(x.begin(), x.end());
            if (satisfies(sys, v)) found.push_back(v);
        });
        if (!found.empty()) REQUIRE(sol);
        if (!sol) continue;
        CHECK(satisfies(sys, sol->particular));
        for (const auto& h : sol->lattice) {
            IntVector twice = sol->particular;
            for (int k = 0; k < n; ++k) twice[k] += h[k];
            CHECK(satisfies(sys, twice));
        }
        // Each brute-force solution lies in particular + Z-span(lattice).
        for (const auto& v : found) {
            RatMatrix a(n, RatVector(sol->lattice.size()));
            RatVector rhs(n);
            for (int k = 0; k < n; ++k) {
                rhs[k] = Rat(Int(v[k] - sol->particular[k]));
                for (std::size_t j = 0; j < sol->lattice.size(); ++j) a[k][j] = Rat(sol->lattice[j][k]);
            }
            if (sol->lattice.empty()) {
                CHECK(v == sol->particular);
                continue;
            }
            auto coords = solve_linear(a, rhs);
            REQUIRE(coords);
            CHECK(coords->kernel_basis.empty());
            for (const auto& q : coords->particular) CHECK(q.is_integer());
        }
    }
}

TEST_CASE("solve_integer_system agrees with brute force on small quadratic systems") {
    Sampler s(seed_from_env(16));
    const Var u = var::unknown(0), v = var::unknown(1);
    const Poly U = Poly::variable(u), V = Poly::variable(v);
    int solvable = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Poly> eqs;
        // One linear equation and one quadratic in the remaining unknown.
        Int a(s.integer(-3, 3)), b(s.integer(1, 3)), c(s.integer(-6, 6));
        eqs.push_back(U.scaled(Rat(a)) + V.scaled(Rat(b)) - Poly(Rat(c)));
        if (s.coin()) eqs.push_back(U * U - Poly(Rat(s.integer(0, 16))));
        auto got = solve_integer_system(eqs, {u, v});
        bool brute = false;
        for_box(2, 40, [&](const std::vector<std::int64_t>& x) {
            std::map<Var, Rat> at{{u, Rat(x[0])}, {v, Rat(x[1])}};
            bool ok = true;
            for (const auto& e : eqs) ok = ok && e.evaluate(at).is_zero();
            brute = brute || ok;
        });
        CHECK(got.has_value() == brute);
        if (got) {
            ++solvable;
            std::map<Var, Rat> at{{u, Rat((*got)[0])}, {v, Rat((*got)[1])}};
            for (const auto& e : eqs) CHECK(e.evaluate(at).is_zero());
        }
    }
    CHECK(solvable > 10);
}

TEST_CASE("instantiate bridges the symbolic and concrete layers") {
    AffineMap4 s = lifting_to_affine_symbolic(LinearCase::A);
    Lifting l = Lifting::make(LinearCase::A, Rat(1, 2), Rat(-1), Rat(1, 2), Rat(3));
    RatMap concrete = instantiate(s, {{var::f1, l.f1}, {var::f2, l.f2}, {var::d1, l.d1}, {var::gamma1, l.gamma1}});
    CHECK(concrete == lifting_to_affine(l));
}
