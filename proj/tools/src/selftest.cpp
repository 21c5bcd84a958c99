#include "kodaira_cli/selftest.hpp"

#include "kodaira/classify/classify.hpp"
#include "kodaira/error.hpp"
#include "kodaira/exactalg/dioph.hpp"
#include "kodaira/exactalg/linalg.hpp"
#include "kodaira/moduli/moduli.hpp"
#include "kodaira/reallocus/reallocus.hpp"
#include "kodaira/sampling.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>

namespace kodaira::cli {

namespace {

#ifdef KODAIRA_SELFTEST_CORRUPTION
constexpr bool kBuildCorruption = true;
#else
constexpr bool kBuildCorruption = false;
#endif

constexpr std::size_t kMaxRecordedFailures = 8;

class Ctx {
public:
    Ctx(SuiteResult& r, std::uint64_t seed, bool corrupt) : sampler(seed), corrupt(corrupt), result_(r) {}

    void check(bool ok, const std::string& what) {
        if (ok) {
            ++result_.passed;
            return;
        }
        ++result_.failed;
        if (result_.failures.size() < kMaxRecordedFailures) result_.failures.push_back(what);
    }

    // Runs f, recording a thrown exception as a failure.
    void guarded(const std::string& what, const std::function<void()>& f) {
        try {
            f();
        } catch (const std::exception& e) {
            check(false, what + ": " + e.what());
        }
    }

    Sampler sampler;
    bool corrupt;

private:
    SuiteResult& result_;
};

Poly random_poly(Sampler& s) {
    const Var vars[] = {var::delta1, var::eps1, var::f1};
    Poly p;
    for (std::int64_t n = s.integer(0, 3); n > 0; --n) {
        Poly term(s.rational(5, 3));
        for (Var v : vars) term *= Poly::variable(v).pow(static_cast<unsigned>(s.integer(0, 2)));
        p += term;
    }
    return p;
}

void suite_exactalg(Ctx& c) {
    Sampler& s = c.sampler;
    for (int i = 0; i < 50; ++i) {
        Poly a = random_poly(s), b = random_poly(s), d = random_poly(s);
        c.check((a * b) * d == a * (b * d), "poly associativity");
        c.check(a * (b + d) == a * b + a * d, "poly distributivity");
    }
    for (int i = 0; i < 50; ++i) {
        KodairaParams p = s.params(static_cast<int>(s.integer(1, 5)));
        RatMap f = word_to_affine(s.normal_word(3), p), g = word_to_affine(s.normal_word(3), p);
        RatMap h = word_to_affine(s.normal_word(3), p);
        c.check((f * g) * h == f * (g * h), "affine associativity");
        c.check(f * affine_inverse(f) == RatMap::identity() && affine_inverse(f) * f == RatMap::identity(),
                "affine inverse");
    }
    for (int i = 0; i < 60; ++i) {
        const int rows = static_cast<int>(s.integer(1, 2)), cols = static_cast<int>(s.integer(1, 3));
        DiophSystem sys;
        for (int k = 0; k < cols; ++k) sys.names.push_back("x" + std::to_string(k));
        for (int r = 0; r < rows; ++r) {
            IntVector row;
            for (int k = 0; k < cols; ++k) row.push_back(Int(s.integer(-4, 4)));
            sys.a.push_back(row);
            sys.b.push_back(Int(s.integer(-6, 6)));
        }
        auto sol = dioph_solve(sys);
        bool brute = false;
        constexpr int kBox = 12;
        std::vector<std::int64_t> x(cols, -kBox);
        while (!brute) {
            bool ok = true;
            for (int r = 0; r < rows && ok; ++r) {
                Int acc = 0;
                for (int k = 0; k < cols; ++k) acc += sys.a[r][k] * x[k];
                ok = acc == sys.b[r];
            }
            brute = ok;
            int k = 0;
            while (k < cols && ++x[k] > kBox) x[k++] = -kBox;
            if (k == cols) break;
        }
        if (brute) c.check(sol.has_value(), "dioph misses a solution");
        if (sol) {
            bool ok = true;
            for (int r = 0; r < rows; ++r) {
                Int acc = 0;
                for (int k = 0; k < cols; ++k) acc += sys.a[r][k] * sol->particular[k];
                ok = ok && acc == sys.b[r];
            }
            c.check(ok, "dioph particular solution");
        }
    }
    for (int i = 0; i < 30; ++i) {
        KodairaParams p = s.params(2);
        RatMap f = word_to_affine(s.normal_word(2), p);
        auto fix = fixed_locus(f);
        if (!fix) continue;
        RatMatrix lm(4, RatVector(4));
        for (int r = 0; r < 4; ++r)
            for (int k = 0; k < 4; ++k) lm[r][k] = f.linear[r][k] - (r == k ? Rat(1) : Rat(0));
        c.check(fix->dimension() == 4 - rank(lm), "fixed locus dimension");
        c.check(f.apply(fix->basepoint()) == fix->basepoint(), "fixed locus basepoint");
    }
}

void suite_group(Ctx& c) {
    Sampler& s = c.sampler;
    for (int m : {1, 2, 3, 5}) {
        for (int i = 0; i < 100; ++i) {
            KodairaParams p = s.params(m);
            GroupWord w = s.word(12, 3);
            c.check(word_to_affine(collect(w, m), p) == word_to_affine(w, p), "collection oracle");
            GroupWord w2 = s.word(6, 3);
            GroupWord both = w;
            both.insert(both.end(), w2.begin(), w2.end());
            c.check(collect(both, m) == multiply(collect(w, m), collect(w2, m), m), "collect homomorphism");
            NormalWord n = s.normal_word(4);
            c.check(affine_to_word(word_to_affine(n, p), p) == n, "affine_to_word round trip");
        }
        const std::int64_t expected_t = c.corrupt ? m + 1 : m;
        c.check(commutator(gen_word(3), gen_word(4), m) == NormalWord{0, 0, 0, expected_t}, "[g3,g4] = g2^m");
        c.check(verify_relations(s.params(m)), "verify_relations");
    }
}

void suite_classify(Ctx& c) {
    for (int m = 1; m <= 6; ++m) {
        c.guarded("enumerate_cases m=" + std::to_string(m), [&] {
            auto cases = enumerate_cases(m);
            c.check(cases.size() == (m % 2 == 0 ? 17u : 13u), "case count m=" + std::to_string(m));
            for (const auto& rep : cases) {
                Extension e = extension_of(rep.rs);
                Reduction r = reduce(e);
                c.check(r.label == rep.label, "representative label " + label_name(rep.label));
                c.check(replay(e, r.log).square == r.normal.square, "replayed log " + label_name(rep.label));
            }
        });
    }
    for (int m = 1; m <= 4; ++m) {
        c.guarded("distinct pairs", [&] { c.check(distinct_pairs_check(m), "primed pairs distinct m=" + std::to_string(m)); });
    }
}

void suite_splitting(Ctx& c) {
    for (int m = 1; m <= 4; ++m) {
        for (const auto& rep : enumerate_cases(m)) {
            c.guarded("splitting " + label_name(rep.label), [&] {
                Extension e = extension_of(rep.rs);
                auto w = splitting_witness(e);
                auto bf = brute_force_splitting_witness(e, 6);
                c.check(w.has_value() == bf.has_value(), "splitting vs brute force " + label_name(rep.label));
                if (w) {
                    RatMap sg = rep.rs.lifting_map() * word_to_affine(*w, rep.rs.params);
                    c.check(sg * sg == RatMap::identity(), "witness is an involution " + label_name(rep.label));
                }
            });
        }
    }
}

// Internal consistency only; agreement with the published table is the
// acceptance suite's job.
void suite_table(Ctx& c) {
    for (int m = 1; m <= 4; ++m) {
        c.guarded("full_table m=" + std::to_string(m), [&] {
            auto rows = full_table(m);
            c.check(rows.size() == (m % 2 == 0 ? 17u : 13u), "row count");
            auto cases = enumerate_cases(m);
            for (std::size_t i = 0; i < rows.size(); ++i) {
                const auto& r = rows[i];
                const std::string tag = label_name(r.label) + " m=" + std::to_string(m);
                c.check(r.count <= 4, "at most four components " + tag);
                c.check(!r.klein_tripwire, "no Klein bottle " + tag);
                c.check((r.count > 0) == splits(extension_of(cases[i].rs)), "non-empty iff split " + tag);
                for (const auto& comp : r.components)
                    c.check(comp.stabilizer.rank == 2 && comp.stabilizer.abelian, "stabilizer Z^2 " + tag);
            }
        });
    }
}

void suite_moduli(Ctx& c) {
    Sampler& s = c.sampler;
    for (auto kind : {LinearCase::A, LinearCase::B})
        for (bool zero : {true, false})
            c.check(exchange_check(kind, zero, 2), "exchange " + to_string(kind) + (zero ? " f2=0" : " f2!=0"));
    for (int i = 0; i < 100; ++i) {
        PeriodPoint p = s.period_point();
        ActionMatrix a = s.action(3);
        int m = static_cast<int>(s.integer(1, 5));
        PeriodPoint q = borcea_act(a, m, p);
        c.check(q.quadric().is_zero() && q.positivity() == p.positivity(), "action preserves D");
        ActionMatrix b = s.action(3);
        c.check(borcea_act(a, m, borcea_act(b, m, p)) == borcea_act(compose(a, b), m, p), "action composition");
        auto [x, y] = to_halfplanes(p);
        c.check(x.im.sign() == y.im.sign() && x.im.sign() != 0, "half-plane signs agree");
    }
    for (auto kind : {LinearCase::A, LinearCase::B}) {
        for (bool nz : {false, true}) {
            for (const auto& p : s.locus_sample(kind, nz, 40)) {
                Lifting l = s.lifting(kind, nz);
                auto [x, y] = to_halfplanes(p);
                c.check(reality_conditions(l, p) == stated_locus(kind, nz, x, y), "reality locus " + to_string(kind));
            }
        }
    }
}

using SuiteFn = void (*)(Ctx&);
const std::vector<std::pair<std::string, SuiteFn>>& suites() {
    static const std::vector<std::pair<std::string, SuiteFn>> all = {
        {"exactalg", suite_exactalg}, {"group", suite_group}, {"classify", suite_classify},
        {"splitting", suite_splitting}, {"table", suite_table}, {"moduli", suite_moduli}};
    return all;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [name, fn] : suites()) n.push_back(name);
        return n;
    }();
    return names;
}

std::vector<SuiteResult> run_selftest(const SelftestOptions& opts) {
    for (const auto& name : opts.only) {
        if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
            throw std::invalid_argument("unknown suite '" + name + "'");
    }
    std::vector<SuiteResult> out;
    for (const auto& [name, fn] : suites()) {
        if (!opts.only.empty() && std::find(opts.only.begin(), opts.only.end(), name) == opts.only.end()) continue;
        SuiteResult r;
        r.name = name;
        auto t0 = std::chrono::steady_clock::now();
        Ctx ctx(r, opts.seed, opts.inject_failure || kBuildCorruption);
        try {
            fn(ctx);
        } catch (const std::exception& e) {
            ctx.check(false, std::string("uncaught: ") + e.what());
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace kodaira::cli
