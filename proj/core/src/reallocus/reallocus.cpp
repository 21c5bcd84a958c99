#include "kodaira/reallocus/reallocus.hpp"

#include "kodaira/error.hpp"
#include "kodaira/exactalg/dioph.hpp"

#include <future>
#include <numeric>

namespace kodaira {

std::string to_string(Topology t) { return t == Topology::Torus ? "torus" : "klein-bottle"; }

std::string RealPartReport::summary() const { return count_summary(count); }

namespace {

const Var kB = var::unknown(0), kA = var::unknown(1), kL = var::unknown(2), kT = var::unknown(3);

// Affine-linear integer equations to a Hermite system over `vars`.
DiophSystem linear_system(const std::vector<Poly>& eqs, const std::vector<Var>& vars) {
    DiophSystem sys;
    for (Var v : vars) sys.names.push_back(var_name(v));
    for (const auto& e : eqs) {
        if (e.total_degree() > 1) throw Error(ErrorKind::Unsupported, "expected a linear equation: " + e.str());
        Poly se = e.scaled(Rat(e.denominator_lcm()));
        IntVector row;
        for (Var v : vars) row.push_back(se.coefficient_of(v).constant_term().num());
        sys.a.push_back(row);
        sys.b.push_back(-se.constant_term().num());
    }
    return sys;
}

std::vector<Poly> nonzero(std::vector<Poly> eqs) {
    std::erase_if(eqs, [](const Poly& p) { return p.is_zero(); });
    return eqs;
}

// h(Γ) = Γ' for h = g₄^{k0} g₃^{k1} g₁^{k2} g₂^{k3}.
std::vector<Poly> mapping_equations(const Plane& gamma, const Plane& target, const KodairaParams& p) {
    SymbolicWord h{Poly::variable(kB), Poly::variable(kA), Poly::variable(kL), Poly::variable(kT)};
    AffineMap4 H = word_to_affine_symbolic(h, values_of(p));
    RatMatrix normals = target.normal_rows();
    std::vector<Poly> eqs;
    for (const auto& d : gamma.directions()) {
        Vec4<Poly> hd = H.apply_linear({Poly(d[0]), Poly(d[1]), Poly(d[2]), Poly(d[3])});
        for (const auto& n : normals) {
            Poly e;
            for (int i = 0; i < 4; ++i) e += hd[i].scaled(n[i]);
            eqs.push_back(e);
        }
    }
    const auto& b = gamma.basepoint();
    Vec4<Poly> hb = H.apply({Poly(b[0]), Poly(b[1]), Poly(b[2]), Poly(b[3])});
    for (const auto& n : normals) {
        Poly e;
        Rat c;
        for (int i = 0; i < 4; ++i) {
            e += hb[i].scaled(n[i]);
            c += n[i] * target.basepoint()[i];
        }
        eqs.push_back(e - Poly(c));
    }
    return nonzero(std::move(eqs));
}

NormalWord to_word(const std::vector<Int>& v) { return {v[0].get_si(), v[1].get_si(), v[2].get_si(), v[3].get_si()}; }

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
};

}  // namespace

std::vector<InvolutiveLifting> involutive_liftings(const RealStructure& rs, int window) {
    const KodairaParams& p = rs.params;
    const RatMap sigma = rs.lifting_map();
    const ConjugationData conj = conjugation_data(sigma, p);
    const NormalWord square = square_in_G_map(sigma, p);
    std::vector<InvolutiveLifting> out;
    for (std::int64_t b = -window; b <= window; ++b) {
        for (std::int64_t t = -window; t <= window; ++t) {
            SymbolicWord g{Poly(Rat(b)), Poly::variable(kA), Poly::variable(kL), Poly(Rat(t))};
            SymbolicWord sq = multiply(multiply(conj.apply(g), to_symbolic(square), p.m), g, p.m);
            auto eqs = nonzero({sq.b, sq.a, sq.l, sq.t});
            auto sol = dioph_solve(linear_system(eqs, {kA, kL}));
            if (!sol) continue;
            if (!sol->lattice.empty()) throw Error(ErrorKind::Unsupported, "a and l are not determined by b and t");
            NormalWord w{b, sol->particular[0].get_si(), sol->particular[1].get_si(), t};
            RatMap map = sigma * word_to_affine(w, p);
            if (!(map * map == RatMap::identity())) throw Error(ErrorKind::Unsupported, "solution is not an involution");
            auto plane = fixed_locus(map);
            if (!plane || plane->dimension() != 2) throw Error(ErrorKind::Degenerate, "fixed locus is not a plane");
            out.push_back({w, map, *plane});
        }
    }
    return out;
}

std::optional<NormalWord> components_equivalent(const Plane& gamma, const Plane& gamma2, const RealStructure& rs) {
    if (gamma.dimension() != gamma2.dimension()) return std::nullopt;
    auto sol = solve_integer_system(mapping_equations(gamma, gamma2, rs.params), {kB, kA, kL, kT});
    if (!sol) return std::nullopt;
    NormalWord h = to_word(*sol);
    if (!(image(word_to_affine(h, rs.params), gamma) == gamma2))
        throw Error(ErrorKind::Unsupported, "equivalence witness failed verification");
    return h;
}

std::optional<NormalWord> brute_force_equivalence(const Plane& gamma, const Plane& gamma2, const RealStructure& rs,
                                                  int bound) {
    for (std::int64_t b = -bound; b <= bound; ++b)
        for (std::int64_t a = -bound; a <= bound; ++a) {
            // The linear part depends on (b, a) only; test directions first.
            RatMap head = word_to_affine(NormalWord{b, a, 0, 0}, rs.params);
            Plane moved = image(head, gamma);
            if (!(moved.directions() == gamma2.directions())) continue;
            for (std::int64_t l = -bound; l <= bound; ++l)
                for (std::int64_t t = -bound; t <= bound; ++t) {
                    NormalWord h{b, a, l, t};
                    if (image(word_to_affine(h, rs.params), gamma) == gamma2) return h;
                }
        }
    return std::nullopt;
}

Stabilizer stabilizer(const Plane& gamma, const RealStructure& rs) {
    const KodairaParams& p = rs.params;
    const auto eqs = mapping_equations(gamma, gamma, p);

    // H ∩ Z: zero head.
    std::vector<Poly> central;
    for (const auto& e : eqs) central.push_back(e.substitute({{kB, Poly(0)}, {kA, Poly(0)}}));
    auto zsol = dioph_solve(linear_system(nonzero(central), {kL, kT}));
    if (!zsol) throw Error(ErrorKind::Degenerate, "identity does not stabilize the plane");

    // Heads allowed by the head-only linear equations.
    std::vector<Poly> head_eqs;
    for (const auto& e : eqs) {
        if (e.total_degree() <= 1 && !e.depends_on(kL) && !e.depends_on(kT)) head_eqs.push_back(e);
    }
    auto hsol = dioph_solve(linear_system(head_eqs, {kB, kA}));

    Stabilizer st;
    if (hsol && hsol->lattice.size() == 2) throw Error(ErrorKind::Unsupported, "head lattice of rank 2");
    if (hsol && hsol->lattice.size() == 1) {
        const IntVector& w = hsol->lattice[0];
        constexpr int kMaxMultiple = 64;
        for (int k = 1; k <= kMaxMultiple; ++k) {
            Int b = w[0] * k, a = w[1] * k;
            std::vector<Poly> fibre;
            for (const auto& e : eqs) fibre.push_back(e.substitute({{kB, Poly(Rat(b))}, {kA, Poly(Rat(a))}}));
            auto sol = solve_integer_system(nonzero(fibre), {kL, kT});
            if (sol) {
                st.generators.push_back(NormalWord{b.get_si(), a.get_si(), (*sol)[0].get_si(), (*sol)[1].get_si()});
                break;
            }
            if (k == kMaxMultiple) throw Error(ErrorKind::Unsupported, "no lift of the head lattice within bound");
        }
    }
    for (const auto& v : zsol->lattice) st.generators.push_back(NormalWord{0, 0, v[0].get_si(), v[1].get_si()});
    st.rank = static_cast<int>(st.generators.size());

    for (const auto& g : st.generators) {
        if (!(image(word_to_affine(g, p), gamma) == gamma))
            throw Error(ErrorKind::Unsupported, "stabilizer generator does not fix the plane");
    }
    for (std::size_t i = 0; i < st.generators.size(); ++i)
        for (std::size_t j = i + 1; j < st.generators.size(); ++j)
            if (!commutator(st.generators[i], st.generators[j], p.m).is_identity()) st.abelian = false;
    return st;
}

RealPartReport real_part(const RealStructure& rs, int window) {
    RealPartReport report;
    report.label = reduce(extension_of(rs)).label;
    report.m = rs.params.m;
    auto invs = involutive_liftings(rs, window);

    std::vector<int> reps;  // class representatives, indices into invs
    UnionFind uf(static_cast<int>(invs.size()));
    for (int i = 0; i < static_cast<int>(invs.size()); ++i) {
        bool joined = false;
        for (int r : reps) {
            if (components_equivalent(invs[i].plane, invs[r].plane, rs)) {
                uf.parent[i] = r;
                joined = true;
                break;
            }
        }
        if (!joined) reps.push_back(i);
    }

    auto small = [](const NormalWord& g) { return (g.b == 0 || g.b == 1) && (g.t == 0 || g.t == 1); };
    for (int r : reps) {
        int chosen = -1;
        for (int i = 0; i < static_cast<int>(invs.size()); ++i) {
            if (uf.find(i) == r && small(invs[i].g)) {
                chosen = i;
                break;
            }
        }
        if (chosen < 0) throw Error(ErrorKind::Unsupported, "component class without a representative in b, t in {0,1}");
        ComponentClass cc{invs[chosen].plane, invs[chosen].g, stabilizer(invs[chosen].plane, rs)};
        if (cc.stabilizer.rank != 2) throw Error(ErrorKind::Unsupported, "stabilizer rank is not 2");
        Topology topo = cc.stabilizer.abelian ? Topology::Torus : Topology::KleinBottle;
        if (topo == Topology::KleinBottle) report.klein_tripwire = true;
        report.topology.push_back(topo);
        report.components.push_back(std::move(cc));
    }
    report.count = static_cast<int>(report.components.size());
    return report;
}

std::vector<RealPartReport> full_table(int m) {
    auto cases = enumerate_cases(m);
    std::vector<std::future<RealPartReport>> jobs;
    for (const auto& c : cases) jobs.push_back(std::async(std::launch::async, [rs = c.rs] { return real_part(rs); }));
    std::vector<RealPartReport> rows;
    for (auto& j : jobs) rows.push_back(j.get());
    return rows;
}

}  // namespace kodaira
