#include "kodaira/exactalg/dioph.hpp"

#include "kodaira/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace kodaira {

void DiophSystem::check() const {
    if (a.size() != b.size()) throw Error(ErrorKind::InvalidArgument, "row count differs from rhs length");
    for (const auto& row : a) {
        if (row.size() != names.size())
            throw Error(ErrorKind::InvalidArgument, "row length differs from unknown count");
    }
}

namespace {

// Column operation: col_i, col_j ← (x·col_i + y·col_j, -v·col_i + u·col_j)
// with the unimodular 2×2 block [[x, -v], [y, u]] (det = x·u + y·v = 1).
void combine_columns(IntMatrix& h, IntMatrix& u, int i, int j, const Int& x, const Int& y,
                     const Int& cu, const Int& cv) {
    for (auto* m : {&h, &u}) {
        for (auto& row : *m) {
            Int ci = row[i], cj = row[j];
            row[i] = x * ci + y * cj;
            row[j] = -cv * ci + cu * cj;
        }
    }
}

}  // namespace

std::optional<DiophSolution> dioph_solve(const DiophSystem& sys) {
    sys.check();
    const int rows = static_cast<int>(sys.a.size());
    const int cols = static_cast<int>(sys.unknowns());
    IntMatrix h = sys.a;
    IntMatrix u(cols, IntVector(cols, 0));
    for (int i = 0; i < cols; ++i) u[i][i] = 1;

    // Column Hermite reduction: A·U = H, H lower echelon by columns.
    std::vector<std::pair<int, int>> pivots;  // (row, col)
    int p = 0;
    for (int r = 0; r < rows && p < cols; ++r) {
        for (int c = p + 1; c < cols; ++c) {
            if (h[r][c] == 0) continue;
            if (h[r][p] == 0) {
                for (auto* m : {&h, &u})
                    for (auto& row : *m) std::swap(row[p], row[c]);
                continue;
            }
            Int g, x, y;
            mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), h[r][p].get_mpz_t(), h[r][c].get_mpz_t());
            Int cu = h[r][p] / g, cv = h[r][c] / g;
            combine_columns(h, u, p, c, x, y, cu, cv);
        }
        if (h[r][p] == 0) continue;
        if (h[r][p] < 0) {
            for (auto* m : {&h, &u})
                for (auto& row : *m) row[p] = -row[p];
        }
        pivots.emplace_back(r, p);
        ++p;
    }

    // Forward substitution for H·y = b.
    IntVector y(cols, 0);
    std::size_t next = 0;
    for (int r = 0; r < rows; ++r) {
        Int acc = sys.b[r];
        bool pivot_row = next < pivots.size() && pivots[next].first == r;
        int limit = pivot_row ? pivots[next].second : p;
        for (int c = 0; c < limit; ++c) acc -= h[r][c] * y[c];
        if (pivot_row) {
            int c = pivots[next].second;
            if (acc % h[r][c] != 0) return std::nullopt;
            y[c] = acc / h[r][c];
            ++next;
        } else if (acc != 0) {
            return std::nullopt;
        }
    }

    DiophSolution sol;
    sol.particular.assign(cols, 0);
    for (int i = 0; i < cols; ++i)
        for (int c = 0; c < cols; ++c) sol.particular[i] += u[i][c] * y[c];
    for (int c = p; c < cols; ++c) {
        IntVector v(cols);
        for (int i = 0; i < cols; ++i) v[i] = u[i][c];
        sol.lattice.push_back(std::move(v));
    }
    return sol;
}

namespace {

// Elimination state: the substitutions are applied in order, each one
// expressing an eliminated unknown through unknowns still alive at that time.
struct SystemState {
    std::vector<Poly> equations;
    std::vector<std::pair<Var, Poly>> substitutions;
    std::vector<Poly> integrality;  // each must take integer values
    std::set<Var> alive;
    std::set<Var> used;
};

Var fresh(SystemState& s) {
    for (int i = 0; i < var::unknown_count; ++i) {
        Var v = var::unknown(i);
        if (!s.used.count(v)) {
            s.used.insert(v);
            s.alive.insert(v);
            return v;
        }
    }
    throw Error(ErrorKind::Unsupported, "out of lattice parameters");
}

void apply_substitution(SystemState& s, Var v, const Poly& value) {
    for (auto& e : s.equations) e = e.substitute(v, value);
    for (auto& c : s.integrality) c = c.substitute(v, value);
    s.substitutions.emplace_back(v, value);
    s.alive.erase(v);
}

bool is_linear(const Poly& p) { return p.total_degree() <= 1; }

std::optional<std::map<Var, Int>> decide_integrality(const SystemState& s) {
    std::vector<Var> free(s.alive.begin(), s.alive.end());
    std::vector<Poly> conds;
    for (const auto& c : s.integrality) {
        if (!c.is_constant()) conds.push_back(c);
        else if (!c.constant_term().is_integer()) return std::nullopt;
    }
    std::vector<Var> relevant;
    Int period = 1;
    for (const auto& c : conds) period = lcm(period, c.denominator_lcm());
    for (Var v : free) {
        bool used = std::any_of(conds.begin(), conds.end(), [&](const Poly& c) { return c.depends_on(v); });
        if (used) relevant.push_back(v);
    }
    // A rational polynomial is periodic modulo Z with period = lcm of its
    // denominators in each variable, so one period box decides it.
    Int box = 1;
    for (std::size_t i = 0; i < relevant.size(); ++i) box *= period;
    if (box > 2000000) throw Error(ErrorKind::Unsupported, "congruence box too large");
    const long per = period.get_si();
    std::vector<long> digits(relevant.size(), 0);
    for (long idx = 0; idx < box.get_si(); ++idx) {
        long rest = idx;
        std::map<Var, Rat> assign;
        for (std::size_t i = 0; i < relevant.size(); ++i) {
            digits[i] = rest % per;
            rest /= per;
            assign[relevant[i]] = Rat(digits[i]);
        }
        bool ok = std::all_of(conds.begin(), conds.end(),
                              [&](const Poly& c) { return c.instantiate(assign).constant_term().is_integer(); });
        if (ok) {
            std::map<Var, Int> out;
            for (Var v : free) out[v] = 0;
            for (std::size_t i = 0; i < relevant.size(); ++i) out[relevant[i]] = digits[i];
            return out;
        }
    }
    return std::nullopt;
}

// Integer roots of a·v² + b·v + c = 0 with a ≠ 0.
std::vector<Int> integer_roots_quadratic(const Rat& a, const Rat& b, const Rat& c) {
    Rat disc = b * b - Rat(4) * a * c;
    if (disc.sign() < 0) return {};
    Int n = disc.num(), d = disc.den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return {};
    Int sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    Rat root_disc(sn, sd);
    std::vector<Int> out;
    for (const Rat& r : {(-b + root_disc) / (Rat(2) * a), (-b - root_disc) / (Rat(2) * a)}) {
        if (r.is_integer() && std::find(out.begin(), out.end(), r.num()) == out.end()) out.push_back(r.num());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::map<Var, Int>> solve_state(SystemState s) {
    for (;;) {
        std::vector<Poly> kept;
        for (auto& e : s.equations) {
            if (e.is_zero()) continue;
            if (e.is_constant()) return std::nullopt;
            kept.push_back(std::move(e));
        }
        s.equations = std::move(kept);
        if (s.equations.empty()) break;

        // Linear block through Hermite elimination.
        std::vector<Poly> linear, rest;
        for (auto& e : s.equations) (is_linear(e) ? linear : rest).push_back(e);
        if (!linear.empty()) {
            std::set<Var> vs;
            for (const auto& e : linear)
                for (Var v : e.variables()) vs.insert(v);
            std::vector<Var> order(vs.begin(), vs.end());
            DiophSystem sys;
            for (Var v : order) sys.names.push_back(var_name(v));
            for (const auto& e : linear) {
                Int scale = e.denominator_lcm();
                Poly se = e.scaled(Rat(scale));
                IntVector row;
                for (Var v : order) row.push_back(se.coefficient_of(v).constant_term().num());
                sys.a.push_back(row);
                sys.b.push_back(-se.constant_term().num());
            }
            auto sol = dioph_solve(sys);
            if (!sol) return std::nullopt;
            std::vector<Var> params;
            for (std::size_t i = 0; i < sol->lattice.size(); ++i) params.push_back(fresh(s));
            s.equations = std::move(rest);
            for (std::size_t i = 0; i < order.size(); ++i) {
                Poly value(Rat(sol->particular[i]));
                for (std::size_t j = 0; j < params.size(); ++j)
                    value += Poly::variable(params[j]).scaled(Rat(sol->lattice[j][i]));
                apply_substitution(s, order[i], value);
            }
            continue;
        }

        // An unknown occurring once, linearly, with a constant coefficient.
        bool progressed = false;
        for (std::size_t k = 0; k < s.equations.size() && !progressed; ++k) {
            const Poly& e = s.equations[k];
            for (Var v : e.variables()) {
                if (e.degree_in(v) != 1) continue;
                Poly coeff = e.coefficient_of(v);
                if (!coeff.is_constant()) continue;
                Poly value = e.without(v).scaled(-Rat(1) / coeff.constant_term());
                Poly eq = e;
                s.equations.erase(s.equations.begin() + static_cast<long>(k));
                (void)eq;
                s.integrality.push_back(value);
                apply_substitution(s, v, value);
                progressed = true;
                break;
            }
        }
        if (progressed) continue;

        // Univariate quadratic: branch on its integer roots.
        for (const auto& e : s.equations) {
            auto vs = e.variables();
            if (vs.size() != 1 || e.degree_in(vs[0]) != 2) continue;
            Var v = vs[0];
            Monomial m2{}, m1{};
            m2[v] = 2;
            m1[v] = 1;
            auto coeff = [&](const Monomial& m) {
                auto it = e.terms().find(m);
                return it == e.terms().end() ? Rat(0) : it->second;
            };
            for (const Int& root : integer_roots_quadratic(coeff(m2), coeff(m1), e.constant_term())) {
                SystemState branch = s;
                apply_substitution(branch, v, Poly(Rat(root)));
                if (auto r = solve_state(branch)) return r;
            }
            return std::nullopt;
        }
        std::string shown;
        for (const auto& e : s.equations) shown += (shown.empty() ? "" : "; ") + e.str();
        throw Error(ErrorKind::Unsupported, shown);
    }

    auto base = decide_integrality(s);
    if (!base) return std::nullopt;
    std::map<Var, Rat> values;
    for (const auto& [v, x] : *base) values[v] = Rat(x);
    for (auto it = s.substitutions.rbegin(); it != s.substitutions.rend(); ++it) {
        values[it->first] = it->second.evaluate(values);
    }
    std::map<Var, Int> out;
    for (const auto& [v, x] : values) out[v] = x.to_int();
    return out;
}

}  // namespace

std::optional<std::vector<Int>> solve_integer_system(const std::vector<Poly>& equations,
                                                     const std::vector<Var>& unknowns) {
    SystemState s;
    std::set<Var> allowed(unknowns.begin(), unknowns.end());
    for (const auto& e : equations) {
        for (Var v : e.variables()) {
            if (!allowed.count(v))
                throw Error(ErrorKind::InvalidArgument, "equation uses non-unknown " + var_name(v));
        }
        if (e.total_degree() > 2) throw Error(ErrorKind::Unsupported, "degree above 2: " + e.str());
    }
    s.equations = equations;
    s.alive = allowed;
    s.used = allowed;
    auto sol = solve_state(std::move(s));
    if (!sol) return std::nullopt;
    std::vector<Int> out;
    for (Var v : unknowns) {
        auto it = sol->find(v);
        out.push_back(it == sol->end() ? Int(0) : it->second);
    }
    return out;
}

}  // namespace kodaira
