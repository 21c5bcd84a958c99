#include "kodaira/exactalg/poly.hpp"

#include "kodaira/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace kodaira {

namespace {

constexpr std::array<const char*, var::first_unknown> kFixedNames = {
    "delta1", "eps1", "delta3", "eps3", "delta4", "eps4", "f1",
    "f2",     "d1",   "gamma1", "x1",   "y1",     "x2",   "y2"};

Monomial unit_monomial() { return Monomial{}; }

Monomial multiply(const Monomial& a, const Monomial& b) {
    Monomial r{};
    for (int i = 0; i < var::count; ++i) {
        int e = a[i] + b[i];
        if (e > 255) throw Error(ErrorKind::Unsupported, "monomial exponent overflow");
        r[i] = static_cast<std::uint8_t>(e);
    }
    return r;
}

}  // namespace

std::string var_name(Var v) {
    if (v < var::first_unknown) return kFixedNames[v];
    if (var::is_unknown(v)) return "k" + std::to_string(v - var::first_unknown);
    throw Error(ErrorKind::InvalidArgument, "variable index out of range");
}

std::optional<Var> var_by_name(std::string_view name) {
    for (int i = 0; i < var::count; ++i) {
        if (var_name(static_cast<Var>(i)) == name) return static_cast<Var>(i);
    }
    return std::nullopt;
}

Poly::Poly(const Rat& c) {
    if (!c.is_zero()) terms_.emplace(unit_monomial(), c);
}

Poly Poly::variable(Var v) {
    if (v >= var::count) throw Error(ErrorKind::InvalidArgument, "variable index out of range");
    Monomial m{};
    m[v] = 1;
    return monomial(m, Rat(1));
}

Poly Poly::monomial(const Monomial& mono, const Rat& coeff) {
    Poly p;
    if (!coeff.is_zero()) p.terms_.emplace(mono, coeff);
    return p;
}

void Poly::add_term(const Monomial& mono, const Rat& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(mono, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == unit_monomial());
}

Rat Poly::constant_term() const {
    auto it = terms_.find(unit_monomial());
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat Poly::constant_value() const {
    if (!is_constant()) throw Error(ErrorKind::InvalidArgument, "polynomial is not constant: " + str());
    return constant_term();
}

int Poly::degree_in(Var v) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max<int>(d, m[v]);
    return d;
}

int Poly::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
        int s = 0;
        for (auto e : m) s += e;
        d = std::max(d, s);
    }
    return d;
}

bool Poly::depends_on(Var v) const { return degree_in(v) > 0; }

std::vector<Var> Poly::variables() const {
    std::vector<Var> out;
    for (int i = 0; i < var::count; ++i) {
        if (depends_on(static_cast<Var>(i))) out.push_back(static_cast<Var>(i));
    }
    return out;
}

Poly Poly::coefficient_of(Var v) const {
    if (degree_in(v) > 1) throw Error(ErrorKind::InvalidArgument, "coefficient_of needs degree <= 1");
    Poly r;
    for (const auto& [m, c] : terms_) {
        if (m[v] == 1) {
            Monomial mm = m;
            mm[v] = 0;
            r.add_term(mm, c);
        }
    }
    return r;
}

Poly Poly::without(Var v) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        if (m[v] == 0) r.add_term(m, c);
    }
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) r.add_term(multiply(ma, mb), ca * cb);
    }
    return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::pow(unsigned e) const {
    Poly result(Rat(1));
    Poly base = *this;
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e > 0) base *= base;
    }
    return result;
}

Poly Poly::scaled(const Rat& c) const {
    if (c.is_zero()) return {};
    Poly r = *this;
    for (auto& [m, coeff] : r.terms_) coeff *= c;
    return r;
}

Poly Poly::substitute(Var v, const Poly& value) const {
    return substitute(std::map<Var, Poly>{{v, value}});
}

Poly Poly::substitute(const std::map<Var, Poly>& values) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        Poly factor(c);
        for (const auto& [v, val] : values) {
            if (m[v] == 0) continue;
            rest[v] = 0;
            factor *= val.pow(m[v]);
        }
        r += factor * monomial(rest, Rat(1));
    }
    return r;
}

Poly Poly::instantiate(const std::map<Var, Rat>& values) const {
    std::map<Var, Poly> as_poly;
    for (const auto& [v, q] : values) as_poly.emplace(v, Poly(q));
    return substitute(as_poly);
}

Rat Poly::evaluate(const std::map<Var, Rat>& values) const {
    Poly p = instantiate(values);
    if (!p.is_constant()) throw Error(ErrorKind::InvalidArgument, "evaluate: unassigned variable in " + p.str());
    return p.constant_term();
}

Int Poly::denominator_lcm() const {
    Int l = 1;
    for (const auto& [m, c] : terms_) l = lcm(l, c.den());
    return l;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest total degree first, then reverse map order, for readability.
    std::vector<std::pair<Monomial, Rat>> ordered(terms_.rbegin(), terms_.rend());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        int da = 0, db = 0;
        for (auto e : a.first) da += e;
        for (auto e : b.first) db += e;
        return da > db;
    });
    for (const auto& [m, c] : ordered) {
        bool unit = m == unit_monomial();
        Rat shown = c;
        if (first) {
            if (c.sign() < 0) { os << "-"; shown = -c; }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) shown = -c;
        }
        first = false;
        if (unit) { os << shown.pretty(); continue; }
        bool need_star = false;
        if (shown != Rat(1)) { os << shown.pretty(); need_star = true; }
        for (int i = 0; i < var::count; ++i) {
            if (m[i] == 0) continue;
            if (need_star) os << "*";
            os << var_name(static_cast<Var>(i));
            if (m[i] > 1) os << "^" << static_cast<int>(m[i]);
            need_star = true;
        }
    }
    return os.str();
}

Poly poly_arith(const Poly& a, const Poly& b, char op) {
    switch (op) {
        case '+': return a + b;
        case '-': return a - b;
        case '*': return a * b;
        default: throw Error(ErrorKind::InvalidArgument, std::string("unknown polynomial op '") + op + "'");
    }
}

}  // namespace kodaira
