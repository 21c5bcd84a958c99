#include "kodaira/moduli/moduli.hpp"

#include "kodaira/error.hpp"

#include <set>

namespace kodaira {

Gaussian PeriodPoint::quadric() const { return p13 * p24 - p23 * p14; }

Rat PeriodPoint::positivity() const {
    Gaussian q = -(p13 * p24.conj()) + p23 * p14.conj() + p14 * p23.conj() - p24 * p13.conj();
    if (!q.im.is_zero()) throw Error(ErrorKind::InvalidArgument, "positivity form has an imaginary part");
    return q.re;
}

bool PeriodPoint::is_valid() const {
    return quadric().is_zero() && positivity().sign() > 0 && !p14.is_zero() && !p24.is_zero();
}

PeriodPoint PeriodPoint::scaled(const Gaussian& c) const { return {p13 * c, p23 * c, p14 * c, p24 * c}; }

PeriodPoint PeriodPoint::from_halfplanes(const Gaussian& x, const Gaussian& y) { return {x * y, y, x, Gaussian(1)}; }

std::string PeriodPoint::str() const {
    return "(" + p13.str() + ", " + p23.str() + ", " + p14.str() + ", " + p24.str() + ")";
}

void ActionMatrix::validate() const {
    if (e != 1 && e != -1) throw Error(ErrorKind::InvalidArgument, "e must be 1 or -1");
    if (a * d - b * c != e) throw Error(ErrorKind::InvalidArgument, "det M must equal e");
}

ActionMatrix compose(const ActionMatrix& x, const ActionMatrix& y) {
    ActionMatrix r;
    r.a = x.a * y.a + x.b * y.c;
    r.b = x.a * y.b + x.b * y.d;
    r.c = x.c * y.a + x.d * y.c;
    r.d = x.c * y.b + x.d * y.d;
    r.k = y.k + y.e * x.k;
    r.e = x.e * y.e;
    return r;
}

ActionMatrix negation_automorphism() { return {-1, 0, 0, 1, 0, -1}; }
ActionMatrix swap_automorphism() { return {0, -1, -1, 0, 0, -1}; }

PeriodPoint borcea_act(const ActionMatrix& A, int m, const PeriodPoint& p) {
    A.validate();
    if (m < 1) throw Error(ErrorKind::InvalidArgument, "m must be positive");
    const Gaussian a(Rat(A.a)), b(Rat(A.b)), c(Rat(A.c)), d(Rat(A.d));
    const Gaussian shift(Rat(Int(-2) * A.k, Int(m)));
    const Gaussian e(Rat(A.e));
    // u = (p₁₃, p₂₃) ↦ M(u + shift·w), w = (p₁₄, p₂₄) ↦ e·M·w.
    Gaussian u1 = p.p13 + shift * p.p14, u2 = p.p23 + shift * p.p24;
    return {a * u1 + b * u2, c * u1 + d * u2, e * (a * p.p14 + b * p.p24), e * (c * p.p14 + d * p.p24)};
}

std::pair<Gaussian, Gaussian> to_halfplanes(const PeriodPoint& p) {
    if (p.p24.is_zero() || p.p14.is_zero()) throw Error(ErrorKind::Degenerate, "p14 or p24 vanishes");
    return {p.p14 / p.p24, p.p13 / p.p14};
}

ComplexForm eta(const PeriodPoint& p) {
    const std::pair<Gaussian, Form> terms[4] = {
        {p.p13, theta(1, 3)}, {p.p23, theta(2, 3)}, {p.p14, theta(1, 4)}, {p.p24, theta(2, 4)}};
    ComplexForm r;
    for (const auto& [c, f] : terms) r = r + ComplexForm{f, Form(2)}.scaled(c);
    return r;
}

TwoForm pullback(const Lifting& l, const TwoForm& form) { return pullback(lifting_to_affine(l), form); }

ComplexForm pullback(const Lifting& l, const ComplexForm& form) {
    RatMap f = lifting_to_affine(l);
    return {pullback(f, form.re), pullback(f, form.im)};
}

namespace {

Gaussian coefficient_at(const ComplexForm& f, Form::Mask mask, const Monomial& mono) {
    auto get = [&](const Form& part) {
        const Poly c = part.coefficient(mask);
        auto it = c.terms().find(mono);
        return it == c.terms().end() ? Rat(0) : it->second;
    };
    return {get(f.re), get(f.im)};
}

void collect_keys(const Form& f, std::set<std::pair<Form::Mask, Monomial>>& keys) {
    for (const auto& [mask, c] : f.coefficients())
        for (const auto& [mono, q] : c.terms()) keys.emplace(mask, mono);
}

}  // namespace

std::optional<Gaussian> reality_multiplier(const Lifting& l, const PeriodPoint& p) {
    const ComplexForm e = eta(p);
    const ComplexForm lhs = pullback(l, e);
    const ComplexForm rhs = e.conj();
    std::set<std::pair<Form::Mask, Monomial>> keys;
    for (const Form* f : {&lhs.re, &lhs.im, &rhs.re, &rhs.im}) collect_keys(*f, keys);

    std::optional<Gaussian> lambda;
    for (const auto& [mask, mono] : keys) {
        Gaussian r = coefficient_at(rhs, mask, mono);
        if (!r.is_zero()) {
            lambda = coefficient_at(lhs, mask, mono) / r;
            break;
        }
    }
    if (!lambda) return std::nullopt;
    for (const auto& [mask, mono] : keys) {
        if (!(coefficient_at(lhs, mask, mono) == *lambda * coefficient_at(rhs, mask, mono))) return std::nullopt;
    }
    return lambda;
}

bool reality_conditions(const Lifting& l, const PeriodPoint& p) {
    auto lambda = reality_multiplier(l, p);
    return lambda && lambda->norm2() == Rat(1);
}

bool stated_locus(LinearCase kind, bool f2_nonzero, const Gaussian& x, const Gaussian& y) {
    if (kind == LinearCase::A) {
        if (!x.re.is_zero() || !y.re.is_zero()) return false;
        return !f2_nonzero || x * y == Gaussian(-1);
    }
    if (x.norm2() != Rat(1) || !y.re.is_zero()) return false;
    if (!f2_nonzero) return true;
    if (y == Gaussian(1)) return false;
    return x == (Gaussian(1) + y) / (Gaussian(1) - y);
}

std::vector<std::pair<Gaussian, Gaussian>> locus_grid(LinearCase kind, bool f2_nonzero) {
    const Rat ys[] = {Rat(1, 2), Rat(1), Rat(2), Rat(-1, 2), Rat(-1), Rat(-2)};
    std::vector<std::pair<Gaussian, Gaussian>> out;
    for (const Rat& t : ys) {
        const Gaussian y(Rat(0), t);
        const int s = t.sign();
        if (kind == LinearCase::A && !f2_nonzero) {
            for (const Rat& r : {Rat(1, 3), Rat(1), Rat(3)}) out.emplace_back(Gaussian(Rat(0), r * Rat(s)), y);
        } else if (kind == LinearCase::A) {
            out.emplace_back(Gaussian(-1) / y, y);
        } else if (!f2_nonzero) {
            for (const Gaussian& x : {Gaussian(Rat(3, 5), Rat(4, 5)), Gaussian(Rat(-3, 5), Rat(4, 5)),
                                      Gaussian(Rat(0), Rat(1))})
                out.emplace_back(s > 0 ? x : x.conj(), y);
        } else {
            out.emplace_back((Gaussian(1) + y) / (Gaussian(1) - y), y);
        }
    }
    return out;
}

ActionMatrix exchange_automorphism(LinearCase kind, bool f2_zero) {
    return kind == LinearCase::B && !f2_zero ? swap_automorphism() : negation_automorphism();
}

bool exchange_check(LinearCase kind, bool f2_zero, int m) {
    const ActionMatrix A = exchange_automorphism(kind, f2_zero);
    const Rat f2 = f2_zero ? Rat(0) : Rat(1);
    const Lifting l = kind == LinearCase::A ? Lifting::make(kind, Rat(0), f2, Rat(0), Rat(0))
                                            : Lifting::make(kind, -f2, f2, Rat(0), Rat(0));
    const Gaussian scale(Rat(2), Rat(1));
    for (const auto& [x, y] : locus_grid(kind, !f2_zero)) {
        PeriodPoint p = PeriodPoint::from_halfplanes(x, y).scaled(scale);
        if (!p.is_valid() || !reality_conditions(l, p)) return false;
        PeriodPoint q = borcea_act(A, m, p);
        if (!q.is_valid() || !reality_conditions(l, q)) return false;
        auto [x2, y2] = to_halfplanes(q);
        if (!stated_locus(kind, !f2_zero, x2, y2)) return false;
        if (x2.im.sign() != -x.im.sign() || y2.im.sign() != -y.im.sign()) return false;
    }
    return true;
}

}  // namespace kodaira
