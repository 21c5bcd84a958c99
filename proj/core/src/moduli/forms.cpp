#include "kodaira/moduli/forms.hpp"

#include "kodaira/error.hpp"

#include <bit>
#include <sstream>

namespace kodaira {

namespace {

Var coordinate(int i) { return static_cast<Var>(var::x1 + i); }

const char* const kDifferentialNames[4] = {"dx1", "dy1", "dx2", "dy2"};

// Sign of dx_A ∧ dx_B relative to dx_{A∪B}; zero when they overlap.
int wedge_sign(Form::Mask a, Form::Mask b) {
    if (a & b) return 0;
    int inversions = 0;
    for (int i = 0; i < 4; ++i) {
        if (!(a & (1u << i))) continue;
        for (int j = 0; j < i; ++j)
            if (b & (1u << j)) ++inversions;
    }
    return inversions % 2 ? -1 : 1;
}

}  // namespace

Form Form::function(const Poly& f) {
    Form r(0);
    r.add(0, f);
    return r;
}

Form Form::differential(int i) {
    if (i < 0 || i > 3) throw Error(ErrorKind::InvalidArgument, "differential index out of range");
    return basis(static_cast<Mask>(1u << i));
}

Form Form::basis(Mask mask, const Poly& coeff) {
    Form r(std::popcount(mask));
    r.add(mask, coeff);
    return r;
}

Poly Form::coefficient(Mask mask) const {
    auto it = coeffs_.find(mask);
    return it == coeffs_.end() ? Poly() : it->second;
}

void Form::add(Mask mask, const Poly& c) {
    if (c.is_zero()) return;
    Poly& slot = coeffs_[mask];
    slot += c;
    if (slot.is_zero()) coeffs_.erase(mask);
}

Form& Form::operator+=(const Form& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) degree_ = o.degree_;
    if (degree_ != o.degree_) throw Error(ErrorKind::InvalidArgument, "adding forms of different degree");
    for (const auto& [mask, c] : o.coeffs_) add(mask, c);
    return *this;
}

Form& Form::operator-=(const Form& o) {
    Form neg = o.scaled(Poly(-1));
    return *this += neg;
}

Form Form::scaled(const Poly& c) const {
    Form r(degree_);
    for (const auto& [mask, p] : coeffs_) r.add(mask, p * c);
    return r;
}

std::string Form::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mask, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (int i = 0; i < 4; ++i)
            if (mask & (1u << i)) os << "*" << kDifferentialNames[i];
    }
    return os.str();
}

Form wedge(const Form& a, const Form& b) {
    Form r(a.degree() + b.degree());
    for (const auto& [ma, ca] : a.coefficients()) {
        for (const auto& [mb, cb] : b.coefficients()) {
            int s = wedge_sign(ma, mb);
            if (s == 0) continue;
            r += Form::basis(static_cast<Form::Mask>(ma | mb), (ca * cb).scaled(Rat(s)));
        }
    }
    return r;
}

Poly derivative(const Poly& p, Var v) {
    Poly r;
    for (const auto& [mono, c] : p.terms()) {
        if (mono[v] == 0) continue;
        Monomial lowered = mono;
        --lowered[v];
        r += Poly::monomial(lowered, c * Rat(static_cast<long>(mono[v])));
    }
    return r;
}

Form exterior_derivative(const Form& f) {
    Form r(f.degree() + 1);
    for (const auto& [mask, c] : f.coefficients()) {
        for (int i = 0; i < 4; ++i) {
            Poly dc = derivative(c, coordinate(i));
            if (!dc.is_zero()) r += wedge(Form::differential(i).scaled(dc), Form::basis(mask));
        }
    }
    return r;
}

Form pullback(const RatMap& f, const Form& form) {
    std::map<Var, Poly> substitution;
    std::array<Form, 4> images;
    for (int i = 0; i < 4; ++i) {
        Poly coord = Poly(f.translation[i]);
        Form di(1);
        for (int j = 0; j < 4; ++j) {
            if (f.linear[i][j].is_zero()) continue;
            coord += Poly::variable(coordinate(j)).scaled(f.linear[i][j]);
            di += Form::differential(j).scaled(Poly(f.linear[i][j]));
        }
        substitution.emplace(coordinate(i), coord);
        images[i] = di;
    }
    Form r(form.degree());
    for (const auto& [mask, c] : form.coefficients()) {
        Form term = Form::function(c.substitute(substitution));
        for (int i = 0; i < 4; ++i)
            if (mask & (1u << i)) term = wedge(term, images[i]);
        r += term;
    }
    return r;
}

Form omega(int i) {
    const Poly x1 = Poly::variable(var::x1), y1 = Poly::variable(var::y1);
    switch (i) {
        case 1: return Form::differential(0);
        case 2: return Form::differential(1);
        case 3:
            return Form::differential(2) - Form::differential(0).scaled(x1) - Form::differential(1).scaled(y1);
        case 4:
            return Form::differential(3) - Form::differential(1).scaled(x1) + Form::differential(0).scaled(y1);
        default: throw Error(ErrorKind::InvalidArgument, "omega index out of range");
    }
}

Form theta(int i, int j) {
    if (!(1 <= i && i < j && j <= 4)) throw Error(ErrorKind::InvalidArgument, "theta indices out of range");
    return wedge(omega(i), omega(j));
}

bool in_twoform_basis(const Form& f) {
    if (f.is_zero()) return true;
    if (f.degree() != 2) return false;
    constexpr Form::Mask kDx2Dy2 = 0b1100;
    if (f.coefficients().contains(kDx2Dy2)) return false;
    for (const auto& [mask, c] : f.coefficients())
        for (Var v : c.variables())
            if (v != var::x1 && v != var::y1) return false;
    return true;
}

ComplexForm ComplexForm::scaled(const Gaussian& c) const {
    return {re.scaled(Poly(c.re)) - im.scaled(Poly(c.im)), re.scaled(Poly(c.im)) + im.scaled(Poly(c.re))};
}

}  // namespace kodaira
