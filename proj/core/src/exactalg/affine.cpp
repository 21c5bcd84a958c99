#include "kodaira/exactalg/affine.hpp"

#include <sstream>

namespace kodaira {

AffineMap4 to_symbolic(const RatMap& f) {
    AffineMap4 g;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) g.linear[i][j] = Poly(f.linear[i][j]);
        g.translation[i] = Poly(f.translation[i]);
    }
    return g;
}

RatMap instantiate(const AffineMap4& f, const std::map<Var, Rat>& assignment) {
    RatMap g;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) g.linear[i][j] = f.linear[i][j].evaluate(assignment);
        g.translation[i] = f.translation[i].evaluate(assignment);
    }
    return g;
}

AffineMap4 substitute(const AffineMap4& f, const std::map<Var, Poly>& values) {
    AffineMap4 g;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) g.linear[i][j] = f.linear[i][j].substitute(values);
        g.translation[i] = f.translation[i].substitute(values);
    }
    return g;
}

namespace {

template <class T, class Show>
std::string render(const AffineMap<T>& f, Show show) {
    std::ostringstream os;
    for (int i = 0; i < 4; ++i) {
        os << "[";
        for (int j = 0; j < 4; ++j) os << (j ? ", " : "") << show(f.linear[i][j]);
        os << " | " << show(f.translation[i]) << "]";
        if (i < 3) os << "\n";
    }
    return os.str();
}

}  // namespace

std::string to_string(const RatMap& f) {
    return render(f, [](const Rat& r) { return r.pretty(); });
}

std::string to_string(const AffineMap4& f) {
    return render(f, [](const Poly& p) { return p.str(); });
}

}  // namespace kodaira
