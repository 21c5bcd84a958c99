#include "kodaira/exactalg/linalg.hpp"

#include <sstream>

namespace kodaira {

std::vector<int> rref(RatMatrix& a) {
    std::vector<int> pivots;
    if (a.empty()) return pivots;
    const int rows = static_cast<int>(a.size());
    const int cols = static_cast<int>(a[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        Rat inv = Rat(1) / a[r][c];
        for (int j = c; j < cols; ++j) a[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Rat factor = a[i][c];
            for (int j = c; j < cols; ++j) a[i][j] -= factor * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(RatMatrix a) { return static_cast<int>(rref(a).size()); }

std::optional<LinearSolution> solve_linear(const RatMatrix& a, const RatVector& b) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
    RatMatrix aug(rows, RatVector(cols + 1));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    LinearSolution sol;
    sol.particular.assign(cols, Rat(0));
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        sol.particular[pivots[k]] = aug[k][cols];
        is_pivot[pivots[k]] = true;
    }
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RatVector v(cols, Rat(0));
        v[f] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -aug[k][f];
        sol.kernel_basis.push_back(std::move(v));
    }
    return sol;
}

AffineSubspace::AffineSubspace(const Vec4<Rat>& point, const std::vector<Vec4<Rat>>& directions) {
    RatMatrix m;
    for (const auto& d : directions) m.emplace_back(d.begin(), d.end());
    auto pivots = rref(m);
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        Vec4<Rat> row;
        for (int j = 0; j < 4; ++j) row[j] = m[k][j];
        directions_.push_back(row);
    }
    base_ = point;
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        Rat coeff = base_[pivots[k]];
        if (coeff.is_zero()) continue;
        for (int j = 0; j < 4; ++j) base_[j] -= coeff * directions_[k][j];
    }
}

bool AffineSubspace::contains(const Vec4<Rat>& p) const {
    Vec4<Rat> diff;
    for (int j = 0; j < 4; ++j) diff[j] = p[j] - base_[j];
    RatMatrix m;
    for (const auto& d : directions_) m.emplace_back(d.begin(), d.end());
    int before = rank(m);
    m.emplace_back(diff.begin(), diff.end());
    return rank(m) == before;
}

RatMatrix AffineSubspace::normal_rows() const {
    RatMatrix d;
    for (const auto& v : directions_) d.emplace_back(v.begin(), v.end());
    if (d.empty()) {
        RatMatrix id(4, RatVector(4, Rat(0)));
        for (int i = 0; i < 4; ++i) id[i][i] = 1;
        return id;
    }
    auto sol = solve_linear(d, RatVector(d.size(), Rat(0)));
    return sol->kernel_basis;
}

std::string AffineSubspace::str() const {
    std::ostringstream os;
    os << "(";
    for (int j = 0; j < 4; ++j) os << (j ? ", " : "") << base_[j].pretty();
    os << ") + span{";
    for (std::size_t k = 0; k < directions_.size(); ++k) {
        os << (k ? ", " : "") << "(";
        for (int j = 0; j < 4; ++j) os << (j ? ", " : "") << directions_[k][j].pretty();
        os << ")";
    }
    os << "}";
    return os.str();
}

AffineSubspace image(const RatMap& f, const AffineSubspace& s) {
    std::vector<Vec4<Rat>> dirs;
    for (const auto& d : s.directions()) dirs.push_back(f.apply_linear(d));
    return AffineSubspace(f.apply(s.basepoint()), dirs);
}

std::optional<AffineSubspace> fixed_locus(const RatMap& f) {
    RatMatrix a(4, RatVector(4));
    RatVector b(4);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) a[i][j] = f.linear[i][j] - Rat(i == j ? 1 : 0);
        b[i] = -f.translation[i];
    }
    auto sol = solve_linear(a, b);
    if (!sol) return std::nullopt;
    Vec4<Rat> p;
    for (int j = 0; j < 4; ++j) p[j] = sol->particular[j];
    std::vector<Vec4<Rat>> dirs;
    for (const auto& v : sol->kernel_basis) {
        Vec4<Rat> d;
        for (int j = 0; j < 4; ++j) d[j] = v[j];
        dirs.push_back(d);
    }
    return AffineSubspace(p, dirs);
}

}  // namespace kodaira
