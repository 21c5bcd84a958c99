#pragma once

#include "kodaira/error.hpp"
#include "kodaira/exactalg/poly.hpp"
#include "kodaira/exactalg/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>

namespace kodaira {

template <class T>
using Vec4 = std::array<T, 4>;
template <class T>
using Mat4 = std::array<Vec4<T>, 4>;

inline Rat invert_scalar(const Rat& d) {
    if (d.is_zero()) throw Error(ErrorKind::SingularLinearPart);
    return Rat(1) / d;
}

// Polynomial division is not available, so a symbolic determinant must be a
// nonzero constant.
inline Poly invert_scalar(const Poly& d) {
    if (!d.is_constant() || d.is_zero()) throw Error(ErrorKind::SingularLinearPart, d.str());
    return Poly(Rat(1) / d.constant_term());
}

// x ↦ linear·x + translation on R⁴.
template <class T>
struct AffineMap {
    Mat4<T> linear{};
    Vec4<T> translation{};

    static AffineMap identity() {
        AffineMap f;
        for (int i = 0; i < 4; ++i) f.linear[i][i] = T(1);
        return f;
    }
    static AffineMap translation_by(const Vec4<T>& v) {
        AffineMap f = identity();
        f.translation = v;
        return f;
    }

    Vec4<T> apply(const Vec4<T>& x) const {
        Vec4<T> y = translation;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) y[i] += linear[i][j] * x[j];
        return y;
    }
    Vec4<T> apply_linear(const Vec4<T>& x) const {
        Vec4<T> y{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) y[i] += linear[i][j] * x[j];
        return y;
    }

    bool is_translation() const {
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (!(linear[i][j] == T(i == j ? 1 : 0))) return false;
        return true;
    }

    friend bool operator==(const AffineMap& a, const AffineMap& b) {
        return a.linear == b.linear && a.translation == b.translation;
    }
};

using AffineMap4 = AffineMap<Poly>;
using RatMap = AffineMap<Rat>;

// f∘g.
template <class T>
AffineMap<T> affine_compose(const AffineMap<T>& f, const AffineMap<T>& g) {
    AffineMap<T> h;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            T s{};
            for (int k = 0; k < 4; ++k) s += f.linear[i][k] * g.linear[k][j];
            h.linear[i][j] = s;
        }
    }
    h.translation = f.apply(g.translation);
    return h;
}

template <class T>
AffineMap<T> operator*(const AffineMap<T>& f, const AffineMap<T>& g) {
    return affine_compose(f, g);
}

namespace detail {

template <class T>
T det3(const Mat4<T>& a, int skip_row, int skip_col) {
    int r[3], c[3];
    for (int i = 0, k = 0; i < 4; ++i)
        if (i != skip_row) r[k++] = i;
    for (int j = 0, k = 0; j < 4; ++j)
        if (j != skip_col) c[k++] = j;
    auto e = [&](int i, int j) -> const T& { return a[r[i]][c[j]]; };
    return e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) -
           e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
           e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
}

}  // namespace detail

template <class T>
T determinant(const Mat4<T>& a) {
    T d{};
    for (int j = 0; j < 4; ++j) {
        T term = a[0][j] * detail::det3(a, 0, j);
        if (j % 2 == 0) d += term;
        else d -= term;
    }
    return d;
}

// Adjugate over the determinant; the determinant must be invertible in T.
template <class T>
AffineMap<T> affine_inverse(const AffineMap<T>& f) {
    T inv_det = invert_scalar(determinant(f.linear));
    AffineMap<T> g;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            T cof = detail::det3(f.linear, j, i);
            if ((i + j) % 2 == 1) cof = -cof;
            g.linear[i][j] = cof * inv_det;
        }
    }
    Vec4<T> t = g.apply_linear(f.translation);
    for (int i = 0; i < 4; ++i) g.translation[i] = -t[i];
    return g;
}

template <class T>
AffineMap<T> affine_power(const AffineMap<T>& f, std::int64_t n) {
    AffineMap<T> base = n < 0 ? affine_inverse(f) : f;
    std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
    AffineMap<T> result = AffineMap<T>::identity();
    while (e > 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return result;
}

AffineMap4 to_symbolic(const RatMap& f);
// Requires every variable occurring in f to be assigned.
RatMap instantiate(const AffineMap4& f, const std::map<Var, Rat>& assignment);
AffineMap4 substitute(const AffineMap4& f, const std::map<Var, Poly>& values);

std::string to_string(const RatMap& f);
std::string to_string(const AffineMap4& f);

}  // namespace kodaira
