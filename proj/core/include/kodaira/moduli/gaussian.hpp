#pragma once

#include "kodaira/exactalg/rational.hpp"

#include <string>

namespace kodaira {

// re + i·im with exact rational parts.
struct Gaussian {
    Rat re, im;

    Gaussian() = default;
    Gaussian(const Rat& r) : re(r) {}  // NOLINT(google-explicit-constructor)
    Gaussian(const Rat& r, const Rat& i) : re(r), im(i) {}
    static Gaussian i() { return {Rat(0), Rat(1)}; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    Gaussian conj() const { return {re, -im}; }
    Rat norm2() const { return re * re + im * im; }

    Gaussian operator-() const { return {-re, -im}; }
    Gaussian& operator+=(const Gaussian& o);
    Gaussian& operator-=(const Gaussian& o);
    Gaussian& operator*=(const Gaussian& o);
    // Throws InvalidArgument on division by zero.
    Gaussian& operator/=(const Gaussian& o);

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
    friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
    friend bool operator==(const Gaussian&, const Gaussian&) = default;

    // "a+bi" with rationals as "n/d".
    std::string str() const;
};

}  // namespace kodaira
