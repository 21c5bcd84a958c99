#include "kodaira/moduli/gaussian.hpp"

#include "kodaira/error.hpp"

namespace kodaira {

Gaussian& Gaussian::operator+=(const Gaussian& o) {
    re += o.re;
    im += o.im;
    return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
    Rat r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
}

Gaussian& Gaussian::operator/=(const Gaussian& o) {
    if (o.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero");
    Rat n = o.norm2();
    *this *= o.conj();
    re /= n;
    im /= n;
    return *this;
}

std::string Gaussian::str() const {
    std::string s = re.pretty();
    if (im.sign() < 0) return s + "-" + (-im).pretty() + "i";
    return s + "+" + im.pretty() + "i";
}

}  // namespace kodaira
