#include "kodaira/sampling.hpp"

#include <cstdlib>
#include <string>

namespace kodaira {

std::int64_t Sampler::integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
}

Rat Sampler::rational(int num_bound, int den_bound) {
    return Rat(integer(-num_bound, num_bound), integer(1, den_bound));
}

Rat Sampler::nonzero_rational(int num_bound, int den_bound) {
    Rat r = positive_rational(num_bound, den_bound);
    return coin() ? r : -r;
}

Rat Sampler::positive_rational(int num_bound, int den_bound) {
    return Rat(integer(1, num_bound), integer(1, den_bound));
}

Gaussian Sampler::gaussian() { return {rational(), rational()}; }

Gaussian Sampler::nonzero_gaussian() {
    Gaussian g = gaussian();
    while (g.is_zero()) g = gaussian();
    return g;
}

Gaussian Sampler::halfplane(int sign) {
    Rat im = positive_rational();
    return {rational(), sign > 0 ? im : -im};
}

GroupWord Sampler::word(int max_length, int max_exponent) {
    GroupWord w(static_cast<std::size_t>(integer(0, max_length)));
    for (auto& letter : w) letter = {static_cast<int>(integer(1, 4)), integer(-max_exponent, max_exponent)};
    return w;
}

NormalWord Sampler::normal_word(int bound) {
    return {integer(-bound, bound), integer(-bound, bound), integer(-bound, bound), integer(-bound, bound)};
}

KodairaParams Sampler::params(int m) {
    KodairaParams p;
    p.m = m;
    p.delta1 = nonzero_rational();
    p.eps1 = rational();
    p.delta3 = rational();
    p.eps3 = rational();
    p.delta4 = rational();
    p.eps4 = rational();
    return p;
}

ActionMatrix Sampler::action(int k_bound) {
    // Random product of S, T, T⁻¹ and the reflection diag(−1, 1).
    Int a = 1, b = 0, c = 0, d = 1;
    int e = 1;
    for (std::int64_t n = integer(0, 6); n > 0; --n) {
        Int na, nb, nc, nd;
        switch (integer(0, 3)) {
            case 0: na = -c, nb = -d, nc = a, nd = b; break;       // S·M
            case 1: na = a + c, nb = b + d, nc = c, nd = d; break;  // T·M
            case 2: na = a - c, nb = b - d, nc = c, nd = d; break;  // T⁻¹·M
            default: na = -a, nb = -b, nc = c, nd = d, e = -e; break;
        }
        a = na, b = nb, c = nc, d = nd;
    }
    return {a, b, c, d, Int(integer(-k_bound, k_bound)), e};
}

PeriodPoint Sampler::period_point() {
    int s = coin() ? 1 : -1;
    return PeriodPoint::from_halfplanes(halfplane(s), halfplane(s)).scaled(nonzero_gaussian());
}

Lifting Sampler::lifting(LinearCase kind, bool f2_nonzero) {
    Rat f2 = f2_nonzero ? nonzero_rational() : Rat(0);
    if (kind == LinearCase::A) {
        Rat d1 = rational();
        return Lifting::make(kind, d1, f2, d1, rational());
    }
    return Lifting::make(kind, -f2, f2, Rat(0), rational());
}

std::vector<PeriodPoint> Sampler::locus_sample(LinearCase kind, bool f2_nonzero, int n) {
    std::vector<PeriodPoint> out;
    while (static_cast<int>(out.size()) < n) {
        const int s = coin() ? 1 : -1;
        const Gaussian y_on(Rat(0), s > 0 ? positive_rational() : -positive_rational());
        Gaussian x, y = y_on;
        switch (integer(0, 3)) {
            case 0:  // on the full locus
                if (kind == LinearCase::A) {
                    x = f2_nonzero ? Gaussian(-1) / y : Gaussian(Rat(0), y.im.sign() * positive_rational());
                } else if (f2_nonzero) {
                    x = (Gaussian(1) + y) / (Gaussian(1) - y);
                } else {
                    // (1 − r² + 2ri)/(1 + r²) lies on the unit circle.
                    Rat r = positive_rational() * Rat(s);
                    x = Gaussian((Rat(1) - r * r) / (Rat(1) + r * r), Rat(2) * r / (Rat(1) + r * r));
                }
                break;
            case 1:  // f₂-free locus only
                if (kind == LinearCase::A) {
                    x = Gaussian(Rat(0), y.im.sign() * positive_rational());
                } else {
                    Rat r = positive_rational() * Rat(s);
                    x = Gaussian((Rat(1) - r * r) / (Rat(1) + r * r), Rat(2) * r / (Rat(1) + r * r));
                }
                break;
            case 2: {  // near miss: perturb the real part of one coordinate
                if (kind == LinearCase::A) {
                    x = Gaussian(Rat(0), y.im.sign() * positive_rational());
                } else {
                    x = Gaussian(Rat(3, 5), Rat(4 * s, 5));
                }
                Rat eps(1, integer(2, 50));
                if (coin()) {
                    x.re += eps;
                } else {
                    y.re += eps;
                }
                break;
            }
            default:
                x = halfplane(s);
                y = halfplane(s);
        }
        PeriodPoint p = PeriodPoint::from_halfplanes(x, y).scaled(nonzero_gaussian());
        if (p.is_valid()) out.push_back(p);
    }
    return out;
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
    const char* s = std::getenv("KODAIRA_SEED");
    if (s == nullptr || *s == '\0') return fallback;
    try {
        std::size_t used = 0;
        unsigned long long v = std::stoull(s, &used, 10);
        if (s[used] == '\0') return v;
    } catch (const std::exception&) {
    }
    return fallback;
}

}  // namespace kodaira
