#pragma once

#include "kodaira/group/group.hpp"
#include "kodaira/moduli/moduli.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace kodaira {

// Deterministic generators for the randomized property checks.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::int64_t integer(std::int64_t lo, std::int64_t hi);
    bool coin() { return integer(0, 1) == 1; }
    // num/den with |num| <= num_bound, 1 <= den <= den_bound.
    Rat rational(int num_bound = 9, int den_bound = 6);
    Rat nonzero_rational(int num_bound = 9, int den_bound = 6);
    Rat positive_rational(int num_bound = 9, int den_bound = 6);
    Gaussian gaussian();
    Gaussian nonzero_gaussian();
    // Imaginary part of the given sign.
    Gaussian halfplane(int sign);

    GroupWord word(int max_length, int max_exponent);
    NormalWord normal_word(int bound);
    KodairaParams params(int m);
    ActionMatrix action(int k_bound);
    // Valid point of D, scaled by a random nonzero Gaussian.
    PeriodPoint period_point();
    // Lifting of the given linear case obeying its square constraint.
    Lifting lifting(LinearCase kind, bool f2_nonzero);
    // Mix of points on the stated locus, on the locus with the f₂ condition
    // dropped, near misses and generic points.
    std::vector<PeriodPoint> locus_sample(LinearCase kind, bool f2_nonzero, int n);

private:
    std::mt19937_64 rng_;
};

// KODAIRA_SEED when set to a decimal integer, else `fallback`.
std::uint64_t seed_from_env(std::uint64_t fallback = 20260101);

}  // namespace kodaira
