#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace kodaira {

using Int = mpz_class;

// Canonical rational: gcd(num, den) = 1, den > 0.
class Rat {
public:
    Rat() = default;
    Rat(long v) : q_(v) {}          // NOLINT(google-explicit-constructor)
    Rat(int v) : q_(v) {}           // NOLINT(google-explicit-constructor)
    Rat(const Int& v) : q_(v) {}    // NOLINT(google-explicit-constructor)
    Rat(const Int& num, const Int& den);
    Rat(long num, long den) : Rat(Int(num), Int(den)) {}
    explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // Accepts "p", "p/q" and "-p/q" with optional surrounding blanks.
    static Rat parse(std::string_view text);

    Int num() const { return q_.get_num(); }
    Int den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }
    Int floor() const;
    Int to_int() const;  // throws unless integral
    std::int64_t to_i64() const;

    // "num/den" always, e.g. "3/1".
    std::string str() const;
    // "num" when integral, else "num/den".
    std::string pretty() const;

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::size_t hash() const;

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

Rat abs(const Rat& r);
Int lcm(const Int& a, const Int& b);
Int gcd(const Int& a, const Int& b);
// Floor division and nonnegative remainder for positive modulus.
Int floor_div(const Int& a, const Int& b);
Int mod_floor(const Int& a, const Int& b);

}  // namespace kodaira

template <>
struct std::hash<kodaira::Rat> {
    std::size_t operator()(const kodaira::Rat& r) const { return r.hash(); }
};
