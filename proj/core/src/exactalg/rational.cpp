#include "kodaira/exactalg/rational.hpp"

#include "kodaira/error.hpp"

#include <cctype>

namespace kodaira {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Int parse_int(std::string_view s, std::string_view whole) {
    s = trim(s);
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) throw Error(ErrorKind::InvalidArgument, "bad rational '" + std::string(whole) + "'");
    for (std::size_t j = i; j < s.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw Error(ErrorKind::InvalidArgument, "bad rational '" + std::string(whole) + "'");
    }
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return Int(digits, 10);
}

}  // namespace

Rat::Rat(const Int& num, const Int& den) {
    if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
    auto s = trim(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(s, text));
    Int num = parse_int(s.substr(0, slash), text);
    Int den = parse_int(s.substr(slash + 1), text);
    if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
    return Rat(num, den);
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero");
    q_ /= o.q_;
    return *this;
}

Int Rat::floor() const { return floor_div(num(), den()); }

Int Rat::to_int() const {
    if (!is_integer()) throw Error(ErrorKind::InvalidArgument, "not an integer: " + str());
    return num();
}

std::int64_t Rat::to_i64() const {
    Int v = to_int();
    if (!v.fits_slong_p()) throw Error(ErrorKind::InvalidArgument, "integer out of range: " + str());
    return v.get_si();
}

std::string Rat::str() const { return num().get_str() + "/" + den().get_str(); }

std::string Rat::pretty() const { return is_integer() ? num().get_str() : str(); }

std::size_t Rat::hash() const {
    std::size_t h1 = std::hash<std::string>{}(num().get_str(16));
    std::size_t h2 = std::hash<std::string>{}(den().get_str(16));
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.pretty(); }

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int mod_floor(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace kodaira
