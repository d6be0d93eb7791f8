#include "rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace mmc {

Int binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    Int result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;
    }
    return result;
}

Int pow2(long long e) {
    if (e < 0) throw DimensionError("pow2: negative exponent");
    return Int(1) << static_cast<unsigned>(e);
}

Int rat_floor(const Rational& q) {
    Int n = num(q), d = den(q);
    Int quot = n / d;
    if (n % d != 0 && n < 0) --quot;
    return quot;
}

Int rat_ceil(const Rational& q) { return -rat_floor(-q); }

std::string to_fraction(const Rational& q) {
    Int n = num(q), d = den(q);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

Rational parse_fraction(const std::string& text) {
    if (text.empty()) throw ParseError("empty fraction string");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(text));
        Int n(text.substr(0, slash));
        Int d(text.substr(slash + 1));
        if (d == 0) throw ParseError("zero denominator in '" + text + "'");
        return Rational(n, d);
    } catch (const std::runtime_error&) {
        throw ParseError("malformed fraction '" + text + "'");
    }
}

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    Int n = num(q), d = den(q);
    Int sn = boost::multiprecision::sqrt(n);
    Int sd = boost::multiprecision::sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Rational(sn, sd);
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

} // namespace mmc
