#include "eulerop/rational.hpp"

namespace eulerop {

Rational Rational::parse(std::string_view text) {
    auto bad = [&] {
        return std::invalid_argument("Rational: malformed literal '" + std::string(text) + "'");
    };
    auto digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };

    std::string_view num = text, den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!digits(den)) throw bad();
    }
    std::string_view mag = num;
    if (!mag.empty() && mag.front() == '-') mag.remove_prefix(1);
    if (!digits(mag)) throw bad();

    BigInt p{std::string(num)};
    BigInt q = den.empty() ? BigInt(1) : BigInt{std::string(den)};
    if (q == 0) throw std::domain_error("Rational: zero denominator");
    return Rational(p, q);
}

BigInt factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    BigInt r = 1;
    for (long k = 2; k <= n; ++k) r *= k;
    return r;
}

BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (long j = 1; j <= k; ++j) {
        r *= n - k + j;
        r /= j;
    }
    return r;
}

Rational pochhammer(const Rational& a, long n) {
    if (n < 0) throw std::domain_error("pochhammer: negative length");
    Rational r = 1;
    for (long k = 0; k < n; ++k) r *= a + Rational(k);
    return r;
}

Rational falling_factorial(const Rational& mu, long b) {
    if (b < 0) throw std::domain_error("falling_factorial: negative length");
    Rational r = 1;
    for (long k = 0; k < b; ++k) r *= mu - Rational(k);
    return r;
}

}  // namespace eulerop
