#include "jacobi/rational.hpp"

#include <mutex>
#include <deque>

#include "jacobi/error.hpp"

namespace jacobi {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) fail(ErrorKind::InvalidArgument, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) fail(ErrorKind::InvalidArgument, "division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    const std::string s(text);
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s, 10));
        return Rational(BigInt(s.substr(0, slash), 10), BigInt(s.substr(slash + 1), 10));
    } catch (const std::invalid_argument&) {
        fail(ErrorKind::Schema, "not a rational: '" + s + "'");
    }
}

std::string Rational::to_string() const { return v_.get_num().get_str() + "/" + v_.get_den().get_str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

std::string to_decimal(const Rational& r, unsigned digits) {
    BigInt scale = 1;
    for (unsigned i = 0; i < digits; ++i) scale *= 10;
    const BigInt num = abs(r.raw().get_num()) * scale;
    const BigInt den = r.raw().get_den();
    BigInt q = num / den;
    const BigInt rem2 = (num - q * den) * 2;
    if (rem2 > den || (rem2 == den && q % 2 != 0)) q += 1;
    std::string s = q.get_str();
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    if (digits > 0) s.insert(s.size() - digits, ".");
    if (r.sign() < 0 && q != 0) s.insert(0, "-");
    return s;
}

Rational parse_decimal(std::string_view text) {
    std::string s(text);
    bool negative = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        s.erase(0, 1);
    }
    const auto dot = s.find('.');
    std::string digits = s;
    std::size_t frac = 0;
    if (dot != std::string::npos) {
        frac = s.size() - dot - 1;
        digits = s.substr(0, dot) + s.substr(dot + 1);
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        fail(ErrorKind::InvalidArgument, "not a decimal: '" + std::string(text) + "'");
    BigInt den = 1;
    for (std::size_t i = 0; i < frac; ++i) den *= 10;
    Rational out(BigInt(digits, 10), den);
    return negative ? -out : out;
}

const BigInt& factorial(unsigned n) {
    static std::mutex mu;
    static std::deque<BigInt> cache{BigInt(1)};
    std::lock_guard lock(mu);
    while (cache.size() <= n) cache.push_back(cache.back() * static_cast<unsigned long>(cache.size()));
    return cache[n];
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt multinomial(unsigned n, std::span<const std::uint16_t> parts) {
    unsigned sum = 0;
    for (auto k : parts) sum += k;
    if (sum != n) return 0;
    BigInt r = factorial(n);
    for (auto k : parts)
        if (k > 1) r /= factorial(k);
    return r;
}

}  // namespace jacobi
