#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace jacobi {

using BigInt = mpz_class;

// Exact rational number, always kept in lowest terms with a positive
// denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
    explicit Rational(const BigInt& value) : v_(value) {}
    Rational(const BigInt& num, const BigInt& den);
    explicit Rational(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

    // Parses "num/den" or "num".
    static Rational parse(std::string_view text);

    BigInt numerator() const { return v_.get_num(); }
    BigInt denominator() const { return v_.get_den(); }
    const mpq_class& raw() const noexcept { return v_; }

    bool is_zero() const noexcept { return sgn(v_) == 0; }
    bool is_one() const noexcept { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const noexcept { return sgn(v_); }
    double to_double() const { return v_.get_d(); }

    // Always "num/den"; zero is "0/1".
    std::string to_string() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class v_;
};

Rational abs(const Rational& r);

// Positional decimal rendering with exactly `digits` fractional digits,
// rounding half to even.
std::string to_decimal(const Rational& r, unsigned digits);

// Parses a plain decimal string such as "5.90769230769" exactly.
Rational parse_decimal(std::string_view text);

// n! from a process-wide cache.
const BigInt& factorial(unsigned n);

BigInt binomial(unsigned n, unsigned k);

// n! / (k_1! ... k_r!) when the parts sum to n; zero otherwise.
BigInt multinomial(unsigned n, std::span<const std::uint16_t> parts);

}  // namespace jacobi
