#include "jacobi/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "jacobi/error.hpp"

namespace jacobi {

namespace {

// Exact division of a by monic b over Z.
IntPoly divide_exact(IntPoly a, const IntPoly& b) {
    const std::size_t db = b.size() - 1;
    IntPoly q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        const long long c = a[i];
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    for (std::size_t i = 0; i < db; ++i)
        if (a[i] != 0) fail(ErrorKind::InvalidArgument, "cyclotomic division left a remainder");
    return q;
}

std::mutex& memo_mutex() {
    static std::mutex mu;
    return mu;
}

const IntPoly& cyclotomic_poly_locked(unsigned m, std::map<unsigned, IntPoly>& memo) {
    if (auto it = memo.find(m); it != memo.end()) return it->second;
    IntPoly p(m + 1, 0);
    p[0] = -1;
    p[m] = 1;
    for (unsigned d = 1; d < m; ++d)
        if (m % d == 0) p = divide_exact(std::move(p), cyclotomic_poly_locked(d, memo));
    return memo.emplace(m, std::move(p)).first->second;
}

// Residues of x^j mod Phi_m for j in [0, 2 phi(m)).
const std::vector<std::vector<long long>>& power_residues(unsigned m) {
    static std::map<unsigned, std::vector<std::vector<long long>>> memo;
    const IntPoly& phi_poly = cyclotomic_poly(m);
    std::lock_guard lock(memo_mutex());
    if (auto it = memo.find(m); it != memo.end()) return it->second;
    const std::size_t deg = phi_poly.size() - 1;
    const std::size_t count = std::max<std::size_t>(2 * deg, m);
    std::vector<std::vector<long long>> pw(count, std::vector<long long>(deg, 0));
    std::vector<long long> cur(deg, 0);
    cur[0] = 1;
    for (std::size_t j = 0; j < count; ++j) {
        pw[j] = cur;
        // cur *= x, then reduce the x^deg term with Phi_m monic.
        const long long top = cur[deg - 1];
        for (std::size_t i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        for (std::size_t i = 0; i < deg; ++i) cur[i] -= top * phi_poly[i];
    }
    return memo.emplace(m, std::move(pw)).first->second;
}

}  // namespace

const IntPoly& cyclotomic_poly(unsigned m) {
    if (m == 0) fail(ErrorKind::InvalidArgument, "cyclotomic polynomial of order 0");
    static std::map<unsigned, IntPoly> memo;
    std::lock_guard lock(memo_mutex());
    return cyclotomic_poly_locked(m, memo);
}

unsigned euler_phi(unsigned m) {
    unsigned r = m;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        r -= r / p;
    }
    if (m > 1) r -= r / m;
    return r;
}

Cyclotomic::Cyclotomic(const Rational& r, unsigned m) : m_(m), c_(euler_phi(m)) {
    if (m == 0) fail(ErrorKind::InvalidArgument, "root order 0");
    c_[0] = r;
}

Cyclotomic Cyclotomic::zeta_power(unsigned m, long long j) {
    Cyclotomic z(Rational(0), m);
    long long e = j % static_cast<long long>(m);
    if (e < 0) e += m;
    const auto& pw = power_residues(m)[static_cast<std::size_t>(e)];
    for (std::size_t i = 0; i < pw.size(); ++i) z.c_[i] = Rational(static_cast<long>(pw[i]));
    return z;
}

Cyclotomic Cyclotomic::from_coeffs(unsigned m, std::vector<Rational> coeffs) {
    Cyclotomic z(Rational(0), m);
    if (coeffs.size() > z.c_.size()) fail(ErrorKind::InvalidArgument, "too many cyclotomic coefficients");
    for (std::size_t i = 0; i < coeffs.size(); ++i) z.c_[i] = std::move(coeffs[i]);
    return z;
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

bool Cyclotomic::is_one() const { return is_rational() && c_[0].is_one(); }

Rational Cyclotomic::to_rational() const {
    if (!is_rational()) fail(ErrorKind::NonRational, "value " + to_string() + " is not rational");
    return c_[0];
}

Cyclotomic Cyclotomic::lifted(unsigned m) const {
    if (m == m_) return *this;
    if (m % m_ != 0) fail(ErrorKind::Mismatch, "cannot lift root order " + std::to_string(m_) + " into " + std::to_string(m));
    // zeta_{m_} = zeta_m^(m / m_)
    Cyclotomic out(Rational(0), m);
    const long long step = m / m_;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        Cyclotomic t = zeta_power(m, step * static_cast<long long>(i));
        t *= c_[i];
        out += t;
    }
    return out;
}

void Cyclotomic::align(const Cyclotomic& o) {
    if (m_ == o.m_) return;
    if (m_ == 1) {
        *this = lifted(o.m_);
        return;
    }
    if (o.m_ == 1) return;  // caller lifts o
    fail(ErrorKind::Mismatch, "mixed root orders " + std::to_string(m_) + " and " + std::to_string(o.m_));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    align(o);
    if (o.m_ != m_) {
        c_[0] += o.c_[0];
        return *this;
    }
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
    for (auto& c : c_) c *= r;
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    align(o);
    if (o.m_ != m_) return *this *= o.c_[0];
    const std::size_t deg = c_.size();
    if (deg == 1) {
        c_[0] *= o.c_[0];
        return *this;
    }
    std::vector<Rational> prod(2 * deg - 1);
    for (std::size_t i = 0; i < deg; ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < deg; ++j)
            if (!o.c_[j].is_zero()) prod[i + j] += c_[i] * o.c_[j];
    }
    const auto& pw = power_residues(m_);
    std::vector<Rational> out(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(deg));
    for (std::size_t e = deg; e < prod.size(); ++e) {
        if (prod[e].is_zero()) continue;
        for (std::size_t i = 0; i < deg; ++i)
            if (pw[e][i] != 0) out[i] += prod[e] * Rational(static_cast<long>(pw[e][i]));
    }
    c_ = std::move(out);
    return *this;
}

Cyclotomic operator-(const Cyclotomic& a) {
    Cyclotomic r = a;
    for (auto& c : r.c_) c = -c;
    return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.m_ == b.m_) return a.c_ == b.c_;
    if (a.is_rational() && b.is_rational()) return a.c_[0] == b.c_[0];
    if (a.m_ == 1 || b.m_ == 1) return false;
    fail(ErrorKind::Mismatch, "comparing values of different root orders");
}

std::string Cyclotomic::to_string() const {
    if (is_rational()) return c_[0].to_string();
    std::string s = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ", ";
        s += c_[i].to_string();
    }
    return s + "]@" + std::to_string(m_);
}

}  // namespace jacobi
