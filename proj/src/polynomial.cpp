#include "jacobi/polynomial.hpp"

namespace jacobi {

std::size_t var_count(unsigned q, unsigned arity) {
    std::size_t n = 1;
    for (unsigned i = 0; i < arity; ++i) n *= q;
    return n;
}

std::size_t var_index(unsigned q, std::span<const Symbol> tuple) {
    std::size_t idx = 0;
    for (auto a : tuple) {
        if (a >= q) fail(ErrorKind::InvalidArgument, "variable tuple entry out of range");
        idx = idx * q + a;
    }
    return idx;
}

std::vector<Symbol> var_tuple(unsigned q, unsigned arity, std::size_t index) {
    std::vector<Symbol> t(arity);
    for (unsigned i = arity; i-- > 0;) {
        t[i] = static_cast<Symbol>(index % q);
        index /= q;
    }
    return t;
}

CyclotomicPolynomial to_cyclotomic(const RationalPolynomial& p, unsigned root_order) {
    CyclotomicPolynomial out(p.ring(), p.arity());
    for (const auto& [m, c] : p.terms()) out.add_term(m, Cyclotomic(c, root_order));
    return out;
}

RationalPolynomial to_rational(const CyclotomicPolynomial& p) {
    RationalPolynomial out(p.ring(), p.arity());
    for (const auto& [m, c] : p.terms()) out.add_term(m, c.to_rational());
    return out;
}

}  // namespace jacobi
