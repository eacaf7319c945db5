#pragma once

#include <string>

#include "json.hpp"

#include "jacobi/polynomial.hpp"

namespace jacobi {

// "(a1,a2,a3)" with element symbols.
std::string var_label(unsigned q, unsigned arity, std::size_t index);

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const Cyclotomic& c);

// Sorted list of {"exps": {"(a1,a2,a3)": e, ...}, "coeff": ...}.
nlohmann::json to_json(const RationalPolynomial& p);
nlohmann::json to_json(const CyclotomicPolynomial& p);

RationalPolynomial rational_polynomial_from_json(const RingSpec& ring, unsigned arity, const nlohmann::json& j);

// One term per line: "14 * x_(0)^4 x_(1)^4". Zero renders as "0".
std::string to_text(const RationalPolynomial& p);
std::string to_text(const CyclotomicPolynomial& p);

}  // namespace jacobi
