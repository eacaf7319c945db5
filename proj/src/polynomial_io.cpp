#include "jacobi/polynomial_io.hpp"

#include <sstream>

namespace jacobi {

namespace {

std::string tuple_text(unsigned q, unsigned arity, std::size_t index, char sep) {
    const auto t = var_tuple(q, arity, index);
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(t[i]);
    }
    return s + ")";
}

std::string plain(const Rational& r) { return r.is_integer() ? r.numerator().get_str() : r.to_string(); }

std::string plain(const Cyclotomic& c) { return c.is_rational() ? plain(c.to_rational()) : "(" + c.to_string() + ")"; }

template <class Coeff>
nlohmann::json poly_json(const Polynomial<Coeff>& p) {
    const unsigned q = p.ring().order();
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::json exps = nlohmann::json::object();
        for (std::size_t v = 0; v < m.size(); ++v)
            if (m[v]) exps[var_label(q, p.arity(), v)] = m[v];
        nlohmann::json term;
        term["exps"] = exps;
        term["coeff"] = to_json(c);
        terms.push_back(term);
    }
    return terms;
}

template <class Coeff>
std::string poly_text(const Polynomial<Coeff>& p) {
    if (p.is_zero()) return "0";
    const unsigned q = p.ring().order();
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        if (!first) out << '\n';
        first = false;
        out << plain(c);
        bool any = false;
        for (std::size_t v = 0; v < m.size(); ++v) {
            if (!m[v]) continue;
            out << (any ? " " : " * ") << "x_" << tuple_text(q, p.arity(), v, ',');
            if (m[v] > 1) out << '^' << m[v];
            any = true;
        }
    }
    return out.str();
}

}  // namespace

std::string var_label(unsigned q, unsigned arity, std::size_t index) { return tuple_text(q, arity, index, ','); }

nlohmann::json to_json(const Rational& r) { return r.to_string(); }

nlohmann::json to_json(const Cyclotomic& c) {
    if (c.is_rational()) return c.to_rational().to_string();
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& x : c.coeffs()) coeffs.push_back(x.to_string());
    return {{"m", c.root_order()}, {"coeffs", coeffs}};
}

nlohmann::json to_json(const RationalPolynomial& p) { return poly_json(p); }
nlohmann::json to_json(const CyclotomicPolynomial& p) { return poly_json(p); }

std::string to_text(const RationalPolynomial& p) { return poly_text(p); }
std::string to_text(const CyclotomicPolynomial& p) { return poly_text(p); }

RationalPolynomial rational_polynomial_from_json(const RingSpec& ring, unsigned arity, const nlohmann::json& j) {
    RationalPolynomial p(ring, arity);
    if (!j.is_array()) fail(ErrorKind::Schema, "polynomial must be a JSON array of terms");
    const unsigned q = ring.order();
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("exps") || !term.contains("coeff") || !term["coeff"].is_string())
            fail(ErrorKind::Schema, "term needs 'exps' and a string 'coeff'");
        RationalPolynomial::Monomial m(p.num_vars(), 0);
        for (const auto& [label, e] : term["exps"].items()) {
            if (label.size() < 2 || label.front() != '(' || label.back() != ')' || !e.is_number_unsigned())
                fail(ErrorKind::Schema, "bad exponent entry '" + label + "'");
            std::vector<Symbol> tuple;
            std::stringstream ss(label.substr(1, label.size() - 2));
            std::string part;
            while (std::getline(ss, part, ',')) tuple.push_back(static_cast<Symbol>(std::stoul(part)));
            if (tuple.size() != arity) fail(ErrorKind::Schema, "variable '" + label + "' has the wrong arity");
            m[var_index(q, tuple)] = e.get<std::uint16_t>();
        }
        p.add_term(std::move(m), Rational::parse(term["coeff"].get<std::string>()));
    }
    return p;
}

}  // namespace jacobi
