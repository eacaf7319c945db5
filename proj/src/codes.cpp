#include "jacobi/codes.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string_view>
#include <unordered_set>

#include "detail/counter.hpp"
#include "jacobi/error.hpp"
#include "json.hpp"

namespace jacobi {

namespace {

std::string_view as_key(std::span<const Symbol> w) { return {reinterpret_cast<const char*>(w.data()), w.size()}; }

template <unsigned Arity>
DistributionTable<Arity> to_table(const detail::CountMap& counts) {
    DistributionTable<Arity> t;
    for (const auto& [v, c] : counts) t.entries.emplace(BasicComposition<Arity>{v}, c);
    return t;
}

// Additive closure of the generators inside Z_k^n (or F_q^n): word
// s + c g is appended the first time it appears.
std::vector<Symbol> closure(const RingSpec& ring, std::size_t n, const std::vector<Word>& gens, const Budget& budget) {
    std::vector<Symbol> data(n, 0);
    std::unordered_set<std::string> seen{std::string(n, '\0')};
    Word next(n);
    for (const auto& g : gens) {
        const std::size_t base = data.size() / n;
        for (unsigned c = 1; c < ring.order(); ++c) {
            for (std::size_t s = 0; s < base; ++s) {
                const Symbol* src = data.data() + s * n;
                for (std::size_t i = 0; i < n; ++i) next[i] = ring.add(src[i], ring.mul(static_cast<Symbol>(c), g[i]));
                if (seen.emplace(as_key(next)).second) {
                    budget.require(data.size() / n + 1, "code enumeration");
                    data.insert(data.end(), next.begin(), next.end());
                }
            }
        }
    }
    return data;
}

struct Echelon {
    std::vector<Word> rows;  // reduced row echelon form, nonzero rows
    std::vector<std::size_t> pivots;
};

Echelon row_reduce(const RingSpec& ring, std::vector<Word> rows, std::size_t n) {
    Echelon e;
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const Symbol inv = ring.inv(rows[r][col]);
        for (auto& x : rows[r]) x = ring.mul(x, inv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            const Symbol factor = rows[i][col];
            for (std::size_t j = 0; j < n; ++j) rows[i][j] = ring.sub(rows[i][j], ring.mul(factor, rows[r][j]));
        }
        e.pivots.push_back(col);
        ++r;
    }
    rows.resize(r);
    e.rows = std::move(rows);
    return e;
}

}  // namespace

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    std::vector<bool> hit(images_.size(), false);
    for (auto i : images_) {
        if (i >= images_.size() || hit[i]) fail(ErrorKind::InvalidArgument, "not a permutation");
        hit[i] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> id(n);
    std::iota(id.begin(), id.end(), std::size_t{0});
    return Permutation(std::move(id));
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
    return Permutation(std::move(inv));
}

LinearCode::LinearCode(RingSpec ring, std::size_t n, std::vector<Word> generators, std::string name)
    : ring_(std::move(ring)), n_(n), generators_(std::move(generators)), name_(std::move(name)) {
    if (n_ == 0) fail(ErrorKind::InvalidArgument, "code length must be positive");
    for (const auto& g : generators_) {
        if (g.size() != n_) fail(ErrorKind::InvalidArgument, "generator length differs from n");
        for (auto s : g)
            if (!ring_.valid(s))
                fail(ErrorKind::InvalidArgument,
                     "generator symbol " + std::to_string(s) + " out of range for " + ring_.name());
    }
}

std::uint64_t LinearCode::size(const Budget& budget) const {
    if (ring_.is_field()) return saturating_pow(ring_.order(), field_basis(ring_, generators_).size());
    return enumerate(budget).size();
}

CodewordList LinearCode::enumerate(const Budget& budget) const {
    if (!ring_.is_field()) return CodewordList(n_, closure(ring_, n_, generators_, budget));
    const auto basis = field_basis(ring_, generators_);
    const unsigned q = ring_.order();
    budget.require(saturating_pow(q, basis.size()), "code enumeration");
    const std::size_t k = basis.size();
    std::vector<Symbol> data;
    data.reserve(static_cast<std::size_t>(saturating_pow(q, k)) * n_);
    // acc[j] = sum over i < j of c_i b_i; the last basis row varies fastest.
    std::vector<Word> acc(k + 1, Word(n_, 0));
    auto rec = [&](auto&& self, std::size_t j) -> void {
        if (j == k) {
            data.insert(data.end(), acc[k].begin(), acc[k].end());
            return;
        }
        for (unsigned c = 0; c < q; ++c) {
            for (std::size_t i = 0; i < n_; ++i)
                acc[j + 1][i] = ring_.add(acc[j][i], ring_.mul(static_cast<Symbol>(c), basis[j][i]));
            self(self, j + 1);
        }
    };
    rec(rec, 0);
    return CodewordList(n_, std::move(data));
}

bool LinearCode::contains(std::span<const Symbol> word) const {
    if (word.size() != n_) return false;
    if (ring_.is_field()) {
        auto rows = generators_;
        const auto before = field_basis(ring_, rows).size();
        rows.emplace_back(word.begin(), word.end());
        return field_basis(ring_, rows).size() == before;
    }
    const auto words = enumerate();
    for (std::size_t i = 0; i < words.size(); ++i)
        if (std::ranges::equal(words[i], word)) return true;
    return false;
}

LinearCode LinearCode::renamed(std::string name) const { return LinearCode(ring_, n_, generators_, std::move(name)); }

std::vector<Word> field_basis(const RingSpec& ring, const std::vector<Word>& rows) {
    if (!ring.is_field()) fail(ErrorKind::InvalidArgument, "row reduction needs a field");
    if (rows.empty()) return {};
    return row_reduce(ring, rows, rows.front().size()).rows;
}

LinearCode dual(const LinearCode& code, const Budget& budget) {
    const RingSpec& ring = code.ring();
    const std::size_t n = code.length();
    const std::string name = code.name().empty() ? std::string() : code.name() + "_dual";
    if (ring.is_field()) {
        const auto e = row_reduce(ring, code.generators(), n);
        std::vector<bool> is_pivot(n, false);
        for (auto c : e.pivots) is_pivot[c] = true;
        std::vector<Word> gens;
        for (std::size_t free = 0; free < n; ++free) {
            if (is_pivot[free]) continue;
            Word x(n, 0);
            x[free] = 1;
            for (std::size_t r = 0; r < e.rows.size(); ++r) x[e.pivots[r]] = ring.neg(e.rows[r][free]);
            gens.push_back(std::move(x));
        }
        return LinearCode(ring, n, std::move(gens), name);
    }
    budget.require(saturating_pow(ring.order(), n), "Z_k dual scan");
    // Scan every vector; keep a generator only when it enlarges the span.
    std::vector<Word> gens;
    std::unordered_set<std::string> span{std::string(n, '\0')};
    std::vector<Symbol> span_words(n, 0);
    Word v(n, 0);
    while (true) {
        bool orthogonal = true;
        for (const auto& g : code.generators())
            if (inner_product(ring, g, v) != 0) {
                orthogonal = false;
                break;
            }
        if (orthogonal && !span.contains(std::string(as_key(v)))) {
            gens.push_back(v);
            span_words = closure(ring, n, gens, budget);
            span.clear();
            for (std::size_t i = 0; i < span_words.size(); i += n)
                span.emplace(reinterpret_cast<const char*>(span_words.data() + i), n);
        }
        std::size_t i = n;
        while (i-- > 0) {
            if (++v[i] < ring.order()) break;
            v[i] = 0;
        }
        if (i == static_cast<std::size_t>(-1)) break;
    }
    return LinearCode(ring, n, std::move(gens), name);
}

Word permute_word(std::span<const Symbol> u, const Permutation& sigma) {
    if (u.size() != sigma.size()) fail(ErrorKind::Mismatch, "permutation length differs from word length");
    Word out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[sigma[i]];
    return out;
}

LinearCode permute(const LinearCode& code, const Permutation& sigma) {
    std::vector<Word> gens;
    gens.reserve(code.generators().size());
    for (const auto& g : code.generators()) gens.push_back(permute_word(g, sigma));
    return LinearCode(code.ring(), code.length(), std::move(gens), code.name());
}

unsigned weight(std::span<const Symbol> u) noexcept {
    unsigned w = 0;
    for (auto s : u) w += s != 0;
    return w;
}

Composition composition(const RingSpec& ring, std::span<const Symbol> u) {
    Composition c{std::vector<std::uint16_t>(ring.order(), 0)};
    for (auto s : u) ++c.counts.at(s);
    return c;
}

JacobiComposition jacobi_composition(const RingSpec& ring, std::span<const Symbol> u, std::span<const Symbol> w) {
    if (u.size() != w.size()) fail(ErrorKind::Mismatch, "Jacobi composition of words of different lengths");
    const unsigned q = ring.order();
    JacobiComposition c{std::vector<std::uint16_t>(std::size_t{q} * q, 0)};
    for (std::size_t i = 0; i < u.size(); ++i) ++c.counts.at(std::size_t{u[i]} * q + w[i]);
    return c;
}

JointJacobiComposition joint_jacobi_composition(const RingSpec& ring, std::span<const Symbol> u,
                                                std::span<const Symbol> v, std::span<const Symbol> w) {
    if (u.size() != v.size() || u.size() != w.size())
        fail(ErrorKind::Mismatch, "joint Jacobi composition of words of different lengths");
    const std::size_t q = ring.order();
    JointJacobiComposition c{std::vector<std::uint16_t>(q * q * q, 0)};
    for (std::size_t i = 0; i < u.size(); ++i) ++c.counts.at((u[i] * q + v[i]) * q + w[i]);
    return c;
}

void require_compatible(const LinearCode& a, const LinearCode& b) {
    if (!(a.ring() == b.ring())) fail(ErrorKind::Mismatch, "codes over different rings");
    if (a.length() != b.length()) fail(ErrorKind::Mismatch, "codes of different lengths");
}

void require_word(const LinearCode& code, std::span<const Symbol> w, const char* what) {
    if (w.size() != code.length())
        fail(ErrorKind::Mismatch, std::string(what) + " has length " + std::to_string(w.size()) + ", code length is " +
                                      std::to_string(code.length()));
    for (auto s : w)
        if (!code.ring().valid(s)) fail(ErrorKind::InvalidArgument, std::string(what) + " has an out-of-range symbol");
}

DistributionTable<1> composition_table(const LinearCode& code, const Budget& budget) {
    const auto words = code.enumerate(budget);
    const unsigned q = code.ring().order();
    detail::CompositionCounter counter(q, static_cast<unsigned>(code.length()));
    std::vector<std::uint16_t> counts(q);
    for (std::size_t i = 0; i < words.size(); ++i) {
        std::ranges::fill(counts, 0);
        for (auto s : words[i]) ++counts[s];
        counter.add(counts);
    }
    return to_table<1>(counter.result());
}

DistributionTable<2> jacobi_table(const LinearCode& code, std::span<const Symbol> w, const Budget& budget) {
    require_word(code, w, "w");
    const auto words = code.enumerate(budget);
    const unsigned q = code.ring().order();
    detail::CompositionCounter counter(std::size_t{q} * q, static_cast<unsigned>(code.length()));
    std::vector<std::uint16_t> counts(std::size_t{q} * q);
    for (std::size_t i = 0; i < words.size(); ++i) {
        std::ranges::fill(counts, 0);
        const auto u = words[i];
        for (std::size_t j = 0; j < u.size(); ++j) ++counts[std::size_t{u[j]} * q + w[j]];
        counter.add(counts);
    }
    return to_table<2>(counter.result());
}

DistributionTable<3> joint_jacobi_table(const LinearCode& c, const LinearCode& d, std::span<const Symbol> w,
                                        const Budget& budget) {
    require_compatible(c, d);
    require_word(c, w, "w");
    const auto cw = c.enumerate(budget);
    const auto dw = d.enumerate(budget);
    budget.require(saturating_mul(cw.size(), dw.size()), "codeword pair enumeration");
    const std::size_t q = c.ring().order();
    const std::size_t n = c.length();
    const std::size_t slots = q * q * q;
    detail::CompositionCounter counter(slots, static_cast<unsigned>(n));
    // slot of position i for the pair (u, v) is u_i q^2 + vw[v][i]
    std::vector<std::uint32_t> vw(dw.size() * n);
    for (std::size_t k = 0; k < dw.size(); ++k)
        for (std::size_t i = 0; i < n; ++i) vw[k * n + i] = static_cast<std::uint32_t>(dw[k][i] * q + w[i]);
    if (counter.packed()) {
        std::vector<std::uint64_t> unit(slots);
        for (std::size_t s = 0; s < slots; ++s) unit[s] = counter.slot_unit(s);
        std::unordered_map<std::uint64_t, std::uint64_t> local;
        for (std::size_t a = 0; a < cw.size(); ++a) {
            const auto u = cw[a];
            for (std::size_t k = 0; k < dw.size(); ++k) {
                const std::uint32_t* row = vw.data() + k * n;
                std::uint64_t key = 0;
                for (std::size_t i = 0; i < n; ++i) key += unit[u[i] * q * q + row[i]];
                ++local[key];
            }
        }
        for (const auto& [key, count] : local) counter.add_key(key, count);
    } else {
        std::vector<std::uint16_t> counts(slots);
        for (std::size_t a = 0; a < cw.size(); ++a) {
            const auto u = cw[a];
            for (std::size_t k = 0; k < dw.size(); ++k) {
                std::ranges::fill(counts, 0);
                const std::uint32_t* row = vw.data() + k * n;
                for (std::size_t i = 0; i < n; ++i) ++counts[u[i] * q * q + row[i]];
                counter.add(counts);
            }
        }
    }
    return to_table<3>(counter.result());
}

// ---- code files ----

namespace {

RingSpec parse_ring(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        fail(ErrorKind::Schema, "ring must be an object with a string 'kind'");
    const std::string kind = j["kind"];
    auto uint_field = [&](const char* key) -> unsigned {
        if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 0)
            fail(ErrorKind::Schema, std::string("ring.") + key + " must be a non-negative integer");
        return j[key].get<unsigned>();
    };
    if (kind == "field") {
        for (const auto& [key, value] : j.items())
            if (key != "kind" && key != "p" && key != "f" && key != "primitive_poly")
                fail(ErrorKind::Schema, "unknown ring key '" + key + "'");
        const unsigned p = uint_field("p");
        const unsigned f = j.contains("f") ? uint_field("f") : 1;
        std::vector<unsigned> poly;
        if (j.contains("primitive_poly")) {
            if (!j["primitive_poly"].is_array()) fail(ErrorKind::Schema, "ring.primitive_poly must be an array");
            for (const auto& c : j["primitive_poly"]) {
                if (!c.is_number_integer() || c.get<long long>() < 0)
                    fail(ErrorKind::Schema, "ring.primitive_poly entries must be non-negative integers");
                poly.push_back(c.get<unsigned>());
            }
        }
        return RingSpec::field(p, f, std::move(poly));
    }
    if (kind == "modring") {
        for (const auto& [key, value] : j.items())
            if (key != "kind" && key != "k") fail(ErrorKind::Schema, "unknown ring key '" + key + "'");
        return RingSpec::modring(uint_field("k"));
    }
    fail(ErrorKind::Schema, "ring.kind must be 'field' or 'modring'");
}

}  // namespace

LinearCode parse_code(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorKind::Schema, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) fail(ErrorKind::Schema, "code file must hold a JSON object");
    for (const auto& [key, value] : j.items())
        if (key != "name" && key != "ring" && key != "n" && key != "generators")
            fail(ErrorKind::Schema, "unknown key '" + key + "'");
    if (!j.contains("ring")) fail(ErrorKind::Schema, "missing 'ring'");
    if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<long long>() < 1)
        fail(ErrorKind::Schema, "'n' must be a positive integer");
    if (!j.contains("generators") || !j["generators"].is_array()) fail(ErrorKind::Schema, "'generators' must be an array");
    std::string name;
    if (j.contains("name")) {
        if (!j["name"].is_string()) fail(ErrorKind::Schema, "'name' must be a string");
        name = j["name"];
    }
    RingSpec ring = parse_ring(j["ring"]);
    const auto n = j["n"].get<std::size_t>();
    std::vector<Word> gens;
    for (const auto& row : j["generators"]) {
        if (!row.is_array()) fail(ErrorKind::Schema, "each generator must be an array");
        if (row.size() != n)
            fail(ErrorKind::Schema, "generator of length " + std::to_string(row.size()) + " in a code of length " +
                                        std::to_string(n));
        Word w;
        for (const auto& s : row) {
            if (!s.is_number_integer()) fail(ErrorKind::Schema, "generator symbols must be integers");
            const long long v = s.get<long long>();
            if (v < 0 || v >= ring.order())
                fail(ErrorKind::Schema, "generator symbol " + std::to_string(v) + " out of range for " + ring.name());
            w.push_back(static_cast<Symbol>(v));
        }
        gens.push_back(std::move(w));
    }
    return LinearCode(std::move(ring), n, std::move(gens), std::move(name));
}

LinearCode load_code(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::InvalidArgument, "cannot open code file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_code(ss.str());
}

std::string code_to_json(const LinearCode& code) {
    nlohmann::ordered_json j;
    j["name"] = code.name();
    const RingSpec& r = code.ring();
    if (r.is_field())
        j["ring"] = {{"kind", "field"}, {"p", r.p()}, {"f", r.f()}, {"primitive_poly", r.modulus()}};
    else
        j["ring"] = {{"kind", "modring"}, {"k", r.k()}};
    j["n"] = code.length();
    j["generators"] = nlohmann::json::array();
    for (const auto& g : code.generators()) {
        std::vector<unsigned> row(g.begin(), g.end());
        j["generators"].push_back(row);
    }
    return j.dump(2);
}

}  // namespace jacobi
