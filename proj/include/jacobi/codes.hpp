#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jacobi/budget.hpp"
#include "jacobi/ring.hpp"

namespace jacobi {

// Occurrence counts indexed by R^Arity in omega order; the tuple
// (a_1, ..., a_Arity) sits at index sum a_j q^(Arity-j). Arity 1 is a
// composition l(u), 2 a Jacobi composition r(u;w), 3 a joint Jacobi
// composition h(u,v;w).
template <unsigned Arity>
struct BasicComposition {
    std::vector<std::uint16_t> counts;

    unsigned total() const {
        unsigned s = 0;
        for (auto c : counts) s += c;
        return s;
    }
    friend auto operator<=>(const BasicComposition&, const BasicComposition&) = default;
};

using Composition = BasicComposition<1>;
using JacobiComposition = BasicComposition<2>;
using JointJacobiComposition = BasicComposition<3>;

// Composition -> number of codewords (or codeword pairs) having it.
template <unsigned Arity>
struct DistributionTable {
    std::map<BasicComposition<Arity>, std::uint64_t> entries;

    std::uint64_t total() const {
        std::uint64_t s = 0;
        for (const auto& [comp, count] : entries) s += count;
        return s;
    }
    std::uint64_t at(const BasicComposition<Arity>& c) const {
        auto it = entries.find(c);
        return it == entries.end() ? 0 : it->second;
    }
    friend bool operator==(const DistributionTable&, const DistributionTable&) = default;
};

// Images sigma(1..n), stored 0-based. u^sigma = (u_sigma(1), ..., u_sigma(n)).
class Permutation {
public:
    explicit Permutation(std::vector<std::size_t> images);
    static Permutation identity(std::size_t n);

    std::size_t size() const noexcept { return images_.size(); }
    std::size_t operator[](std::size_t i) const noexcept { return images_[i]; }
    const std::vector<std::size_t>& images() const noexcept { return images_; }

    Permutation inverse() const;

private:
    std::vector<std::size_t> images_;
};

// Flat storage for an enumerated code: word i occupies symbols
// [i*n, (i+1)*n).
class CodewordList {
public:
    CodewordList(std::size_t n, std::vector<Symbol> data) : n_(n), data_(std::move(data)) {}

    std::size_t length() const noexcept { return n_; }
    std::size_t size() const noexcept { return data_.size() / n_; }
    std::span<const Symbol> operator[](std::size_t i) const noexcept { return {data_.data() + i * n_, n_}; }

    const std::vector<Symbol>& data() const noexcept { return data_; }

private:
    std::size_t n_;
    std::vector<Symbol> data_;
};

// An R-linear code given by generator rows: an F_q-subspace or an additive
// subgroup of Z_k^n.
class LinearCode {
public:
    LinearCode(RingSpec ring, std::size_t n, std::vector<Word> generators, std::string name = {});

    const RingSpec& ring() const noexcept { return ring_; }
    std::size_t length() const noexcept { return n_; }
    const std::vector<Word>& generators() const noexcept { return generators_; }
    const std::string& name() const noexcept { return name_; }

    // |C|, computed from the span (rank for fields).
    std::uint64_t size(const Budget& budget = Budget::from_env()) const;

    // Every codeword exactly once, in a deterministic order. Fields: all
    // combinations of the row-reduced basis, last basis row varying fastest.
    // Z_k: additive closure of the generators in order. Refuses spans above
    // the budget.
    CodewordList enumerate(const Budget& budget = Budget::from_env()) const;

    bool contains(std::span<const Symbol> word) const;

    // A copy labelled `name`.
    LinearCode renamed(std::string name) const;

private:
    RingSpec ring_;
    std::size_t n_;
    std::vector<Word> generators_;
    std::string name_;
};

// Loads a code file; see README for the schema.
LinearCode load_code(const std::string& path);
LinearCode parse_code(const std::string& json_text);
std::string code_to_json(const LinearCode& code);

// Row-reduced basis of the F_q span; throws for Z_k.
std::vector<Word> field_basis(const RingSpec& ring, const std::vector<Word>& rows);

// C^perp. Fields: nullspace by Gaussian elimination. Z_k: scan of all
// k^n vectors against the generators, gated by the budget.
LinearCode dual(const LinearCode& code, const Budget& budget = Budget::from_env());

Word permute_word(std::span<const Symbol> u, const Permutation& sigma);
LinearCode permute(const LinearCode& code, const Permutation& sigma);

unsigned weight(std::span<const Symbol> u) noexcept;

Composition composition(const RingSpec& ring, std::span<const Symbol> u);
JacobiComposition jacobi_composition(const RingSpec& ring, std::span<const Symbol> u, std::span<const Symbol> w);
JointJacobiComposition joint_jacobi_composition(const RingSpec& ring, std::span<const Symbol> u,
                                                std::span<const Symbol> v, std::span<const Symbol> w);

// A_L^C.
DistributionTable<1> composition_table(const LinearCode& code, const Budget& budget = Budget::from_env());
// B_R^{C,w}.
DistributionTable<2> jacobi_table(const LinearCode& code, std::span<const Symbol> w,
                                  const Budget& budget = Budget::from_env());
// B_H^{C,D,w}, iterating over C x D.
DistributionTable<3> joint_jacobi_table(const LinearCode& c, const LinearCode& d, std::span<const Symbol> w,
                                        const Budget& budget = Budget::from_env());

// Same ring and length, else ErrorKind::Mismatch.
void require_compatible(const LinearCode& a, const LinearCode& b);
void require_word(const LinearCode& code, std::span<const Symbol> w, const char* what);

}  // namespace jacobi
