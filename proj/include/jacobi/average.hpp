#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>

#include "jacobi/codes.hpp"
#include "jacobi/polynomial.hpp"

namespace jacobi {

// u^w: u_i where w_i = 0, zero elsewhere.
Word mask_word(std::span<const Symbol> u, std::span<const Symbol> w);

// Largest n the brute-force S_n averages accept.
inline constexpr std::size_t kBruteForceMaxLength = 8;

// (1/n!) sum_sigma Jac(C^sigma, w), by enumerating S_n.
RationalPolynomial brute_average_jacobi(const LinearCode& c, std::span<const Symbol> w,
                                        const Budget& budget = Budget::from_env());
// (1/n!) sum_sigma JointJac(C^sigma, D, w), by enumerating S_n.
RationalPolynomial brute_average_joint_jacobi(const LinearCode& c, const LinearCode& d, std::span<const Symbol> w,
                                              const Budget& budget = Budget::from_env());
// (1/n!) sum_sigma |C^sigma cap_w D|, by enumerating S_n.
Rational brute_average_intersection(const LinearCode& c, const LinearCode& d, std::span<const Symbol> w,
                                    const Budget& budget = Budget::from_env());

// Closed-form average Jacobi polynomial from A_L^C: the sum over Jacobi
// compositions R with u-marginal L and w-marginal l(w) of
// A_L prod_b multinomial(l_b(w); R_(.,b)) / multinomial(n; L) x^R.
RationalPolynomial avg_jacobi(const RingSpec& ring, const DistributionTable<1>& a_table,
                              std::span<const std::uint16_t> w_composition);
RationalPolynomial avg_jacobi(const LinearCode& c, std::span<const Symbol> w,
                              const Budget& budget = Budget::from_env());

// Closed-form average complete joint Jacobi polynomial from A_L^C and
// B_R^{D,w}: the sum over joint compositions H with u-marginal L and
// (v,w)-marginal R of A_L B_R prod_a multinomial(R_a; H_(.,a)) /
// multinomial(n; L) x^H. `max_terms` guards the expansion.
RationalPolynomial avg_joint_jacobi(const RingSpec& ring, const DistributionTable<1>& a_table,
                                    const DistributionTable<2>& b_table, std::uint64_t max_terms);
RationalPolynomial avg_joint_jacobi(const LinearCode& c, const LinearCode& d, std::span<const Symbol> w,
                                    const Budget& budget = Budget::from_env());

// The same closed form evaluated at `point` without expanding: the sum is
// accumulated directly, and cells whose point value is zero are pruned.
Rational evaluate_avg_joint_jacobi(const RingSpec& ring, const DistributionTable<1>& a_table,
                                   const DistributionTable<2>& b_table, const EvaluationPoint<Rational>& point);
Rational evaluate_avg_joint_jacobi(const LinearCode& c, const LinearCode& d, std::span<const Symbol> w,
                                   const EvaluationPoint<Rational>& point,
                                   const Budget& budget = Budget::from_env());

// y_(a1 a2 a3) = 0 when a1 != a2 and a3 = 0, else 1. Evaluating the average
// joint Jacobi polynomial there gives the average Jacobi intersection number.
EvaluationPoint<Rational> intersection_point(const RingSpec& ring);

// |C cap_w D| = #{(u, v) in C x D : u^w = v^w}.
std::uint64_t jacobi_intersection_size(const LinearCode& c, const LinearCode& d, std::span<const Symbol> w,
                                       const Budget& budget = Budget::from_env());

// Average Jacobi intersection number from A_L^C and B_R''^{D,w}: pairs
// (R', R'') agree on the w = 0 column, R' has w-marginal l(w) and
// u-marginal L; the weight is prod_{b != 0} multinomial(l_b(w); R'_(.,b)) /
// multinomial(n; L). l(w) is read off the w-marginal of the B table.
Rational avg_jacobi_intersection(const RingSpec& ring, const DistributionTable<1>& a_table,
                                 const DistributionTable<2>& b_table);
Rational avg_jacobi_intersection(const LinearCode& c, const LinearCode& d, std::span<const Symbol> w,
                                 const Budget& budget = Budget::from_env());

enum class Provenance { ClosedForm, Brute, MonteCarlo };

struct MonteCarloStats {
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    double mean = 0;
    double stddev = 0;  // sample standard deviation
    double standard_error() const;
};

struct AverageResult {
    Rational value;  // exact for closed form and brute; sum/samples for Monte Carlo
    Provenance provenance = Provenance::ClosedForm;
    std::optional<MonteCarloStats> monte_carlo;
};

// Mean of |C^sigma cap_w D| over `samples` uniform random sigma. The
// permutation stream depends only on `seed`.
AverageResult monte_carlo_delta(const LinearCode& c, const LinearCode& d, std::span<const Symbol> w,
                                std::uint64_t samples, std::uint64_t seed,
                                const Budget& budget = Budget::from_env());

}  // namespace jacobi
