#include "jacobi/error.hpp"

#include <cerrno>
#include <cstdlib>
#include <limits>

#include "jacobi/budget.hpp"

namespace jacobi {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::Schema: return "SchemaViolation";
        case ErrorKind::Mismatch: return "Mismatch";
        case ErrorKind::Budget: return "BudgetExceeded";
        case ErrorKind::NonRational: return "NonRationalValue";
    }
    return "Unknown";
}

Budget Budget::from_env() {
    Budget b;
    if (const char* env = std::getenv("JF_BUDGET"); env && *env) {
        char* end = nullptr;
        errno = 0;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (errno != 0 || *end != '\0' || v == 0)
            fail(ErrorKind::InvalidArgument, std::string("JF_BUDGET must be a positive integer, got '") + env + "'");
        b.limit = v;
    }
    return b;
}

void Budget::require(std::uint64_t items, const std::string& what) const {
    if (!allows(items))
        fail(ErrorKind::Budget, what + " needs " + (items == std::numeric_limits<std::uint64_t>::max()
                                                        ? std::string("more than 2^64")
                                                        : std::to_string(items)) +
                                    " items, budget is " + std::to_string(limit));
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) noexcept {
    if (a == 0 || b == 0) return 0;
    if (a > std::numeric_limits<std::uint64_t>::max() / b) return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) noexcept {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) r = saturating_mul(r, base);
    return r;
}

}  // namespace jacobi
