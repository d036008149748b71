#include "permlab/makarov.hpp"

#include <stdexcept>
#include <string>

namespace permlab {

int mobius(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("mobius is defined for n >= 1");
    int result = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

BigInt psi(std::uint64_t t) {
    if (t == 0) throw std::invalid_argument("psi is defined for t >= 1");
    BigInt total = 0;
    for (std::uint64_t d = 1; d <= t; ++d) {
        if (t % d != 0) continue;
        const int mu = mobius(t / d);
        if (mu == 0) continue;
        const BigInt power = BigInt(1) << d;
        total += mu > 0 ? power : BigInt(-power);
    }
    return total;
}

BigInt max_complexity(std::uint64_t n_plus_1) {
    if (n_plus_1 < 2) throw std::invalid_argument("max_complexity needs n + 1 >= 2");
    const std::uint64_t n = n_plus_1 - 1;
    BigInt total = 0;
    for (std::uint64_t t = 1; t <= n; ++t) total += psi(t) << (n - t);
    return total;
}

std::uint64_t count_primitive_words(unsigned t) {
    if (t == 0) throw std::invalid_argument("word length must be positive");
    if (t > kMaxPrimitiveEnumeration) {
        throw BudgetExceeded("primitive-word enumeration is limited to t <= " +
                             std::to_string(kMaxPrimitiveEnumeration));
    }
    const std::uint64_t mask = (std::uint64_t{1} << t) - 1;
    std::uint64_t count = 0;
    for (std::uint64_t word = 0; word <= mask; ++word) {
        bool primitive = true;
        // A proper power u^k is invariant under rotation by |u|.
        for (unsigned d = 1; d < t && primitive; ++d) {
            if (t % d != 0) continue;
            const std::uint64_t rotated = ((word >> d) | (word << (t - d))) & mask;
            if (rotated == word) primitive = false;
        }
        if (primitive) ++count;
    }
    return count;
}

std::vector<ComplexityTableRow> complexity_table(std::uint64_t max_n) {
    std::vector<ComplexityTableRow> rows;
    BigInt p = 0;  // p(t + 1) = 2 p(t) + psi(t), with p(1) standing in as 0
    for (std::uint64_t t = 1; t <= max_n; ++t) {
        ComplexityTableRow row;
        row.t = t;
        row.psi = psi(t);
        if (t <= kMaxPrimitiveEnumeration) row.oracle = count_primitive_words(static_cast<unsigned>(t));
        p = 2 * p + row.psi;
        row.p_next = p;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace permlab
