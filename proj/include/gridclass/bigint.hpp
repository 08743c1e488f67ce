#pragma once

// Arbitrary-precision integer/rational aliases and combinatorial helpers.
// Counts of gridded permutations overflow 64 bits around n = 25 even for
// small matrices, so every exact count in this library is a BigInt.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace gridclass {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;  // exact at every step: result is C(n-k+i, i)
    }
    return result;
}

// multinomial(total; parts) with sum(parts) == total
inline BigInt multinomial(std::span<const std::int64_t> parts) {
    BigInt result = 1;
    std::int64_t running = 0;
    for (std::int64_t p : parts) {
        if (p < 0) throw std::invalid_argument("multinomial: negative part");
        running += p;
        result *= binomial(running, p);
    }
    return result;
}

inline BigInt multinomial(const std::vector<std::int64_t>& parts) {
    return multinomial(std::span<const std::int64_t>(parts));
}

inline BigInt int_pow(BigInt base, std::uint64_t e) {
    BigInt result = 1;
    while (e) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

inline double to_double(const BigRat& r) { return r.convert_to<double>(); }

}  // namespace gridclass
