#pragma once

#include <cstdint>

#include <gmpxx.h>

namespace dup23 {

using Exponent = std::uint32_t;

/// Largest k with p^k | n. Throws std::domain_error for n == 0 and
/// std::invalid_argument for p < 2. Primality of p is not checked.
///
/// Large inputs are handled by dividing out p^(2^j) blocks, so the number
/// of big divisions is logarithmic in k rather than linear.
unsigned vp(unsigned p, const mpz_class& n);
unsigned vp(unsigned p, std::uint64_t n);

/// v_2(3^n - 1) in closed form: 1 for odd n, 2 + v_2(n) for even n.
/// 3^n is never formed.
unsigned v2_pow3_minus1(std::uint64_t n);

/// v_3(2^n - 1) in closed form: 0 for odd n, 1 + v_3(n) for even n.
unsigned v3_pow2_minus1(std::uint64_t n);

struct ValuationRecord {
    unsigned p = 2;
    mpz_class n = 1;
    unsigned k = 0;

    static ValuationRecord of(unsigned p, const mpz_class& n) { return {p, n, vp(p, n)}; }

    /// p^k | n and p^(k+1) does not.
    bool holds() const;
    /// p || n
    bool exactly_divides() const { return k == 1; }
};

}  // namespace dup23
