#include "dup23/valuation.hpp"

#include <stdexcept>
#include <vector>

namespace dup23 {

namespace {

void check_args(unsigned p, bool nonpositive) {
    if (p < 2) throw std::invalid_argument("valuation base must be >= 2");
    if (nonpositive) throw std::domain_error("valuation requires n >= 1");
}

}  // namespace

unsigned vp(unsigned p, const mpz_class& n) {
    check_args(p, n <= 0);
    if (p == 2) return static_cast<unsigned>(mpz_scan1(n.get_mpz_t(), 0));

    mpz_class rest = n;
    if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) return 0;

    // Ascend: strip p, p^2, p^4, ... while each block still divides.
    std::vector<mpz_class> blocks{mpz_class(p)};
    unsigned k = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), blocks.back().get_mpz_t())) {
        mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), blocks.back().get_mpz_t());
        k += 1u << (blocks.size() - 1);
        blocks.push_back(blocks.back() * blocks.back());
    }
    // Descend: what remains has valuation < 2^(blocks.size()-1).
    for (std::size_t j = blocks.size(); j-- > 0;) {
        if (mpz_divisible_p(rest.get_mpz_t(), blocks[j].get_mpz_t())) {
            mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), blocks[j].get_mpz_t());
            k += 1u << j;
        }
    }
    return k;
}

unsigned vp(unsigned p, std::uint64_t n) {
    check_args(p, n == 0);
    if (p == 2) return static_cast<unsigned>(__builtin_ctzll(n));
    unsigned k = 0;
    while (n % p == 0) {
        n /= p;
        ++k;
    }
    return k;
}

unsigned v2_pow3_minus1(std::uint64_t n) {
    if (n == 0) throw std::domain_error("3^0 - 1 = 0 has no valuation");
    return n % 2 ? 1 : 2 + vp(2, n);
}

unsigned v3_pow2_minus1(std::uint64_t n) {
    if (n == 0) throw std::domain_error("2^0 - 1 = 0 has no valuation");
    return n % 2 ? 0 : 1 + vp(3, n);
}

bool ValuationRecord::holds() const {
    if (n <= 0 || p < 2) return false;
    mpz_class pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), p, k);
    if (!mpz_divisible_p(n.get_mpz_t(), pk.get_mpz_t())) return false;
    pk *= p;
    return !mpz_divisible_p(n.get_mpz_t(), pk.get_mpz_t());
}

}  // namespace dup23
