#pragma once

#include <gmpxx.h>

#include <cassert>
#include <string>
#include <vector>

namespace lambdak {

// Every coefficient and every number-theoretic value in this library is an
// arbitrary-precision signed integer. k^n with n around 100 overflows any
// machine word, so there is no fast path.
using BigInt = mpz_class;

inline BigInt int_pow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline BigInt int_pow(long base, unsigned long exp) {
    return int_pow(BigInt(base), exp);
}

inline BigInt gcd_of(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt abs_of(const BigInt& a) {
    BigInt r;
    mpz_abs(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline bool divides(const BigInt& d, const BigInt& a) {
    assert(d != 0);
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Quotient a/d; the caller must know d | a (asserted).
inline BigInt div_exact(const BigInt& a, const BigInt& d) {
    assert(divides(d, a));
    BigInt r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return r;
}

// Canonical residue of a modulo m > 0, always in [0, m).
inline BigInt mod_floor(const BigInt& a, const BigInt& m) {
    assert(m > 0);
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Multiplicity of the prime p in x (x != 0).
inline int padic_valuation(const BigInt& x, const BigInt& p) {
    assert(x != 0);
    BigInt rest;
    return static_cast<int>(
        mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

inline bool is_prime(const BigInt& p) {
    return mpz_probab_prime_p(p.get_mpz_t(), 30) != 0;
}

inline std::vector<int> primes_up_to(int n) {
    std::vector<int> out;
    for (int p = 2; p <= n; ++p)
        if (is_prime(BigInt(p))) out.push_back(p);
    return out;
}

inline std::string to_string(const BigInt& a) { return a.get_str(); }

}  // namespace lambdak
