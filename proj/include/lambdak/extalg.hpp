#pragma once

#include <map>
#include <string>
#include <vector>

#include "lambdak/bigint.hpp"
#include "lambdak/errors.hpp"

namespace lambdak {

// Classification data for the square-zero extension groups of the K-theory of
// spheres: the exponents g^p_j, the gcd invariant G_{n,n'}, the extension
// group descriptors, odd-Hopf-invariant feasibility, and the stable groups.
//
// Every infinite gcd is computed two independent ways: a closed-form prime
// profile and a truncated brute-force gcd. The test suite demands agreement.

// Multiplicity of p in gcd{ k^j - 1 : k >= 2, p does not divide k }.
struct GpjExponent {
    int p = 2;
    int j = 1;
    int value = 0;
};

// Running gcd over eligible k starting at 2, stopped once it is unchanged
// across `window` consecutive eligible values.
GpjExponent gpj_bruteforce(int p, int j, int window = 16);

// p = 2: 1 for odd j, else 2 + v_2(j). Odd p: 0 unless (p-1) | j, else
// 1 + v_p(j). Cross-validated against gpj_bruteforce by the tests.
GpjExponent gpj_closed(int p, int j);

// G_{n,n'} = gcd{ l^n - l^{n'} : l >= 2 }, as a prime profile.
// value = 0 encodes the degenerate n = n' branch (gcd of {0}).
struct GnProfile {
    int n = 1;
    int n_prime = 1;
    std::map<int, int> factorization;  // prime -> positive multiplicity
    BigInt value{0};

    bool degenerate() const { return n == n_prime; }
};

// Closed form: multiplicity of every prime p is min(min(n,n'), g^p_{|n-n'|}),
// zero except for p = 2 and odd p with (p-1) | |n-n'|.
GnProfile big_G(int n, int n_prime);

// Independent oracle: gcd of |l^n - l^{n'}| over 2 <= l <= l_max.
// Throws DegenerateSetError when n = n'.
BigInt big_G_bruteforce(int n, int n_prime, int l_max);

// One linear congruence sum(coeffs[t] * coordinate[t]) = 0 (mod modulus) on
// the (h, nu) coordinates of a descriptor.
struct Congruence {
    std::vector<BigInt> coeffs;
    BigInt modulus{2};

    friend bool operator==(const Congruence&, const Congruence&) = default;
};

// Finitely generated abelian group Z^r + sum Z_{m_i}, with two extensions:
// per_prime_free marks the symbolic "one free integer per prime" branch, and
// congruences carve out the lambda-case subgroup. When per_prime_free is set
// each residual prime coordinate nu_p (p > 2) additionally satisfies
// nu_p = 0 (mod p); that infinite family is implied, not listed.
struct AbelianGroupDescriptor {
    int free_rank = 0;
    std::vector<BigInt> torsion;  // entries >= 2
    bool per_prime_free = false;
    std::vector<Congruence> congruences;
    bool odd_h_admissible = true;

    friend bool operator==(const AbelianGroupDescriptor&,
                           const AbelianGroupDescriptor&) = default;
};

// Psi-ring extension classes of K(S^{2n}) by the reduced K-theory of S^{2n'}:
// Z + Z_{G_{n,n'}} for n != n', Z + (one Z per prime) for n = n'.
AbelianGroupDescriptor extalg_psi(int n, int n_prime);

// Lambda-ring classes: the Psi-descriptor constrained by
//   h = nu * (2^n - 2^{n'})/G  (mod 2)          for n != n'
//   h = nu_2 (mod 2), nu_p = 0 (mod p) for p > 2 for n = n'.
// odd_h_admissible reports whether some class has odd Hopf invariant.
AbelianGroupDescriptor extalg_lambda(int n, int n_prime);

// nu_l = nu_2 * (l^{n'} - l^n) / (2^{n'} - 2^n); the division must be exact,
// otherwise nu_2 is not an admissible value and NonIntegralDivisionError is
// thrown. Requires n != n'.
BigInt nu_from_nu2(int n, int n_prime, const BigInt& nu2, const BigInt& l);

// Feasibility of an odd Hopf invariant among the lambda-extension classes.
struct HopfReport {
    int n = 1;
    int n_prime = 1;
    bool feasible = false;
    std::string reason;   // which criterion fired
    int theorem_case = 0; // 1..5, or 0 for none
};

// feasible <=> n = n' or min(n,n') <= g^2_{|n-n'|}. The five structural cases
// (n=n'; n or n' = 1; even gap with an endpoint 2; gap divisible by 2^{min-2})
// characterize the same set; theorem_case reports the first that holds.
HopfReport odd_hopf_feasible(int n, int n_prime);

// All n <= n_max for which (n, a*n) admits an odd Hopf invariant.
// jobs > 1 runs the scan with OpenMP; jobs <= 1 is the serial reference.
std::vector<int> adams_scan(int a, int n_max, int jobs = 1);

// Stable classification groups: for n > k+1 the pair (n, n+k) gives the same
// group for every n; rows carry the gap k, the torsion order and the free
// part (always "2Z": the parity congruence coefficient is even in the stable
// range, forcing the Hopf coordinate even).
struct StableRow {
    int k = 1;
    BigInt torsion{1};
    std::string free_part = "2Z";
};

// Evaluates the lambda-descriptor at n = k+2 after asserting stability of
// G_{n,n+k} across a grid of n.
AbelianGroupDescriptor stable_extalg(int k);

std::vector<StableRow> stable_table(int k_max, int jobs = 1);

// Aligned text rendering of the table.
std::string format_stable_table(const std::vector<StableRow>& rows);

}  // namespace lambdak
