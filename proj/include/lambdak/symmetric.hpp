#pragma once

#include <span>
#include <vector>

#include "lambdak/poly.hpp"

namespace lambdak {

// Formal roots root_family(1) .. root_family(count) used to evaluate and
// decompose symmetric polynomials (the splitting principle).
struct SymmetricContext {
    char root_family = 'x';
    int count = 1;  // >= 1
};

// The k-th elementary symmetric polynomial of fam_1 .. fam_d.
// e_0 = 1;  e_k = 0 for k > d.
MultiPoly elementary_symmetric(char family, int d, int k);

// e_k of an explicit list of ring values, by the standard one-pass recurrence.
MultiPoly elementary_of_values(std::span<const MultiPoly> values, int k);

// True iff f is invariant under every adjacent transposition of the roots.
bool is_symmetric_in(const MultiPoly& f, const SymmetricContext& ctx,
                     int* witness_swap = nullptr);

// Rewrite a symmetric polynomial in the elementary basis: the result lives in
// out_family(1) .. out_family(d), and substituting out_family(k) by the k-th
// elementary symmetric polynomial of the roots reproduces f exactly.
// Classical leading-term subtraction under graded lex; coefficients stay
// integral throughout. Throws NotSymmetricError when f is not symmetric.
MultiPoly express_in_elementary(const MultiPoly& f, const SymmetricContext& ctx,
                                char out_family = 'e');

// Universal multiplication polynomial: the i-th elementary symmetric function
// of the i*i pairwise products x_a*y_b, pushed down to the elementary bases of
// both sides and renamed r_k / s_k. r_k stands for the k-th lambda-operation
// value of the left factor, s_k for the right.
// Cached per i; `cap` bounds i*i (formal-root expansion cost).
const MultiPoly& universal_p(int i, int cap = 12);

// Universal composition polynomial: the i-th elementary symmetric function of
// the products over j-element subsets of i*j roots, in r_1 .. r_{i*j}.
// Cached per (i, j); `cap` bounds i*j.
const MultiPoly& universal_pij(int i, int j, int cap = 12);

// Families used by the universal polynomials.
inline constexpr char kUniversalLeft = 'r';
inline constexpr char kUniversalRight = 's';

}  // namespace lambdak
