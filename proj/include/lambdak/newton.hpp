#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "lambdak/bigint.hpp"

namespace lambdak {

// Conversion between lambda-operation values and Adams-operation values via
// the Newton identity
//
//   Psi^i - l^1 Psi^{i-1} + ... + (-1)^{i-1} l^{i-1} Psi^1 + (-1)^i i l^i = 0.
//
// Both directions run over any commutative-ring element type providing
// +, -, *, scaled(Elem, BigInt) and try_divide_exact(Elem&, BigInt).
// The lambda direction divides by i at step i; in a torsion-free ring the
// division is exact precisely when the Psi-values come from a genuine
// lambda-structure (Wilkerson's criterion), so a failed division is a
// certificate of non-specialness and is reported, not thrown.

template <class Elem>
struct NewtonDivisionFailure {
    int index = 0;   // the i whose division failed
    Elem newton_sum; // sum_{j=0}^{i-1} (-1)^j l^j Psi^{i-j}, not divisible by i
};

template <class Elem>
struct NewtonLambdaOutcome {
    std::optional<Elem> value;
    std::optional<NewtonDivisionFailure<Elem>> failure;

    bool ok() const { return value.has_value(); }
};

// Psi^i from lambda-values; lambdas[j-1] = l^j for j = 1..i.
template <class Elem>
Elem newton_psi_from_lambda(std::span<const Elem> lambdas, int i) {
    if (i < 1) throw std::invalid_argument("need i >= 1");
    if (lambdas.size() < static_cast<std::size_t>(i))
        throw std::invalid_argument("need lambda-values up to order i");
    std::vector<Elem> psi;
    psi.reserve(static_cast<std::size_t>(i));
    for (int m = 1; m <= i; ++m) {
        // Psi^m = sum_{j=1}^{m-1} (-1)^{j-1} l^j Psi^{m-j} + (-1)^{m-1} m l^m
        Elem acc = scaled(lambdas[static_cast<std::size_t>(m - 1)],
                          BigInt(m % 2 == 1 ? m : -m));
        for (int j = 1; j <= m - 1; ++j) {
            Elem prod = lambdas[static_cast<std::size_t>(j - 1)] *
                        psi[static_cast<std::size_t>(m - j - 1)];
            acc = acc + scaled(prod, BigInt(j % 2 == 1 ? 1 : -1));
        }
        psi.push_back(acc);
    }
    return psi.back();
}

// lambda^i from Psi-values; psis[j-1] = Psi^j for j = 1..i. The intermediate
// lambda^m are reconstructed in order; the first non-exact division by m
// aborts with that Newton sum as witness.
template <class Elem>
NewtonLambdaOutcome<Elem> newton_lambda_from_psi(std::span<const Elem> psis,
                                                 int i) {
    if (i < 1) throw std::invalid_argument("need i >= 1");
    if (psis.size() < static_cast<std::size_t>(i))
        throw std::invalid_argument("need Psi-values up to order i");
    std::vector<Elem> lam;
    lam.reserve(static_cast<std::size_t>(i));
    lam.push_back(psis[0]);  // l^1 = Psi^1
    for (int m = 2; m <= i; ++m) {
        // S = sum_{j=0}^{m-1} (-1)^j l^j Psi^{m-j}  (l^0 omitted: it is 1)
        Elem sum = psis[static_cast<std::size_t>(m - 1)];
        for (int j = 1; j <= m - 1; ++j) {
            Elem prod = lam[static_cast<std::size_t>(j - 1)] *
                        psis[static_cast<std::size_t>(m - j - 1)];
            sum = sum + scaled(prod, BigInt(j % 2 == 1 ? -1 : 1));
        }
        // l^m = (-1)^{m-1} S / m
        Elem value = scaled(sum, BigInt(m % 2 == 1 ? 1 : -1));
        if (!try_divide_exact(value, BigInt(m)))
            return {std::nullopt,
                    NewtonDivisionFailure<Elem>{m, std::move(sum)}};
        lam.push_back(std::move(value));
    }
    return {std::move(lam.back()), std::nullopt};
}

}  // namespace lambdak
