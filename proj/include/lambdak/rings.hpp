#pragma once

#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lambdak/matrix.hpp"
#include "lambdak/newton.hpp"
#include "lambdak/poly.hpp"

namespace lambdak {

// ---------------------------------------------------------------------------
// Free Psi-ring: the polynomial ring on indexed generators with the Adams
// operations acting by index multiplication, Psi^k(a_j) = a_{kj}.
// ---------------------------------------------------------------------------

class FreePsiRing {
public:
    explicit FreePsiRing(std::string_view families);

    const std::set<char>& alphabet() const { return alphabet_; }
    bool owns(char family) const { return alphabet_.count(family) != 0; }

    MultiPoly generator(char family, int index = 1) const;

    // The unique ring-endomorphism extension of the generator rule.
    MultiPoly psi(int k, const MultiPoly& element) const;

private:
    std::set<char> alphabet_;
};

// Coproduct of two free Psi-rings with disjoint alphabets; the element
// r (x) s is the product in the merged polynomial ring, and the Adams
// operations act factorwise. Throws AlphabetClashError on overlap.
std::pair<FreePsiRing, MultiPoly> tensor_psi(const FreePsiRing& left,
                                             const MultiPoly& left_elem,
                                             const FreePsiRing& right,
                                             const MultiPoly& right_elem);

// ---------------------------------------------------------------------------
// K(S^{2n}): dual numbers Z<1> + Z<y> with y^2 = 0 and Psi^k(y) = k^n y.
// The pair representation is exact; only the Adams action depends on n.
// ---------------------------------------------------------------------------

struct SphereKElement {
    BigInt unit{0};     // coefficient of 1
    BigInt reduced{0};  // coefficient of y

    friend bool operator==(const SphereKElement&, const SphereKElement&) = default;

    friend SphereKElement operator+(const SphereKElement& a, const SphereKElement& b) {
        return {a.unit + b.unit, a.reduced + b.reduced};
    }
    friend SphereKElement operator-(const SphereKElement& a, const SphereKElement& b) {
        return {a.unit - b.unit, a.reduced - b.reduced};
    }
    friend SphereKElement operator*(const SphereKElement& a, const SphereKElement& b) {
        return {a.unit * b.unit, a.unit * b.reduced + b.unit * a.reduced};
    }

    std::string str() const;
};

inline SphereKElement scaled(const SphereKElement& e, const BigInt& c) {
    return {e.unit * c, e.reduced * c};
}

inline bool try_divide_exact(SphereKElement& e, const BigInt& d) {
    if (!divides(d, e.unit) || !divides(d, e.reduced)) return false;
    e.unit = div_exact(e.unit, d);
    e.reduced = div_exact(e.reduced, d);
    return true;
}

class SphereKRing {
public:
    explicit SphereKRing(int n);

    int half_dimension() const { return n_; }

    static SphereKElement one() { return {1, 0}; }
    static SphereKElement y() { return {0, 1}; }

    SphereKElement psi(int k, const SphereKElement& e) const;

    // lambda^i via the Newton bridge; exact for every element of this ring.
    SphereKElement lambda(int i, const SphereKElement& e) const;

private:
    int n_;
};

// ---------------------------------------------------------------------------
// Specialness: Psi^p(r) = r^p (mod p) for every prime p. Sampled check;
// a failure is a result, not an error.
// ---------------------------------------------------------------------------

struct SpecialnessWitness {
    int prime = 0;
    std::string element;  // sample that failed
    std::string defect;   // Psi^p(r) - r^p reduced mod p, nonzero
};

std::vector<int> default_special_primes();  // {2, 3, 5, 7, 11, 13}

// Generators plus all products of two generators (indices 1 and 2 per family).
std::vector<MultiPoly> default_special_samples(const FreePsiRing& ring);
std::vector<SphereKElement> default_special_samples(const SphereKRing& ring);

std::optional<SpecialnessWitness> check_special(
    const FreePsiRing& ring, std::span<const int> primes,
    std::span<const MultiPoly> samples);
std::optional<SpecialnessWitness> check_special(
    const SphereKRing& ring, std::span<const int> primes,
    std::span<const SphereKElement> samples);

// ---------------------------------------------------------------------------
// Module models over K(S^{2n}): finitely generated free carrier, the ring
// acting through the matrix of y, operators given per k.
// ---------------------------------------------------------------------------

struct PsiModuleSpec {
    SphereKRing ring;
    std::size_t rank = 1;
    Mat y_action;                    // rank x rank
    std::function<Mat(int)> psi;     // psi^k, k >= 1
};

struct LambdaModuleSpec {
    SphereKRing ring;
    std::size_t rank = 1;
    Mat y_action;
    std::function<Mat(int)> big_lambda;  // Lambda^k, k >= 1
};

struct ModuleCheckFailure {
    std::string axiom;
    int i = 0, j = 0;
};

// Verifies psi^1 = id, psi^i(r m) = Psi^i(r) psi^i(m) and
// psi^i psi^j = psi^{ij}, for i, j with i*j <= bound, together with the
// action being well defined (y^2 = 0 must act by zero).
std::optional<ModuleCheckFailure> check_psi_module(const PsiModuleSpec& m,
                                                   int bound = 36);

// Same for Lambda with the sign law
// Lambda^{ij} = (-1)^{(i+1)(j+1)} Lambda^i Lambda^j.
std::optional<ModuleCheckFailure> check_lambda_module(const LambdaModuleSpec& m,
                                                      int bound = 36);

// The standard way to put a Lambda-structure on a Psi-module:
// Lambda^i = (-1)^{i+1} psi^i satisfies the sign law automatically.
LambdaModuleSpec lambda_module_from_psi(const PsiModuleSpec& m);

// Twist the ring action through Psi^f: (r, m) -> Psi^f(r) m. The operators
// are unchanged; validity of the twisted action is re-checked.
PsiModuleSpec twisted_module(const PsiModuleSpec& m, int f);

// ---------------------------------------------------------------------------
// Derivations. A candidate is determined by the image of y (d(1) = 0 always);
// it extends additively.
// ---------------------------------------------------------------------------

struct DerivationCandidate {
    Vec d_of_y;
};

struct DerivationCounterExample {
    std::string axiom;
    int k = 0;
    std::string detail;
};

// Leibniz on all products of <= 2 ring generators and
// psi^k(d(r)) = d(Psi^k(r)) for k <= k_bound.
std::optional<DerivationCounterExample> check_psi_derivation(
    const DerivationCandidate& d, const PsiModuleSpec& m, int k_bound = 12);

// Leibniz plus d(l^i(r)) = Lambda^i(d r) + sum_{j=1}^{i-1} Lambda^j(d r) l^{i-j}(r)
// on the given ring samples for i <= i_bound.
std::optional<DerivationCounterExample> check_lambda_derivation(
    const DerivationCandidate& d, const LambdaModuleSpec& m,
    std::span<const SphereKElement> samples, int i_bound = 6);

}  // namespace lambdak
