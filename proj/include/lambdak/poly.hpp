#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lambdak/bigint.hpp"
#include "lambdak/errors.hpp"

namespace lambdak {

// Sparse multivariate polynomials over the integers.
//
// Variables are indexed generators drawn from single-letter families, e.g.
// a1, a2, b7. The canonical term order is graded lexicographic: first total
// degree, then, walking variables in (family, index) order, the monomial with
// the larger exponent at the earliest differing variable is the larger one.
//
// Text grammar (canonical on output, accepted leniently on input):
//   poly   := term (("+"|"-") term)*
//   term   := [sign] [coeff "*"] factor ("*" factor)*  |  [sign] coeff
//   factor := family index ["^" exp]
//   family in {a..z}; index, exp >= 1 decimal; the constant polynomial is a
//   bare decimal. Example: 3*a1^2*b2 - 5

struct Var {
    char family = 'a';  // 'a'..'z'
    int index = 1;      // >= 1

    friend auto operator<=>(const Var&, const Var&) = default;

    std::string str() const { return family + std::to_string(index); }
};

class Monomial {
public:
    using Factor = std::pair<Var, int>;  // exponent >= 1

    Monomial() = default;

    static Monomial one() { return Monomial(); }
    static Monomial variable(Var v, int exp = 1);

    bool is_one() const { return factors_.empty(); }
    int degree() const { return degree_; }
    int exponent(Var v) const;
    const std::vector<Factor>& factors() const { return factors_; }

    Monomial& operator*=(const Monomial& rhs);
    friend Monomial operator*(Monomial lhs, const Monomial& rhs) {
        lhs *= rhs;
        return lhs;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    static std::strong_ordering graded_lex(const Monomial& a, const Monomial& b);

    std::string str() const;  // "a1^2*b2", "1" for the empty monomial

private:
    std::vector<Factor> factors_;  // sorted by Var, no zero exponents
    int degree_ = 0;
};

struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::graded_lex(a, b) < 0;
    }
};

class MultiPoly {
public:
    using TermMap = std::map<Monomial, BigInt, GradedLexLess>;

    MultiPoly() = default;  // zero
    MultiPoly(long c) : MultiPoly(BigInt(c)) {}
    MultiPoly(BigInt c);
    explicit MultiPoly(int c) : MultiPoly(BigInt(c)) {}

    static MultiPoly variable(Var v, int exp = 1) {
        return term(Monomial::variable(v, exp), 1);
    }
    static MultiPoly term(Monomial m, BigInt c);

    bool is_zero() const { return terms_.empty(); }
    // Total degree; -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }
    const TermMap& terms() const { return terms_; }
    BigInt coefficient(const Monomial& m) const;
    // Largest term under graded lex; polynomial must be nonzero.
    const std::pair<const Monomial, BigInt>& leading_term() const {
        return *terms_.rbegin();
    }

    std::set<char> families() const;
    std::set<Var> variables() const;

    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly& operator*=(const MultiPoly& rhs) {
        *this = *this * rhs;
        return *this;
    }
    MultiPoly& operator*=(const BigInt& c);

    friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
    friend MultiPoly operator*(MultiPoly lhs, const BigInt& c) {
        lhs *= c;
        return lhs;
    }
    MultiPoly operator-() const;

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    MultiPoly pow(unsigned e) const;

    // Coefficients reduced into [0, m), zero terms pruned. Requires m >= 2.
    MultiPoly reduced_mod(const BigInt& m) const;

    // Divide every coefficient by d exactly; nullopt if some coefficient is
    // not a multiple of d.
    std::optional<MultiPoly> divided_exactly(const BigInt& d) const;

    enum class OnUnbound { error, keep };

    // Simultaneous substitution; a ring homomorphism. Variables missing from
    // `bindings` are kept fixed under OnUnbound::keep and raise
    // UnboundVariableError under OnUnbound::error.
    MultiPoly substituted(const std::map<Var, MultiPoly>& bindings,
                          OnUnbound policy = OnUnbound::error) const;

    // Variable renaming along an injective map; cheaper than substituted().
    MultiPoly mapped_vars(const std::function<Var(Var)>& fn) const;

    std::string str() const;
    static MultiPoly parse(std::string_view text);  // throws PolySyntaxError

    friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p) {
        return os << p.str();
    }

private:
    void add_term(const Monomial& m, const BigInt& c);

    TermMap terms_;  // no zero coefficients
};

// Scale-by-integer customization point shared with the Newton machinery.
inline MultiPoly scaled(const MultiPoly& p, const BigInt& c) { return p * c; }

inline bool try_divide_exact(MultiPoly& p, const BigInt& d) {
    auto q = p.divided_exactly(d);
    if (!q) return false;
    p = std::move(*q);
    return true;
}

inline BigInt scaled(const BigInt& a, const BigInt& c) { return a * c; }

inline bool try_divide_exact(BigInt& a, const BigInt& d) {
    if (!divides(d, a)) return false;
    a = div_exact(a, d);
    return true;
}

// Sum of c * prod value_of(v)^e over the terms of p. `unit` is the
// multiplicative identity of the target ring; Elem needs +, * and
// scaled(Elem, BigInt).
template <class Elem, class VarMap>
Elem evaluate(const MultiPoly& p, VarMap&& value_of, const Elem& unit) {
    Elem acc = scaled(unit, BigInt(0));
    for (const auto& [mono, coeff] : p.terms()) {
        Elem t = unit;
        for (const auto& [v, e] : mono.factors()) {
            Elem base = value_of(v);
            for (int k = 0; k < e; ++k) t = t * base;
        }
        acc = acc + scaled(t, coeff);
    }
    return acc;
}

}  // namespace lambdak
