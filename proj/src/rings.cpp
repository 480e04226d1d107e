#include "lambdak/rings.hpp"

#include <algorithm>
#include <stdexcept>

namespace lambdak {

// --------------------------------------------------------------------------
// FreePsiRing
// --------------------------------------------------------------------------

FreePsiRing::FreePsiRing(std::string_view families) {
    for (char f : families) {
        if (f < 'a' || f > 'z')
            throw std::invalid_argument("generator families must be in a..z");
        alphabet_.insert(f);
    }
    if (alphabet_.empty())
        throw std::invalid_argument("need at least one generator family");
}

MultiPoly FreePsiRing::generator(char family, int index) const {
    if (!owns(family))
        throw std::invalid_argument(std::string("family '") + family +
                                    "' is not in this ring's alphabet");
    return MultiPoly::variable(Var{family, index});
}

MultiPoly FreePsiRing::psi(int k, const MultiPoly& element) const {
    if (k < 1) throw std::invalid_argument("Adams operations need k >= 1");
    if (k == 1) return element;
    return element.mapped_vars([k](Var v) {
        long idx = static_cast<long>(v.index) * k;
        if (idx > 100000000) throw std::overflow_error("generator index overflow");
        return Var{v.family, static_cast<int>(idx)};
    });
}

std::pair<FreePsiRing, MultiPoly> tensor_psi(const FreePsiRing& left,
                                             const MultiPoly& left_elem,
                                             const FreePsiRing& right,
                                             const MultiPoly& right_elem) {
    std::string merged;
    for (char f : left.alphabet()) merged += f;
    for (char f : right.alphabet()) {
        if (left.owns(f)) throw AlphabetClashError(f);
        merged += f;
    }
    return {FreePsiRing(merged), left_elem * right_elem};
}

// --------------------------------------------------------------------------
// SphereKRing
// --------------------------------------------------------------------------

std::string SphereKElement::str() const {
    if (unit == 0 && reduced == 0) return "0";
    std::string out;
    if (unit != 0) out = unit.get_str();
    if (reduced != 0) {
        BigInt mag = abs_of(reduced);
        std::string part = (mag == 1) ? "y" : mag.get_str() + "*y";
        if (out.empty())
            out = (reduced < 0 ? "-" : "") + part;
        else
            out += (reduced < 0 ? " - " : " + ") + part;
    }
    return out;
}

SphereKRing::SphereKRing(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("half-dimension must be >= 1");
}

SphereKElement SphereKRing::psi(int k, const SphereKElement& e) const {
    if (k < 1) throw std::invalid_argument("Adams operations need k >= 1");
    return {e.unit, int_pow(k, static_cast<unsigned long>(n_)) * e.reduced};
}

SphereKElement SphereKRing::lambda(int i, const SphereKElement& e) const {
    std::vector<SphereKElement> psis;
    psis.reserve(static_cast<std::size_t>(i));
    for (int j = 1; j <= i; ++j) psis.push_back(psi(j, e));
    auto out = newton_lambda_from_psi<SphereKElement>(psis, i);
    if (!out.ok())
        // cannot happen: the ring is special and torsion free
        throw NonIntegralDivisionError(out.failure->newton_sum.str(),
                                       std::to_string(out.failure->index));
    return *out.value;
}

// --------------------------------------------------------------------------
// Specialness checks
// --------------------------------------------------------------------------

std::vector<int> default_special_primes() { return {2, 3, 5, 7, 11, 13}; }

std::vector<MultiPoly> default_special_samples(const FreePsiRing& ring) {
    std::vector<MultiPoly> gens;
    for (char f : ring.alphabet())
        for (int i = 1; i <= 2; ++i) gens.push_back(ring.generator(f, i));
    std::vector<MultiPoly> out = gens;
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = a; b < gens.size(); ++b)
            out.push_back(gens[a] * gens[b]);
    return out;
}

std::vector<SphereKElement> default_special_samples(const SphereKRing&) {
    SphereKElement one = SphereKRing::one();
    SphereKElement y = SphereKRing::y();
    return {one, y, one + y, SphereKElement{2, -3}, y * y};
}

std::optional<SpecialnessWitness> check_special(
    const FreePsiRing& ring, std::span<const int> primes,
    std::span<const MultiPoly> samples) {
    for (int p : primes) {
        for (const MultiPoly& r : samples) {
            MultiPoly defect =
                (ring.psi(p, r) - r.pow(static_cast<unsigned>(p))).reduced_mod(p);
            if (!defect.is_zero())
                return SpecialnessWitness{p, r.str(), defect.str()};
        }
    }
    return std::nullopt;
}

std::optional<SpecialnessWitness> check_special(
    const SphereKRing& ring, std::span<const int> primes,
    std::span<const SphereKElement> samples) {
    for (int p : primes) {
        for (const SphereKElement& r : samples) {
            SphereKElement power = SphereKRing::one();
            for (int t = 0; t < p; ++t) power = power * r;
            SphereKElement diff = ring.psi(p, r) - power;
            SphereKElement defect{mod_floor(diff.unit, p), mod_floor(diff.reduced, p)};
            if (defect.unit != 0 || defect.reduced != 0)
                return SpecialnessWitness{p, r.str(), defect.str()};
        }
    }
    return std::nullopt;
}

// --------------------------------------------------------------------------
// Modules
// --------------------------------------------------------------------------

namespace {

BigInt psi_scalar(const SphereKRing& ring, int k) {
    return int_pow(k, static_cast<unsigned long>(ring.half_dimension()));
}

// Matrix of the action of a ring element u + b*y.
Mat action_matrix(const SphereKElement& r, const Mat& y_action) {
    return Mat::identity(y_action.rows()) * r.unit + y_action * r.reduced;
}

}  // namespace

std::optional<ModuleCheckFailure> check_psi_module(const PsiModuleSpec& m,
                                                   int bound) {
    const Mat id = Mat::identity(m.rank);
    if (m.psi(1) != id) return ModuleCheckFailure{"psi^1 = id", 1, 0};
    if (!(m.y_action * m.y_action).is_zero())
        return ModuleCheckFailure{"y^2 acts by zero", 0, 0};
    for (int i = 2; i <= bound; ++i) {
        Mat p = m.psi(i);
        if (p * m.y_action != (psi_scalar(m.ring, i) * m.y_action) * p)
            return ModuleCheckFailure{"psi^i(r m) = Psi^i(r) psi^i(m)", i, 0};
    }
    for (int i = 2; i <= bound; ++i)
        for (int j = i; i * j <= bound; ++j)
            if (m.psi(i) * m.psi(j) != m.psi(i * j))
                return ModuleCheckFailure{"psi^i psi^j = psi^{ij}", i, j};
    return std::nullopt;
}

std::optional<ModuleCheckFailure> check_lambda_module(const LambdaModuleSpec& m,
                                                      int bound) {
    const Mat id = Mat::identity(m.rank);
    if (m.big_lambda(1) != id) return ModuleCheckFailure{"Lambda^1 = id", 1, 0};
    if (!(m.y_action * m.y_action).is_zero())
        return ModuleCheckFailure{"y^2 acts by zero", 0, 0};
    for (int i = 2; i <= bound; ++i) {
        Mat L = m.big_lambda(i);
        if (L * m.y_action != (psi_scalar(m.ring, i) * m.y_action) * L)
            return ModuleCheckFailure{"Lambda^i(r m) = Psi^i(r) Lambda^i(m)", i, 0};
    }
    for (int i = 2; i <= bound; ++i)
        for (int j = i; i * j <= bound; ++j) {
            Mat lhs = m.big_lambda(i * j);
            Mat rhs = m.big_lambda(i) * m.big_lambda(j);
            if ((i % 2 == 0) && (j % 2 == 0)) rhs = rhs * BigInt(-1);
            if (lhs != rhs)
                return ModuleCheckFailure{
                    "Lambda^{ij} = (-1)^{(i+1)(j+1)} Lambda^i Lambda^j", i, j};
        }
    return std::nullopt;
}

LambdaModuleSpec lambda_module_from_psi(const PsiModuleSpec& m) {
    auto psi = m.psi;
    return LambdaModuleSpec{
        m.ring, m.rank, m.y_action, [psi](int i) {
            Mat p = psi(i);
            return (i % 2 == 0) ? p * BigInt(-1) : p;
        }};
}

PsiModuleSpec twisted_module(const PsiModuleSpec& m, int f) {
    if (f < 1) throw std::invalid_argument("twist exponent must be >= 1");
    PsiModuleSpec out{m.ring, m.rank, m.y_action * psi_scalar(m.ring, f), m.psi};
    if (auto bad = check_psi_module(out, 12))
        throw std::logic_error("twisted action is not a module: " + bad->axiom);
    return out;
}

// --------------------------------------------------------------------------
// Derivations
// --------------------------------------------------------------------------

namespace {

Vec d_of(const DerivationCandidate& d, const SphereKElement& r) {
    return scaled(d.d_of_y, r.reduced);  // d(u + b y) = b d(y)
}

}  // namespace

std::optional<DerivationCounterExample> check_psi_derivation(
    const DerivationCandidate& d, const PsiModuleSpec& m, int k_bound) {
    if (d.d_of_y.size() != m.rank)
        throw std::invalid_argument("derivation image has the wrong rank");
    const SphereKElement gens[] = {SphereKRing::one(), SphereKRing::y()};
    for (const auto& r : gens) {
        for (const auto& s : gens) {
            Vec lhs = d_of(d, r * s);
            Vec rhs = action_matrix(r, m.y_action).apply(d_of(d, s)) +
                      action_matrix(s, m.y_action).apply(d_of(d, r));
            if (lhs != rhs)
                return DerivationCounterExample{
                    "d(r s) = r d(s) + d(r) s", 0,
                    "(" + r.str() + ", " + s.str() + ")"};
        }
    }
    for (int k = 1; k <= k_bound; ++k) {
        for (const auto& r : gens) {
            Vec lhs = m.psi(k).apply(d_of(d, r));
            Vec rhs = d_of(d, m.ring.psi(k, r));
            if (lhs != rhs)
                return DerivationCounterExample{"psi^k(d(r)) = d(Psi^k(r))", k,
                                                r.str()};
        }
    }
    return std::nullopt;
}

std::optional<DerivationCounterExample> check_lambda_derivation(
    const DerivationCandidate& d, const LambdaModuleSpec& m,
    std::span<const SphereKElement> samples, int i_bound) {
    if (d.d_of_y.size() != m.rank)
        throw std::invalid_argument("derivation image has the wrong rank");
    const SphereKElement gens[] = {SphereKRing::one(), SphereKRing::y()};
    for (const auto& r : gens) {
        for (const auto& s : gens) {
            Vec lhs = d_of(d, r * s);
            Vec rhs = action_matrix(r, m.y_action).apply(d_of(d, s)) +
                      action_matrix(s, m.y_action).apply(d_of(d, r));
            if (lhs != rhs)
                return DerivationCounterExample{
                    "d(r s) = r d(s) + d(r) s", 0,
                    "(" + r.str() + ", " + s.str() + ")"};
        }
    }
    for (const SphereKElement& r : samples) {
        for (int i = 1; i <= i_bound; ++i) {
            Vec lhs = d_of(d, m.ring.lambda(i, r));
            Vec rhs = m.big_lambda(i).apply(d_of(d, r));
            for (int j = 1; j <= i - 1; ++j) {
                SphereKElement lam = m.ring.lambda(i - j, r);
                rhs = rhs + action_matrix(lam, m.y_action)
                                .apply(m.big_lambda(j).apply(d_of(d, r)));
            }
            if (lhs != rhs)
                return DerivationCounterExample{
                    "d(l^i(r)) = Lambda^i(d r) + sum Lambda^j(d r) l^{i-j}(r)", i,
                    r.str()};
        }
    }
    return std::nullopt;
}

}  // namespace lambdak
