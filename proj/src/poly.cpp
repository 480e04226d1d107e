#include "lambdak/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace lambdak {

namespace {

void require_valid(Var v) {
    if (v.family < 'a' || v.family > 'z')
        throw std::invalid_argument("variable family must be in a..z");
    if (v.index < 1)
        throw std::invalid_argument("variable index must be >= 1");
}

}  // namespace

Monomial Monomial::variable(Var v, int exp) {
    require_valid(v);
    if (exp < 1) throw std::invalid_argument("exponent must be >= 1");
    Monomial m;
    m.factors_.emplace_back(v, exp);
    m.degree_ = exp;
    return m;
}

int Monomial::exponent(Var v) const {
    auto it = std::lower_bound(
        factors_.begin(), factors_.end(), v,
        [](const Factor& f, const Var& key) { return f.first < key; });
    return (it != factors_.end() && it->first == v) ? it->second : 0;
}

Monomial& Monomial::operator*=(const Monomial& rhs) {
    std::vector<Factor> merged;
    merged.reserve(factors_.size() + rhs.factors_.size());
    auto a = factors_.begin();
    auto b = rhs.factors_.begin();
    while (a != factors_.end() && b != rhs.factors_.end()) {
        if (a->first < b->first)
            merged.push_back(*a++);
        else if (b->first < a->first)
            merged.push_back(*b++);
        else {
            merged.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    merged.insert(merged.end(), a, factors_.end());
    merged.insert(merged.end(), b, rhs.factors_.end());
    factors_ = std::move(merged);
    degree_ += rhs.degree_;
    return *this;
}

std::strong_ordering Monomial::graded_lex(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
    auto ia = a.factors_.begin();
    auto ib = b.factors_.begin();
    while (ia != a.factors_.end() && ib != b.factors_.end()) {
        if (ia->first == ib->first) {
            if (ia->second != ib->second) return ia->second <=> ib->second;
            ++ia;
            ++ib;
        } else {
            // The earlier variable carries a positive exponent on exactly one
            // side; that side is the larger monomial.
            return ia->first < ib->first ? std::strong_ordering::greater
                                         : std::strong_ordering::less;
        }
    }
    if (ia != a.factors_.end()) return std::strong_ordering::greater;
    if (ib != b.factors_.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

std::string Monomial::str() const {
    if (factors_.empty()) return "1";
    std::string out;
    bool first = true;
    for (const auto& [v, e] : factors_) {
        if (!first) out += '*';
        first = false;
        out += v.str();
        if (e >= 2) {
            out += '^';
            out += std::to_string(e);
        }
    }
    return out;
}

MultiPoly::MultiPoly(BigInt c) {
    if (c != 0) terms_.emplace(Monomial::one(), std::move(c));
}

MultiPoly MultiPoly::term(Monomial m, BigInt c) {
    MultiPoly p;
    if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

BigInt MultiPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
}

std::set<char> MultiPoly::families() const {
    std::set<char> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors()) out.insert(v.family);
    return out;
}

std::set<Var> MultiPoly::variables() const {
    std::set<Var> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors()) out.insert(v);
    return out;
}

void MultiPoly::add_term(const Monomial& m, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const BigInt& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
    MultiPoly out;
    for (const auto& [ma, ca] : lhs.terms_)
        for (const auto& [mb, cb] : rhs.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly result(1);
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return result;
}

MultiPoly MultiPoly::reduced_mod(const BigInt& m) const {
    if (m < 2) throw std::invalid_argument("modulus must be >= 2");
    MultiPoly out;
    for (const auto& [mono, c] : terms_) {
        BigInt r = mod_floor(c, m);
        if (r != 0) out.terms_.emplace(mono, std::move(r));
    }
    return out;
}

std::optional<MultiPoly> MultiPoly::divided_exactly(const BigInt& d) const {
    if (d == 0) throw std::invalid_argument("division by zero");
    MultiPoly out;
    for (const auto& [mono, c] : terms_) {
        if (!divides(d, c)) return std::nullopt;
        out.terms_.emplace(mono, div_exact(c, d));
    }
    return out;
}

MultiPoly MultiPoly::substituted(const std::map<Var, MultiPoly>& bindings,
                                 OnUnbound policy) const {
    // Powers of the bound values are shared across terms.
    std::map<std::pair<Var, int>, MultiPoly> pow_cache;
    MultiPoly out;
    for (const auto& [mono, coeff] : terms_) {
        MultiPoly prod{coeff};
        Monomial fixed_part;
        for (const auto& [v, e] : mono.factors()) {
            auto it = bindings.find(v);
            if (it == bindings.end()) {
                if (policy == OnUnbound::error)
                    throw UnboundVariableError(v.family, v.index);
                fixed_part *= Monomial::variable(v, e);
                continue;
            }
            auto key = std::make_pair(v, e);
            auto cached = pow_cache.find(key);
            if (cached == pow_cache.end())
                cached = pow_cache.emplace(key, it->second.pow(static_cast<unsigned>(e))).first;
            prod = prod * cached->second;
        }
        if (!fixed_part.is_one()) prod = prod * term(fixed_part, 1);
        out += prod;
    }
    return out;
}

MultiPoly MultiPoly::mapped_vars(const std::function<Var(Var)>& fn) const {
    MultiPoly out;
    for (const auto& [mono, coeff] : terms_) {
        Monomial image;
        for (const auto& [v, e] : mono.factors())
            image *= Monomial::variable(fn(v), e);
        out.add_term(image, coeff);
    }
    return out;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    // Descending graded lex, leading term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [mono, coeff] = *it;
        const bool negative = coeff < 0;
        if (out.empty()) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        BigInt mag = abs_of(coeff);
        if (mono.is_one()) {
            out += mag.get_str();
        } else {
            if (mag != 1) {
                out += mag.get_str();
                out += '*';
            }
            out += mono.str();
        }
    }
    return out;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    MultiPoly run() {
        skip_ws();
        if (eof()) fail("empty input");
        MultiPoly acc;
        bool negate = consume_sign();
        skip_ws();
        acc += signed_term(negate);
        for (;;) {
            skip_ws();
            if (eof()) break;
            char c = peek();
            if (c != '+' && c != '-') fail("expected '+' or '-'");
            ++pos_;
            skip_ws();
            acc += signed_term(c == '-');
        }
        return acc;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw PolySyntaxError(msg, pos_);
    }

    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void skip_ws() {
        while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\n' ||
                          peek() == '\r'))
            ++pos_;
    }

    bool consume_sign() {
        if (!eof() && (peek() == '+' || peek() == '-')) {
            bool neg = peek() == '-';
            ++pos_;
            return neg;
        }
        return false;
    }

    MultiPoly signed_term(bool negate) {
        MultiPoly t = term();
        return negate ? -t : t;
    }

    MultiPoly term() {
        if (eof()) fail("expected term");
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt coeff = number_big();
            Monomial mono;
            for (;;) {
                skip_ws();
                if (eof() || peek() != '*') break;
                ++pos_;
                skip_ws();
                mono *= factor();
            }
            return MultiPoly::term(mono, coeff);
        }
        if (c >= 'a' && c <= 'z') {
            Monomial mono = factor();
            for (;;) {
                skip_ws();
                if (eof() || peek() != '*') break;
                ++pos_;
                skip_ws();
                mono *= factor();
            }
            return MultiPoly::term(mono, 1);
        }
        fail("expected a coefficient or a variable");
    }

    Monomial factor() {
        if (eof() || peek() < 'a' || peek() > 'z')
            fail("expected a variable (family letter a..z)");
        char family = peek();
        ++pos_;
        int index = small_number("variable index");
        if (index < 1) fail("variable index must be >= 1");
        int exp = 1;
        if (!eof() && peek() == '^') {
            ++pos_;
            exp = small_number("exponent");
            if (exp < 1) fail("exponent must be >= 1");
        }
        return Monomial::variable(Var{family, index}, exp);
    }

    BigInt number_big() {
        std::size_t start = pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) fail("expected a decimal number");
        return BigInt(std::string(s_.substr(start, pos_ - start)), 10);
    }

    int small_number(const char* what) {
        std::size_t start = pos_;
        long value = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (peek() - '0');
            if (value > 100000000) {
                pos_ = start;
                fail(std::string(what) + " is out of range");
            }
            ++pos_;
        }
        if (pos_ == start) {
            fail(std::string("expected a decimal ") + what);
        }
        return static_cast<int>(value);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text) { return Parser(text).run(); }

}  // namespace lambdak
