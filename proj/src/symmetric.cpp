#include "lambdak/symmetric.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace lambdak {

namespace {

void require_context(const SymmetricContext& ctx) {
    if (ctx.count < 1) throw std::invalid_argument("need at least one root");
    if (ctx.root_family < 'a' || ctx.root_family > 'z')
        throw std::invalid_argument("root family must be in a..z");
}

MultiPoly swap_adjacent(const MultiPoly& f, char fam, int i) {
    return f.mapped_vars([fam, i](Var v) {
        if (v.family == fam) {
            if (v.index == i) return Var{fam, i + 1};
            if (v.index == i + 1) return Var{fam, i};
        }
        return v;
    });
}

// Exponents of `fam` variables with index <= d as a length-d vector, plus the
// monomial with those variables removed.
std::pair<std::vector<int>, Monomial> split_family(const Monomial& m, char fam,
                                                   int d) {
    std::vector<int> exps(static_cast<std::size_t>(d), 0);
    Monomial rest;
    for (const auto& [v, e] : m.factors()) {
        if (v.family == fam) {
            if (v.index > d)
                throw std::invalid_argument("root index exceeds the context size");
            exps[static_cast<std::size_t>(v.index - 1)] = e;
        } else {
            rest *= Monomial::variable(v, e);
        }
    }
    return {std::move(exps), std::move(rest)};
}

std::strong_ordering graded_lex_exps(const std::vector<int>& a,
                                     const std::vector<int>& b) {
    int da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da <=> db;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
    return std::strong_ordering::equal;
}

}  // namespace

MultiPoly elementary_symmetric(char family, int d, int k) {
    if (k == 0) return MultiPoly(1);
    if (k < 0 || k > d) return MultiPoly();
    // DP over x_1..x_d keeping e_0..e_k.
    std::vector<MultiPoly> e(static_cast<std::size_t>(k) + 1);
    e[0] = MultiPoly(1);
    for (int i = 1; i <= d; ++i) {
        MultiPoly x = MultiPoly::variable(Var{family, i});
        for (int j = std::min(k, i); j >= 1; --j)
            e[static_cast<std::size_t>(j)] +=
                e[static_cast<std::size_t>(j - 1)] * x;
    }
    return e[static_cast<std::size_t>(k)];
}

MultiPoly elementary_of_values(std::span<const MultiPoly> values, int k) {
    if (k == 0) return MultiPoly(1);
    if (k < 0 || static_cast<std::size_t>(k) > values.size()) return MultiPoly();
    std::vector<MultiPoly> e(static_cast<std::size_t>(k) + 1);
    e[0] = MultiPoly(1);
    int seen = 0;
    for (const MultiPoly& v : values) {
        ++seen;
        for (int j = std::min(k, seen); j >= 1; --j)
            e[static_cast<std::size_t>(j)] +=
                e[static_cast<std::size_t>(j - 1)] * v;
    }
    return e[static_cast<std::size_t>(k)];
}

bool is_symmetric_in(const MultiPoly& f, const SymmetricContext& ctx,
                     int* witness_swap) {
    require_context(ctx);
    for (int i = 1; i < ctx.count; ++i) {
        if (swap_adjacent(f, ctx.root_family, i) != f) {
            if (witness_swap) *witness_swap = i;
            return false;
        }
    }
    return true;
}

MultiPoly express_in_elementary(const MultiPoly& f, const SymmetricContext& ctx,
                                char out_family) {
    require_context(ctx);
    int bad = 0;
    if (!is_symmetric_in(f, ctx, &bad))
        throw NotSymmetricError(ctx.root_family, bad);

    const char fam = ctx.root_family;
    const int d = ctx.count;

    MultiPoly work = f;
    MultiPoly out;
    while (!work.is_zero()) {
        // Largest root-part over all terms; its exponent vector is weakly
        // decreasing because work stays symmetric in the roots.
        std::vector<int> best;
        bool have = false;
        for (const auto& [mono, coeff] : work.terms()) {
            auto [exps, rest] = split_family(mono, fam, d);
            if (!have || graded_lex_exps(exps, best) > 0) {
                best = std::move(exps);
                have = true;
            }
        }
        bool all_zero = std::all_of(best.begin(), best.end(),
                                    [](int e) { return e == 0; });
        if (all_zero) {
            out += work;  // no roots left in any remaining term
            break;
        }
        for (std::size_t i = 0; i + 1 < best.size(); ++i)
            if (best[i] < best[i + 1])
                throw NotSymmetricError(fam, static_cast<int>(i) + 1);

        // Cofactor of the leading root-part.
        MultiPoly cofactor;
        for (const auto& [mono, coeff] : work.terms()) {
            auto [exps, rest] = split_family(mono, fam, d);
            if (exps == best) cofactor += MultiPoly::term(rest, coeff);
        }

        Monomial out_mono;
        MultiPoly expanded(1);
        for (int k = 1; k <= d; ++k) {
            int step = best[static_cast<std::size_t>(k - 1)] -
                       (k < d ? best[static_cast<std::size_t>(k)] : 0);
            if (step == 0) continue;
            out_mono *= Monomial::variable(Var{out_family, k}, step);
            expanded *= elementary_symmetric(fam, d, k).pow(
                static_cast<unsigned>(step));
        }
        work -= cofactor * expanded;
        out += cofactor * MultiPoly::term(out_mono, 1);
    }
    return out;
}

namespace {

MultiPoly compute_universal_p(int i) {
    std::vector<MultiPoly> products;
    products.reserve(static_cast<std::size_t>(i) * static_cast<std::size_t>(i));
    for (int a = 1; a <= i; ++a)
        for (int b = 1; b <= i; ++b)
            products.push_back(MultiPoly::variable(Var{'x', a}) *
                               MultiPoly::variable(Var{'y', b}));
    MultiPoly f = elementary_of_values(products, i);
    MultiPoly in_x =
        express_in_elementary(f, {'x', i}, kUniversalLeft);
    return express_in_elementary(in_x, {'y', i}, kUniversalRight);
}

MultiPoly compute_universal_pij(int i, int j) {
    const int d = i * j;
    // Products over the j-element subsets of the roots.
    std::vector<MultiPoly> products;
    std::vector<int> pick(static_cast<std::size_t>(j));
    for (int t = 0; t < j; ++t) pick[static_cast<std::size_t>(t)] = t + 1;
    for (;;) {
        MultiPoly prod(1);
        for (int idx : pick) prod *= MultiPoly::variable(Var{'x', idx});
        products.push_back(std::move(prod));
        // next combination
        int t = j - 1;
        while (t >= 0 && pick[static_cast<std::size_t>(t)] == d - (j - 1 - t)) --t;
        if (t < 0) break;
        ++pick[static_cast<std::size_t>(t)];
        for (int u = t + 1; u < j; ++u)
            pick[static_cast<std::size_t>(u)] = pick[static_cast<std::size_t>(u - 1)] + 1;
    }
    MultiPoly f = elementary_of_values(products, i);
    return express_in_elementary(f, {'x', d}, kUniversalLeft);
}

std::mutex cache_mutex;

}  // namespace

const MultiPoly& universal_p(int i, int cap) {
    if (i < 1) throw std::invalid_argument("universal_p needs i >= 1");
    if (i * i > cap)
        throw std::invalid_argument("universal_p: i*i exceeds the expansion cap");
    static std::map<int, MultiPoly> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(i);
    if (it == cache.end()) it = cache.emplace(i, compute_universal_p(i)).first;
    return it->second;
}

const MultiPoly& universal_pij(int i, int j, int cap) {
    if (i < 1 || j < 1) throw std::invalid_argument("universal_pij needs i, j >= 1");
    if (i * j > cap)
        throw std::invalid_argument("universal_pij: i*j exceeds the expansion cap");
    static std::map<std::pair<int, int>, MultiPoly> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto key = std::make_pair(i, j);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, compute_universal_pij(i, j)).first;
    return it->second;
}

}  // namespace lambdak
