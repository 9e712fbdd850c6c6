#pragma once

#include "gcomp/bigint.hpp"
#include "gcomp/families.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcomp {

// ---------------------------------------------------------------------------
// Number-theoretic helpers

/// Positive divisors of n, ascending.
inline std::vector<unsigned> divisors(unsigned n) {
    if (n == 0) throw std::domain_error("divisors: n must be positive");
    std::vector<unsigned> lo, hi;
    for (unsigned d = 1; static_cast<unsigned long long>(d) * d <= n; ++d) {
        if (n % d) continue;
        lo.push_back(d);
        if (d != n / d) hi.push_back(n / d);
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

/// Möbius function by trial division.
inline int mobius(unsigned n) {
    if (n == 0) throw std::domain_error("mobius: n must be positive");
    int sign = 1;
    for (unsigned p = 2; static_cast<unsigned long long>(p) * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

// ---------------------------------------------------------------------------
// Bell numbers

/// B(n) from the Bell triangle; B(0) = 1.
inline BigNat bell(unsigned n) {
    std::vector<BigNat> row{1};
    for (unsigned i = 0; i < n; ++i) {
        std::vector<BigNat> next;
        next.reserve(row.size() + 1);
        next.push_back(row.back());
        for (const auto& x : row) next.push_back(next.back() + x);
        row = std::move(next);
    }
    return row.front();
}

/**
 * n! [x^n] exp(1 - e^x), the complementary Bell numbers 1, -1, 0, 1, 1, -2, ...
 *
 * t(0) = 1,  t(k+1) = -sum_{j=0..k} C(k, j) t(j).
 */
inline BigInt complementary_bell(unsigned n) {
    std::vector<BigInt> t{1};
    for (unsigned k = 0; k < n; ++k) {
        BigInt s = 0;
        for (unsigned j = 0; j <= k; ++j) s += to_int(binomial(k, j)) * t[j];
        t.push_back(-s);
    }
    return t[n];
}

// ---------------------------------------------------------------------------
// Integer compositions and Lyndon compositions

/// An ordered sum of positive integers.
struct IntegerComposition {
    std::vector<unsigned> parts;

    unsigned total() const {
        unsigned s = 0;
        for (auto p : parts) s += p;
        return s;
    }

    /// "1+1+2"
    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) out += '+';
            out += std::to_string(parts[i]);
        }
        return out;
    }

    friend bool operator==(const IntegerComposition&, const IntegerComposition&) = default;
    friend auto operator<=>(const IntegerComposition& a, const IntegerComposition& b) { return a.parts <=> b.parts; }
};

namespace detail {

template <class F>
void compositions_rec(unsigned remaining, std::vector<unsigned>& prefix, F& f) {
    if (remaining == 0) {
        f(static_cast<const std::vector<unsigned>&>(prefix));
        return;
    }
    for (unsigned p = 1; p <= remaining; ++p) {
        prefix.push_back(p);
        compositions_rec(remaining - p, prefix, f);
        prefix.pop_back();
    }
}

}  // namespace detail

/// Calls f(parts) for each of the 2^(n-1) compositions of n >= 1, in lexicographic order.
template <class F>
void for_each_integer_composition(unsigned n, F&& f) {
    std::vector<unsigned> prefix;
    detail::compositions_rec(n, prefix, f);
}

/// Strictly smaller than every nontrivial cyclic rotation, which also forces aperiodicity.
inline bool is_lyndon(const std::vector<unsigned>& parts) {
    const std::size_t k = parts.size();
    for (std::size_t r = 1; r < k; ++r) {
        for (std::size_t i = 0; i < k; ++i) {
            const auto a = parts[i];
            const auto b = parts[(i + r) % k];
            if (a < b) break;
            if (a > b) return false;
            if (i + 1 == k) return false;  // equal rotation: periodic
        }
    }
    return true;
}

/// Lyndon compositions of n by filtering all compositions; lexicographic order.
inline std::vector<IntegerComposition> lyndon_compositions(unsigned n) {
    if (n == 0) throw std::domain_error("lyndon_compositions: n must be positive");
    std::vector<IntegerComposition> out;
    for_each_integer_composition(n, [&](const std::vector<unsigned>& parts) {
        if (is_lyndon(parts)) out.push_back({parts});
    });
    return out;
}

/// L(n) = (1/n) sum_{d | n} mu(n/d) 2^d, so L(1) = 2.
inline BigNat lyndon_count(unsigned n) {
    if (n == 0) throw std::domain_error("lyndon_count: n must be positive");
    BigInt s = 0;
    for (auto d : divisors(n)) s += mobius(n / d) * to_int(pow2(d));
    if (s % n != 0) throw internal_consistency_error("lyndon_count: divisor sum not divisible by n");
    return to_nat(s / n, "lyndon_count");
}

// ---------------------------------------------------------------------------
// Closed forms for the simple families

/// C(P_n) = 2^(n-1), with C(P_0) = 1.
inline BigNat path_count(unsigned n) { return n == 0 ? BigNat(1) : pow2(n - 1); }

/**
 * Closed-form C(G) for path, complete, tree, star, complete-minus-edge and cycle.
 * Trees of every shape share one value, so `n` is the vertex count.
 */
inline BigNat closed_form_count(FamilyKind family, unsigned n) {
    auto need = [&](bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(std::string(family_name(family)) + ": " + what);
    };
    switch (family) {
        case FamilyKind::Path: return path_count(n);
        case FamilyKind::Complete:
            need(n >= 1, "n must be at least 1");
            return bell(n);
        case FamilyKind::Tree:
        case FamilyKind::Star:
            need(n >= 1, "n must be at least 1");
            return pow2(n - 1);
        case FamilyKind::CompleteMinusEdge:
            need(n >= 2, "n must be at least 2");
            return bell(n) - bell(n - 2);
        case FamilyKind::Cycle:
            need(n >= 3, "n must be at least 3");
            return pow2(n) - n;
        default: break;
    }
    throw std::invalid_argument(std::string(family_name(family)) + ": no single-parameter closed form");
}

/// sum_{d | n} d L(d) - n; equals 2^n - n for n >= 3.
inline BigNat cycle_count_via_lyndon(unsigned n) {
    if (n == 0) throw std::domain_error("cycle_count_via_lyndon: n must be positive");
    BigNat s = 0;
    for (auto d : divisors(n)) s += d * lyndon_count(d);
    return s - n;
}

// ---------------------------------------------------------------------------
// Wheels

/**
 * C(W_n) = 2^(n-1) - n + 2 + sum_{1 < d | n-1} d * sum'_{a_1+..+a_k = d} prod_i C(P_{a_i - 1})^((n-1)/d),
 * the inner sum running over Lyndon compositions of d. Defined for n >= 2.
 */
inline BigNat wheel_count_formula(unsigned n) {
    if (n < 2) throw std::domain_error("wheel_count_formula: n must be at least 2");
    BigNat total = pow2(n - 1) + 2 - n;
    for (auto d : divisors(n - 1)) {
        if (d == 1) continue;
        BigNat inner = 0;
        for (const auto& lc : lyndon_compositions(d)) {
            BigNat prod = 1;
            for (auto a : lc.parts) prod *= path_count(a - 1);
            inner += pow_nat(prod, (n - 1) / d);
        }
        total += d * inner;
    }
    return total;
}

/**
 * C(W_n) via v(n) = 3 v(n-1) - v(n-2) + n - 2 with seeds v(1) = v(2) = 2.
 * The seed v(1) = 2 only drives the recurrence; C(W_1) = 1 is returned for n = 1.
 */
inline BigNat wheel_count_recurrence(unsigned n) {
    if (n == 0) throw std::domain_error("wheel_count_recurrence: n must be positive");
    if (n == 1) return 1;
    BigNat prev = 2, cur = 2;
    for (unsigned k = 3; k <= n; ++k) {
        BigNat next = 3 * cur + (k - 2) - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// L_0 = 2, L_1 = 1, L_k = L_{k-1} + L_{k-2}.
inline BigNat lucas_number(unsigned k) {
    BigNat a = 2, b = 1;
    for (unsigned i = 0; i < k; ++i) {
        BigNat c = a + b;
        a = std::move(b);
        b = std::move(c);
    }
    return a;
}

// ---------------------------------------------------------------------------
// Ladders

/// Compositions of L_k split by whether the last rung's endpoints share a block.
struct LadderSplit {
    BigNat a;  // endpoints in different blocks
    BigNat b;  // endpoints in the same block

    BigNat total() const { return a + b; }
    friend bool operator==(const LadderSplit&, const LadderSplit&) = default;
};

inline LadderSplit ladder_split(unsigned n) {
    if (n == 0) throw std::domain_error("ladder_split: n must be positive");
    LadderSplit s{1, 1};
    for (unsigned k = 2; k <= n; ++k) s = {4 * s.a + 3 * s.b, 3 * s.a + 2 * s.b};
    return s;
}

/// C(L_1) = 2, C(L_2) = 12, C(L_n) = 6 C(L_{n-1}) + C(L_{n-2}).
inline BigNat ladder_count(unsigned n) {
    if (n == 0) throw std::domain_error("ladder_count: n must be positive");
    BigNat prev = 2, cur = 12;
    if (n == 1) return prev;
    for (unsigned k = 3; k <= n; ++k) {
        BigNat next = 6 * cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Denominators of the convergents of sqrt(10) = [3; 6, 6, ...]: 1, 6, 37, 228, ...
inline BigNat sqrt10_convergent_denominator(unsigned k) {
    BigNat prev = 1, cur = 6;
    if (k == 0) return prev;
    for (unsigned i = 2; i <= k; ++i) {
        BigNat next = 6 * cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// ---------------------------------------------------------------------------
// Complete bipartite graphs

/// Row m of the coefficient array: entries[i-1] = a_{m,i}, i = 1..m+1.
struct KmnCoefficientRow {
    unsigned m = 0;
    std::vector<BigInt> entries;

    const BigInt& at(unsigned i) const { return entries.at(i - 1); }
};

namespace detail {

/// Rows 0..m of the array, each padded with a_{k,0} = 0 at index 0. Grows on demand, never shrinks.
class KmnCoefficientCache {
public:
    std::vector<BigInt> row(unsigned m) {
        std::lock_guard lock(mu_);
        while (rows_.size() <= m) extend();
        return rows_[m];
    }

private:
    BigInt entry(unsigned k, unsigned j) const {
        if (j == 0 || j > k + 1) return 0;
        return rows_[k][j];
    }

    void extend() {
        const auto m = static_cast<unsigned>(rows_.size());
        std::vector<BigInt> r(m + 2, 0);
        if (m == 0) {
            r[1] = 1;
        } else {
            for (unsigned j = 1; j <= m + 1; ++j) {
                BigInt s = 0;
                for (unsigned i = 0; i <= m - 1; ++i) s += to_int(binomial(m - 1, i)) * entry(m - 1 - i, j - 1);
                for (unsigned i = 1; i <= m - 1; ++i) s -= to_int(binomial(m - 1, i)) * entry(m - 1 - i, j);
                r[j] = std::move(s);
            }
        }
        rows_.push_back(std::move(r));
    }

    std::mutex mu_;
    std::vector<std::vector<BigInt>> rows_;
};

inline KmnCoefficientCache& kmn_cache() {
    static KmnCoefficientCache cache;
    return cache;
}

}  // namespace detail

/**
 * a_{m,n} = sum_{i=0}^{m-1} C(m-1,i) a_{m-1-i,n-1} - sum_{i=1}^{m-1} C(m-1,i) a_{m-1-i,n},
 * with a_{m,0} = 0, a_{0,1} = 1, a_{0,n} = 0 for n > 1.
 */
inline KmnCoefficientRow kmn_coefficient_row(unsigned m) {
    auto padded = detail::kmn_cache().row(m);
    return {m, std::vector<BigInt>(padded.begin() + 1, padded.end())};
}

/// C(K_{m,n}) = sum_{i=1}^{m+1} a_{m,i} i^n.
inline BigNat kmn_count(unsigned m, unsigned n) {
    const auto row = kmn_coefficient_row(m);
    BigInt s = 0;
    for (unsigned i = 1; i <= m + 1; ++i) s += row.at(i) * boost::multiprecision::pow(BigInt(i), n);
    return to_nat(s, "kmn_count");
}

/**
 * C(K_{m,n}) from the case split on the block holding the first vertex of the m-side:
 *
 *   C(m,n) = sum_{j=0}^{n} C(n,j) C(m-1,n-j)
 *          + sum_{i=1}^{m-1} sum_{j=1}^{n} C(m-1,i) C(n,j) C(m-1-i,n-j),
 *
 * with C(m,0) = C(0,n) = 1.
 */
inline BigNat kmn_count_direct(unsigned m, unsigned n) {
    std::vector<std::vector<BigNat>> c(m + 1, std::vector<BigNat>(n + 1, 1));
    for (unsigned i = 1; i <= m; ++i) {
        for (unsigned j = 1; j <= n; ++j) {
            BigNat s = 0;
            for (unsigned jj = 0; jj <= j; ++jj) s += binomial(j, jj) * c[i - 1][j - jj];
            for (unsigned ii = 1; ii + 1 <= i; ++ii) {
                const BigNat bi = binomial(i - 1, ii);
                for (unsigned jj = 1; jj <= j; ++jj) s += bi * binomial(j, jj) * c[i - 1 - ii][j - jj];
            }
            c[i][j] = std::move(s);
        }
    }
    return c[m][n];
}

// ---------------------------------------------------------------------------

/**
 * Formula value for any family member, or nullopt when the family has none (Petersen).
 * Wheels use the Lyndon-sum formula for n >= 2, ladders their recurrence, K_{m,n} the
 * coefficient sum.
 */
inline std::optional<BigNat> formula_count(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::Wheel:
            if (spec.n == 0) throw std::invalid_argument("wheel: n must be at least 1");
            return spec.n == 1 ? BigNat(1) : wheel_count_formula(spec.n);
        case FamilyKind::Ladder: return ladder_count(spec.n);
        case FamilyKind::CompleteBipartite: return kmn_count(spec.m, spec.n);
        case FamilyKind::Petersen: return std::nullopt;
        case FamilyKind::Tree:
            if (spec.parents.size() + 1 != spec.n) throw std::invalid_argument("tree: parent list must have n-1 entries");
            return closed_form_count(spec.kind, spec.n);
        default: return closed_form_count(spec.kind, spec.n);
    }
}

}  // namespace gcomp
