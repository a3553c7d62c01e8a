#pragma once

#include "equik/arith.hpp"
#include "equik/errors.hpp"
#include "equik/lambdaring.hpp"
#include "equik/partitions.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

// Brute-force route to the lambda^L(xy) coefficients, sharing nothing with theta/omega:
// realize x = t_1 + ... + t_a and y = u_1 + ... + u_b as sums of line elements, so that
// lambda^i(x) = e_i(t), lambda^i(y) = e_i(u) and lambda^i(xy) = e_i({t_r u_s}). Expand
// prod_t e_{l_t}(tu) as a polynomial and peel off products e_I(t) e_J(u) by leading
// monomial in lex order.

namespace equik::lambda::oracle {

/// Polynomial in a + b variables; the key is the concatenated exponent vector (t's, then u's).
using Poly = std::map<std::vector<std::uint8_t>, Integer>;

inline constexpr std::size_t max_expansion_terms = 2'000'000;

inline Poly multiply(const Poly& x, const Poly& y) {
    Poly out;
    for (const auto& [ex, cx] : x)
        for (const auto& [ey, cy] : y) {
            std::vector<std::uint8_t> e = ex;
            for (std::size_t v = 0; v < e.size(); ++v)
                e[v] = static_cast<std::uint8_t>(e[v] + ey[v]);
            out[e] += cx * cy;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

namespace detail {

/// Sum over r-subsets of `monomials` of their products.
inline Poly elementary(const std::vector<std::vector<std::uint8_t>>& monomials, std::size_t vars, int r) {
    Poly out;
    std::vector<std::size_t> pick;
    std::size_t produced = 0;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (static_cast<int>(pick.size()) == r) {
            if (++produced > max_expansion_terms)
                throw size_limit("oracle expansion too large");
            std::vector<std::uint8_t> e(vars, 0);
            for (std::size_t k : pick)
                for (std::size_t v = 0; v < vars; ++v)
                    e[v] = static_cast<std::uint8_t>(e[v] + monomials[k][v]);
            out[e] += 1;
            return;
        }
        for (std::size_t k = from; k < monomials.size(); ++k) {
            pick.push_back(k);
            self(self, k + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

inline Partition conjugate(const std::vector<int>& weakly_decreasing) {
    std::vector<int> parts;
    int longest = weakly_decreasing.empty() ? 0 : weakly_decreasing.front();
    for (int k = 1; k <= longest; ++k) {
        int count = 0;
        for (int e : weakly_decreasing)
            if (e >= k)
                ++count;
        parts.push_back(count);
    }
    return Partition(std::move(parts));
}

} // namespace detail

/// Coefficients of lambda^I(x) lambda^J(y) in lambda^L(xy), recovered by polynomial expansion
/// in a + b variables. Needs a, b >= |L| for the e_I to be independent.
inline StructureTable oracle_c(const Partition& L, int a, int b) {
    const int k = L.weight();
    if (a < k || b < k)
        throw error("oracle_c: need at least |L| variables on each side");
    if (a > 8 || b > 8)
        throw size_limit("oracle_c: at most 8 variables per side");
    const std::size_t vars = static_cast<std::size_t>(a + b);

    std::vector<std::vector<std::uint8_t>> t_vars, u_vars, products;
    for (int r = 0; r < a; ++r) {
        std::vector<std::uint8_t> e(vars, 0);
        e[r] = 1;
        t_vars.push_back(e);
    }
    for (int s = 0; s < b; ++s) {
        std::vector<std::uint8_t> e(vars, 0);
        e[a + s] = 1;
        u_vars.push_back(e);
    }
    for (int r = 0; r < a; ++r)
        for (int s = 0; s < b; ++s) {
            std::vector<std::uint8_t> e(vars, 0);
            e[r] = 1;
            e[a + s] = 1;
            products.push_back(e);
        }

    Poly target{{std::vector<std::uint8_t>(vars, 0), Integer(1)}};
    for (int part : L.parts())
        target = multiply(target, detail::elementary(products, vars, part));

    Poly one{{std::vector<std::uint8_t>(vars, 0), Integer(1)}};
    auto e_product = [&](const std::vector<std::vector<std::uint8_t>>& side, const Partition& I) {
        Poly acc = one;
        for (int part : I.parts())
            acc = multiply(acc, detail::elementary(side, vars, part));
        return acc;
    };

    StructureTable out{StructureTable::Kind::c, L, {}};
    while (!target.empty()) {
        const auto& [lead, coeff] = *target.rbegin();
        std::vector<int> alpha(lead.begin(), lead.begin() + a);
        std::vector<int> beta(lead.begin() + a, lead.end());
        Partition I = detail::conjugate(alpha);
        Partition J = detail::conjugate(beta);
        if (I.weight() != k || J.weight() != k)
            throw error("oracle_c: leading monomial has unexpected degree");
        Integer c = coeff;
        Poly term = multiply(e_product(t_vars, I), e_product(u_vars, J));
        if (term.rbegin()->first != lead)
            throw error("oracle_c: leading monomial mismatch for " + I.str() + " x " + J.str());
        for (const auto& [e, v] : term) {
            auto it = target.find(e);
            Integer updated = (it == target.end() ? Integer(0) : it->second) - c * v;
            if (updated.is_zero()) {
                if (it != target.end())
                    target.erase(it);
            } else
                target[e] = updated;
        }
        out.entries.emplace(PairKey{I, J}, c);
    }
    return out;
}

inline StructureTable oracle_c(const Partition& L) { return oracle_c(L, L.weight(), L.weight()); }

} // namespace equik::lambda::oracle
