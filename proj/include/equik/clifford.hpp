#pragma once

#include "equik/arith.hpp"
#include "equik/errors.hpp"
#include "equik/groups.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace equik::clifford {

inline constexpr std::size_t max_bitmask_dim = 63;
inline constexpr std::size_t default_max_dim = 12;
inline constexpr std::size_t default_max_cover_group = 10'000;

/// Sign of e_A e_B = sign * e_{A xor B} under e_i^2 = +1, e_i e_j = -e_j e_i.
inline int blade_sign(std::uint64_t a, std::uint64_t b) {
    int swaps = 0;
    for (a >>= 1; a; a >>= 1)
        swaps += std::popcount(a & b);
    return swaps % 2 ? -1 : 1;
}

/// Sparse element of the real Clifford algebra C(R^n) with coefficients in Q(sqrt 2).
/// Basis blades are subsets of {0..n-1} encoded as bitmasks; terms are kept sorted by mask
/// with no zero coefficients.
class CliffordElement {
public:
    using Term = std::pair<std::uint64_t, Root2Scalar>;

    explicit CliffordElement(std::size_t n = 0) : n_(n) {
        if (n > max_bitmask_dim)
            throw size_limit("Clifford algebra dimension above " + std::to_string(max_bitmask_dim));
    }

    static CliffordElement scalar(std::size_t n, Root2Scalar s) {
        CliffordElement x(n);
        if (!s.is_zero())
            x.terms_.emplace_back(0, std::move(s));
        return x;
    }

    static CliffordElement blade(std::size_t n, std::uint64_t mask, Root2Scalar coeff = 1) {
        if (n < 64 && (mask >> n) != 0)
            throw dimension_mismatch("blade index outside the algebra");
        CliffordElement x(n);
        if (!coeff.is_zero())
            x.terms_.emplace_back(mask, std::move(coeff));
        return x;
    }

    /// The basis vector e_i (0-based).
    static CliffordElement basis_vector(std::size_t n, std::size_t i) { return blade(n, std::uint64_t{1} << i); }

    /// sum_i coeffs[i] e_i
    static CliffordElement vector(const std::vector<Root2Scalar>& coeffs) {
        CliffordElement x(coeffs.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            if (!coeffs[i].is_zero())
                x.terms_.emplace_back(std::uint64_t{1} << i, coeffs[i]);
        return x;
    }

    std::size_t dim() const { return n_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.front().first == 0); }

    Root2Scalar coefficient(std::uint64_t mask) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), mask,
                                   [](const Term& t, std::uint64_t m) { return t.first < m; });
        return it != terms_.end() && it->first == mask ? it->second : Root2Scalar(0);
    }
    Root2Scalar scalar_part() const { return coefficient(0); }

    /// Vector part as coordinates; throws if any other grade is present.
    std::vector<Root2Scalar> as_vector() const {
        std::vector<Root2Scalar> out(n_, Root2Scalar(0));
        for (const auto& [mask, c] : terms_) {
            if (std::popcount(mask) != 1)
                throw error("Clifford element is not a vector");
            out[std::countr_zero(mask)] = c;
        }
        return out;
    }

    /// Reversal of the factor order in every blade.
    CliffordElement reverse() const {
        CliffordElement out = *this;
        for (auto& [mask, c] : out.terms_) {
            int r = std::popcount(mask);
            if ((r * (r - 1) / 2) % 2)
                c = -c;
        }
        return out;
    }

    CliffordElement operator-() const {
        CliffordElement out = *this;
        for (auto& t : out.terms_)
            t.second = -t.second;
        return out;
    }

    friend CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) {
        check_same(a, b);
        std::vector<Term> raw;
        raw.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Root2Scalar c = ca * cb;
                if (blade_sign(ma, mb) < 0)
                    c = -c;
                raw.emplace_back(ma ^ mb, std::move(c));
            }
        return from_raw(a.n_, std::move(raw));
    }

    friend CliffordElement operator+(const CliffordElement& a, const CliffordElement& b) {
        check_same(a, b);
        std::vector<Term> raw = a.terms_;
        raw.insert(raw.end(), b.terms_.begin(), b.terms_.end());
        return from_raw(a.n_, std::move(raw));
    }
    friend CliffordElement operator-(const CliffordElement& a, const CliffordElement& b) { return a + (-b); }

    friend CliffordElement operator*(const Root2Scalar& s, const CliffordElement& x) {
        return CliffordElement::scalar(x.n_, s) * x;
    }

    friend bool operator==(const CliffordElement&, const CliffordElement&) = default;

    std::string str() const {
        if (terms_.empty())
            return "0";
        std::string out;
        for (const auto& [mask, c] : terms_) {
            if (!out.empty())
                out += " + ";
            out += "(" + c.str() + ")";
            if (mask) {
                out += "e";
                for (std::size_t i = 0; i < n_; ++i)
                    if (mask >> i & 1)
                        out += std::to_string(i + 1);
            }
        }
        return out;
    }

private:
    static void check_same(const CliffordElement& a, const CliffordElement& b) {
        if (a.n_ != b.n_)
            throw dimension_mismatch("Clifford elements from algebras of different dimension");
    }

    static CliffordElement from_raw(std::size_t n, std::vector<Term> raw) {
        std::sort(raw.begin(), raw.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
        CliffordElement out(n);
        for (auto& t : raw) {
            if (!out.terms_.empty() && out.terms_.back().first == t.first)
                out.terms_.back().second += t.second;
            else
                out.terms_.push_back(std::move(t));
        }
        std::erase_if(out.terms_, [](const Term& t) { return t.second.is_zero(); });
        return out;
    }

    std::size_t n_;
    std::vector<Term> terms_;
};

/// Unit vectors whose reflections compose (leftmost applied last) to g.
///
/// The permutation part is split greedily into transpositions (i j), each the reflection in
/// (e_i - e_j)/sqrt2; the sign flips follow as reflections in e_i, increasing i.
/// The number of factors is even exactly when det g = +1.
inline std::vector<CliffordElement> reflection_factors(const SignedPerm& g) {
    const std::size_t n = g.dim();
    std::vector<CliffordElement> factors;
    std::vector<int> rest = g.perm();
    for (std::size_t j = 0; j < n; ++j) {
        if (rest[j] != static_cast<int>(j)) {
            int i = rest[j];
            std::vector<Root2Scalar> v(n, Root2Scalar(0));
            v[std::min<std::size_t>(i, j)] = Root2Scalar::inv_sqrt2();
            v[std::max<std::size_t>(i, j)] = -Root2Scalar::inv_sqrt2();
            factors.push_back(CliffordElement::vector(v));
            // rest <- (j i) o rest
            for (int& r : rest)
                if (r == i)
                    r = static_cast<int>(j);
                else if (r == static_cast<int>(j))
                    r = i;
        }
    }
    for (std::size_t j = 0; j < n; ++j)
        if (g.sign(j) < 0)
            factors.push_back(CliffordElement::basis_vector(n, j));
    return factors;
}

/// An element of Pin(n) over a signed permutation, fixed up to a global sign.
struct PinLift {
    CliffordElement element;
    SignedPerm base;

    /// element is a product of unit vectors, so its reverse is its inverse.
    CliffordElement inverse() const { return element.reverse(); }

    /// element * x * element^{-1}, which equals det(base) * base(x) for vectors x.
    CliffordElement conjugate(const CliffordElement& x) const { return element * x * inverse(); }
};

inline PinLift pin_lift(const SignedPerm& g) {
    CliffordElement acc = CliffordElement::scalar(g.dim(), 1);
    for (const CliffordElement& v : reflection_factors(g))
        acc = acc * v;
    return {std::move(acc), g};
}

/// The scalar g~ h~ g~^{-1} h~^{-1} for lifts of commuting elements.
inline int commutator_sign(const PinLift& g, const PinLift& h) {
    if (g.base * h.base != h.base * g.base)
        throw not_commuting("commutator_sign: elements do not commute");
    CliffordElement c = g.element * h.element * g.inverse() * h.inverse();
    if (!c.is_scalar())
        throw error("commutator of Pin lifts is not a scalar: " + c.str());
    Root2Scalar s = c.scalar_part();
    if (s == Root2Scalar(1))
        return 1;
    if (s == Root2Scalar(-1))
        return -1;
    throw error("commutator of Pin lifts is not +-1: " + s.str());
}

inline int commutator_sign(const SignedPerm& g, const SignedPerm& h) {
    if (g * h != h * g)
        throw not_commuting("commutator_sign: elements do not commute");
    return commutator_sign(pin_lift(g), pin_lift(h));
}

/// Pin lifts of every element of G, in element order.
inline std::vector<PinLift> lift_all(const Group& G) {
    std::vector<PinLift> lifts;
    lifts.reserve(G.order());
    for (const SignedPerm& g : G.elements())
        lifts.push_back(pin_lift(g));
    return lifts;
}

struct CoverGuard {
    std::size_t max_group = default_max_cover_group;
    std::size_t max_dim = default_max_dim;
};

inline void check_guard(const Group& G, const CoverGuard& guard) {
    if (G.order() > guard.max_group)
        throw size_limit("Schur cover computation limited to groups of order " + std::to_string(guard.max_group));
    if (G.dim() > guard.max_dim)
        throw size_limit("Clifford computations limited to dimension " + std::to_string(guard.max_dim));
}

/// Number of conjugacy classes of the double cover {+-pin_lift(g)}, found by
/// conjugating explicit Clifford elements by the lifted generators.
inline std::size_t schur_cover_class_count(const Group& G, const CoverGuard& guard = {}) {
    check_guard(G, guard);
    const std::vector<PinLift> lifts = lift_all(G);
    std::vector<PinLift> gens;
    for (const SignedPerm& s : G.generators())
        gens.push_back(pin_lift(s));

    // Node 2k is +lift_k, node 2k+1 is -lift_k.
    const std::size_t nodes = 2 * G.order();
    std::vector<std::size_t> parent(nodes);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    };

    for (std::size_t k = 0; k < G.order(); ++k) {
        for (const PinLift& s : gens) {
            CliffordElement image = s.conjugate(lifts[k].element);
            std::size_t m = G.index_of(s.base * G.element(k) * s.base.inverse());
            std::size_t target;
            if (image == lifts[m].element)
                target = 2 * m;
            else if (image == -lifts[m].element)
                target = 2 * m + 1;
            else
                throw error("conjugate of a Pin lift is not a lift of the conjugate element");
            // Conjugation is linear, so -lift_k goes to the negative of the same image.
            unite(2 * k, target);
            unite(2 * k + 1, target ^ 1);
        }
    }
    std::size_t count = 0;
    for (std::size_t x = 0; x < nodes; ++x)
        if (find(x) == x)
            ++count;
    return count;
}

} // namespace equik::clifford
