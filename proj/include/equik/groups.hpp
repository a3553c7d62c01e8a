#pragma once

#include "equik/errors.hpp"
#include "equik/linalg.hpp"
#include "equik/partitions.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace equik {

/// An element of the hyperoctahedral group B_n inside O(n): e_j -> signs[j] * e_{perm[j]}.
/// Indices are 0-based.
class SignedPerm {
public:
    SignedPerm() = default;

    SignedPerm(std::vector<int> perm, std::vector<int> signs) : perm_(std::move(perm)), signs_(std::move(signs)) {
        if (perm_.size() != signs_.size())
            throw parse_error("signed permutation: perm and signs differ in length");
        std::vector<bool> seen(perm_.size(), false);
        for (int p : perm_) {
            if (p < 0 || p >= static_cast<int>(perm_.size()) || seen[p])
                throw parse_error("signed permutation: perm is not a bijection");
            seen[p] = true;
        }
        for (int s : signs_)
            if (s != 1 && s != -1)
                throw parse_error("signed permutation: signs must be +1 or -1");
    }

    /// Unsigned permutation.
    explicit SignedPerm(std::vector<int> perm) : SignedPerm(perm, std::vector<int>(perm.size(), 1)) {}

    static SignedPerm identity(std::size_t n) {
        std::vector<int> perm(n);
        for (std::size_t k = 0; k < n; ++k)
            perm[k] = static_cast<int>(k);
        return SignedPerm(std::move(perm));
    }

    static SignedPerm diagonal(std::vector<int> signs) {
        SignedPerm g = identity(signs.size());
        return SignedPerm(g.perm_, std::move(signs));
    }

    /// Transposition of coordinates i and j (0-based) in dimension n.
    static SignedPerm transposition(std::size_t n, int i, int j) {
        SignedPerm g = identity(n);
        std::swap(g.perm_[i], g.perm_[j]);
        return g;
    }

    /// 1-based images, as in group files.
    static SignedPerm from_one_based(const std::vector<int>& perm, const std::vector<int>& signs) {
        std::vector<int> zero(perm.size());
        for (std::size_t k = 0; k < perm.size(); ++k)
            zero[k] = perm[k] - 1;
        return SignedPerm(std::move(zero), signs);
    }

    std::size_t dim() const { return perm_.size(); }
    const std::vector<int>& perm() const { return perm_; }
    const std::vector<int>& signs() const { return signs_; }
    int image(std::size_t j) const { return perm_[j]; }
    int sign(std::size_t j) const { return signs_[j]; }

    bool is_identity() const {
        for (std::size_t k = 0; k < perm_.size(); ++k)
            if (perm_[k] != static_cast<int>(k) || signs_[k] != 1)
                return false;
        return true;
    }
    bool is_unsigned() const {
        return std::all_of(signs_.begin(), signs_.end(), [](int s) { return s == 1; });
    }

    /// Sign of the underlying permutation.
    int permutation_sign() const {
        std::vector<bool> seen(perm_.size(), false);
        int sign = 1;
        for (std::size_t start = 0; start < perm_.size(); ++start) {
            if (seen[start])
                continue;
            std::size_t len = 0;
            for (std::size_t k = start; !seen[k]; k = perm_[k]) {
                seen[k] = true;
                ++len;
            }
            if (len % 2 == 0)
                sign = -sign;
        }
        return sign;
    }

    int det() const {
        int d = permutation_sign();
        for (int s : signs_)
            d *= s;
        return d;
    }

    /// Column j holds signs[j] in row perm[j].
    linalg::Matrix matrix() const {
        linalg::Matrix m(dim(), dim());
        for (std::size_t j = 0; j < dim(); ++j)
            m(perm_[j], j) = signs_[j];
        return m;
    }

    /// (g*h)(x) = g(h(x)).
    friend SignedPerm operator*(const SignedPerm& g, const SignedPerm& h) {
        if (g.dim() != h.dim())
            throw dimension_mismatch("SignedPerm product: dimensions differ");
        SignedPerm out;
        out.perm_.resize(g.dim());
        out.signs_.resize(g.dim());
        for (std::size_t j = 0; j < g.dim(); ++j) {
            int mid = h.perm_[j];
            out.perm_[j] = g.perm_[mid];
            out.signs_[j] = h.signs_[j] * g.signs_[mid];
        }
        return out;
    }

    SignedPerm inverse() const {
        SignedPerm out;
        out.perm_.resize(dim());
        out.signs_.resize(dim());
        for (std::size_t j = 0; j < dim(); ++j) {
            out.perm_[perm_[j]] = static_cast<int>(j);
            out.signs_[perm_[j]] = signs_[j];
        }
        return out;
    }

    /// Image of a coordinate vector.
    linalg::Vector apply(const linalg::Vector& x) const {
        linalg::Vector out(dim(), Rational(0));
        for (std::size_t j = 0; j < dim(); ++j)
            out[perm_[j]] = signs_[j] * x[j];
        return out;
    }

    /// Cycle lengths of the underlying permutation.
    Partition cycle_type() const {
        std::vector<bool> seen(perm_.size(), false);
        std::vector<int> lengths;
        for (std::size_t start = 0; start < perm_.size(); ++start) {
            if (seen[start])
                continue;
            int len = 0;
            for (std::size_t k = start; !seen[k]; k = perm_[k]) {
                seen[k] = true;
                ++len;
            }
            lengths.push_back(len);
        }
        return Partition(std::move(lengths));
    }

    /// Lexicographic on permutation images, then on signs.
    friend std::strong_ordering operator<=>(const SignedPerm& a, const SignedPerm& b) {
        if (auto c = a.perm_ <=> b.perm_; c != 0)
            return c;
        return a.signs_ <=> b.signs_;
    }
    friend bool operator==(const SignedPerm&, const SignedPerm&) = default;

    std::size_t hash() const {
        std::size_t h = perm_.size();
        for (std::size_t k = 0; k < perm_.size(); ++k)
            h = h * 1000003u + static_cast<std::size_t>(perm_[k] * 2 + (signs_[k] < 0 ? 1 : 0));
        return h;
    }

private:
    std::vector<int> perm_;
    std::vector<int> signs_;
};

struct SignedPermHash {
    std::size_t operator()(const SignedPerm& g) const { return g.hash(); }
};

inline constexpr std::size_t default_group_cap = 1'000'000;

/// A finite subgroup of B_n, stored as its sorted element list.
class Group {
public:
    /// Breadth-first closure of the generators. Throws size_limit past `cap` elements.
    static Group from_generators(std::size_t n, std::vector<SignedPerm> generators,
                                 std::size_t cap = default_group_cap) {
        for (const SignedPerm& g : generators)
            if (g.dim() != n)
                throw dimension_mismatch("from_generators: generator has dimension " + std::to_string(g.dim()) +
                                         ", expected " + std::to_string(n));
        Group G;
        G.n_ = n;
        G.generators_ = std::move(generators);
        std::unordered_map<SignedPerm, std::size_t, SignedPermHash> seen;
        std::vector<SignedPerm> found{SignedPerm::identity(n)};
        seen.emplace(found.front(), 0);
        for (std::size_t head = 0; head < found.size(); ++head) {
            for (const SignedPerm& s : G.generators_) {
                SignedPerm next = found[head] * s;
                if (seen.contains(next))
                    continue;
                if (found.size() >= cap)
                    throw size_limit("group closure exceeds " + std::to_string(cap) + " elements");
                seen.emplace(next, found.size());
                found.push_back(std::move(next));
            }
        }
        std::sort(found.begin(), found.end());
        G.elements_ = std::move(found);
        G.index_.reserve(G.elements_.size());
        for (std::size_t k = 0; k < G.elements_.size(); ++k)
            G.index_.emplace(G.elements_[k], k);
        return G;
    }

    static Group trivial(std::size_t n) { return from_generators(n, {}); }

    /// S_n permuting coordinates, generated by adjacent transpositions. 1 <= n <= 9.
    static Group symmetric(std::size_t n) {
        if (n < 1 || n > 9)
            throw size_limit("symmetric group: n must be in 1..9, got " + std::to_string(n));
        std::vector<SignedPerm> gens;
        for (std::size_t k = 0; k + 1 < n; ++k)
            gens.push_back(SignedPerm::transposition(n, static_cast<int>(k), static_cast<int>(k + 1)));
        return from_generators(n, std::move(gens));
    }

    /// {+1,-1}^n acting diagonally.
    static Group sign_group(std::size_t n) {
        std::vector<SignedPerm> gens;
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<int> signs(n, 1);
            signs[k] = -1;
            gens.push_back(SignedPerm::diagonal(std::move(signs)));
        }
        return from_generators(n, std::move(gens));
    }

    /// All of B_n, order 2^n n!.
    static Group hyperoctahedral(std::size_t n) {
        Group s = symmetric(n);
        std::vector<SignedPerm> gens = s.generators();
        std::vector<int> signs(n, 1);
        signs[0] = -1;
        gens.push_back(SignedPerm::diagonal(std::move(signs)));
        return from_generators(n, std::move(gens));
    }

    std::size_t dim() const { return n_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<SignedPerm>& elements() const { return elements_; }
    const std::vector<SignedPerm>& generators() const { return generators_; }
    const SignedPerm& element(std::size_t k) const { return elements_.at(k); }

    bool contains(const SignedPerm& g) const { return index_.contains(g); }
    std::size_t index_of(const SignedPerm& g) const {
        auto it = index_.find(g);
        if (it == index_.end())
            throw error("element is not in the group");
        return it->second;
    }

    bool in_special_orthogonal() const {
        return std::all_of(elements_.begin(), elements_.end(), [](const SignedPerm& g) { return g.det() == 1; });
    }

private:
    std::size_t n_ = 0;
    std::vector<SignedPerm> generators_;
    std::vector<SignedPerm> elements_;
    std::unordered_map<SignedPerm, std::size_t, SignedPermHash> index_;
};

/// Z/2 x G inside O(n+1): G on the first n coordinates, the new factor flipping the last one.
inline Group extend_with_reflection(const Group& G, std::size_t cap = default_group_cap) {
    const std::size_t n = G.dim();
    auto lift = [n](const SignedPerm& g) {
        std::vector<int> perm = g.perm();
        std::vector<int> signs = g.signs();
        perm.push_back(static_cast<int>(n));
        signs.push_back(1);
        return SignedPerm(std::move(perm), std::move(signs));
    };
    std::vector<SignedPerm> gens;
    for (const SignedPerm& g : G.generators())
        gens.push_back(lift(g));
    std::vector<int> flip(n + 1, 1);
    flip[n] = -1;
    gens.push_back(SignedPerm::diagonal(std::move(flip)));
    if (2 * G.order() > cap)
        throw size_limit("extended group exceeds " + std::to_string(cap) + " elements");
    return Group::from_generators(n + 1, std::move(gens), cap);
}

struct ConjClass {
    SignedPerm rep;                      ///< minimal member in the canonical order
    std::vector<std::size_t> members;    ///< element indices, ascending
    std::optional<Partition> cycle_type; ///< set when the representative has no sign flips

    std::size_t size() const { return members.size(); }
};

/// Conjugation orbits, ordered by representative. Orbits are grown with the generators only.
inline std::vector<ConjClass> conjugacy_classes(const Group& G) {
    std::vector<int> class_of(G.order(), -1);
    std::vector<SignedPerm> gen_inverses;
    for (const SignedPerm& s : G.generators())
        gen_inverses.push_back(s.inverse());
    std::vector<ConjClass> classes;
    for (std::size_t start = 0; start < G.order(); ++start) {
        if (class_of[start] >= 0)
            continue;
        const int id = static_cast<int>(classes.size());
        ConjClass cls;
        cls.rep = G.element(start);
        std::deque<std::size_t> queue{start};
        class_of[start] = id;
        while (!queue.empty()) {
            std::size_t cur = queue.front();
            queue.pop_front();
            cls.members.push_back(cur);
            for (std::size_t k = 0; k < gen_inverses.size(); ++k) {
                std::size_t next = G.index_of(G.generators()[k] * G.element(cur) * gen_inverses[k]);
                if (class_of[next] < 0) {
                    class_of[next] = id;
                    queue.push_back(next);
                }
            }
        }
        std::sort(cls.members.begin(), cls.members.end());
        if (cls.rep.is_unsigned())
            cls.cycle_type = cls.rep.cycle_type();
        classes.push_back(std::move(cls));
    }
    return classes;
}

inline std::vector<SignedPerm> centralizer(const Group& G, const SignedPerm& g) {
    std::vector<SignedPerm> out;
    for (const SignedPerm& h : G.elements())
        if (h * g == g * h)
            out.push_back(h);
    return out;
}

} // namespace equik
