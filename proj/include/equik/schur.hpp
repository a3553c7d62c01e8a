#pragma once

#include "equik/clifford.hpp"
#include "equik/groups.hpp"
#include "equik/linalg.hpp"

#include <optional>
#include <vector>

namespace equik::schur {

/// Fixed space Ker(rho(g) - 1).
inline linalg::Subspace fixed_space(const SignedPerm& g) {
    return linalg::kernel(g.matrix() - linalg::Matrix::identity(g.dim()));
}

/// det of h restricted to the h-invariant subspace w.
inline int restricted_det(const SignedPerm& h, const linalg::Subspace& w) {
    Rational d = linalg::det(linalg::restrict(h.matrix(), w));
    return d > 0 ? 1 : -1;
}

/// Whether the class of g splits in the double cover, decided from determinants alone:
/// for det g = +1 every h in C_g needs det h = det(h on V^+); for det g = -1 every h needs
/// det(h on V^+) = +1. Stops at the first violating centralizer element.
inline bool is_decomposed_criterion(const Group& G, const SignedPerm& g) {
    const linalg::Subspace fixed = fixed_space(g);
    const bool even = g.det() == 1;
    for (const SignedPerm& h : centralizer(G, g)) {
        int restricted = restricted_det(h, fixed);
        if (even ? restricted != h.det() : restricted != 1)
            return false;
    }
    return true;
}

/// Whether every centralizer element has a lift commuting with the lift of g, evaluated
/// by explicit Clifford products.
inline bool is_decomposed_oracle(const Group& G, const SignedPerm& g, const clifford::CoverGuard& guard = {}) {
    clifford::check_guard(G, guard);
    const clifford::PinLift lifted = clifford::pin_lift(g);
    for (const SignedPerm& h : centralizer(G, g))
        if (clifford::commutator_sign(lifted, clifford::pin_lift(h)) != 1)
            return false;
    return true;
}

struct ClassDecomposition {
    SignedPerm rep;
    std::size_t size = 0;
    int det = 1;
    bool decomposed_criterion = false;
    std::optional<bool> decomposed_oracle;

    bool agreement() const { return !decomposed_oracle || *decomposed_oracle == decomposed_criterion; }
};

struct DecompositionReport {
    std::vector<ClassDecomposition> classes;
    std::optional<std::size_t> cover_class_count;

    std::size_t decomposed_count() const {
        std::size_t c = 0;
        for (const auto& cls : classes)
            c += cls.decomposed_criterion ? 1 : 0;
        return c;
    }
    bool all_agree() const {
        for (const auto& cls : classes)
            if (!cls.agreement())
                return false;
        return true;
    }
    /// cover classes = classes + decomposed classes, when the cover was enumerated.
    std::optional<bool> cover_identity_holds() const {
        if (!cover_class_count)
            return std::nullopt;
        return *cover_class_count == classes.size() + decomposed_count();
    }
};

/// Per-class verdicts; with `with_oracle` also the Clifford verdicts and the cover class count.
inline DecompositionReport decomposition_report(const Group& G, const std::vector<ConjClass>& classes,
                                                bool with_oracle, const clifford::CoverGuard& guard = {}) {
    DecompositionReport report;
    if (with_oracle)
        clifford::check_guard(G, guard);
    for (const ConjClass& cls : classes) {
        ClassDecomposition d;
        d.rep = cls.rep;
        d.size = cls.size();
        d.det = cls.rep.det();
        d.decomposed_criterion = is_decomposed_criterion(G, cls.rep);
        if (with_oracle)
            d.decomposed_oracle = is_decomposed_oracle(G, cls.rep, guard);
        report.classes.push_back(std::move(d));
    }
    if (with_oracle)
        report.cover_class_count = clifford::schur_cover_class_count(G, guard);
    return report;
}

inline DecompositionReport decomposition_report(const Group& G, bool with_oracle,
                                                const clifford::CoverGuard& guard = {}) {
    return decomposition_report(G, conjugacy_classes(G), with_oracle, guard);
}

inline std::size_t decomposed_count(const Group& G, const std::vector<ConjClass>& classes) {
    std::size_t count = 0;
    for (const ConjClass& cls : classes)
        count += is_decomposed_criterion(G, cls.rep) ? 1 : 0;
    return count;
}

inline std::size_t decomposed_count(const Group& G) { return decomposed_count(G, conjugacy_classes(G)); }

/// Number of simple factors of G x| C(V) (R_V) and of G x| C(V + 1) (R_V1), V = R^n.
struct CrossedProductRanks {
    std::size_t R_V = 0;
    std::size_t R_V1 = 0;

    friend bool operator==(const CrossedProductRanks&, const CrossedProductRanks&) = default;
};

/// For n even R_V counts decomposed classes of G and R_V1 those of Z/2 x G in O(n+1);
/// for n odd the roles swap.
inline CrossedProductRanks crossed_product_ranks(const Group& G, std::size_t cap = default_group_cap) {
    std::size_t own = decomposed_count(G);
    std::size_t extended = decomposed_count(extend_with_reflection(G, cap));
    if (G.dim() % 2 == 0)
        return {own, extended};
    return {extended, own};
}

} // namespace equik::schur
