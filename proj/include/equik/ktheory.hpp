#pragma once

#include "equik/groups.hpp"
#include "equik/linalg.hpp"
#include "equik/partitions.hpp"
#include "equik/schur.hpp"

#include <vector>

namespace equik::ktheory {

/// Eigenspace data of one conjugacy class.
struct ClassGeometry {
    SignedPerm rep;
    std::size_t size = 0;
    std::size_t dim_pos = 0; ///< dim Ker(rho(g) - 1)
    std::size_t dim_neg = 0; ///< dim Ker(rho(g) + 1)
    bool oriented_pos = false;
    bool oriented_neg = false;

    bool even() const { return dim_pos % 2 == 0; }
    bool positive() const { return dim_pos > 0; }
    bool negative() const { return dim_neg > 0; }

    friend bool operator==(const ClassGeometry&, const ClassGeometry&) = default;
};

/// Every element of `elements` acts on w with determinant +1. True when dim w = 0.
inline bool preserves_orientation(const std::vector<SignedPerm>& elements, const linalg::Subspace& w) {
    if (w.dim() == 0)
        return true;
    for (const SignedPerm& h : elements)
        if (schur::restricted_det(h, w) != 1)
            return false;
    return true;
}

inline ClassGeometry analyze_class(const Group& G, const SignedPerm& g) {
    const linalg::Matrix rho = g.matrix();
    const linalg::Matrix id = linalg::Matrix::identity(g.dim());
    const linalg::Subspace pos = linalg::kernel(rho - id);
    const linalg::Subspace neg = linalg::kernel(rho + id);
    const std::vector<SignedPerm> cent = centralizer(G, g);
    ClassGeometry out;
    out.rep = g;
    out.size = G.order() / cent.size();
    out.dim_pos = pos.dim();
    out.dim_neg = neg.dim();
    out.oriented_pos = preserves_orientation(cent, pos);
    out.oriented_neg = preserves_orientation(cent, neg);
    return out;
}

inline std::vector<ClassGeometry> analyze(const Group& G, const std::vector<ConjClass>& classes) {
    std::vector<ClassGeometry> out;
    out.reserve(classes.size());
    for (const ConjClass& cls : classes)
        out.push_back(analyze_class(G, cls.rep));
    return out;
}

inline std::vector<ClassGeometry> analyze(const Group& G) { return analyze(G, conjugacy_classes(G)); }

struct Ranks {
    std::size_t K0 = 0;
    std::size_t K1 = 0;

    friend bool operator==(const Ranks&, const Ranks&) = default;
};

/// Ranks of K_G^0(V), K_G^1(V): oriented classes with even / odd fixed dimension.
inline Ranks thom_ranks(const std::vector<ClassGeometry>& classes) {
    Ranks r;
    for (const ClassGeometry& c : classes)
        if (c.oriented_pos)
            ++(c.even() ? r.K0 : r.K1);
    return r;
}

/// Ranks of K_G^0(P(V)), K_G^1(P(V)). Each of V^{+g}, V^{-g} contributes on its own,
/// so a class that is both positive and negative can count twice.
inline Ranks projective_ranks(const std::vector<ClassGeometry>& classes) {
    Ranks r;
    for (const ClassGeometry& c : classes) {
        r.K0 += (c.positive() ? 1 : 0) + (c.negative() ? 1 : 0);
        if (c.positive() && c.dim_pos % 2 == 0 && c.oriented_pos)
            ++r.K1;
        if (c.negative() && c.dim_neg % 2 == 0 && c.oriented_neg)
            ++r.K1;
    }
    return r;
}

inline Ranks thom_ranks(const Group& G) { return thom_ranks(analyze(G)); }
inline Ranks projective_ranks(const Group& G) { return projective_ranks(analyze(G)); }

struct RankReport {
    long long C = 0;  ///< number of classes
    long long K0_thom = 0, K1_thom = 0;
    long long K0_proj = 0, K1_proj = 0;
    long long A = 0;  ///< strictly positive plus strictly negative classes (= K0_proj)
    long long O = 0;  ///< even oriented, counted on each side (= K1_proj)
    long long P = 0;  ///< strictly positive, oriented, even
    long long N = 0;  ///< strictly positive, oriented, odd
    long long R_V = 0, R_V1 = 0;

    /// R_V1 - 2C = O - A
    bool projective_balance() const { return R_V1 - 2 * C == O - A; }
    /// R_V1 - R_V = K0_thom - K1_thom
    bool euler_characteristic() const { return R_V1 - R_V == K0_thom - K1_thom; }
    /// R_V = 2C + O - A - P + N; only asserted when every class has a nonzero fixed space.
    bool positive_class_balance() const { return R_V == 2 * C + O - A - P + N; }

    bool has_fixed_point_free_class = false;

    friend bool operator==(const RankReport&, const RankReport&) = default;
};

inline RankReport count_report(const Group& G, std::size_t cap = default_group_cap) {
    const std::vector<ClassGeometry> geo = analyze(G);
    RankReport r;
    r.C = static_cast<long long>(geo.size());
    Ranks thom = thom_ranks(geo);
    Ranks proj = projective_ranks(geo);
    r.K0_thom = static_cast<long long>(thom.K0);
    r.K1_thom = static_cast<long long>(thom.K1);
    r.K0_proj = r.A = static_cast<long long>(proj.K0);
    r.K1_proj = r.O = static_cast<long long>(proj.K1);
    for (const ClassGeometry& c : geo) {
        if (!c.positive()) {
            r.has_fixed_point_free_class = true;
            continue;
        }
        if (c.oriented_pos)
            ++(c.even() ? r.P : r.N);
    }
    schur::CrossedProductRanks cp = schur::crossed_product_ranks(G, cap);
    r.R_V = static_cast<long long>(cp.R_V);
    r.R_V1 = static_cast<long long>(cp.R_V1);
    return r;
}

/// The report for S_n on R^n from partition counts alone, no group enumeration.
inline RankReport symmetric_closed_forms(int n) {
    partitions::PartitionStats s = partitions::stats(n);
    auto ll = [](const Integer& z) { return z.convert_to<long long>(); };
    const long long P = ll(s.P), p = ll(s.p), i = ll(s.i), j = ll(s.j);
    RankReport r;
    r.C = P;
    r.K0_thom = p;
    r.K1_thom = i;
    r.K0_proj = r.A = 2 * P - j;
    r.K1_proj = r.O = p;
    // Every permutation fixes the diagonal, so all classes are strictly positive.
    r.P = p;
    r.N = i;
    r.R_V = p + 2 * i;
    r.R_V1 = 2 * p + i;
    return r;
}

} // namespace equik::ktheory
