#include "equik/battery.hpp"
#include "equik/ktheory.hpp"

#include <gtest/gtest.h>

using namespace equik;
using namespace equik::ktheory;

namespace {

std::size_t to_size(const Integer& z) { return z.convert_to<std::size_t>(); }

} // namespace

TEST(Geometry, SymmetricClassesFollowCycleType) {
    // For S_n the fixed space of a permutation has one dimension per cycle, and the
    // centralizer preserves its orientation exactly when all cycle lengths differ.
    for (int n = 1; n <= 5; ++n) {
        Group G = Group::symmetric(n);
        auto classes = conjugacy_classes(G);
        auto geo = analyze(G, classes);
        for (std::size_t k = 0; k < classes.size(); ++k) {
            const Partition& type = *classes[k].cycle_type;
            EXPECT_EQ(geo[k].dim_pos, type.length());
            EXPECT_EQ(geo[k].oriented_pos, type.is_distinct()) << type.str();
            EXPECT_EQ(geo[k].size, classes[k].size());
        }
    }
}

TEST(Geometry, Examples) {
    Group S2 = Group::symmetric(2);
    ClassGeometry swap = analyze_class(S2, SignedPerm::transposition(2, 0, 1));
    EXPECT_EQ(swap.dim_pos, 1u);
    EXPECT_EQ(swap.dim_neg, 1u);
    EXPECT_TRUE(swap.oriented_pos);
    EXPECT_FALSE(swap.oriented_neg);
    ClassGeometry id = analyze_class(S2, SignedPerm::identity(2));
    EXPECT_EQ(id.dim_pos, 2u);
    EXPECT_EQ(id.dim_neg, 0u);
    EXPECT_FALSE(id.oriented_pos);
    EXPECT_TRUE(id.oriented_neg);
}

TEST(Geometry, ConstantOnClasses) {
    for (const auto& [name, G] : battery::builtin(4, 3, 3))
        for (const ConjClass& c : conjugacy_classes(G)) {
            ClassGeometry ref = analyze_class(G, c.rep);
            for (std::size_t k : c.members) {
                ClassGeometry other = analyze_class(G, G.element(k));
                EXPECT_EQ(other.dim_pos, ref.dim_pos) << name;
                EXPECT_EQ(other.dim_neg, ref.dim_neg) << name;
                EXPECT_EQ(other.oriented_pos, ref.oriented_pos) << name;
                EXPECT_EQ(other.oriented_neg, ref.oriented_neg) << name;
            }
        }
}

TEST(Ranks, SymmetricMatchPartitionCounts) {
    for (int n = 1; n <= 6; ++n) {
        auto s = partitions::stats(n);
        Group G = Group::symmetric(n);
        auto geo = analyze(G);
        EXPECT_EQ(thom_ranks(geo), (Ranks{to_size(s.p), to_size(s.i)})) << n;
        EXPECT_EQ(projective_ranks(geo), (Ranks{to_size(2 * s.P - s.j), to_size(s.p)})) << n;
    }
    EXPECT_EQ(thom_ranks(Group::symmetric(5)), (Ranks{2, 1}));
}

TEST(Report, ClosedFormExamples) {
    RankReport three = symmetric_closed_forms(3);
    EXPECT_EQ(three.K0_thom, 1);
    EXPECT_EQ(three.K1_thom, 1);
    EXPECT_EQ(three.K0_proj, 4);
    EXPECT_EQ(three.K1_proj, 1);
    EXPECT_EQ(three.R_V, 3);
    EXPECT_EQ(three.R_V1, 3);

    RankReport six = symmetric_closed_forms(6);
    EXPECT_EQ(six.K0_thom, 2);
    EXPECT_EQ(six.K1_thom, 2);
    EXPECT_EQ(six.K0_proj, 18);
    EXPECT_EQ(six.K1_proj, 2);
    EXPECT_EQ(six.R_V, 6);
    EXPECT_EQ(six.R_V1, 6);

    RankReport one = symmetric_closed_forms(1);
    EXPECT_EQ(one.K0_thom, 0);
    EXPECT_EQ(one.K1_thom, 1);
    EXPECT_EQ(one.K0_proj, 1);
    EXPECT_EQ(one.K1_proj, 0);
    EXPECT_EQ(one.R_V, 2);
    EXPECT_EQ(one.R_V1, 1);
}

TEST(Report, GroupComputationMatchesClosedForms) {
    for (int n = 1; n <= 5; ++n)
        EXPECT_EQ(count_report(Group::symmetric(n)), symmetric_closed_forms(n)) << n;
}

TEST(Report, IdentitiesOnBattery) {
    for (const auto& [name, G] : battery::builtin(5, 4, 4)) {
        RankReport r = count_report(G);
        EXPECT_TRUE(r.projective_balance()) << name;
        EXPECT_TRUE(r.euler_characteristic()) << name;
        if (!r.has_fixed_point_free_class)
            EXPECT_TRUE(r.positive_class_balance()) << name;
    }
}

TEST(Report, PositiveBalanceNeedsFixedPoints) {
    // {+-1} on R^1: -1 has no fixed vector, and the balance fails by one.
    RankReport r = count_report(Group::sign_group(1));
    EXPECT_TRUE(r.has_fixed_point_free_class);
    EXPECT_FALSE(r.positive_class_balance());
    EXPECT_EQ(r.R_V, 1);
    EXPECT_EQ(2 * r.C + r.O - r.A - r.P + r.N, 2);
}

TEST(Vanishing, SpecialOrthogonalEvenDimension) {
    std::size_t tested = 0;
    for (const auto& [name, G] : battery::builtin()) {
        if (G.dim() % 2 != 0 || !G.in_special_orthogonal())
            continue;
        EXPECT_EQ(thom_ranks(G).K1, 0u) << name;
        ++tested;
    }
    EXPECT_GE(tested, 3u);
}
