#include "equik/lambda_oracle.hpp"
#include "equik/lambdaring.hpp"

#include <gtest/gtest.h>

using namespace equik;
using namespace equik::lambda;
using equik::lambda::oracle::oracle_c;

namespace {

using Table = std::map<PairKey, Integer>;

// Product in the tensor square: (I1, J1) * (I2, J2) = (I1 + I2, J1 + J2).
Table tensor_product(const Table& x, const Table& y) {
    Table out;
    for (const auto& [kx, vx] : x)
        for (const auto& [ky, vy] : y)
            out[{kx.first + ky.first, kx.second + ky.second}] += vx * vy;
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

// Power series coefficients of (t / (1 - t))^r up to t^n.
std::vector<Integer> shifted_geometric_power(int r, int n) {
    std::vector<Integer> base(n + 1, 0), acc(n + 1, 0);
    for (int d = 1; d <= n; ++d)
        base[d] = 1;
    acc[0] = 1;
    for (int step = 0; step < r; ++step) {
        std::vector<Integer> next(n + 1, 0);
        for (int a = 0; a <= n; ++a)
            for (int b = 0; a + b <= n; ++b)
                next[a + b] += acc[a] * base[b];
        acc = std::move(next);
    }
    return acc;
}

} // namespace

TEST(Newton, Examples) {
    LambdaPoly psi2 = newton_psi(2);
    EXPECT_EQ(psi2, LambdaPoly::monomial({1, 1}) - LambdaPoly::monomial({2}, 2));
    LambdaPoly psi3 = newton_psi(3);
    EXPECT_EQ(psi3, LambdaPoly::monomial({1, 1, 1}) - LambdaPoly::monomial({1, 2}, 3) + LambdaPoly::monomial({3}, 3));
    EXPECT_EQ(newton_psi(1), LambdaPoly::generator(1));
}

TEST(Newton, PowerSumsOnNumbers) {
    // Evaluate at x = {1, 2, 3}: lambda^r = e_r(1,2,3), psi^i = 1 + 2^i + 3^i.
    const Rational e[] = {1, 6, 11, 6, 0, 0, 0, 0};
    for (int i = 1; i <= 7; ++i) {
        Rational value = 0;
        LambdaPoly psi = newton_psi(i);
        for (const auto& [mono, c] : psi.terms()) {
            Rational term = c;
            for (int part : mono.parts())
                term *= e[part];
            value += term;
        }
        long long expected = 1 + (1LL << i);
        long long three = 1;
        for (int k = 0; k < i; ++k)
            three *= 3;
        EXPECT_EQ(value, expected + three) << i;
    }
}

TEST(DualProduct, Bookkeeping) {
    EXPECT_EQ(dual_product({{1}, {2}}), Partition({1, 2}));
    EXPECT_EQ(dual_product({{2}, {1}}), Partition({1, 2}));
    EXPECT_EQ(basis(3), (std::vector<Partition>{{3}, {1, 2}, {1, 1, 1}}));
    for (int k = 1; k <= 10; ++k)
        EXPECT_EQ(basis(k).size(), partitions::stats(k).P.convert_to<std::size_t>());
}

TEST(BasisChange, WeightTwo) {
    BasisChange t = theta(2);
    EXPECT_EQ(t.at({2}, {2}), -2);
    EXPECT_EQ(t.at({1, 1}, {2}), 1);
    EXPECT_EQ(t.at({2}, {1, 1}), 0);
    EXPECT_EQ(t.at({1, 1}, {1, 1}), 1);
    BasisChange o = omega(2);
    // lambda^2 = (psi^{1,1} - psi^2) / 2
    EXPECT_EQ(o.at({2}, {2}), Rational(-1, 2));
    EXPECT_EQ(o.at({1, 1}, {2}), Rational(1, 2));
}

TEST(BasisChange, InverseAndTriangular) {
    for (int k = 1; k <= 8; ++k) {
        BasisChange t = theta(k), o = omega(k);
        const std::size_t m = t.labels.size();
        EXPECT_EQ(t.entries * o.entries, linalg::Matrix::identity(m));
        EXPECT_EQ(o.entries * t.entries, linalg::Matrix::identity(m));
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < m; ++c) {
                EXPECT_TRUE(is_integral(t.entries(r, c)));
                if (r < c)
                    EXPECT_TRUE(t.entries(r, c).is_zero()) << k;
            }
    }
    EXPECT_THROW(theta(11), size_limit);
    EXPECT_THROW(theta(5, 4), size_limit);
}

TEST(Constants, DisplayedFormulas) {
    StructureTable two = c_constants({2});
    EXPECT_EQ(two.at({2}, {1, 1}), 1);
    EXPECT_EQ(two.at({1, 1}, {2}), 1);
    EXPECT_EQ(two.at({2}, {2}), -2);
    EXPECT_EQ(two.entries.size(), 3u);

    StructureTable one = c_constants({1});
    EXPECT_EQ(one.entries, (Table{{{Partition{1}, Partition{1}}, 1}}));
    EXPECT_EQ(coproduct_lambda(1).entries, one.entries);
    EXPECT_EQ(coproduct_lambda(2).entries, two.entries);
}

TEST(Constants, MatchOracle) {
    for (int k = 1; k <= 4; ++k)
        for (const Partition& L : basis(k))
            EXPECT_EQ(c_constants(L).entries, oracle_c(L).entries) << L.str();
}

TEST(Constants, OracleNeedsEnoughVariables) {
    EXPECT_EQ(oracle_c({2}, 3, 2).entries, c_constants({2}).entries);
    EXPECT_THROW(oracle_c({3}, 2, 3), error);
    EXPECT_THROW(oracle_c({1}, 9, 9), size_limit);
}

TEST(Constants, IntegralSymmetricMultiplicative) {
    for (int k = 1; k <= 6; ++k) {
        WeightTables w(k);
        for (const Partition& L : w.labels()) {
            StructureTable c = c_constants(L, w);
            for (const auto& [key, v] : c.entries)
                EXPECT_EQ(v, c.at(key.second, key.first)) << L.str();
        }
    }
    // m(lambda^L) is the product of the m(lambda^l) over the parts l.
    for (int k = 2; k <= 5; ++k)
        for (const Partition& L : basis(k)) {
            Table acc{{{Partition{}, Partition{}}, 1}};
            for (int part : L.parts())
                acc = tensor_product(acc, coproduct_lambda(part).entries);
            EXPECT_EQ(c_constants(L).entries, acc) << L.str();
        }
}

TEST(Constants, Coassociative) {
    // sum_I c^n_{I,C} c^I_{A,B} = sum_J c^n_{A,J} c^J_{B,C}
    for (int n = 1; n <= 4; ++n) {
        StructureTable top = coproduct_lambda(n);
        std::map<std::tuple<Partition, Partition, Partition>, Integer> left, right;
        for (const auto& [key, v] : top.entries) {
            StructureTable first = c_constants(key.first), second = c_constants(key.second);
            for (const auto& [inner, w] : first.entries)
                left[{inner.first, inner.second, key.second}] += v * w;
            for (const auto& [inner, w] : second.entries)
                right[{key.first, inner.first, inner.second}] += v * w;
        }
        std::erase_if(left, [](const auto& kv) { return kv.second.is_zero(); });
        std::erase_if(right, [](const auto& kv) { return kv.second.is_zero(); });
        EXPECT_EQ(left, right) << n;
    }
}

TEST(Constants, PsiDiagonal) {
    for (int k = 1; k <= 5; ++k) {
        WeightTables w(k);
        for (const Partition& S : w.labels()) {
            auto v = transported_constants(S, w);
            ASSERT_EQ(v.size(), 1u) << S.str();
            EXPECT_EQ(v.begin()->first, (PairKey{S, S}));
            EXPECT_EQ(v.begin()->second, 1);
        }
    }
}

TEST(Gamma, Conversion) {
    GammaTables g = gamma_tables(4);
    auto col = [&](const Partition& I) {
        std::map<Partition, Rational> out;
        std::size_t c = index_in(g.labels, I);
        for (std::size_t r = 0; r < g.labels.size(); ++r)
            if (!g.to_lambda(r, c).is_zero())
                out[g.labels[r]] = g.to_lambda(r, c);
        return out;
    };
    EXPECT_EQ(col({1}), (std::map<Partition, Rational>{{{1}, 1}}));
    EXPECT_EQ(col({2}), (std::map<Partition, Rational>{{{2}, 1}, {{1}, 1}}));
    // gamma^n = sum_r [t^n] (t/(1-t))^r lambda^r
    for (int n = 1; n <= 4; ++n)
        for (int r = 1; r <= 4; ++r)
            EXPECT_EQ(Rational(shifted_geometric_power(r, n)[n]), col({n})[{r}]) << n << " " << r;
    EXPECT_EQ(g.to_lambda * g.to_gamma, linalg::Matrix::identity(g.labels.size()));
}

TEST(Gamma, StructureConstantsByHand) {
    EXPECT_EQ(u_constants({1}).entries, (Table{{{Partition{1}, Partition{1}}, 1}}));
    // gamma^2 = lambda^2 + lambda^1 expanded through the lambda^2(xy) formula.
    Table expected{
        {{Partition{2}, Partition{1, 1}}, 1},  {{Partition{1}, Partition{1, 1}}, -1},
        {{Partition{1, 1}, Partition{2}}, 1},  {{Partition{1, 1}, Partition{1}}, -1},
        {{Partition{2}, Partition{2}}, -2},    {{Partition{2}, Partition{1}}, 2},
        {{Partition{1}, Partition{2}}, 2},     {{Partition{1}, Partition{1}}, -1},
    };
    EXPECT_EQ(u_constants({2}).entries, expected);
}

TEST(Gamma, MatchesOracleRoute) {
    // gamma^L(xy) through oracle lambda tables, then back to gamma on each side.
    for (int k = 1; k <= 3; ++k) {
        GammaTables g = gamma_tables(k);
        const std::size_t m = g.labels.size();
        for (const Partition& L : basis(k)) {
            std::map<PairKey, Rational> acc;
            std::size_t l = index_in(g.labels, L);
            for (std::size_t a = 0; a < m; ++a) {
                if (g.to_lambda(a, l).is_zero())
                    continue;
                StructureTable c = oracle_c(g.labels[a], k, k);
                for (const auto& [key, v] : c.entries) {
                    std::size_t x = index_in(g.labels, key.first), y = index_in(g.labels, key.second);
                    for (std::size_t i = 0; i < m; ++i)
                        for (std::size_t j = 0; j < m; ++j)
                            acc[{g.labels[i], g.labels[j]}] +=
                                g.to_lambda(a, l) * Rational(v) * g.to_gamma(i, x) * g.to_gamma(j, y);
                }
            }
            std::erase_if(acc, [](const auto& kv) { return kv.second.is_zero(); });
            Table ints;
            for (const auto& [key, v] : acc)
                ints[key] = numerator(v);
            EXPECT_EQ(u_constants(L).entries, ints) << L.str();
        }
    }
}

TEST(Gamma, IntegralToSix) {
    for (int k = 1; k <= 6; ++k)
        for (const Partition& L : basis(k))
            EXPECT_NO_THROW(u_constants(L)) << L.str();
}

TEST(Module, Examples) {
    ModuleAction a = module_action({1, 1, 1}, {3});
    EXPECT_EQ(a.degree, 1);
    ASSERT_EQ(a.coefficients.size(), 2u);
    EXPECT_EQ(a.coefficients[0].first, Partition{3});
    EXPECT_EQ(a.coefficients[1].first, Partition({1, 2}));
    EXPECT_EQ(module_action({1, 2}, {1, 2}).degree, 0);
    EXPECT_THROW(module_action({1, 1}, {1, 1}), invalid_basis);
    EXPECT_THROW(module_action({1}, {2}), dimension_mismatch);
    for (int n = 1; n <= 5; ++n) {
        Partition ones(std::vector<int>(n, 1));
        for (const Partition& S : partitions::enumerate(n, partitions::Kind::distinct))
            EXPECT_NO_THROW(module_action(ones, S));
    }
}

TEST(Module, BasisSizesArePartitionCounts) {
    for (int n = 1; n <= 12; ++n) {
        auto s = partitions::stats(n);
        auto [even, odd] = module_basis_sizes(n);
        EXPECT_EQ(even, s.p.convert_to<std::size_t>()) << n;
        EXPECT_EQ(odd, s.i.convert_to<std::size_t>()) << n;
    }
}
