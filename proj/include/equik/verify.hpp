#pragma once

#include "equik/battery.hpp"
#include "equik/clifford.hpp"
#include "equik/ktheory.hpp"
#include "equik/lambda_oracle.hpp"
#include "equik/lambdaring.hpp"
#include "equik/partitions.hpp"
#include "equik/schur.hpp"

#include <cmath>
#include <functional>
#include <string>
#include <vector>

// The cross-module consistency battery behind `equik verify`. Every check is exact except the
// asymptotic one, and nothing time- or address-dependent reaches the output.

namespace equik::verify {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Options {
    int identities_upto = 60;
    int sym_upto = 6;
    int lambda_integrality_upto = 5;
    int lambda_oracle_upto = 4;
    int psi_diagonal_upto = 5;
    int theta_omega_upto = 8;
    std::size_t cover_limit = 1000;
    clifford::CoverGuard guard{};
};

struct Report {
    std::vector<Check> checks;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
    }
};

namespace detail {

inline std::size_t to_size(const Integer& z) { return z.convert_to<std::size_t>(); }

/// Runs `body`, turning exceptions into a failed check that carries the message.
inline Check run(std::string name, const std::function<std::string(bool&)>& body) {
    Check c{std::move(name), true, {}};
    try {
        c.detail = body(c.passed);
    } catch (const std::exception& e) {
        c.passed = false;
        c.detail = std::string("exception: ") + e.what();
    }
    return c;
}

inline void fail(bool& ok, std::string& first, const std::string& what) {
    if (ok)
        first = what;
    ok = false;
}

// det/parity table for commuting g, h with g an involution.
inline int involution_table(const SignedPerm& g, const SignedPerm& h) {
    const linalg::Subspace pos = schur::fixed_space(g);
    const std::size_t n_minus = g.dim() - pos.dim();
    const int det_h = h.det();
    const int det_pos = schur::restricted_det(h, pos);
    if (det_h == 1)
        return det_pos == 1 ? 1 : -1;
    if (det_pos == -1)
        return n_minus % 2 ? -1 : 1;
    return n_minus % 2 ? 1 : -1;
}

} // namespace detail

inline Report run(const Options& opt = {}) {
    using detail::fail;
    using detail::to_size;
    Report report;
    auto add = [&](std::string name, const std::function<std::string(bool&)>& body) {
        report.checks.push_back(detail::run(std::move(name), body));
    };

    add("partition identities: j_n = p_n + i_n, p_n - i_n pentagonal, Euler product", [&](bool& ok) {
        partitions::IdentityReport r = partitions::verify_identities(opt.identities_upto);
        ok = r.passed();
        return "n <= " + std::to_string(opt.identities_upto) + ", " + std::to_string(r.checked) + " equalities" +
               (ok ? "" : "; first failure: " + r.failures.front());
    });

    add("Thom-space ranks of S_n are (p_n, i_n)", [&](bool& ok) {
        std::string first;
        for (int n = 1; n <= opt.sym_upto; ++n) {
            auto s = partitions::stats(n);
            ktheory::Ranks r = ktheory::thom_ranks(Group::symmetric(n));
            if (r != ktheory::Ranks{to_size(s.p), to_size(s.i)})
                fail(ok, first, "n = " + std::to_string(n));
        }
        return "n <= " + std::to_string(opt.sym_upto) + (ok ? "" : "; mismatch at " + first);
    });

    add("projective-space ranks of S_n are (2P(n) - j_n, p_n)", [&](bool& ok) {
        std::string first;
        for (int n = 1; n <= opt.sym_upto; ++n) {
            auto s = partitions::stats(n);
            ktheory::Ranks r = ktheory::projective_ranks(Group::symmetric(n));
            if (r != ktheory::Ranks{to_size(2 * s.P - s.j), to_size(s.p)})
                fail(ok, first, "n = " + std::to_string(n));
        }
        return "n <= " + std::to_string(opt.sym_upto) + (ok ? "" : "; mismatch at " + first);
    });

    add("crossed-product ranks of S_n are (p_n + 2 i_n, 2 p_n + i_n)", [&](bool& ok) {
        std::string first;
        for (int n = 1; n <= opt.sym_upto; ++n) {
            auto s = partitions::stats(n);
            schur::CrossedProductRanks r = schur::crossed_product_ranks(Group::symmetric(n));
            if (r != schur::CrossedProductRanks{to_size(s.p + 2 * s.i), to_size(2 * s.p + s.i)})
                fail(ok, first, "n = " + std::to_string(n));
        }
        return "n <= " + std::to_string(opt.sym_upto) + (ok ? "" : "; mismatch at " + first);
    });

    const std::vector<battery::NamedGroup> groups = battery::builtin();

    add("decomposition criterion agrees with explicit Pin commutators", [&](bool& ok) {
        std::string first;
        std::size_t classes = 0;
        for (const auto& [name, G] : groups) {
            schur::DecompositionReport r = schur::decomposition_report(G, false);
            for (const auto& c : r.classes) {
                ++classes;
                if (schur::is_decomposed_oracle(G, c.rep, opt.guard) != c.decomposed_criterion)
                    fail(ok, first, name);
            }
        }
        return std::to_string(groups.size()) + " groups, " + std::to_string(classes) + " classes" +
               (ok ? "" : "; disagreement in " + first);
    });

    add("Schur cover class count = classes + decomposed classes", [&](bool& ok) {
        std::string first;
        std::size_t tested = 0;
        for (const auto& [name, G] : groups) {
            if (G.order() > opt.cover_limit)
                continue;
            ++tested;
            std::size_t cover = clifford::schur_cover_class_count(G, opt.guard);
            std::size_t expected = conjugacy_classes(G).size() + schur::decomposed_count(G);
            if (cover != expected)
                fail(ok, first, name + " (" + std::to_string(cover) + " vs " + std::to_string(expected) + ")");
        }
        return std::to_string(tested) + " groups of order <= " + std::to_string(opt.cover_limit) +
               (ok ? "" : "; mismatch in " + first);
    });

    add("commutator signs of involutions follow the det / parity table", [&](bool& ok) {
        std::string first;
        std::size_t pairs = 0;
        for (const auto& [name, G] : groups)
            for (const SignedPerm& g : G.elements()) {
                if (!(g * g).is_identity())
                    continue;
                const clifford::PinLift lg = clifford::pin_lift(g);
                for (const SignedPerm& h : centralizer(G, g)) {
                    ++pairs;
                    if (clifford::commutator_sign(lg, clifford::pin_lift(h)) != detail::involution_table(g, h))
                        fail(ok, first, name);
                }
            }
        return std::to_string(pairs) + " commuting pairs" + (ok ? "" : "; mismatch in " + first);
    });

    add("R(V+1) - 2C = O - A and R(V+1) - R(V) = K0 - K1 (Thom)", [&](bool& ok) {
        std::string first;
        for (const auto& [name, G] : groups) {
            ktheory::RankReport r = ktheory::count_report(G);
            if (!r.projective_balance() || !r.euler_characteristic())
                fail(ok, first, name);
        }
        return std::to_string(groups.size()) + " groups" + (ok ? "" : "; violated by " + first);
    });

    add("K1 of the Thom space vanishes for subgroups of SO(2m)", [&](bool& ok) {
        std::string first;
        std::size_t tested = 0;
        for (const auto& [name, G] : groups) {
            if (G.dim() % 2 != 0 || !G.in_special_orthogonal())
                continue;
            ++tested;
            if (ktheory::thom_ranks(G).K1 != 0)
                fail(ok, first, name);
        }
        return std::to_string(tested) + " groups" + (ok ? "" : "; nonzero for " + first);
    });

    add("lambda^2(xy) = lambda^2(x) lambda^1(y)^2 + lambda^1(x)^2 lambda^2(y) - 2 lambda^2(x) lambda^2(y)",
        [&](bool& ok) {
            lambda::StructureTable c = lambda::c_constants(Partition{2});
            ok = c.entries.size() == 3 && c.at({2}, {1, 1}) == 1 && c.at({1, 1}, {2}) == 1 && c.at({2}, {2}) == -2;
            return std::string("coefficients 1, 1, -2");
        });

    add("lambda and gamma structure constants are integral", [&](bool& ok) {
        std::size_t tables = 0;
        for (int k = 1; k <= opt.lambda_integrality_upto; ++k) {
            lambda::WeightTables w(k);
            for (const Partition& L : w.labels()) {
                lambda::c_constants(L, w);
                lambda::u_constants(L);
                tables += 2;
            }
        }
        ok = true;
        return "|L| <= " + std::to_string(opt.lambda_integrality_upto) + ", " + std::to_string(tables) + " tables";
    });

    add("structure constants match the polynomial-expansion oracle", [&](bool& ok) {
        std::string first;
        std::size_t tested = 0;
        for (int k = 1; k <= opt.lambda_oracle_upto; ++k)
            for (const Partition& L : lambda::basis(k)) {
                ++tested;
                if (lambda::c_constants(L).entries != lambda::oracle::oracle_c(L).entries)
                    fail(ok, first, L.str());
            }
        return "|L| <= " + std::to_string(opt.lambda_oracle_upto) + ", " + std::to_string(tested) + " tables" +
               (ok ? "" : "; mismatch at " + first);
    });

    add("Adams operations are multiplicative (transported constants are deltas)", [&](bool& ok) {
        std::string first;
        for (int k = 1; k <= opt.psi_diagonal_upto; ++k) {
            lambda::WeightTables w(k);
            for (const Partition& S : w.labels()) {
                auto v = lambda::transported_constants(S, w);
                if (v.size() != 1 || v.begin()->first != lambda::PairKey{S, S} || v.begin()->second != 1)
                    fail(ok, first, S.str());
            }
        }
        return "k <= " + std::to_string(opt.psi_diagonal_upto) + (ok ? "" : "; off-diagonal at " + first);
    });

    add("theta * omega = identity", [&](bool& ok) {
        std::string first;
        for (int k = 1; k <= opt.theta_omega_upto; ++k) {
            lambda::BasisChange t = lambda::theta(k), o = lambda::omega(k);
            if (t.entries * o.entries != linalg::Matrix::identity(t.labels.size()))
                fail(ok, first, std::to_string(k));
        }
        return "k <= " + std::to_string(opt.theta_omega_upto) + (ok ? "" : "; fails at k = " + first);
    });

    add("asymptotic ratio: ratio(400) in [0.5, 1.5], closer to 1 than ratio(50)", [&](bool& ok) {
        const double r400 = partitions::asymptotic_ratio(400);
        const double r50 = partitions::asymptotic_ratio(50);
        ok = r400 >= 0.5 && r400 <= 1.5 && std::abs(r400 - 1) < std::abs(r50 - 1);
        return std::string("tolerance band [0.5, 1.5]");
    });

    return report;
}

} // namespace equik::verify
