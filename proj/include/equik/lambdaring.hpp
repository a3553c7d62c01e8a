#pragma once

#include "equik/arith.hpp"
#include "equik/errors.hpp"
#include "equik/linalg.hpp"
#include "equik/partitions.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

// Symmetric-function engine: Newton polynomials psi^i in the lambda^i, the psi/lambda change of
// basis, the universal structure constants for lambda^L(xy) and gamma^L(xy), and the module
// structure on the distinct-part symbols.

namespace equik::lambda {

inline constexpr int default_max_degree = 10;

inline void check_degree(int k, int max_degree) {
    if (k < 1)
        throw parse_error("degree must be at least 1");
    if (k > max_degree)
        throw size_limit("degree " + std::to_string(k) + " exceeds the guard " + std::to_string(max_degree));
}

/// Polynomial in lambda^1, lambda^2, ...; the monomial lambda^I is keyed by the partition I.
class LambdaPoly {
public:
    LambdaPoly() = default;

    static LambdaPoly monomial(Partition I, Rational coeff = 1) {
        LambdaPoly p;
        if (!coeff.is_zero())
            p.terms_.emplace(std::move(I), std::move(coeff));
        return p;
    }
    static LambdaPoly generator(int i) { return monomial(Partition{i}); }

    const std::map<Partition, Rational>& terms() const { return terms_; }
    Rational coefficient(const Partition& I) const {
        auto it = terms_.find(I);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    LambdaPoly& operator+=(const LambdaPoly& o) {
        for (const auto& [m, c] : o.terms_)
            add(m, c);
        return *this;
    }
    friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
    friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b) { return a += b * Rational(-1); }

    friend LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b) {
        LambdaPoly out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                out.add(ma + mb, ca * cb);
        return out;
    }
    friend LambdaPoly operator*(LambdaPoly a, const Rational& s) {
        if (s.is_zero())
            return {};
        for (auto& [m, c] : a.terms_)
            c *= s;
        return a;
    }

    friend bool operator==(const LambdaPoly&, const LambdaPoly&) = default;

private:
    void add(const Partition& m, const Rational& c) {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    std::map<Partition, Rational> terms_;
};

namespace detail {

inline std::vector<LambdaPoly> newton_table(int upto) {
    std::vector<LambdaPoly> psi(upto + 1);
    for (int i = 1; i <= upto; ++i) {
        // psi^i = sum_{r<i} (-1)^{r-1} lambda^r psi^{i-r} + (-1)^{i-1} i lambda^i
        LambdaPoly acc = LambdaPoly::monomial(Partition{i}, i % 2 == 1 ? i : -i);
        for (int r = 1; r < i; ++r)
            acc += LambdaPoly::generator(r) * psi[i - r] * Rational(r % 2 == 1 ? 1 : -1);
        psi[i] = std::move(acc);
    }
    return psi;
}

} // namespace detail

/// The power sum psi^i written in the elementary symmetric functions lambda^r.
inline LambdaPoly newton_psi(int i) {
    if (i < 1)
        throw parse_error("newton_psi: i must be at least 1");
    return detail::newton_table(i)[i];
}

/// psi^J = prod_t psi^{j_t}.
inline LambdaPoly psi_product(const Partition& J) {
    std::vector<LambdaPoly> psi = detail::newton_table(J.empty() ? 0 : J.parts().back());
    LambdaPoly acc = LambdaPoly::monomial(Partition{});
    for (int part : J.parts())
        acc = acc * psi[part];
    return acc;
}

/// Partitions of k in canonical order; row/column labels of every weight-k table.
/// Also the basis of the lambda-symbol coalgebra in weight k.
inline std::vector<Partition> basis(int k) { return partitions::enumerate(k, partitions::Kind::all); }

/// lambda^I (.) lambda^J: the symbol product is the sorted concatenation of part lists.
inline Partition dual_product(const std::vector<Partition>& symbols) {
    Partition acc;
    for (const Partition& s : symbols)
        acc = acc + s;
    return acc;
}

inline std::size_t index_in(const std::vector<Partition>& labels, const Partition& p) {
    auto it = std::lower_bound(labels.begin(), labels.end(), p);
    if (it == labels.end() || *it != p)
        throw invalid_basis("partition " + p.str() + " is not a label of this table");
    return static_cast<std::size_t>(it - labels.begin());
}

/// A square change-of-basis matrix over the partitions of k.
struct BasisChange {
    enum class Kind { theta, omega };
    Kind kind;
    int k = 0;
    std::vector<Partition> labels;
    /// theta: entries(I, J) = coefficient of lambda^I in psi^J.
    /// omega: entries(J, I) = coefficient of psi^J in lambda^I.
    linalg::Matrix entries;

    const Rational& at(const Partition& row, const Partition& col) const {
        return entries(index_in(labels, row), index_in(labels, col));
    }
};

inline BasisChange theta(int k, int max_degree = default_max_degree) {
    check_degree(k, max_degree);
    BasisChange t{BasisChange::Kind::theta, k, basis(k), {}};
    t.entries = linalg::Matrix(t.labels.size(), t.labels.size());
    std::vector<LambdaPoly> psi = detail::newton_table(k);
    for (std::size_t col = 0; col < t.labels.size(); ++col) {
        LambdaPoly acc = LambdaPoly::monomial(Partition{});
        for (int part : t.labels[col].parts())
            acc = acc * psi[part];
        for (const auto& [mono, c] : acc.terms())
            t.entries(index_in(t.labels, mono), col) = c;
    }
    return t;
}

/// Inverse of theta; checked exactly against theta.
inline BasisChange omega(int k, int max_degree = default_max_degree) {
    BasisChange t = theta(k, max_degree);
    BasisChange o{BasisChange::Kind::omega, k, t.labels, linalg::inverse(t.entries)};
    if (t.entries * o.entries != linalg::Matrix::identity(t.labels.size()))
        throw error("omega: theta * omega is not the identity");
    return o;
}

using PairKey = std::pair<Partition, Partition>;

/// Nonzero coefficients of a sum over pairs (I, J), e.g. lambda^L(xy) = sum c_IJ lambda^I(x) lambda^J(y).
struct StructureTable {
    enum class Kind { c, u };
    Kind kind;
    Partition L;
    std::map<PairKey, Integer> entries;

    Integer at(const Partition& I, const Partition& J) const {
        auto it = entries.find({I, J});
        return it == entries.end() ? Integer(0) : it->second;
    }
};

inline Integer require_integral(const Rational& q, const std::string& what) {
    if (!is_integral(q))
        throw non_integral(what + " has non-integral value " + to_string(q));
    return numerator(q);
}

/// Precomputed theta and omega for one weight.
struct WeightTables {
    BasisChange theta_k;
    BasisChange omega_k;

    explicit WeightTables(int k, int max_degree = default_max_degree)
        : theta_k(theta(k, max_degree)), omega_k(omega(k, max_degree)) {}

    const std::vector<Partition>& labels() const { return theta_k.labels; }
};

/// c_IJ^L = sum_K theta_I^K theta_J^K omega_K^L over partitions I, J, K of |L|.
inline StructureTable c_constants(const Partition& L, const WeightTables& w) {
    if (L.weight() != w.theta_k.k)
        throw dimension_mismatch("c_constants: tables have the wrong weight");
    const auto& labels = w.labels();
    const std::size_t m = labels.size();
    const std::size_t l = index_in(labels, L);
    const linalg::Matrix& th = w.theta_k.entries;
    const linalg::Matrix& om = w.omega_k.entries;
    StructureTable out{StructureTable::Kind::c, L, {}};
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Rational acc = 0;
            for (std::size_t k = 0; k < m; ++k)
                if (!th(i, k).is_zero() && !th(j, k).is_zero() && !om(k, l).is_zero())
                    acc += th(i, k) * th(j, k) * om(k, l);
            if (!acc.is_zero())
                out.entries.emplace(PairKey{labels[i], labels[j]},
                                    require_integral(acc, "c[" + labels[i].str() + "," + labels[j].str() + "]^" +
                                                              L.str()));
        }
    return out;
}

inline StructureTable c_constants(const Partition& L, int max_degree = default_max_degree) {
    check_degree(L.weight(), max_degree);
    return c_constants(L, WeightTables(L.weight(), max_degree));
}

/// m(lambda^n) as the table of coefficients of lambda^I (x) lambda^J.
inline StructureTable coproduct_lambda(int n, int max_degree = default_max_degree) {
    return c_constants(Partition{n}, max_degree);
}

/// psi-basis coefficients v_IJ^S of psi^S(xy) in psi^I(x) psi^J(y), obtained by transporting the
/// c tables through theta and omega. Adams operations are ring maps, so this must be a delta.
inline std::map<PairKey, Rational> transported_constants(const Partition& S, const WeightTables& w) {
    const auto& labels = w.labels();
    const std::size_t m = labels.size();
    const std::size_t s = index_in(labels, S);
    const linalg::Matrix& th = w.theta_k.entries;
    const linalg::Matrix& om = w.omega_k.entries;
    linalg::Matrix acc(m, m);
    for (std::size_t l = 0; l < m; ++l) {
        if (th(l, s).is_zero())
            continue;
        StructureTable c = c_constants(labels[l], w);
        for (const auto& [key, value] : c.entries) {
            std::size_t a = index_in(labels, key.first);
            std::size_t b = index_in(labels, key.second);
            Rational f = th(l, s) * Rational(value);
            for (std::size_t i = 0; i < m; ++i) {
                if (om(i, a).is_zero())
                    continue;
                for (std::size_t j = 0; j < m; ++j)
                    if (!om(j, b).is_zero())
                        acc(i, j) += f * om(i, a) * om(j, b);
            }
        }
    }
    std::map<PairKey, Rational> out;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (!acc(i, j).is_zero())
                out.emplace(PairKey{labels[i], labels[j]}, acc(i, j));
    return out;
}

/// lambda <-> gamma conversion over all nonempty partitions of weight <= k.
///
/// gamma_t = lambda_{t/(1-t)} gives gamma^n = sum_r C(n-1, r-1) lambda^r, hence
/// lambda^n = sum_r (-1)^{n-r} C(n-1, r-1) gamma^r. Both matrices are integral and
/// unitriangular in the canonical order.
struct GammaTables {
    int k = 0;
    std::vector<Partition> labels;
    linalg::Matrix to_lambda; ///< (A, I): coefficient of lambda^A in gamma^I
    linalg::Matrix to_gamma;  ///< (I, A): coefficient of gamma^I in lambda^A
};

namespace detail {

inline Integer binomial(int n, int r) {
    if (r < 0 || r > n)
        return 0;
    Integer acc = 1;
    for (int t = 1; t <= r; ++t)
        acc = acc * (n - r + t) / t;
    return acc;
}

/// Product over the parts of I of sum_r coeff(part, r) x^r, as a polynomial in the x^r.
template <class Coeff>
std::map<Partition, Integer> expand_product(const Partition& I, Coeff coeff) {
    std::map<Partition, Integer> acc{{Partition{}, 1}};
    for (int part : I.parts()) {
        std::map<Partition, Integer> next;
        for (const auto& [mono, c] : acc)
            for (int r = 1; r <= part; ++r) {
                Integer f = coeff(part, r);
                if (!f.is_zero())
                    next[mono + Partition{r}] += c * f;
            }
        acc = std::move(next);
    }
    std::erase_if(acc, [](const auto& kv) { return kv.second.is_zero(); });
    return acc;
}

} // namespace detail

inline GammaTables gamma_tables(int k, int max_degree = default_max_degree) {
    check_degree(k, max_degree);
    GammaTables g;
    g.k = k;
    for (int w = 1; w <= k; ++w)
        for (Partition& p : basis(w))
            g.labels.push_back(std::move(p));
    const std::size_t m = g.labels.size();
    g.to_lambda = linalg::Matrix(m, m);
    g.to_gamma = linalg::Matrix(m, m);
    for (std::size_t col = 0; col < m; ++col) {
        auto up = detail::expand_product(g.labels[col], [](int n, int r) { return detail::binomial(n - 1, r - 1); });
        for (const auto& [mono, c] : up)
            g.to_lambda(index_in(g.labels, mono), col) = Rational(c);
        auto down = detail::expand_product(g.labels[col], [](int n, int r) {
            Integer b = detail::binomial(n - 1, r - 1);
            return (n - r) % 2 ? Integer(-b) : b;
        });
        for (const auto& [mono, c] : down)
            g.to_gamma(index_in(g.labels, mono), col) = Rational(c);
    }
    if (g.to_lambda * g.to_gamma != linalg::Matrix::identity(m))
        throw error("gamma_tables: conversions are not mutually inverse");
    return g;
}

/// Coefficients u_IJ^L of gamma^I(x) gamma^J(y) in gamma^L(xy); I, J range over weights <= |L|.
inline StructureTable u_constants(const Partition& L, int max_degree = default_max_degree) {
    const int k = L.weight();
    check_degree(k, max_degree);
    GammaTables g = gamma_tables(k, max_degree);
    const std::size_t m = g.labels.size();
    const std::size_t l = index_in(g.labels, L);
    std::vector<WeightTables> weights;
    for (int w = 1; w <= k; ++w)
        weights.emplace_back(w, max_degree);
    linalg::Matrix acc(m, m);
    for (std::size_t top = 0; top < m; ++top) {
        const Rational& f = g.to_lambda(top, l);
        if (f.is_zero())
            continue;
        StructureTable c = c_constants(g.labels[top], weights[g.labels[top].weight() - 1]);
        for (const auto& [key, value] : c.entries) {
            std::size_t a = index_in(g.labels, key.first);
            std::size_t b = index_in(g.labels, key.second);
            Rational fv = f * Rational(value);
            for (std::size_t i = 0; i < m; ++i) {
                if (g.to_gamma(i, a).is_zero())
                    continue;
                for (std::size_t j = 0; j < m; ++j)
                    if (!g.to_gamma(j, b).is_zero())
                        acc(i, j) += fv * g.to_gamma(i, a) * g.to_gamma(j, b);
            }
        }
    }
    StructureTable out{StructureTable::Kind::u, L, {}};
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (!acc(i, j).is_zero())
                out.entries.emplace(PairKey{g.labels[i], g.labels[j]},
                                    require_integral(acc(i, j), "u[" + g.labels[i].str() + "," +
                                                                    g.labels[j].str() + "]^" + L.str()));
    return out;
}

/// gamma_I acting on gamma_S: coefficients u_IJ^S over the distinct-part partitions J of n,
/// the squares of odd-degree classes being zero. Parity of the number of parts of S is the degree.
struct ModuleAction {
    Partition I, S;
    int degree = 0;
    std::vector<std::pair<Partition, Integer>> coefficients;
};

inline ModuleAction module_action(const Partition& I, const Partition& S, int max_degree = default_max_degree) {
    if (!S.is_distinct())
        throw invalid_basis("module_action: S = " + S.str() + " does not have distinct parts");
    if (I.weight() != S.weight())
        throw dimension_mismatch("module_action: I and S must have the same weight");
    StructureTable u = u_constants(S, max_degree);
    ModuleAction out{I, S, static_cast<int>(S.length() % 2), {}};
    for (Partition& J : partitions::enumerate(S.weight(), partitions::Kind::distinct))
        out.coefficients.emplace_back(J, u.at(I, J));
    return out;
}

/// Distinct-part symbols of weight n split by degree: {even number of parts, odd number of parts}.
inline std::pair<std::size_t, std::size_t> module_basis_sizes(int n) {
    std::pair<std::size_t, std::size_t> out{0, 0};
    for (const Partition& S : partitions::enumerate(n, partitions::Kind::distinct))
        ++(S.length() % 2 == 0 ? out.first : out.second);
    return out;
}

} // namespace equik::lambda
