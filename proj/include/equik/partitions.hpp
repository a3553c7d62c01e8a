#pragma once

#include "equik/arith.hpp"
#include "equik/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <compare>
#include <numbers>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace equik {

/// An integer partition, parts stored weakly increasing.
///
/// Partitions index conjugacy classes of symmetric groups (cycle types),
/// monomials in lambda/psi/gamma symbols, and every counting function here.
/// The canonical total order is by weight, then number of parts, then
/// lexicographic on the parts; it is the row/column order of every table.
class Partition {
public:
    Partition() = default;

    /// Parts may be given in any order; they are sorted. Non-positive parts are rejected.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 1)
                throw parse_error("partition parts must be positive, got " + std::to_string(p));
        std::sort(parts_.begin(), parts_.end());
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Accepts "2,3", "2+3", "3+2" or "" (the empty partition).
    static Partition parse(std::string_view text) {
        std::vector<int> parts;
        std::size_t pos = 0;
        while (pos < text.size()) {
            while (pos < text.size() && text[pos] == ' ')
                ++pos;
            if (pos == text.size())
                break;
            std::size_t end = text.find_first_of(",+", pos);
            if (end == std::string_view::npos)
                end = text.size();
            std::string_view tok = text.substr(pos, end - pos);
            while (!tok.empty() && tok.back() == ' ')
                tok.remove_suffix(1);
            int value = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
                throw parse_error("malformed partition '" + std::string(text) + "'");
            parts.push_back(value);
            pos = end == text.size() ? end : end + 1;
            if (end != text.size() && pos == text.size())
                throw parse_error("malformed partition '" + std::string(text) + "'");
        }
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    bool is_distinct() const { return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end(); }
    bool all_odd() const {
        return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 1; });
    }

    /// Multiset union; the product of symbols lambda^I (.) lambda^J.
    Partition operator+(const Partition& o) const {
        std::vector<int> merged;
        merged.reserve(parts_.size() + o.parts_.size());
        std::merge(parts_.begin(), parts_.end(), o.parts_.begin(), o.parts_.end(), std::back_inserter(merged));
        Partition out;
        out.parts_ = std::move(merged);
        return out;
    }

    /// "1+2+4"; the empty partition is "".
    std::string str() const {
        std::string out;
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (k)
                out += '+';
            out += std::to_string(parts_[k]);
        }
        return out;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& x, const Partition& y) {
        if (auto c = x.weight() <=> y.weight(); c != 0)
            return c;
        if (auto c = x.parts_.size() <=> y.parts_.size(); c != 0)
            return c;
        return x.parts_ <=> y.parts_;
    }

private:
    std::vector<int> parts_;
};

namespace partitions {

enum class Kind { all, distinct, odd_parts };

namespace detail {

inline void enumerate_into(int remaining, int min_part, Kind kind, std::vector<int>& stem,
                           std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(stem);
        return;
    }
    for (int part = min_part; part <= remaining; ++part) {
        if (kind == Kind::odd_parts && part % 2 == 0)
            continue;
        stem.push_back(part);
        enumerate_into(remaining - part, kind == Kind::distinct ? part + 1 : part, kind, stem, out);
        stem.pop_back();
    }
}

} // namespace detail

/// All partitions of n of the requested kind in canonical order. n = 0 gives the empty partition.
inline std::vector<Partition> enumerate(int n, Kind kind = Kind::all) {
    if (n < 0)
        throw parse_error("enumerate: n must be non-negative");
    std::vector<Partition> out;
    std::vector<int> stem;
    detail::enumerate_into(n, 1, kind, stem, out);
    std::sort(out.begin(), out.end());
    return out;
}

/// P: all partitions; p / i: distinct parts with an even / odd number of parts; j: all parts odd.
struct PartitionStats {
    int n = 0;
    Integer P, p, i, j;

    friend bool operator==(const PartitionStats&, const PartitionStats&) = default;
};

/// Count tables for 0..N via dynamic programming over allowed part sizes.
struct CountTables {
    std::vector<Integer> all, distinct_even, distinct_odd, odd_parts;
};

inline CountTables count_tables(int N) {
    CountTables t;
    t.all.assign(N + 1, 0);
    t.odd_parts.assign(N + 1, 0);
    t.distinct_even.assign(N + 1, 0);
    t.distinct_odd.assign(N + 1, 0);
    t.all[0] = t.odd_parts[0] = t.distinct_even[0] = 1;
    for (int m = 1; m <= N; ++m) {
        for (int s = m; s <= N; ++s) {
            t.all[s] += t.all[s - m];
            if (m % 2 == 1)
                t.odd_parts[s] += t.odd_parts[s - m];
        }
        // Each part used at most once: sweep downwards; using m flips the parity of the part count.
        for (int s = N; s >= m; --s) {
            Integer even = t.distinct_even[s] + t.distinct_odd[s - m];
            Integer odd = t.distinct_odd[s] + t.distinct_even[s - m];
            t.distinct_even[s] = std::move(even);
            t.distinct_odd[s] = std::move(odd);
        }
    }
    return t;
}

inline PartitionStats stats(int n) {
    if (n < 1)
        throw parse_error("stats: n must be at least 1");
    CountTables t = count_tables(n);
    return {n, t.all[n], t.distinct_even[n], t.distinct_odd[n], t.odd_parts[n]};
}

/// Same counts by explicit enumeration; exponential, for cross-checking small n.
inline PartitionStats stats_by_enumeration(int n) {
    PartitionStats s{n, 0, 0, 0, 0};
    for (const Partition& part : enumerate(n, Kind::all)) {
        ++s.P;
        if (part.all_odd())
            ++s.j;
        if (part.is_distinct())
            ++(part.length() % 2 == 0 ? s.p : s.i);
    }
    return s;
}

/// Coefficient of q^n in prod_{m>=1} (1 - q^m): (-1)^m when n = m(3m-1)/2 for a nonzero integer m, else 0.
inline int pentagonal_coefficient(int n) {
    for (long long m = 1;; ++m) {
        long long lower = m * (3 * m - 1) / 2;
        if (lower > n)
            return 0;
        if (lower == n || m * (3 * m + 1) / 2 == n)
            return m % 2 == 0 ? 1 : -1;
    }
}

/// Dense integer power series truncated after degree `degree`.
using Series = std::vector<Integer>;

inline Series truncated_multiply(const Series& a, const Series& b, int degree) {
    Series out(degree + 1, 0);
    for (std::size_t x = 0; x < a.size() && static_cast<int>(x) <= degree; ++x) {
        if (a[x].is_zero())
            continue;
        for (std::size_t y = 0; y < b.size() && static_cast<int>(x + y) <= degree; ++y)
            out[x + y] += a[x] * b[y];
    }
    return out;
}

/// prod_{m=1}^{N} (1 + x^m)(1 - x^{2m-1}) truncated at degree N.
inline Series euler_product_series(int N) {
    Series acc(N + 1, 0);
    acc[0] = 1;
    for (int m = 1; m <= N; ++m) {
        Series plus(m + 1, 0);
        plus[0] = 1;
        plus[m] = 1;
        acc = truncated_multiply(acc, plus, N);
        if (2 * m - 1 <= N) {
            Series minus(2 * m, 0);
            minus[0] = 1;
            minus[2 * m - 1] = -1;
            acc = truncated_multiply(acc, minus, N);
        }
    }
    return acc;
}

struct IdentityReport {
    int upto = 0;
    int checked = 0;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

/// Checks j = p + i, p - i = pentagonal coefficient, the product series identity,
/// and recurrence-vs-enumeration counts for n <= min(N, enumeration_cutoff).
inline IdentityReport verify_identities(int N, int enumeration_cutoff = 30) {
    if (N < 1)
        throw parse_error("verify_identities: N must be at least 1");
    IdentityReport report;
    report.upto = N;
    CountTables t = count_tables(N);
    for (int n = 1; n <= N; ++n) {
        const Integer& p = t.distinct_even[n];
        const Integer& i = t.distinct_odd[n];
        ++report.checked;
        if (t.odd_parts[n] != p + i)
            report.failures.push_back("n=" + std::to_string(n) + ": j != p + i");
        ++report.checked;
        if (p - i != pentagonal_coefficient(n))
            report.failures.push_back("n=" + std::to_string(n) + ": p - i != pentagonal coefficient");
        if (n <= enumeration_cutoff) {
            ++report.checked;
            PartitionStats dp{n, t.all[n], p, i, t.odd_parts[n]};
            if (stats_by_enumeration(n) != dp)
                report.failures.push_back("n=" + std::to_string(n) + ": recurrence disagrees with enumeration");
        }
    }
    Series product = euler_product_series(N);
    for (int d = 0; d <= N; ++d) {
        ++report.checked;
        if (product[d] != (d == 0 ? 1 : 0))
            report.failures.push_back("product series coefficient of x^" + std::to_string(d) + " is " +
                                      product[d].str());
    }
    return report;
}

namespace detail {

inline double log_of(const Integer& z) {
    std::size_t bits = boost::multiprecision::msb(z);
    if (bits < 900)
        return std::log(z.convert_to<double>());
    std::size_t shift = bits - 64;
    Integer top = z >> shift;
    return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::numbers::ln2;
}

} // namespace detail

/// p_n divided by its leading-order asymptotic e^{pi sqrt(n/3)} / (8 * 3^{1/4} * n^{3/4}).
inline double asymptotic_ratio(int n) {
    if (n < 1)
        throw parse_error("asymptotic_ratio: n must be at least 1");
    Integer p = count_tables(n).distinct_even[n];
    if (p.is_zero())
        return 0.0;
    double nd = n;
    double log_estimate = std::numbers::pi * std::sqrt(nd / 3.0) - std::log(8.0) - 0.25 * std::log(3.0) -
                          0.75 * std::log(nd);
    return std::exp(detail::log_of(p) - log_estimate);
}

} // namespace partitions
} // namespace equik
