#pragma once

#include "equik/battery.hpp"
#include "equik/clifford.hpp"
#include "equik/groups.hpp"
#include "equik/ktheory.hpp"
#include "equik/lambdaring.hpp"
#include "equik/partitions.hpp"
#include "equik/schur.hpp"
#include "equik/verify.hpp"

#include <json.hpp>

#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

namespace equik::cli {

using json = nlohmann::ordered_json;

enum class Format { json, pretty, csv };

struct Guards {
    std::size_t max_group = default_group_cap;
    std::size_t max_dim = clifford::default_max_dim;
    int max_degree = 8;

    clifford::CoverGuard cover() const { return {max_group, max_dim}; }
};

/// Result of one command: the document and the process exit code.
struct Outcome {
    json doc;
    int exit_code = 0;
};

// ---- serialization ----

/// JSON number when it fits in 64 bits, decimal string otherwise.
inline json integer(const Integer& z) {
    if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
        return z.convert_to<std::int64_t>();
    return z.str();
}

inline json rational(const Rational& q) {
    if (is_integral(q))
        return integer(numerator(q));
    return to_string(q);
}

/// Group-file element format, 1-based.
inline json element(const SignedPerm& g) {
    json perm = json::array();
    for (int p : g.perm())
        perm.push_back(p + 1);
    return {{"perm", perm}, {"signs", g.signs()}};
}

inline json partition_list(const std::vector<Partition>& list) {
    json out = json::array();
    for (const Partition& p : list)
        out.push_back(p.str());
    return out;
}

inline json structure_table(const lambda::StructureTable& t) {
    json rows = json::array();
    for (const auto& [key, v] : t.entries)
        rows.push_back({{"I", key.first.str()}, {"J", key.second.str()}, {"value", integer(v)}});
    return {{"L", t.L.str()}, {"entries", rows}};
}

inline json matrix_rows(const std::vector<Partition>& row_labels, const std::vector<Partition>& col_labels,
                        const linalg::Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::object();
        row["row"] = row_labels[r].str();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row[col_labels[c].str()] = rational(m(r, c));
        rows.push_back(row);
    }
    return rows;
}

// ---- input ----

inline SignedPerm parse_element(const json& e, std::size_t n) {
    if (!e.is_object() || !e.contains("perm"))
        throw parse_error("group file: each generator needs a \"perm\" array");
    std::vector<int> perm = e.at("perm").get<std::vector<int>>();
    std::vector<int> signs = e.contains("signs") ? e.at("signs").get<std::vector<int>>() : std::vector<int>(n, 1);
    if (perm.size() != n || signs.size() != n)
        throw parse_error("group file: generator length differs from n = " + std::to_string(n));
    return SignedPerm::from_one_based(perm, signs);
}

inline Group parse_group(const json& doc, std::size_t cap) {
    try {
        if (!doc.is_object() || !doc.contains("n") || !doc.contains("generators"))
            throw parse_error("group file: expected an object with \"n\" and \"generators\"");
        const long long n = doc.at("n").get<long long>();
        if (n < 1 || n > static_cast<long long>(clifford::max_bitmask_dim))
            throw parse_error("group file: n must be between 1 and 63");
        std::vector<SignedPerm> gens;
        for (const json& e : doc.at("generators"))
            gens.push_back(parse_element(e, static_cast<std::size_t>(n)));
        return Group::from_generators(static_cast<std::size_t>(n), std::move(gens), cap);
    } catch (const json::exception& e) {
        throw parse_error(std::string("group file: ") + e.what());
    }
}

inline Group load_group_file(const std::string& path, std::size_t cap) {
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open group file " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw parse_error("group file " + path + ": " + e.what());
    }
    return parse_group(doc, cap);
}

struct GroupSource {
    std::string file;
    int sym = 0;
    bool extend = false;
};

inline Group resolve(const GroupSource& src, const Guards& guards) {
    const bool has_file = !src.file.empty();
    const bool has_sym = src.sym != 0;
    if (has_file == has_sym)
        throw parse_error("give exactly one of --group FILE or --sym N");
    Group G = has_file ? load_group_file(src.file, guards.max_group) : [&] {
        if (src.sym < 1 || src.sym > 9)
            throw parse_error("--sym must be between 1 and 9");
        return Group::symmetric(static_cast<std::size_t>(src.sym));
    }();
    if (G.order() > guards.max_group)
        throw size_limit("group order " + std::to_string(G.order()) + " exceeds --max-group");
    return src.extend ? extend_with_reflection(G, guards.max_group) : G;
}

// ---- commands ----

inline Outcome partitions_command(int n, const std::string& kind, bool stats, int verify_upto, bool ratio) {
    if (n < 0)
        throw parse_error("--n must be nonnegative");
    if (verify_upto > 0) {
        partitions::IdentityReport r = partitions::verify_identities(verify_upto);
        json doc{{"upto", r.upto}, {"checked", r.checked}, {"passed", r.passed()}, {"failures", r.failures}};
        return {doc, r.passed() ? 0 : 1};
    }
    if (stats) {
        partitions::PartitionStats s = partitions::stats(n);
        json doc{{"n", n}, {"P", integer(s.P)}, {"p", integer(s.p)}, {"i", integer(s.i)}, {"j", integer(s.j)}};
        if (ratio)
            doc["ratio"] = partitions::asymptotic_ratio(n);
        return {doc};
    }
    partitions::Kind k = kind == "distinct" ? partitions::Kind::distinct
                         : kind == "odd"    ? partitions::Kind::odd_parts
                         : kind == "all"    ? partitions::Kind::all
                                            : throw parse_error("--kind must be all, distinct or odd");
    if (n > 80)
        throw size_limit("listing partitions is limited to n <= 80; use --stats");
    std::vector<Partition> list = partitions::enumerate(n, k);
    return {{{"n", n}, {"kind", kind}, {"count", list.size()}, {"partitions", partition_list(list)}}};
}

inline Outcome classes_command(const Group& G) {
    json classes = json::array();
    std::size_t index = 0;
    for (const ConjClass& c : conjugacy_classes(G)) {
        json row{{"index", index++}, {"rep", element(c.rep)}, {"size", c.size()}, {"det", c.rep.det()}};
        if (c.cycle_type)
            row["cycle_type"] = c.cycle_type->str();
        classes.push_back(row);
    }
    return {{{"n", G.dim()}, {"order", G.order()}, {"class_count", classes.size()}, {"classes", classes}}};
}

inline Outcome ranks_command(const Group& G, const std::string& kind) {
    ktheory::Ranks r;
    if (kind == "thom")
        r = ktheory::thom_ranks(G);
    else if (kind == "projective")
        r = ktheory::projective_ranks(G);
    else
        throw parse_error("ranks: expected thom or projective");
    return {{{"K0", r.K0}, {"K1", r.K1}}};
}

inline Outcome report_command(const Group& G, const Guards& guards) {
    ktheory::RankReport r = ktheory::count_report(G, guards.max_group);
    json doc{{"n", G.dim()},
             {"order", G.order()},
             {"C", r.C},
             {"K0_thom", r.K0_thom},
             {"K1_thom", r.K1_thom},
             {"K0_proj", r.K0_proj},
             {"K1_proj", r.K1_proj},
             {"A", r.A},
             {"O", r.O},
             {"P", r.P},
             {"N", r.N},
             {"R_V", r.R_V},
             {"R_V1", r.R_V1},
             {"projective_balance", r.projective_balance()},
             {"euler_characteristic", r.euler_characteristic()},
             {"has_fixed_point_free_class", r.has_fixed_point_free_class}};
    if (!r.has_fixed_point_free_class)
        doc["positive_class_balance"] = r.positive_class_balance();
    const bool ok = r.projective_balance() && r.euler_characteristic();
    if (!ok)
        doc["violated"] = "rank identities R(V+1) - 2C = O - A or R(V+1) - R(V) = K0 - K1";
    return {doc, ok ? 0 : 1};
}

inline Outcome schur_command(const Group& G, bool oracle, bool ranks, const Guards& guards) {
    schur::DecompositionReport r = schur::decomposition_report(G, oracle, guards.cover());
    json classes = json::array();
    std::size_t index = 0;
    for (const auto& c : r.classes) {
        json row{{"index", index++}, {"rep", element(c.rep)}, {"size", c.size}, {"det", c.det},
                 {"decomposed_criterion", c.decomposed_criterion}};
        if (c.decomposed_oracle)
            row["decomposed_oracle"] = *c.decomposed_oracle;
        classes.push_back(row);
    }
    json doc{{"n", G.dim()},
             {"order", G.order()},
             {"class_count", r.classes.size()},
             {"decomposed_count", r.decomposed_count()},
             {"classes", classes}};
    int code = 0;
    if (oracle) {
        doc["criterion_agrees_with_oracle"] = r.all_agree();
        doc["cover_class_count"] = *r.cover_class_count;
        doc["cover_identity_holds"] = *r.cover_identity_holds();
        if (!r.all_agree() || !*r.cover_identity_holds())
            code = 1;
    }
    if (ranks) {
        schur::CrossedProductRanks cp = schur::crossed_product_ranks(G, guards.max_group);
        doc["R_V"] = cp.R_V;
        doc["R_V1"] = cp.R_V1;
    }
    return {doc, code};
}

inline Outcome commutator_command(const Group& G, long long g, long long h, const Guards& guards) {
    if (G.dim() > guards.max_dim)
        throw size_limit("Clifford computations limited to dimension " + std::to_string(guards.max_dim));
    auto at = [&](long long k, const char* flag) {
        if (k < 0 || static_cast<std::size_t>(k) >= G.order())
            throw parse_error(std::string(flag) + " must be an element index in 0.." + std::to_string(G.order() - 1));
        return G.element(static_cast<std::size_t>(k));
    };
    const SignedPerm a = at(g, "--g"), b = at(h, "--h");
    try {
        return {{{"g", element(a)}, {"h", element(b)}, {"sign", clifford::commutator_sign(a, b)}}};
    } catch (const not_commuting&) {
        throw parse_error("--g and --h do not commute");
    }
}

inline Outcome psi_command(int i, const Guards& guards) {
    lambda::check_degree(i, guards.max_degree);
    json terms = json::array();
    const lambda::LambdaPoly psi = lambda::newton_psi(i);
    for (const auto& [mono, c] : psi.terms())
        terms.push_back({{"lambda", mono.str()}, {"coefficient", rational(c)}});
    return {{{"i", i}, {"terms", terms}}};
}

inline Outcome basis_change_command(int k, bool inverse, const Guards& guards) {
    lambda::BasisChange t = inverse ? lambda::omega(k, guards.max_degree) : lambda::theta(k, guards.max_degree);
    return {{{"k", k},
             {"kind", inverse ? "omega" : "theta"},
             {"labels", partition_list(t.labels)},
             {"rows", matrix_rows(t.labels, t.labels, t.entries)}}};
}

inline Outcome c_command(const Partition& L, const Guards& guards) {
    if (L.empty())
        throw parse_error("--L must be a nonempty partition");
    return {structure_table(lambda::c_constants(L, guards.max_degree))};
}

inline Outcome u_command(const Partition& L, const Guards& guards) {
    if (L.empty())
        throw parse_error("--L must be a nonempty partition");
    return {structure_table(lambda::u_constants(L, guards.max_degree))};
}

inline Outcome module_command(int n, const Partition& I, const Partition& S, const Guards& guards) {
    if (I.weight() != n || S.weight() != n)
        throw parse_error("module: --I and --S must both be partitions of --n");
    lambda::ModuleAction a = lambda::module_action(I, S, guards.max_degree);
    json coeffs = json::array();
    for (const auto& [J, v] : a.coefficients)
        coeffs.push_back({{"J", J.str()}, {"value", integer(v)}});
    return {{{"n", n}, {"I", I.str()}, {"S", S.str()}, {"degree", a.degree}, {"coefficients", coeffs}}};
}

inline Outcome verify_command(int sym_upto, const Guards& guards) {
    verify::Options opt;
    opt.sym_upto = sym_upto;
    opt.guard = guards.cover();
    verify::Report r = verify::run(opt);
    json checks = json::array();
    for (const verify::Check& c : r.checks)
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return {{{"passed", r.passed()}, {"sym_upto", sym_upto}, {"checks", checks}}, r.passed() ? 0 : 1};
}

// ---- output ----

namespace detail {

inline std::string csv_cell(const json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s)
        out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return out + "\"";
}

inline std::string csv_table(const json& rows) {
    std::vector<std::string> header;
    for (const auto& row : rows)
        for (const auto& [k, v] : row.items())
            if (std::find(header.begin(), header.end(), k) == header.end())
                header.push_back(k);
    std::ostringstream out;
    for (std::size_t c = 0; c < header.size(); ++c)
        out << (c ? "," : "") << csv_cell(header[c]);
    out << "\n";
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < header.size(); ++c)
            out << (c ? "," : "") << (row.contains(header[c]) ? csv_cell(row.at(header[c])) : "");
        out << "\n";
    }
    return out.str();
}

} // namespace detail

/// CSV renders the first array of objects in the document as a table, or key,value pairs otherwise.
inline std::string render(const json& doc, Format format) {
    switch (format) {
    case Format::json:
        return doc.dump() + "\n";
    case Format::pretty:
        return doc.dump(2) + "\n";
    case Format::csv:
        for (const auto& [k, v] : doc.items())
            if (v.is_array() && !v.empty() && v.front().is_object())
                return detail::csv_table(v);
        std::ostringstream out;
        out << "key,value\n";
        for (const auto& [k, v] : doc.items())
            out << detail::csv_cell(k) << "," << detail::csv_cell(v) << "\n";
        return out.str();
    }
    return {};
}

} // namespace equik::cli
