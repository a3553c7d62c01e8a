#include "equik/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace equik;

namespace {

void add_group_source(CLI::App* cmd, cli::GroupSource& src, bool allow_extend = true) {
    cmd->add_option("--group", src.file, "Group definition file (JSON)");
    cmd->add_option("--sym", src.sym, "Symmetric group S_N acting on R^N")->check(CLI::Range(1, 9));
    if (allow_extend)
        cmd->add_flag("--extend", src.extend, "Use Z/2 x G inside O(n+1)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equivariant K-theory ranks, Schur-cover decomposition and lambda-ring constants"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_help_flag("--help", "Print this help message and exit");

    cli::Guards guards;
    cli::Format format = cli::Format::json;
    std::map<std::string, cli::Format> formats{
        {"json", cli::Format::json}, {"pretty", cli::Format::pretty}, {"csv", cli::Format::csv}};
    app.add_option("--format", format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->capture_default_str();
    app.add_option("--max-group", guards.max_group, "Largest group order to enumerate")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--max-dim", guards.max_dim, "Largest dimension for Clifford computations")
        ->check(CLI::Range(1, 63))
        ->capture_default_str();
    app.add_option("--max-degree", guards.max_degree, "Largest lambda-ring degree")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    std::function<cli::Outcome()> action;

    // partitions
    int part_n = 0, verify_upto = 0;
    std::string part_kind = "all";
    bool part_stats = false, part_ratio = false;
    auto* partitions_cmd = app.add_subcommand("partitions", "Enumerate or count partitions");
    partitions_cmd->add_option("--n", part_n, "Weight")->required();
    partitions_cmd->add_option("--kind", part_kind, "all, distinct or odd")
        ->check(CLI::IsMember({"all", "distinct", "odd"}))
        ->capture_default_str();
    partitions_cmd->add_flag("--stats", part_stats, "Emit P, p, i, j instead of the list");
    partitions_cmd->add_flag("--ratio", part_ratio, "With --stats, add the asymptotic ratio");
    partitions_cmd->add_option("--verify-upto", verify_upto, "Check the partition identities up to N")
        ->check(CLI::PositiveNumber);
    partitions_cmd->callback(
        [&] { action = [&] { return cli::partitions_command(part_n, part_kind, part_stats, verify_upto, part_ratio); }; });

    // classes
    cli::GroupSource classes_src;
    auto* classes_cmd = app.add_subcommand("classes", "Conjugacy classes in canonical order");
    add_group_source(classes_cmd, classes_src);
    classes_cmd->callback([&] { action = [&] { return cli::classes_command(cli::resolve(classes_src, guards)); }; });

    // ranks
    cli::GroupSource ranks_src;
    std::string ranks_kind;
    auto* ranks_cmd = app.add_subcommand("ranks", "Ranks of K_G^0, K_G^1");
    ranks_cmd->add_option("kind", ranks_kind, "thom or projective")
        ->required()
        ->check(CLI::IsMember({"thom", "projective"}));
    add_group_source(ranks_cmd, ranks_src);
    ranks_cmd->callback(
        [&] { action = [&] { return cli::ranks_command(cli::resolve(ranks_src, guards), ranks_kind); }; });

    // report
    cli::GroupSource report_src;
    auto* report_cmd = app.add_subcommand("report", "All rank counts and identities for one group");
    add_group_source(report_cmd, report_src);
    report_cmd->callback(
        [&] { action = [&] { return cli::report_command(cli::resolve(report_src, guards), guards); }; });

    // schur
    cli::GroupSource schur_src;
    bool schur_oracle = false, schur_ranks = false;
    auto* schur_cmd = app.add_subcommand("schur", "Decomposed classes in the Schur cover");
    add_group_source(schur_cmd, schur_src);
    schur_cmd->add_flag("--oracle", schur_oracle, "Also evaluate Pin commutators and count cover classes");
    schur_cmd->add_flag("--ranks", schur_ranks, "Also report crossed-product ranks");
    schur_cmd->callback([&] {
        action = [&] {
            return cli::schur_command(cli::resolve(schur_src, guards), schur_oracle, schur_ranks, guards);
        };
    });

    // commutator
    cli::GroupSource comm_src;
    long long comm_g = -1, comm_h = -1;
    auto* comm_cmd = app.add_subcommand("commutator", "Commutator sign of Pin lifts of two commuting elements");
    add_group_source(comm_cmd, comm_src);
    comm_cmd->add_option("--g", comm_g, "Element index (0-based, canonical order)")->required();
    comm_cmd->add_option("--h", comm_h, "Element index (0-based, canonical order)")->required();
    comm_cmd->callback([&] {
        action = [&] { return cli::commutator_command(cli::resolve(comm_src, guards), comm_g, comm_h, guards); };
    });

    // lambda
    auto* lambda_cmd = app.add_subcommand("lambda", "Lambda-ring tables");
    lambda_cmd->require_subcommand(1);
    lambda_cmd->fallthrough();
    int psi_i = 0, basis_k = 0, module_n = 0;
    std::string table_L, module_I, module_S;
    auto* psi_cmd = lambda_cmd->add_subcommand("psi", "Newton polynomial psi^i in the lambda^r");
    psi_cmd->add_option("--i", psi_i, "Degree")->required();
    psi_cmd->callback([&] { action = [&] { return cli::psi_command(psi_i, guards); }; });
    auto* theta_cmd = lambda_cmd->add_subcommand("theta", "lambda coefficients of the psi products");
    theta_cmd->add_option("--k", basis_k, "Weight")->required();
    theta_cmd->callback([&] { action = [&] { return cli::basis_change_command(basis_k, false, guards); }; });
    auto* omega_cmd = lambda_cmd->add_subcommand("omega", "psi coefficients of the lambda products");
    omega_cmd->add_option("--k", basis_k, "Weight")->required();
    omega_cmd->callback([&] { action = [&] { return cli::basis_change_command(basis_k, true, guards); }; });
    auto* c_cmd = lambda_cmd->add_subcommand("c", "c_IJ^L in lambda^L(xy)");
    c_cmd->add_option("--L", table_L, "Partition, e.g. \"2,3\"")->required();
    c_cmd->callback([&] { action = [&] { return cli::c_command(Partition::parse(table_L), guards); }; });
    auto* u_cmd = lambda_cmd->add_subcommand("u", "u_IJ^L in gamma^L(xy)");
    u_cmd->add_option("--L", table_L, "Partition, e.g. \"2,3\"")->required();
    u_cmd->callback([&] { action = [&] { return cli::u_command(Partition::parse(table_L), guards); }; });
    auto* module_cmd = lambda_cmd->add_subcommand("module", "gamma_I acting on gamma_S");
    module_cmd->add_option("--n", module_n, "Weight")->required();
    module_cmd->add_option("--I", module_I, "Partition of n")->required();
    module_cmd->add_option("--S", module_S, "Partition of n into distinct parts")->required();
    module_cmd->callback([&] {
        action = [&] {
            return cli::module_command(module_n, Partition::parse(module_I), Partition::parse(module_S), guards);
        };
    });

    // verify
    bool slow = false;
    int sym_upto = 0;
    auto* verify_cmd = app.add_subcommand("verify", "Run the whole consistency battery");
    verify_cmd->add_flag("--slow", slow, "Include S_7");
    verify_cmd->add_option("--sym-upto", sym_upto, "Largest n for the S_n checks")->check(CLI::Range(1, 8));
    verify_cmd->callback([&] {
        action = [&] { return cli::verify_command(sym_upto ? sym_upto : (slow ? 7 : 6), guards); };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        cli::Outcome out = action();
        std::cout << cli::render(out.doc, format);
        return out.exit_code;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const invalid_basis& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const dimension_mismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const size_limit& e) {
        std::cerr << "error: size limit: " << e.what() << "\n";
        return 2;
    } catch (const non_integral& e) {
        std::cerr << "verification failed: integrality of the universal structure constants: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 1;
    }
}
