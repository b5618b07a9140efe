// dualorder: compute dual generalized inverses, check dual matrix orders,
// generate labeled test pairs, and run the theorem property suites.
//
// Exit codes: 0 holds/success, 1 does not hold (or suite failures),
// 2 usage/parse error, 3 prerequisite failure (DMPGI absent), 4 numerical.

#include "dualorder/dual_ginv.hpp"
#include "dualorder/io.hpp"
#include "dualorder/orders.hpp"
#include "dualorder/real_linalg.hpp"
#include "dualorder/synthesis.hpp"
#include "dualorder/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

namespace {

constexpr const char* kVersion = "dualorder 0.1.0";

constexpr int kExitHolds = 0;
constexpr int kExitNotHolds = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrerequisite = 3;
constexpr int kExitNumerical = 4;

using namespace dualorder;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("DUALORDER_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 0;
}

void emit(const DualMatrix& x, const std::string& out_path) {
    if (out_path.empty())
        std::cout << format_matrix(x);
    else
        save_matrix(out_path, x);
}

int cmd_compute(const std::string& kind, const std::string& in_path,
                const std::string& out_path, const Tolerances& tol) {
    const DualMatrix x = load_matrix(in_path);
    if (kind == "pinv") {
        emit(DualMatrix(pinv(x.real(), tol)), out_path);
        return kExitHolds;
    }
    if (kind == "mpdgi") {
        emit(*mpdgi(x, tol).value, out_path);
        return kExitHolds;
    }
    const GinvResult g = dmpgi(x, tol);
    if (!g.exists) {
        std::cerr << "dmpgi does not exist: projector residual "
                  << g.projector_residual << " exceeds tolerance\n";
        return kExitPrerequisite;
    }
    emit(*g.value, out_path);
    return kExitHolds;
}

void print_report(const OrderReport& rep) {
    const char* route = rep.route == Route::definition        ? "definition"
                        : rep.route == Route::characterization ? "characterization"
                                                                : "canonical_form";
    std::cout << "holds: " << (rep.holds ? "true" : "false") << "\n"
              << "route: " << route << "\n";
    for (const auto& [name, r] : rep.condition_residuals)
        std::cout << "residual " << name << ": " << r << "\n";
    for (const auto& p : rep.prerequisite_failures)
        std::cout << "prerequisite: " << p << "\n";
    for (const auto& d : rep.diagnostics) std::cout << "diagnostic: " << d << "\n";
}

int cmd_check(const std::string& order, const std::string& path_a,
              const std::string& path_b, bool report, const Tolerances& tol) {
    const DualMatrix a = load_matrix(path_a);
    const DualMatrix b = load_matrix(path_b);

    if (order == "star") {
        const bool holds = star_leq_real(a.real(), b.real(), tol);
        if (report)
            std::cout << "holds: " << (holds ? "true" : "false") << "\n"
                      << "route: definition\n";
        return holds ? kExitHolds : kExitNotHolds;
    }

    OrderReport rep;
    if (order == "d-star") rep = d_star_leq(a, b, tol);
    else if (order == "t-star") rep = t_star_leq(a, b, tol);
    else if (order == "p-order") rep = p_order_leq(a, b, tol);
    else rep = p_star_leq(a, b, tol);

    if (report) print_report(rep);
    if (!rep.prerequisite_failures.empty()) return kExitPrerequisite;
    return rep.holds ? kExitHolds : kExitNotHolds;
}

void write_manifest(const std::filesystem::path& dir, const std::string& kind,
                    const GenSpec& spec, int rank_c,
                    const std::vector<std::string>& files) {
    nlohmann::json doc;
    doc["tool"] = kVersion;
    doc["kind"] = kind;
    doc["m"] = spec.m;
    doc["n"] = spec.n;
    doc["rank_a"] = spec.rank_a;
    doc["rank_b"] = spec.rank_b;
    if (rank_c >= 0) doc["rank_c"] = rank_c;
    doc["seed"] = spec.seed;
    doc["files"] = files;
    std::ofstream out(dir / "manifest.json");
    out << doc.dump(2) << "\n";
}

int cmd_gen(const std::string& kind, const GenSpec& spec, int rank_c,
            const std::string& out_dir) {
    const std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);

    std::vector<std::string> files;
    if (kind == "dmpgi-matrix") {
        save_matrix((dir / "matrix.json").string(), gen_dual_with_dmpgi(spec));
        files = {"matrix.json"};
    } else if (kind == "d-star-chain") {
        if (rank_c < 0)
            throw CLI::ValidationError("--rank-c is required for d-star-chain");
        const auto chain = gen_d_star_chain(spec, rank_c);
        save_matrix((dir / "A.json").string(), chain[0]);
        save_matrix((dir / "B.json").string(), chain[1]);
        save_matrix((dir / "C.json").string(), chain[2]);
        files = {"A.json", "B.json", "C.json"};
    } else {
        std::pair<DualMatrix, DualMatrix> pair =
            kind == "d-star-pair"   ? gen_d_star_pair(spec)
            : kind == "p-star-pair" ? gen_p_star_pair(spec)
                                    : gen_both_pair(spec);
        save_matrix((dir / "A.json").string(), pair.first);
        save_matrix((dir / "B.json").string(), pair.second);
        files = {"A.json", "B.json"};
    }
    write_manifest(dir, kind, spec, kind == "d-star-chain" ? rank_c : -1, files);
    return kExitHolds;
}

int cmd_verify(const std::string& id, int trials, std::uint64_t seed,
               const Tolerances& tol) {
    const VerifyOutcome out = verify_theorem(id, trials, seed, tol);
    std::cout << out.theorem_id << ": trials=" << out.trials
              << " failures=" << out.failures
              << " max_residual=" << out.max_residual << " seed=" << out.seed
              << "\n";
    return out.failures == 0 ? kExitHolds : kExitNotHolds;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dual matrix generalized inverses and partial orders"};
    app.set_version_flag("--version", kVersion);
    app.fallthrough();
    app.require_subcommand(1);

    Tolerances tol;
    app.add_option("--rank-tol", tol.rank_rel_tol, "Relative rank threshold");
    app.add_option("--atol", tol.eq_atol, "Absolute comparison tolerance");
    app.add_option("--rtol", tol.eq_rtol, "Relative comparison tolerance");

    // compute
    std::string compute_kind, compute_in, compute_out;
    auto* compute = app.add_subcommand("compute", "Compute pinv, MPDGI or DMPGI");
    compute->add_option("kind", compute_kind, "pinv|mpdgi|dmpgi")
        ->required()
        ->check(CLI::IsMember({"pinv", "mpdgi", "dmpgi"}));
    compute->add_option("input", compute_in, "Input matrix file")->required();
    compute->add_option("output", compute_out, "Output file (default: stdout)");

    // check
    std::string check_order, check_a, check_b;
    bool check_report = false;
    auto* check = app.add_subcommand("check", "Check an order relation a <= b");
    check->add_option("order", check_order, "star|d-star|t-star|p-order|p-star")
        ->required()
        ->check(CLI::IsMember({"star", "d-star", "t-star", "p-order", "p-star"}));
    check->add_option("a", check_a, "Left matrix file")->required();
    check->add_option("b", check_b, "Right matrix file")->required();
    check->add_flag("--report", check_report, "Print the full order report");

    // gen
    std::string gen_kind, gen_out_dir = ".";
    GenSpec spec;
    int rank_c = -1;
    bool seed_given = false;
    auto* gen = app.add_subcommand("gen", "Generate labeled matrices/pairs");
    gen->add_option("kind", gen_kind,
                    "dmpgi-matrix|d-star-pair|p-star-pair|both-pair|d-star-chain")
        ->required()
        ->check(CLI::IsMember({"dmpgi-matrix", "d-star-pair", "p-star-pair",
                               "both-pair", "d-star-chain"}));
    gen->add_option("--m", spec.m, "Rows")->required();
    gen->add_option("--n", spec.n, "Columns")->required();
    gen->add_option("--rank-a", spec.rank_a, "Rank of the smaller matrix")->required();
    gen->add_option("--rank-b", spec.rank_b, "Rank of the larger matrix")->required();
    gen->add_option("--rank-c", rank_c, "Rank of the chain top (d-star-chain)");
    gen->add_option("--seed", spec.seed, "RNG seed (default: $DUALORDER_SEED or 0)")
        ->trigger_on_parse()
        ->each([&](const std::string&) { seed_given = true; });
    gen->add_option("--out-dir", gen_out_dir, "Output directory");

    // verify
    std::string verify_id;
    int verify_trials = 500;
    std::uint64_t verify_seed = 0;
    bool verify_seed_given = false;
    auto* verify = app.add_subcommand("verify", "Run a theorem property suite");
    verify->add_option("theorem", verify_id, "Theorem id, e.g. thm-3.6")->required();
    verify->add_option("--trials", verify_trials, "Trial count");
    verify->add_option("--seed", verify_seed, "Base seed (default: $DUALORDER_SEED or 0)")
        ->trigger_on_parse()
        ->each([&](const std::string&) { verify_seed_given = true; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*compute) return cmd_compute(compute_kind, compute_in, compute_out, tol);
        if (*check) return cmd_check(check_order, check_a, check_b, check_report, tol);
        if (*gen) {
            if (!seed_given) spec.seed = default_seed();
            return cmd_gen(gen_kind, spec, rank_c, gen_out_dir);
        }
        if (!verify_seed_given) verify_seed = default_seed();
        return cmd_verify(verify_id, verify_trials, verify_seed, tol);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DimensionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.get_name() << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const OrderViolationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrerequisite;
    } catch (const std::exception& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    }
}
