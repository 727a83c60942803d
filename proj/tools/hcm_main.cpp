// hcm: exact-arithmetic workbench for commuting linear maps on the n x n
// Heisenberg algebra. Subcommands compute the dimension of the commuting
// space, emit its canonical basis, check and decompose serialized maps,
// test for standard form, build the named example families, and synthesize
// seeded random commuting maps. All output is deterministic; exit code 0
// means success/true, 1 means a checked property is false, 2 means a
// usage, parse, or I/O error.

#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "hcm/commuting.hpp"
#include "hcm/decomposition.hpp"
#include "hcm/examples.hpp"
#include "hcm/io.hpp"
#include "hcm/linalg.hpp"
#include "hcm/rng.hpp"

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

std::string join_rationals(const std::vector<hcm::Rational>& values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += ' ';
        s += values[i].str();
    }
    return s;
}

std::vector<hcm::Rational> parse_params(const std::vector<std::string>& raw) {
    std::vector<hcm::Rational> out;
    out.reserve(raw.size());
    for (const auto& tok : raw) out.push_back(hcm::Rational::parse(tok));
    return out;
}

void print_witness(const std::pair<int, int>& w) {
    std::cout << "witness_a=" << w.first << "\n";
    std::cout << "witness_b=" << w.second << "\n";
    std::cout << "NOT_COMMUTING\n";
}

int cmd_dim(int n) {
    const std::size_t kernel_dim = hcm::kernel_basis(hcm::constraint_matrix(n)).size();
    const int formula_dim = hcm::dimension_formula(n);
    const std::size_t param_rank = hcm::rank(hcm::parametrization_matrix(n));
    std::cout << "n=" << n << "\n";
    std::cout << "kernel_dim=" << kernel_dim << "\n";
    std::cout << "formula_dim=" << formula_dim << "\n";
    std::cout << "param_rank=" << param_rank << "\n";
    const bool match = kernel_dim == static_cast<std::size_t>(formula_dim) &&
                       param_rank == static_cast<std::size_t>(formula_dim);
    std::cout << (match ? "MATCH" : "MISMATCH") << "\n";
    return match ? kExitTrue : kExitFalse;
}

int cmd_basis(int n, const std::string& out_path) {
    const auto basis = hcm::commuting_space_basis(n);
    hcm::write_file(out_path, hcm::serialize_maps(basis));
    std::cout << "n=" << n << "\n";
    std::cout << "count=" << basis.size() << "\n";
    std::cout << "OK\n";
    return kExitTrue;
}

int cmd_check(const std::string& path) {
    const auto maps = hcm::parse_maps(hcm::read_file(path));
    bool all_ok = true;
    for (const auto& f : maps) {
        if (auto w = hcm::commuting_witness(f)) {
            print_witness(*w);
            all_ok = false;
        } else {
            std::cout << "COMMUTING\n";
        }
    }
    return all_ok ? kExitTrue : kExitFalse;
}

int cmd_decompose(const std::string& path, const std::string& out_path) {
    const hcm::LinearMap f = hcm::parse_map(hcm::read_file(path));
    if (auto w = hcm::commuting_witness(f)) {
        print_witness(*w);
        return kExitFalse;
    }
    const hcm::CanonicalDecomposition dec = hcm::decompose(f);
    hcm::write_file(out_path, hcm::serialize(dec));
    std::cout << "n=" << f.n() << "\n";
    if (hcm::reconstruct(dec) != f) {
        std::cout << "RECONSTRUCT_FAIL\n";
        return kExitFalse;
    }
    std::cout << "RECONSTRUCT_OK\n";
    return kExitTrue;
}

int cmd_standard(const std::string& path) {
    const hcm::LinearMap f = hcm::parse_map(hcm::read_file(path));
    if (auto w = hcm::commuting_witness(f)) {
        print_witness(*w);
        return kExitFalse;
    }
    std::cout << "n=" << f.n() << "\n";
    const auto witness = hcm::standard_form_witness(f);
    if (!witness) {
        std::cout << "NOT_STANDARD_FORM\n";
        return kExitFalse;
    }
    std::cout << "mu=" << join_rationals(witness->mu) << "\n";
    std::cout << "STANDARD lambda=" << witness->lambda.str() << "\n";
    return kExitTrue;
}

int cmd_example(const std::string& name, int n, const std::vector<hcm::Rational>& params,
                const std::string& out_path) {
    hcm::LinearMap f(n);
    if (name == "r") {
        if (params.size() != 1)
            throw CLI::ValidationError("--param", "family r takes exactly one parameter");
        f = hcm::example_r(n, params[0]);
    } else if (name == "g") {
        if (params.size() != static_cast<std::size_t>(n - 1))
            throw CLI::ValidationError("--param", "family g takes exactly n-1 parameters");
        f = hcm::example_g(n, params);
    } else if (name == "h") {
        if (!params.empty())
            throw CLI::ValidationError("--param", "family h takes no parameters");
        f = hcm::example_h(n);
    } else {  // newer
        const auto interior = static_cast<std::size_t>(n - 2) * (n - 2);
        hcm::Matrix a(n, n);
        if (params.size() == interior) {
            std::size_t t = 0;
            for (int i = 2; i <= n - 1; ++i)
                for (int j = 2; j <= n - 1; ++j) a(i - 1, j - 1) = params[t++];
        } else if (!params.empty()) {
            throw CLI::ValidationError(
                "--param", "family newer takes no parameters or (n-2)^2 interior entries");
        }
        f = hcm::example_newer(n, a);
    }
    hcm::write_file(out_path, hcm::serialize(f));
    std::cout << "n=" << n << "\n";
    std::cout << "name=" << name << "\n";
    if (!hcm::is_commuting(f)) {  // self-check; the families are all commuting
        std::cout << "NOT_COMMUTING\n";
        return kExitFalse;
    }
    std::cout << "COMMUTING\n";
    return kExitTrue;
}

int cmd_synth(int n, std::uint64_t seed, int count, bool standard_only,
              const std::string& out_path) {
    hcm::SplitMix64 gen(seed);
    std::vector<hcm::LinearMap> maps;
    maps.reserve(count);
    int commuting = 0;
    for (int i = 0; i < count; ++i) {
        hcm::LinearMap f = standard_only ? hcm::random_standard_map(n, gen)
                                         : hcm::reconstruct(hcm::random_decomposition(n, gen));
        if (hcm::is_commuting(f)) ++commuting;
        maps.push_back(std::move(f));
    }
    hcm::write_file(out_path, hcm::serialize_maps(maps));
    std::cout << "n=" << n << "\n";
    std::cout << "seed=" << seed << "\n";
    std::cout << "count=" << count << "\n";
    std::cout << "commuting=" << commuting << "/" << count << "\n";
    if (commuting != count) {
        std::cout << "FAIL\n";
        return kExitFalse;
    }
    std::cout << "OK\n";
    return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact commuting-map toolkit for the Heisenberg algebra"};
    app.require_subcommand(1);

    int n = 0;
    std::uint64_t seed = 0;
    int count = 1;
    std::string out_path;
    std::string in_path;
    std::string name;
    std::vector<std::string> raw_params;
    bool standard_only = false;

    auto* dim = app.add_subcommand("dim", "kernel / formula / parametrization dimension check");
    dim->add_option("--n", n, "algebra size")->required()->check(CLI::Range(3, 1000));

    auto* basis = app.add_subcommand("basis", "emit the canonical commuting-space basis");
    basis->add_option("--n", n, "algebra size")->required()->check(CLI::Range(3, 1000));
    basis->add_option("--out", out_path, "output file")->required();

    auto* check = app.add_subcommand("check", "check serialized maps for the commuting property");
    check->add_option("file", in_path, "HCM1 map file")->required();

    auto* decompose = app.add_subcommand("decompose", "canonically decompose a commuting map");
    decompose->add_option("file", in_path, "HCM1 map file")->required();
    decompose->add_option("--out", out_path, "output file")->required();

    auto* standard = app.add_subcommand("standard", "test a commuting map for standard form");
    standard->add_option("file", in_path, "HCM1 map file")->required();

    auto* example = app.add_subcommand("example", "build a named example family");
    example->add_option("--name", name, "family: r, g, h, or newer")
        ->required()
        ->check(CLI::IsMember({"r", "g", "h", "newer"}));
    example->add_option("--n", n, "algebra size")->required()->check(CLI::Range(3, 1000));
    example->add_option("--param", raw_params, "family parameter (repeatable, ordered)");
    example->add_option("--out", out_path, "output file")->required();

    auto* synth = app.add_subcommand("synth", "synthesize seeded random commuting maps");
    synth->add_option("--n", n, "algebra size")->required()->check(CLI::Range(3, 1000));
    synth->add_option("--seed", seed, "splitmix64 seed");
    synth->add_option("--count", count, "number of maps")->check(CLI::Range(1, 100000));
    synth->add_flag("--standard-only", standard_only, "draw standard-form maps only");
    synth->add_option("--out", out_path, "output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (dim->parsed()) return cmd_dim(n);
        if (basis->parsed()) return cmd_basis(n, out_path);
        if (check->parsed()) return cmd_check(in_path);
        if (decompose->parsed()) return cmd_decompose(in_path, out_path);
        if (standard->parsed()) return cmd_standard(in_path);
        if (example->parsed()) return cmd_example(name, n, parse_params(raw_params), out_path);
        if (synth->parsed()) return cmd_synth(n, seed, count, standard_only, out_path);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const hcm::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
