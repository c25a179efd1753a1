#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "g2coh/record.hpp"
#include "g2coh/verify.hpp"

namespace {

g2coh::LOracle parse_oracle(const std::string& spec) {
    if (spec == "symbolic") return g2coh::LOracle::symbolic();
    if (spec == "all-nonzero") return g2coh::LOracle::all_nonzero();
    if (spec == "all-zero") return g2coh::LOracle::all_zero();
    if (spec == "sign") return g2coh::LOracle::sign_heuristic();
    if (spec.rfind("file:", 0) == 0) return g2coh::LOracle::from_file(spec.substr(5));
    throw std::invalid_argument("unknown --l-oracle \"" + spec +
                                "\" (expected symbolic, all-nonzero, all-zero, sign or file:PATH)");
}

std::string default_oracle_spec() {
    const char* env = std::getenv("G2COH_L_ORACLE");
    return env != nullptr && *env != '\0' ? std::string(env) : std::string("symbolic");
}

int run_table(std::int64_t m1, std::int64_t m2, const std::string& format,
              const std::string& what, const std::string& oracle_spec) {
    if (m1 < 0 || m2 < 0) {
        std::cerr << "g2coh table: m1 and m2 must be non-negative (got m1=" << m1
                  << ", m2=" << m2 << ")\n";
        return 2;
    }
    const g2coh::OutputRecord record =
        g2coh::make_record({m1, m2}, parse_oracle(oracle_spec), g2coh::parse_what(what));
    if (format == "json")
        std::cout << g2coh::render_json(record) << "\n";
    else if (format == "markdown")
        std::cout << g2coh::render_markdown(record);
    else
        std::cout << g2coh::render_latex(record);
    return 0;
}

int run_sweep(std::int64_t m1_max, std::int64_t m2_max, const std::string& out_path,
              const std::string& oracle_spec) {
    if (m1_max < 0 || m2_max < 0) {
        std::cerr << "g2coh sweep: bounds must be non-negative\n";
        return 2;
    }
    const g2coh::LOracle oracle = parse_oracle(oracle_spec);
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) {
        std::cerr << "g2coh sweep: cannot open output path " << out_path << "\n";
        return 2;
    }
    for (std::int64_t m1 = 0; m1 <= m1_max; ++m1)
        for (std::int64_t m2 = 0; m2 <= m2_max; ++m2)
            out << g2coh::render_json(g2coh::make_record({m1, m2}, oracle, g2coh::What::Both))
                << "\n";
    out.flush();
    if (!out) {
        std::cerr << "g2coh sweep: write to " << out_path << " failed\n";
        return 2;
    }
    return 0;
}

int run_verify(int grid, const std::string& format) {
    if (grid < 1) {
        std::cerr << "g2coh verify: --grid must be at least 1\n";
        return 2;
    }
    const g2coh::VerificationReport report = g2coh::verify_all(grid);
    if (format == "json")
        std::cout << report.render_json() << "\n";
    else
        std::cout << report.render_text();
    return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "g2coh: boundary and Eisenstein cohomology tables for G2(Z) with highest-weight "
        "coefficients"};
    app.require_subcommand(1);

    std::int64_t m1 = 0, m2 = 0, m1_max = 0, m2_max = 0;
    int grid = 0;
    std::string format = "json";
    std::string verify_format = "text";
    std::string what = "both";
    std::string oracle_spec = default_oracle_spec();
    std::string out_path;

    CLI::App* table = app.add_subcommand("table", "print the tables for one highest weight");
    table->add_option("--m1", m1, "coefficient of gamma1")->required();
    table->add_option("--m2", m2, "coefficient of gamma2")->required();
    table->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "markdown", "latex"}));
    table->add_option("--what", what, "which tables to print")
        ->check(CLI::IsMember({"boundary", "eisenstein", "both"}));
    table->add_option("--l-oracle", oracle_spec,
                      "central L-value oracle: symbolic, all-nonzero, all-zero, sign or "
                      "file:PATH (default from G2COH_L_ORACLE)");

    CLI::App* sweep = app.add_subcommand("sweep", "write one JSON record per line over a grid");
    sweep->add_option("--m1-max", m1_max, "sweep m1 from 0 to this bound")->required();
    sweep->add_option("--m2-max", m2_max, "sweep m2 from 0 to this bound")->required();
    sweep->add_option("--out", out_path, "output path (JSON lines)")->required();
    sweep->add_option("--l-oracle", oracle_spec, "central L-value oracle");

    CLI::App* verify = app.add_subcommand("verify", "run the cross-verification suites");
    verify->add_option("--grid", grid, "sweep bound for (m1, m2)")->required();
    verify->add_option("--format", verify_format, "report format")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (table->parsed()) return run_table(m1, m2, format, what, oracle_spec);
        if (sweep->parsed()) return run_sweep(m1_max, m2_max, out_path, oracle_spec);
        if (verify->parsed()) return run_verify(grid, verify_format);
    } catch (const g2coh::OracleError& e) {
        std::cerr << "g2coh: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "g2coh: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "g2coh: internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
