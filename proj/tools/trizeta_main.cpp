#include "trizeta/errors.hpp"
#include "trizeta/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw trizeta::ParseError("cannot open input file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Local constants of triple product central value formulas"};
    std::string input;
    std::string mode = "report";
    std::string format = "human";
    double tolerance = 1e-6;
    int n_max = 80;
    int quad_budget = 13;
    app.add_option("input", input, "descriptor or sweep-config JSON file")->required();
    app.add_option("--mode", mode, "report | verify | sweep")
        ->check(CLI::IsMember({"report", "verify", "sweep"}));
    app.add_option("--tolerance", tolerance, "verify tolerance (relative)")
        ->check(CLI::PositiveNumber);
    app.add_option("--n-max", n_max, "lattice sum truncation")->check(CLI::Range(10, 100000));
    app.add_option("--quad-budget", quad_budget, "max quadrature bisection depth")
        ->check(CLI::Range(4, 40));
    app.add_option("--format", format, "human | json")
        ->check(CLI::IsMember({"human", "json"}));
    CLI11_PARSE(app, argc, argv);

    using namespace trizeta;
    try {
        if (mode == "sweep") {
            SweepOptions opt = parse_sweep_config(slurp(input));
            opt.verify.tolerance = tolerance;
            opt.verify.n_max = n_max;
            opt.verify.quad_budget = quad_budget;
            auto rows = run_sweep(opt);
            std::cout << (format == "json" ? render_sweep_json(rows)
                                           : render_sweep_human(rows));
            for (const auto& row : rows)
                if (!row.converged) return 4;
            return 0;
        }

        GlobalDescriptor g = parse_descriptor(slurp(input));
        Report rep = build_report(g);
        if (mode == "report") {
            std::cout << (format == "json" ? render_json(rep) : render_human(rep));
            return 0;
        }
        VerifyOptions opt{tolerance, n_max, quad_budget};
        auto rows = verify_descriptor(g, opt);
        std::cout << (format == "json" ? render_verify_json(rep, rows)
                                       : render_verify_human(rows));
        for (const auto& row : rows) {
            if (row.skipped) continue;
            if (!row.converged) return 4;
        }
        for (const auto& row : rows)
            if (!row.skipped && row.rel_err > tolerance) return 1;
        return 0;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const CaseError& e) {
        std::cerr << "invalid case: " << e.what() << "\n";
        return 3;
    } catch (const PreconditionError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
