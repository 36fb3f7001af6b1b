#pragma once

#include "trizeta/global_assembly.hpp"
#include "trizeta/periods.hpp"

#include <optional>
#include <string>
#include <vector>

namespace trizeta {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Parse + validate a v1 JSON descriptor document.
GlobalDescriptor parse_descriptor(const std::string& json_text);
GlobalDescriptor load_descriptor(const std::string& path);

struct PlaceReport {
    std::string place; // "infinity" or "p=<p>"
    std::string case_label;
    int epsilon = 1;
    std::string istar;       // exact rendering
    double istar_value = 0.0;
    std::string lfactor;     // L(s, Pi_v, r) inverse-factor string
    std::string integral;    // displayed pre-normalization integral, when known
};

struct Report {
    std::array<int, 3> weights{};
    std::string shape;
    std::string side; // "unbalanced" / "balanced"
    int global_sign = 1;
    std::vector<long> sigma_d;
    bool sigma_d_contains_infinity = false;
    long n_minus = 1;
    long m_level = 1;
    int nu = 0;
    std::vector<PlaceReport> places; // infinity first, then level primes in order
    CentralValueConstant constant;
    PeterssonConstant petersson;
    std::optional<PeriodMonomial> period_plus;
    std::optional<PeriodMonomial> period_minus;
    std::optional<PeriodRatioTemplate> ratio;
};

Report build_report(const GlobalDescriptor& g);

struct VerifyOptions {
    double tolerance = 1e-6;
    int n_max = 80;
    int quad_budget = 13; // max bisection depth per quadrature panel
};

struct VerifyRow {
    std::string place;
    double closed = 0.0;
    double oracle = 0.0;
    double rel_err = 0.0;
    bool converged = true;
    bool skipped = false;
    std::string note;
};

/// Run the per-place oracles against the closed forms.
std::vector<VerifyRow> verify_descriptor(const GlobalDescriptor& g, const VerifyOptions& opt);

struct SweepOptions {
    int arch_k_max = 0;          // 0 disables the archimedean sweep
    std::vector<long> q_list;    // empty disables the non-archimedean sweep
    VerifyOptions verify;
    bool parallel = true;
};

struct SweepRowOut {
    std::string label;
    double closed = 0.0;
    double oracle = 0.0;
    double rel_err = 0.0;
    bool converged = true;
};

std::vector<SweepRowOut> run_sweep(const SweepOptions& opt);

std::string format_double(double v); // fixed 12 significant digits

std::string render_human(const Report& r);
std::string render_json(const Report& r);
std::string render_verify_human(const std::vector<VerifyRow>& rows);
std::string render_verify_json(const Report& r, const std::vector<VerifyRow>& rows);
std::string render_sweep_human(const std::vector<SweepRowOut>& rows);
std::string render_sweep_json(const std::vector<SweepRowOut>& rows);

/// Parse a sweep config document (mode=sweep inputs).
SweepOptions parse_sweep_config(const std::string& json_text);

} // namespace trizeta
