#include "trizeta/report.hpp"

#include "trizeta/arch.hpp"
#include "trizeta/arch_oracle.hpp"
#include "trizeta/errors.hpp"
#include "trizeta/nonarch_oracle.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace trizeta {

using nlohmann::json;

namespace {

EtaleShape parse_local_shape(const std::string& s) {
    if (s == "split") return EtaleShape::Split;
    if (s == "quad") return EtaleShape::QuadTimesF;
    if (s == "cubic") return EtaleShape::CubicField;
    throw ParseError("unknown local shape: " + s);
}

PadicComponent parse_component(const json& j) {
    PadicComponent pc;
    std::string type = j.at("type").get<std::string>();
    if (type == "special") {
        pc.special = true;
        pc.sign = j.at("sign").get<int>();
    } else if (type == "spherical") {
        pc.special = false;
    } else {
        throw ParseError("unknown component type: " + type);
    }
    return pc;
}

} // namespace

GlobalDescriptor parse_descriptor(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("JSON parse error at byte ") + std::to_string(e.byte) +
                         ": " + e.what());
    }
    GlobalDescriptor g;
    try {
        if (j.at("schema").get<std::string>() != "v1")
            throw ParseError("unsupported schema version");
        auto w = j.at("weights");
        if (!w.is_array() || w.size() != 3) throw ParseError("weights must have 3 entries");
        for (size_t i = 0; i < 3; ++i) g.weights[i] = w[i].get<int>();
        std::string shape = j.at("etale_shape").get<std::string>();
        if (shape == "split")
            g.shape = GlobalShape::Split;
        else if (shape == "quad")
            g.shape = GlobalShape::RealQuadTimesQ;
        else if (shape == "cubic")
            g.shape = GlobalShape::RealCubicField;
        else
            throw ParseError("unknown etale_shape: " + shape);
        g.disc = j.value("discriminant", 1L);
        g.class_number = j.value("class_number", 1L);
        if (j.contains("level")) {
            for (const auto& jl : j.at("level")) {
                LevelPrime lp;
                lp.p = jl.at("p").get<long>();
                lp.local_shape = parse_local_shape(jl.at("shape").get<std::string>());
                lp.field_ramified = jl.value("ramified", false);
                for (const auto& jc : jl.at("components"))
                    lp.comps.push_back(parse_component(jc));
                g.level.push_back(std::move(lp));
            }
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("descriptor field error: ") + e.what());
    }
    g.validate();
    return g;
}

GlobalDescriptor load_descriptor(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_descriptor(ss.str());
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace {

NonarchCase case_for(const LevelPrime& lp) {
    int eps = nonarch_epsilon(lp.local_shape, lp.field_ramified, lp.p, lp.comps);
    return NonarchCase(lp.local_shape, lp.field_ramified, eps == -1, lp.p, lp.comps);
}

} // namespace

Report build_report(const GlobalDescriptor& g) {
    g.validate();
    Report r;
    r.weights = g.weights;
    r.shape = g.shape == GlobalShape::Split
                  ? "split"
                  : (g.shape == GlobalShape::RealQuadTimesQ ? "quad" : "cubic");
    RamificationData ram = quaternion_ramification(g);
    r.global_sign = ram.global_sign;
    r.sigma_d = ram.sigma_d_finite;
    r.sigma_d_contains_infinity = ram.arch_in_sigma;
    r.n_minus = ram.n_minus;
    r.m_level = ram.m_level;
    r.nu = nu_count(g);
    bool balanced = epsilon_arch(g.weights[0], g.weights[1], g.weights[2]) == -1;
    r.side = balanced ? "balanced" : "unbalanced";

    // Archimedean place.
    {
        PlaceReport pr;
        pr.place = "infinity";
        pr.epsilon = balanced ? -1 : 1;
        auto [k1, k2, k3] = g.weights;
        if (balanced) {
            BalancedTriple t(k1, k2, k3);
            PiMonomial istar = zeta_balanced(t);
            pr.istar = istar.str();
            pr.istar_value = istar.to_double();
            pr.case_label = "discrete series, balanced";
        } else {
            int kmax = g.k_max();
            int ka = std::min(k1, std::min(k2, k3));
            int kb = k1 + k2 + k3 - kmax - ka;
            UnbalancedClosed c = zeta_unbalanced_closed(ka, kb, kmax);
            pr.istar = c.istar.str();
            pr.istar_value = c.istar.to_double();
            pr.case_label = "discrete series, unbalanced";
        }
        std::string lf;
        for (HalfInt mu : arch_r_factor_shifts(g.weights[0], g.weights[1], g.weights[2],
                                               balanced)) {
            if (!lf.empty()) lf += " ";
            lf += "zeta_C(s + " + mu.str() + ")";
        }
        pr.lfactor = lf;
        r.places.push_back(std::move(pr));
    }

    for (const LevelPrime& lp : g.level) {
        NonarchCase c = case_for(lp);
        NonarchClosed closed = zeta_nonarch_closed(c);
        PlaceReport pr;
        pr.place = "p=" + std::to_string(lp.p);
        pr.epsilon = c.division ? -1 : 1;
        pr.case_label = closed.case_label;
        pr.istar = PiMonomial::from_rat(closed.istar).str();
        pr.istar_value = closed.istar.to_double();
        pr.lfactor = closed.lfactor_r.str();
        if (!closed.integral_display.num.empty() || !closed.integral_display.den.empty() ||
            !(closed.integral_display.scalar == Rat(1)))
            pr.integral = closed.integral_display.str();
        r.places.push_back(std::move(pr));
    }

    r.constant = central_constant(g);
    r.petersson = petersson_constant(g);

    // Deligne periods apply when the descriptor matches one of the two
    // motivic settings: equal first two weights (Sym^2(g) x f with g of
    // weight k1 and f of weight k3) or all three equal (Sym^3(f)).
    if (g.shape != GlobalShape::RealCubicField && g.weights[0] == g.weights[1]) {
        int kappa = g.weights[0], kp = g.weights[2];
        r.period_plus = deligne_period(DeligneKind::Sym2TensorF, kappa, kp, PeriodSign::Plus);
        r.period_minus = deligne_period(DeligneKind::Sym2TensorF, kappa, kp, PeriodSign::Minus);
        r.ratio = period_ratio(DeligneKind::Sym2TensorF, kappa, kp);
    } else if (g.shape == GlobalShape::RealCubicField && g.weights[0] == g.weights[1] &&
               g.weights[1] == g.weights[2]) {
        int kp = g.weights[0];
        r.period_plus = deligne_period(DeligneKind::Sym3, kp, kp, PeriodSign::Plus);
        r.period_minus = deligne_period(DeligneKind::Sym3, kp, kp, PeriodSign::Minus);
        r.ratio = period_ratio(DeligneKind::Sym3, kp, kp);
    }
    return r;
}

std::vector<VerifyRow> verify_descriptor(const GlobalDescriptor& g, const VerifyOptions& opt) {
    g.validate();
    std::vector<VerifyRow> rows;
    bool balanced = epsilon_arch(g.weights[0], g.weights[1], g.weights[2]) == -1;
    auto [k1, k2, k3] = g.weights;
    {
        VerifyRow row;
        row.place = "infinity";
        if (balanced) {
            BalancedTriple t(k1, k2, k3);
            Rat gamma = balanced_pairing_gamma(t);
            Rat bilinear = balanced_pairing_bilinear(invariant_vector(t));
            row.closed = gamma.to_double();
            row.oracle = bilinear.to_double();
            row.rel_err = gamma == bilinear ? 0.0 : 1.0;
            row.note = "pairing: Gamma-ratio vs finite bilinear sum (exact)";
        } else if (std::min({k1, k2, k3}) >= 2) {
            int kmax = g.k_max();
            int ka = std::min(k1, std::min(k2, k3));
            int kb = k1 + k2 + k3 - kmax - ka;
            ArchOracleConfig cfg;
            cfg.quad.max_depth = opt.quad_budget;
            ArchOracleResult res =
                zeta_unbalanced_oracle(ka, kb, kmax, 0, (kmax - ka - kb) / 2, cfg);
            row.closed = zeta_unbalanced_closed(ka, kb, kmax).istar.to_double();
            row.oracle = res.istar;
            row.rel_err = std::abs(row.oracle - row.closed) / std::abs(row.closed);
            row.converged = res.converged;
            row.note = "2-D quadrature vs closed form";
        } else {
            row.skipped = true;
            row.note = "limit of discrete series: closed form only";
        }
        rows.push_back(std::move(row));
    }
    for (const LevelPrime& lp : g.level) {
        NonarchCase c = case_for(lp);
        VerifyRow row;
        row.place = "p=" + std::to_string(lp.p);
        NonarchOracleConfig cfg;
        cfg.n_max = opt.n_max;
        cfg.tol = opt.tolerance;
        NonarchOracleResult res = zeta_nonarch_oracle(c, {}, cfg);
        row.closed = zeta_nonarch_closed(c).istar.to_double();
        row.oracle = res.istar;
        row.rel_err = std::abs(row.oracle - row.closed) / std::abs(row.closed);
        row.converged = res.converged;
        row.note = res.exact_istar ? "exact two-cell sum" : "truncated lattice sum";
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<SweepRowOut> run_sweep(const SweepOptions& opt) {
    std::vector<SweepRowOut> out;
    if (opt.arch_k_max >= 4) {
        ArchOracleConfig cfg;
        cfg.quad.max_depth = opt.verify.quad_budget;
        auto rows = unbalanced_sweep(unbalanced_triples(opt.arch_k_max), cfg, opt.parallel);
        for (const auto& row : rows) {
            SweepRowOut o;
            o.label = "arch (" + std::to_string(row.k1) + "," + std::to_string(row.k2) + "," +
                      std::to_string(row.k3) + ")";
            o.closed = row.istar_closed;
            o.oracle = row.istar_oracle;
            o.rel_err = row.rel_err;
            o.converged = row.converged;
            out.push_back(std::move(o));
        }
    }
    NonarchOracleConfig ncfg;
    ncfg.n_max = opt.verify.n_max;
    ncfg.tol = opt.verify.tolerance;
    for (long q : opt.q_list) {
        auto rows = nonarch_sweep(enumerate_cases(q), {}, ncfg, opt.parallel);
        for (const auto& row : rows) {
            SweepRowOut o;
            o.label = "q=" + std::to_string(q) + " " + row.label;
            o.closed = row.istar_closed;
            o.oracle = row.istar_oracle;
            o.rel_err = row.rel_err;
            o.converged = row.converged;
            out.push_back(std::move(o));
        }
    }
    return out;
}

namespace {

json place_json(const PlaceReport& p) {
    json j;
    j["place"] = p.place;
    j["case"] = p.case_label;
    j["epsilon"] = p.epsilon;
    j["istar"] = p.istar;
    j["istar_value"] = format_double(p.istar_value);
    j["lfactor"] = p.lfactor;
    if (!p.integral.empty()) j["integral"] = p.integral;
    return j;
}

} // namespace

std::string render_json(const Report& r) {
    json j;
    j["schema"] = "v1";
    j["weights"] = r.weights;
    j["shape"] = r.shape;
    j["side"] = r.side;
    j["global_sign"] = r.global_sign;
    json sig = json::array();
    for (long p : r.sigma_d) sig.push_back(p);
    if (r.sigma_d_contains_infinity) sig.push_back("infinity");
    j["sigma_D"] = sig;
    j["N_minus"] = r.n_minus;
    j["M"] = r.m_level;
    j["nu"] = r.nu;
    j["places"] = json::array();
    for (const auto& p : r.places) j["places"].push_back(place_json(p));
    if (r.constant.forced_zero) {
        j["central_constant"] = {{"forced_zero", true}};
    } else {
        j["central_constant"] = {{"rendered", r.constant.rendered},
                                 {"two_exponent", r.constant.two_exponent},
                                 {"M", r.constant.m},
                                 {"disc_half_exponent", r.constant.disc_half_exponent},
                                 {"side", r.constant.balanced_side ? "balanced" : "unbalanced"},
                                 {"solve", r.constant.solve_template}};
    }
    j["petersson_constant"] = {{"rendered", r.petersson.rendered},
                               {"symbolic", r.petersson.rendered + r.petersson.symbolic_suffix}};
    if (r.period_plus) {
        j["deligne_periods"] = {{"c_plus", r.period_plus->str()},
                                {"c_minus", r.period_minus->str()},
                                {"ratio", r.ratio->rendered},
                                {"epsilon", r.ratio->epsilon}};
    }
    return j.dump(2) + "\n";
}

std::string render_human(const Report& r) {
    std::ostringstream os;
    os << "weights: (" << r.weights[0] << "," << r.weights[1] << "," << r.weights[2] << ")  "
       << "shape: " << r.shape << "  side: " << r.side << "\n";
    os << "global sign: " << (r.global_sign == 1 ? "+1" : "-1") << "\n";
    os << "Sigma_D: {";
    bool first = true;
    for (long p : r.sigma_d) {
        if (!first) os << ", ";
        os << p;
        first = false;
    }
    if (r.sigma_d_contains_infinity) {
        if (!first) os << ", ";
        os << "infinity";
    }
    os << "}  N^- = " << r.n_minus << "  M = " << r.m_level << "  nu = " << r.nu << "\n";
    os << "places:\n";
    for (const auto& p : r.places) {
        os << "  " << p.place << "  [" << p.case_label << "]  eps = " << (p.epsilon == 1 ? "+1" : "-1")
           << "\n";
        os << "    I* = " << p.istar << "  (" << format_double(p.istar_value) << ")\n";
        os << "    L(s,r) = " << p.lfactor << "\n";
        if (!p.integral.empty()) os << "    I = " << p.integral << "\n";
    }
    if (r.constant.forced_zero) {
        os << "central value: forced 0 by sign\n";
    } else {
        os << "central constant: " << r.constant.rendered << "\n";
        os << "solve: " << r.constant.solve_template << "\n";
    }
    os << "Petersson constant: " << r.petersson.rendered << r.petersson.symbolic_suffix << "\n";
    if (r.period_plus) {
        os << "Deligne period c+: " << r.period_plus->str() << "\n";
        os << "Deligne period c-: " << r.period_minus->str() << "\n";
        os << "ratio: " << r.ratio->rendered << "\n";
    }
    return os.str();
}

std::string render_verify_human(const std::vector<VerifyRow>& rows) {
    std::ostringstream os;
    for (const auto& row : rows) {
        os << row.place << ": ";
        if (row.skipped) {
            os << "skipped (" << row.note << ")\n";
            continue;
        }
        os << "closed = " << format_double(row.closed) << "  oracle = "
           << format_double(row.oracle) << "  rel_err = " << format_double(row.rel_err)
           << (row.converged ? "" : "  [NOT CONVERGED]") << "  (" << row.note << ")\n";
    }
    return os.str();
}

std::string render_verify_json(const Report& r, const std::vector<VerifyRow>& rows) {
    json j = json::parse(render_json(r));
    j["verify"] = json::array();
    for (const auto& row : rows) {
        json v;
        v["place"] = row.place;
        v["skipped"] = row.skipped;
        if (!row.skipped) {
            v["closed"] = format_double(row.closed);
            v["oracle"] = format_double(row.oracle);
            v["rel_err"] = format_double(row.rel_err);
            v["converged"] = row.converged;
        }
        v["note"] = row.note;
        j["verify"].push_back(v);
    }
    return j.dump(2) + "\n";
}

std::string render_sweep_human(const std::vector<SweepRowOut>& rows) {
    std::ostringstream os;
    for (const auto& row : rows)
        os << row.label << "  closed = " << format_double(row.closed)
           << "  oracle = " << format_double(row.oracle)
           << "  rel_err = " << format_double(row.rel_err)
           << (row.converged ? "" : "  [NOT CONVERGED]") << "\n";
    return os.str();
}

std::string render_sweep_json(const std::vector<SweepRowOut>& rows) {
    json j = json::array();
    for (const auto& row : rows) {
        json v;
        v["label"] = row.label;
        v["closed"] = format_double(row.closed);
        v["oracle"] = format_double(row.oracle);
        v["rel_err"] = format_double(row.rel_err);
        v["converged"] = row.converged;
        j.push_back(v);
    }
    return j.dump(2) + "\n";
}

SweepOptions parse_sweep_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("JSON parse error at byte ") + std::to_string(e.byte) +
                         ": " + e.what());
    }
    SweepOptions opt;
    try {
        if (j.contains("sweep")) {
            const json& s = j.at("sweep");
            opt.arch_k_max = s.value("arch_k_max", 0);
            if (opt.arch_k_max > 20)
                throw ParseError("sweep: arch_k_max must be <= 20");
            if (s.contains("q_list"))
                for (const auto& q : s.at("q_list")) opt.q_list.push_back(q.get<long>());
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("sweep config error: ") + e.what());
    }
    return opt;
}

} // namespace trizeta
