#include "trizeta/satake.hpp"

#include "trizeta/errors.hpp"

#include <sstream>

namespace trizeta {

namespace {

std::string mono_str(const Mono& m) {
    std::string out;
    for (const auto& [name, exp] : m) {
        if (!out.empty()) out += "*";
        out += name;
        if (exp != 1) out += "^" + std::to_string(exp);
    }
    return out;
}

} // namespace

SatakePoly SatakePoly::var(const std::string& name, int exp) {
    SatakePoly p;
    if (exp == 0) return SatakePoly(Rat(1));
    p.add_term({{name, exp}}, Rat(1));
    return p;
}

SatakePoly SatakePoly::monomial(const Mono& m, const Rat& c) {
    SatakePoly p;
    p.add_term(m, c);
    return p;
}

void SatakePoly::add_term(const Mono& m, const Rat& c) {
    if (c.is_zero()) return;
    Mono key;
    for (const auto& [name, exp] : m)
        if (exp != 0) key.emplace(name, exp);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool SatakePoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rat SatakePoly::constant_term() const {
    auto it = terms_.find(Mono{});
    return it == terms_.end() ? Rat(0) : it->second;
}

SatakePoly operator+(const SatakePoly& a, const SatakePoly& b) {
    SatakePoly out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
}

SatakePoly operator-(const SatakePoly& a, const SatakePoly& b) { return a + (-b); }

SatakePoly operator-(const SatakePoly& a) {
    SatakePoly out;
    for (const auto& [m, c] : a.terms_) out.add_term(m, -c);
    return out;
}

SatakePoly operator*(const SatakePoly& a, const SatakePoly& b) {
    SatakePoly out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Mono m = ma;
            for (const auto& [name, exp] : mb) m[name] += exp;
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

SatakePoly operator*(const Rat& c, const SatakePoly& a) {
    SatakePoly out;
    for (const auto& [m, ca] : a.terms_) out.add_term(m, c * ca);
    return out;
}

SatakePoly SatakePoly::pow(int e) const {
    if (e < 0) throw PreconditionError("SatakePoly: negative power");
    SatakePoly out(Rat(1));
    for (int i = 0; i < e; ++i) out = out * *this;
    return out;
}

SatakePoly SatakePoly::substitute(const std::map<std::string, Rat>& values) const {
    SatakePoly out;
    for (const auto& [m, c] : terms_) {
        Rat factor = c;
        Mono rest;
        for (const auto& [name, exp] : m) {
            auto it = values.find(name);
            if (it == values.end())
                rest.emplace(name, exp);
            else
                factor *= it->second.pow(exp);
        }
        out.add_term(rest, factor);
    }
    return out;
}

SatakePoly SatakePoly::invert_var(const std::string& name) const {
    SatakePoly out;
    for (const auto& [m, c] : terms_) {
        Mono flipped = m;
        auto it = flipped.find(name);
        if (it != flipped.end()) it->second = -it->second;
        out.add_term(flipped, c);
    }
    return out;
}

std::complex<double> SatakePoly::eval(
    const std::map<std::string, std::complex<double>>& values) const {
    std::complex<double> out = 0.0;
    for (const auto& [m, c] : terms_) {
        std::complex<double> t = c.to_double();
        for (const auto& [name, exp] : m) {
            auto it = values.find(name);
            if (it == values.end())
                throw PreconditionError("SatakePoly::eval: unbound variable " + name);
            t *= std::pow(it->second, exp);
        }
        out += t;
    }
    return out;
}

std::string SatakePoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        std::string coeff = c.str();
        std::string vars = mono_str(m);
        std::string term;
        if (vars.empty())
            term = coeff;
        else if (c.is_one())
            term = vars;
        else if (c == Rat(-1))
            term = "-" + vars;
        else
            term = coeff + "*" + vars;
        if (out.empty()) {
            out = term;
        } else if (!term.empty() && term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

XPoly XPoly::one_plus(const SatakePoly& c, int d) {
    std::vector<SatakePoly> coeffs(static_cast<size_t>(d) + 1);
    coeffs[0] = SatakePoly(Rat(1));
    coeffs[static_cast<size_t>(d)] = c;
    return XPoly(std::move(coeffs));
}

const SatakePoly& XPoly::coeff(int d) const {
    static const SatakePoly zero;
    if (d < 0 || d >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<size_t>(d)];
}

void XPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

XPoly operator+(const XPoly& a, const XPoly& b) {
    std::vector<SatakePoly> out(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < out.size(); ++i) {
        if (i < a.c_.size()) out[i] = out[i] + a.c_[i];
        if (i < b.c_.size()) out[i] = out[i] + b.c_[i];
    }
    return XPoly(std::move(out));
}

XPoly operator*(const XPoly& a, const XPoly& b) {
    if (a.is_zero() || b.is_zero()) return XPoly();
    std::vector<SatakePoly> out(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j)
            out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
    return XPoly(std::move(out));
}

XPoly XPoly::substitute(const std::map<std::string, Rat>& values) const {
    std::vector<SatakePoly> out;
    out.reserve(c_.size());
    for (const auto& p : c_) out.push_back(p.substitute(values));
    return XPoly(std::move(out));
}

std::complex<double> XPoly::eval(const std::map<std::string, std::complex<double>>& vars,
                                 std::complex<double> x) const {
    std::complex<double> out = 0.0;
    for (size_t i = c_.size(); i-- > 0;) out = out * x + c_[i].eval(vars);
    return out;
}

std::string XPoly::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (size_t d = 0; d < c_.size(); ++d) {
        if (c_[d].is_zero()) continue;
        std::string coeff = c_[d].str();
        bool needs_parens = c_[d].terms().size() > 1;
        std::string term = needs_parens ? "(" + coeff + ")" : coeff;
        if (d > 0) {
            if (term == "1")
                term = "X";
            else if (term == "-1")
                term = "-X";
            else
                term += "*X";
            if (d > 1) term += "^" + std::to_string(d);
        }
        if (out.empty()) {
            out = term;
        } else if (!term.empty() && term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out.empty() ? "0" : out;
}

LaurentLFactor::LaurentLFactor(std::vector<XPoly> inverse_factors, long q)
    : inv_(std::move(inverse_factors)), q_(q) {
    for (const auto& f : inv_)
        if (!(f.coeff(0) == SatakePoly(Rat(1))))
            throw PreconditionError("LaurentLFactor: inverse factor without constant term 1");
}

XPoly LaurentLFactor::expand(const std::map<std::string, Rat>& values) const {
    XPoly out = XPoly::constant(SatakePoly(Rat(1)));
    for (const auto& f : inv_) out = out * f.substitute(values);
    return out;
}

std::complex<double> LaurentLFactor::value_at(
    double s, const std::map<std::string, std::complex<double>>& vars) const {
    std::map<std::string, std::complex<double>> all = vars;
    all["u"] = std::pow(static_cast<double>(q_), -0.5);
    std::complex<double> x = std::pow(static_cast<double>(q_), -s);
    std::complex<double> out = 1.0;
    for (const auto& f : inv_) {
        std::complex<double> v = f.eval(all, x);
        if (std::abs(v) < 1e-14) throw PoleError("L-factor pole at s=" + std::to_string(s));
        out /= v;
    }
    return out;
}

std::string LaurentLFactor::str() const {
    std::string out;
    for (const auto& f : inv_) {
        if (!out.empty()) out += " ";
        out += "(" + f.str() + ")^-1";
    }
    return out;
}

std::complex<double> FactorProduct::eval(
    const std::map<std::string, std::complex<double>>& vars) const {
    std::complex<double> out = scalar.to_double();
    for (const auto& p : num) out *= p.eval(vars);
    for (const auto& p : den) {
        std::complex<double> v = p.eval(vars);
        if (std::abs(v) < 1e-300) throw PoleError("FactorProduct: zero denominator factor");
        out /= v;
    }
    return out;
}

std::string FactorProduct::str() const {
    std::string out = scalar.str();
    for (const auto& p : num) out += " * (" + p.str() + ")";
    for (const auto& p : den) out += " / (" + p.str() + ")";
    return out;
}

} // namespace trizeta
