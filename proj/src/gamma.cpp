#include "trizeta/gamma.hpp"

#include "trizeta/errors.hpp"

#include <map>
#include <optional>

namespace trizeta {

namespace {

PiMonomial gamma_raw(int twice) {
    if (twice % 2 == 0)
        return PiMonomial::from_rat(Rat::factorial(static_cast<unsigned long>(twice / 2 - 1)));
    if (twice > 0) {
        // Gamma(n + 1/2) = (2n)! / (4^n n!) * sqrt(pi)
        int n = (twice - 1) / 2;
        Rat r = Rat::factorial(2 * static_cast<unsigned long>(n)) /
                (Rat(4).pow(n) * Rat::factorial(static_cast<unsigned long>(n)));
        return PiMonomial::make(r, 0, 1);
    }
    // negative half-odd arguments are finite: Gamma(z) = Gamma(z+m) / (z)_m
    int m = (1 - twice) / 2 + 1;
    return gamma_raw(twice + 2 * m) / PiMonomial::from_rat(rising_factorial(HalfInt{twice}, m));
}

// Gamma values recur constantly in the identity sweeps; cache per thread so
// the sweeps parallelize without locking.
const PiMonomial& cached_gamma(int twice) {
    thread_local std::map<int, PiMonomial> cache;
    auto it = cache.find(twice);
    if (it != cache.end()) return it->second;
    return cache.emplace(twice, gamma_raw(twice)).first->second;
}

} // namespace

PiMonomial gamma_value(HalfInt z) {
    if (z.is_nonpositive_integer())
        throw GammaPoleError("Gamma pole at " + z.str());
    return cached_gamma(z.twice);
}

Rat rising_factorial(HalfInt z, int n) {
    Rat out(1);
    for (int i = 0; i < n; ++i) out *= Rat(z.twice + 2 * i, 2);
    return out;
}

PiMonomial GammaRatio::value() const {
    PiMonomial out = PiMonomial::one();
    for (HalfInt a : numerator_args) out = out * gamma_value(a);
    for (HalfInt a : denominator_args) out = out / gamma_value(a);
    return out;
}

PiMonomial GammaRatio::value_with_limits() const {
    std::vector<std::optional<HalfInt>> num(numerator_args.begin(), numerator_args.end());
    std::vector<std::optional<HalfInt>> den(denominator_args.begin(), denominator_args.end());

    PiMonomial out = PiMonomial::one();
    bool vanished = false;
    for (auto& d : den) {
        if (!d->is_nonpositive_integer()) continue;
        // Pair with the numerator argument at the smallest non-negative
        // integer offset: Gamma(d + m) / Gamma(d) -> rising factorial of
        // length m. Smallest-offset choice keeps valid partners available
        // for the remaining denominator poles.
        size_t best = num.size();
        int best_diff = -1;
        for (size_t i = 0; i < num.size(); ++i) {
            if (!num[i]) continue;
            int diff = num[i]->twice - d->twice;
            if (diff % 2 == 0 && diff >= 0 && (best == num.size() || diff < best_diff)) {
                best = i;
                best_diff = diff;
            }
        }
        if (best != num.size()) {
            out = out * PiMonomial::from_rat(rising_factorial(*d, best_diff / 2));
            num[best].reset();
        } else {
            vanished = true; // 1/Gamma(-m) = 0
        }
        d.reset();
    }
    for (const auto& narg : num) {
        if (!narg) continue;
        if (narg->is_nonpositive_integer())
            throw GammaPoleError("unpaired Gamma pole at " + narg->str());
        out = out * gamma_value(*narg);
    }
    if (vanished) return PiMonomial::zero();
    for (const auto& d : den) {
        if (!d) continue;
        out = out / gamma_value(*d);
    }
    return out;
}

} // namespace trizeta
