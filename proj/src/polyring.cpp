#include "twistor/polyring.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace twistor {

std::int64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

const std::vector<Exponent>& exponents(int d) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<std::vector<Exponent>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[d];
    if (!slot) {
        slot = std::make_unique<std::vector<Exponent>>();
        for (int a0 = d; a0 >= 0; --a0)
            for (int a1 = d - a0; a1 >= 0; --a1)
                for (int a2 = d - a0 - a1; a2 >= 0; --a2) slot->push_back({a0, a1, a2, d - a0 - a1 - a2});
    }
    return *slot;
}

std::size_t monomial_position(const Exponent& alpha) {
    int d = alpha[0] + alpha[1] + alpha[2] + alpha[3];
    std::int64_t pos = 0;
    for (int v = alpha[0] + 1; v <= d; ++v) pos += binomial(d - v + 2, 2);
    int r = d - alpha[0];
    for (int v = alpha[1] + 1; v <= r; ++v) pos += r - v + 1;
    pos += (r - alpha[1]) - alpha[2];
    return static_cast<std::size_t>(pos);
}

bool j_proportionality(const ExactForm& f, GaussianRational& factor) {
    if (f.is_zero()) return false;
    ExactForm g = j_form(f);
    std::size_t pivot = 0;
    while (f.coeffs()[pivot].is_zero()) ++pivot;
    factor = g.coeffs()[pivot] / f.coeffs()[pivot];
    for (std::size_t k = 0; k < f.coeffs().size(); ++k)
        if (g.coeffs()[k] != factor * f.coeffs()[k]) return false;
    return !factor.is_zero();
}

ExactForm normalize_j_invariant(const ExactForm& f, GaussianRational& factor) {
    if (!j_proportionality(f, factor)) throw InvalidInput("form is not j-invariant");
    if (factor.norm() != 1) return f;
    // j(l f) = conj(l) a f, so l = 1 + a (or i when a = -1) gives j(l f) = l f.
    GaussianRational scale = factor == GaussianRational(-1) ? GaussianRational::i() : GaussianRational(1) + factor;
    ExactForm out = scale * f;
    factor = 1;
    return out;
}

void trim(UPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly poly_rem(UPoly a, const UPoly& b) {
    trim(a);
    if (b.empty()) throw InvalidInput("polynomial division by zero");
    GaussianRational lead_inv = b.back().inverse();
    while (a.size() >= b.size()) {
        GaussianRational q = a.back() * lead_inv;
        std::size_t shift = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= q * b[k];
        a.pop_back();
        trim(a);
    }
    return a;
}

UPoly poly_gcd(UPoly a, UPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        UPoly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    GaussianRational lead_inv = a.back().inverse();
    for (auto& c : a) c *= lead_inv;
    return a;
}

ExactBinary binary_gcd(const std::vector<ExactBinary>& forms) {
    // Dehomogenize at t = 1: c_m s^(d-m) t^m -> c_m x^(d-m). A degree drop of
    // the univariate polynomial is a root at [1:0].
    bool any = false;
    int inf_mult = 0;
    UPoly g;
    for (const auto& f : forms) {
        if (f.is_zero()) continue;
        UPoly p(static_cast<std::size_t>(f.degree() + 1));
        for (int m = 0; m <= f.degree(); ++m) p[f.degree() - m] = f[m];
        trim(p);
        int drop = f.degree() - static_cast<int>(p.size() - 1);
        if (!any) {
            g = poly_gcd(p, {});
            if (g.empty()) g = p;
            inf_mult = drop;
            any = true;
        } else {
            g = poly_gcd(g, p);
            inf_mult = std::min(inf_mult, drop);
        }
    }
    if (!any) throw InvalidInput("binary_gcd of zero forms only");
    // normalize the first-pass polynomial as well
    g = poly_gcd(g, {});
    int deg = static_cast<int>(g.size() - 1) + inf_mult;
    ExactBinary out(deg);
    // x^e (finite part) times t^inf_mult: coefficient of s^e t^(deg - e)
    for (std::size_t e = 0; e < g.size(); ++e) out[deg - static_cast<int>(e)] = g[e];
    return out;
}

}  // namespace twistor
