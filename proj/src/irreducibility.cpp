#include <algorithm>

#include "twistor/analysis.hpp"
#include "twistor/exact_linalg.hpp"
#include "twistor/random.hpp"

namespace twistor {

namespace {

// Plane curves are stored as forms in z0, z1, z2 (named x, y, w here) with
// no z3 dependence.

// Coefficients of y^k, k = 0..n, as polynomials in x after setting w = 1.
std::vector<UPoly> y_coefficients(const ExactForm& h) {
    int n = h.degree();
    std::vector<UPoly> out(static_cast<std::size_t>(n + 1), UPoly(static_cast<std::size_t>(n + 1), GaussianRational(0)));
    const auto& ex = exponents(n);
    for (std::size_t k = 0; k < ex.size(); ++k) {
        const auto& e = ex[k];
        if (e[3] != 0 || h.coeffs()[k].is_zero()) continue;
        out[e[1]][e[0]] += h.coeffs()[k];
    }
    return out;
}

GaussianRational eval_poly(const UPoly& p, const GaussianRational& x) {
    GaussianRational acc = 0;
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
    return acc;
}

// Sylvester determinant in y with formal degree n for both inputs. A common
// root (x0, y0) puts (y0^(2n-1), ..., 1) in the kernel, so the result vanishes
// at x0 whatever the leading coefficients do.
GaussianRational sylvester_det(const std::vector<UPoly>& a, const std::vector<UPoly>& b, const GaussianRational& x) {
    int n = static_cast<int>(a.size()) - 1;
    int size = 2 * n;
    ExactMatrix m(static_cast<std::size_t>(size), ExactRow(static_cast<std::size_t>(size), GaussianRational(0)));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= n; ++k) {
            m[r][r + k] = eval_poly(a[n - k], x);
            m[n + r][r + k] = eval_poly(b[n - k], x);
        }
    return determinant(std::move(m));
}

// Newton interpolation through (xs[i], ys[i]), returned in the monomial basis.
UPoly interpolate(const std::vector<GaussianRational>& xs, std::vector<GaussianRational> ys) {
    std::size_t n = xs.size();
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - level]);
    UPoly out(1, ys[n - 1]);
    for (std::size_t k = n - 1; k-- > 0;) {
        // out = out * (x - xs[k]) + ys[k]
        UPoly next(out.size() + 1, GaussianRational(0));
        for (std::size_t e = 0; e < out.size(); ++e) {
            next[e + 1] += out[e];
            next[e] -= out[e] * xs[k];
        }
        next[0] += ys[k];
        out = std::move(next);
    }
    trim(out);
    return out;
}

UPoly resultant_in_y(const ExactForm& a, const ExactForm& b) {
    auto ca = y_coefficients(a);
    auto cb = y_coefficients(b);
    int n = a.degree();
    if (n == 0) return {GaussianRational(1)};
    std::size_t samples = static_cast<std::size_t>(n * n + 1);
    std::vector<GaussianRational> xs, ys;
    for (std::size_t s = 0; s < samples; ++s) {
        xs.emplace_back(static_cast<long>(s));
        ys.push_back(sylvester_det(ca, cb, xs.back()));
    }
    return interpolate(xs, ys);
}

ExactBinary at_infinity(const ExactForm& h) {
    // w = 0: coefficient of x^(n-m) y^m
    int n = h.degree();
    ExactBinary out(n);
    for (int m = 0; m <= n; ++m) out[m] = h.coeff(Exponent{n - m, m, 0, 0});
    return out;
}

}  // namespace

bool plane_curve_is_smooth(const ExactForm& g, std::string* why) {
    auto fail = [why](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (g.is_zero()) return fail("zero plane section");
    if (g.degree() <= 1) return true;
    std::array<ExactForm, 3> partials{g.partial(0), g.partial(1), g.partial(2)};

    std::vector<ExactBinary> inf;
    for (const auto& p : partials) inf.push_back(at_infinity(p));
    if (std::all_of(inf.begin(), inf.end(), [](const ExactBinary& b) { return b.is_zero(); }))
        return fail("partials vanish on the line w = 0");
    if (binary_gcd(inf).degree() > 0) return fail("common zero of the partials on w = 0");

    UPoly common;
    bool have = false;
    for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
        UPoly r = resultant_in_y(partials[i], partials[j]);
        if (r.empty()) continue;
        common = have ? poly_gcd(common, r) : poly_gcd(r, {});
        have = true;
    }
    if (!have) return fail("all resultants vanish identically");
    if (common.size() > 1) return fail("resultants share a root in the chart w = 1");
    return true;
}

IrreducibilityResult irreducibility_slice_certificate(const ExactForm& f, std::uint64_t seed, int max_planes) {
    if (f.degree() < 1) throw InvalidInput("irreducibility certificate needs degree >= 1");
    IrreducibilityResult out;
    Rng rng(seed);
    auto small_point = [&rng]() {
        for (;;) {
            ExactPoint p;
            for (auto& c : p) c = GaussianRational(rng.integer(-7, 7), rng.integer(-7, 7));
            if (!is_zero_vector(p)) return p;
        }
    };

    if (f.degree() == 1) {
        out.verdict = IrreducibilityResult::Verdict::Certified;
        out.reason = "linear form";
        return out;
    }

    // square-factor screen along a random line
    for (int attempt = 0; attempt < 10; ++attempt) {
        ExactPoint a = small_point(), b = small_point();
        if (same_point(a, b)) continue;
        ExactBinary r = restrict_to_line(f, a, b);
        if (r.is_zero()) continue;
        if (binary_gcd({r.derivative(0), r.derivative(1)}).degree() > 0) {
            out.verdict = IrreducibilityResult::Verdict::Inconclusive;
            out.plane = {a, b};
            out.reason = "restriction to a random line has a repeated root (possible square factor)";
            return out;
        }
        break;
    }

    for (int k = 0; k < max_planes; ++k) {
        ExactPoint a = small_point(), b = small_point(), c = small_point();
        std::array<ExactPoint, 4> cols{a, b, c, ExactPoint{0, 0, 0, 0}};
        ++out.planes_tried;
        out.plane = {a, b, c};
        if (exact_rank({{a[0], a[1], a[2], a[3]}, {b[0], b[1], b[2], b[3]}, {c[0], c[1], c[2], c[3]}}) < 3) {
            out.reason = "degenerate plane";
            continue;
        }
        ExactForm g = substitute_linear(f, cols);
        std::string why;
        if (plane_curve_is_smooth(g, &why)) {
            out.verdict = IrreducibilityResult::Verdict::Certified;
            out.reason = "smooth plane section";
            return out;
        }
        out.reason = why;
    }
    out.verdict = IrreducibilityResult::Verdict::Inconclusive;
    return out;
}

}  // namespace twistor
