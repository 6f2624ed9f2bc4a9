#include "twistor/analysis.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "parallel.hpp"
#include "twistor/linsys.hpp"
#include "twistor/random.hpp"

namespace twistor {

bool contains_line(const ExactForm& f, const ExactLine& line) { return restrict_to_line(f, line).is_zero(); }

bool smooth_along_line(const ExactForm& f, const ExactLine& line) {
    if (!contains_line(f, line)) throw InvalidInput("smooth_along_line: the line is not on the surface");
    if (f.degree() == 0) throw InvalidInput("smooth_along_line: degree-0 form");
    std::vector<ExactBinary> restricted;
    for (const auto& p : f.partials()) restricted.push_back(restrict_to_line(p, line));
    bool all_zero = std::all_of(restricted.begin(), restricted.end(), [](const ExactBinary& b) { return b.is_zero(); });
    if (all_zero) return false;  // singular along the whole line
    return binary_gcd(restricted).degree() == 0;
}

std::string SingularityProbe::summary() const {
    if (candidates.empty()) return "no singularity found after " + std::to_string(starts) + " starts";
    return std::to_string(candidates.size()) + " singular point candidate(s) after " + std::to_string(starts) +
           " starts";
}

namespace {

ApproxForm normalized(const ApproxForm& f) {
    double m = 0;
    for (const auto& c : f.coeffs()) m = std::max(m, std::abs(c));
    if (m == 0) throw InvalidInput("zero form");
    return Complex(1.0 / m) * f;
}

struct ProbeStart {
    bool found = false;
    SingularCandidate cand;
};

double gradient_residual(const std::array<ApproxForm, 4>& grad, const ApproxPoint& z) {
    double scale = max_abs(z);
    ApproxPoint w;
    for (int i = 0; i < 4; ++i) w[i] = z[i] / scale;
    double r = 0;
    for (const auto& g : grad) r = std::max(r, std::abs(g.evaluate(w)));
    return r;
}

}  // namespace

SingularityProbe singularity_probe(const ApproxForm& input, int n_starts, std::uint64_t seed, double tol,
                                   int threads) {
    if (input.degree() < 2) throw InvalidInput("singularity_probe needs degree >= 2");
    ApproxForm f = normalized(input);
    std::array<ApproxForm, 4> grad = f.partials();
    std::array<std::array<ApproxForm, 4>, 4> hess;
    for (int i = 0; i < 4; ++i) hess[i] = grad[i].partials();

    int per_chart = std::max(1, n_starts / 4);
    int total = per_chart * 4;
    Rng master(seed);
    std::vector<ProbeStart> results(static_cast<std::size_t>(total));

    detail::parallel_for(total, threads, [&](int idx) {
        int chart = idx / per_chart;
        Rng rng = master.derive(static_cast<std::uint64_t>(idx));
        ApproxPoint z;
        for (int i = 0; i < 4; ++i) z[i] = i == chart ? Complex(1) : rng.complex_normal();
        std::array<int, 3> free{};
        for (int i = 0, k = 0; i < 4; ++i)
            if (i != chart) free[k++] = i;

        Eigen::Matrix<Complex, 4, 3> jac;
        Eigen::Matrix<Complex, 4, 1> res;
        for (int it = 0; it < 80; ++it) {
            for (int i = 0; i < 4; ++i) {
                res(i) = grad[i].evaluate(z);
                for (int k = 0; k < 3; ++k) jac(i, k) = hess[i][free[k]].evaluate(z);
            }
            Eigen::Matrix<Complex, 3, 1> step = jac.colPivHouseholderQr().solve(-res);
            double len = step.cwiseAbs().maxCoeff();
            if (!std::isfinite(len)) return;
            if (len > 10) step *= 10 / len;
            for (int k = 0; k < 3; ++k) z[free[k]] += step(k);
            if (max_abs(z) > 1e8) return;  // escaping this chart
            if (len < 1e-15 * std::max(1.0, max_abs(z))) break;
        }
        double r = gradient_residual(grad, z);
        if (r < tol) results[idx] = {true, {z, r}};
    });

    SingularityProbe out;
    out.starts = total;
    out.tol = tol;
    out.seed = seed;
    for (const auto& r : results) {
        if (!r.found) continue;
        bool dup = std::any_of(out.candidates.begin(), out.candidates.end(), [&](const SingularCandidate& c) {
            return projective_distance(c.point, r.cand.point) < 1e-6;
        });
        if (!dup) out.candidates.push_back(r.cand);
    }
    return out;
}

SingularityProbe singularity_probe(const ExactForm& f, int n_starts, std::uint64_t seed, double tol, int threads) {
    return singularity_probe(to_approx(f), n_starts, seed, tol, threads);
}

CollinearityReport collinearity_report(const std::vector<ExactLine>& lines) {
    CollinearityReport out;
    out.transversals = transversals(lines);
    out.has_common_transversal =
        out.transversals.kind == TransversalResult::Kind::Infinite || out.transversals.count > 0;
    if (lines.size() == 5) {
        Configuration config;
        config.lines = lines;
        auto report = cohomology(config, 3);
        out.cubic_h0 = report.h0;
        out.lies_on_cubic = report.h0 >= 1;
    }
    return out;
}

SurfaceReport analyze_surface(const ExactForm& f, const std::vector<ExactLine>& input_lines,
                              const SurfaceOptions& opts) {
    SurfaceReport out;
    out.degree = f.degree();
    for (const auto& l : input_lines) out.input_lines_contained.push_back(contains_line(f, l));
    if (!input_lines.empty() && f.degree() >= 1) {
        bool all_in = std::all_of(out.input_lines_contained.begin(), out.input_lines_contained.end(),
                                  [](bool b) { return b; });
        if (all_in) {
            bool smooth = true;
            for (const auto& l : input_lines) smooth = smooth && smooth_along_line(f, l);
            out.smooth_along_input_lines = smooth;
        }
    }
    if (opts.run_lines && f.degree() >= 1) {
        out.line_search = find_lines(f, opts.lines);
        for (const auto& l : out.line_search.lines) out.n_twistor += l.is_twistor ? 1 : 0;
    }
    if (opts.run_singularity && f.degree() >= 2)
        out.singularity = singularity_probe(f, opts.singularity_starts, opts.seed, opts.singularity_tol,
                                            opts.lines.threads);
    if (opts.run_irreducibility && f.degree() >= 1) out.irreducibility = irreducibility_slice_certificate(f, opts.seed);

    bool looks_smooth = out.singularity && out.singularity->candidates.empty();
    int d = f.degree();
    int bound = d == 3 ? 5 : d * d;
    if (looks_smooth && !out.line_search.positive_dimensional && out.n_twistor > bound)
        out.twistor_bound_violated = true;
    return out;
}

}  // namespace twistor
