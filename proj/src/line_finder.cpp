#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "parallel.hpp"
#include "twistor/analysis.hpp"
#include "twistor/random.hpp"

namespace twistor {

namespace {

constexpr std::array<std::array<int, 2>, 6> kCharts = kPluckerPairs;

template <class S>
S plucker_entry(const PluckerVec<S>& t, int a, int b) {
    if (a == b) return S(0);
    int lo = std::min(a, b), hi = std::max(a, b);
    for (int k = 0; k < 6; ++k)
        if (kPluckerPairs[k][0] == lo && kPluckerPairs[k][1] == hi) return a < b ? t[k] : -t[k];
    return S(0);
}

std::array<int, 2> free_columns(int chart) {
    auto [i, j] = kCharts[chart];
    std::array<int, 2> out{};
    for (int c = 0, k = 0; c < 4; ++c)
        if (c != i && c != j) out[k++] = c;
    return out;
}

int best_chart(const ApproxPlucker& t) {
    int best = 0;
    for (int k = 1; k < 6; ++k)
        if (std::abs(t[k]) > std::abs(t[best])) best = k;
    return best;
}

// Row-reduced frame of the chart: r1 = e_i + x_k e_k, r2 = e_j + y_k e_k over
// the two free columns k. Unknown vector (x_k1, x_k2, y_k1, y_k2).
struct Frame {
    ApproxPoint r1{};
    ApproxPoint r2{};
};

Frame frame_of(int chart, const Eigen::Matrix<Complex, 4, 1>& u) {
    auto [i, j] = kCharts[chart];
    auto fc = free_columns(chart);
    Frame fr;
    fr.r1[i] = 1;
    fr.r2[j] = 1;
    fr.r1[fc[0]] = u(0);
    fr.r1[fc[1]] = u(1);
    fr.r2[fc[0]] = u(2);
    fr.r2[fc[1]] = u(3);
    return fr;
}

// Chart coordinates of a line: x_k = P(k, j) / P(i, j), y_k = P(i, k) / P(i, j).
template <class S>
std::array<S, 4> chart_coordinates(const PluckerVec<S>& t, int chart) {
    auto [i, j] = kCharts[chart];
    auto fc = free_columns(chart);
    S pivot = t[chart];
    return {plucker_entry(t, fc[0], j) / pivot, plucker_entry(t, fc[1], j) / pivot, plucker_entry(t, i, fc[0]) / pivot,
            plucker_entry(t, i, fc[1]) / pivot};
}

struct System {
    ApproxForm f;
    std::array<ApproxForm, 4> grad;
};

// Restriction coefficients g_m and their Jacobian with respect to the chart unknowns.
void evaluate(const System& sys, int chart, const Eigen::Matrix<Complex, 4, 1>& u, Eigen::VectorXcd& g,
              Eigen::MatrixXcd& jac) {
    int d = sys.f.degree();
    Frame fr = frame_of(chart, u);
    ApproxBinary r = restrict_to_line(sys.f, fr.r1, fr.r2);
    g.resize(d + 1);
    for (int m = 0; m <= d; ++m) g(m) = r[m];
    jac.setZero(d + 1, 4);
    auto fc = free_columns(chart);
    for (int c = 0; c < 2; ++c) {
        ApproxBinary dk = restrict_to_line(sys.grad[fc[c]], fr.r1, fr.r2);
        // d/dx_k f(s r1 + t r2) = s * (d_k f)(...), d/dy_k = t * (d_k f)(...)
        ApproxBinary ds = dk.times_variable(0);
        ApproxBinary dt = dk.times_variable(1);
        for (int m = 0; m <= d; ++m) {
            jac(m, c) = ds[m];
            jac(m, 2 + c) = dt[m];
        }
    }
}

struct Solution {
    bool ok = false;
    ApproxPlucker plucker;
    double residual = 0;
    bool rank_deficient = false;
};

// Gauss-Newton on all d+1 coefficients in the best chart of the current line.
Solution polish(const System& sys, ApproxPlucker t, int iterations) {
    Eigen::VectorXcd g;
    Eigen::MatrixXcd jac;
    for (int it = 0; it < iterations; ++it) {
        int chart = best_chart(t);
        auto c = chart_coordinates(t, chart);
        Eigen::Matrix<Complex, 4, 1> u(c[0], c[1], c[2], c[3]);
        evaluate(sys, chart, u, g, jac);
        Eigen::Matrix<Complex, 4, 1> step = jac.completeOrthogonalDecomposition().solve(-g);
        u += step;
        Frame fr = frame_of(chart, u);
        t = minors(fr.r1, fr.r2);
        if (step.cwiseAbs().maxCoeff() < 1e-16) break;
    }
    Solution s;
    s.plucker = t;
    s.residual = line_residual(sys.f, t);
    int chart = best_chart(t);
    auto c = chart_coordinates(t, chart);
    evaluate(sys, chart, Eigen::Matrix<Complex, 4, 1>(c[0], c[1], c[2], c[3]), g, jac);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(jac);
    const auto& sv = svd.singularValues();
    s.rank_deficient = sv.size() < 4 || sv(3) < 1e-7 * std::max(1.0, sv(0));
    return s;
}

Solution newton_from(const System& sys, int chart, Eigen::Matrix<Complex, 4, 1> u, int max_iterations) {
    int d = sys.f.degree();
    int eqs = std::min(d + 1, 4);
    Eigen::VectorXcd g;
    Eigen::MatrixXcd jac;
    bool converged = false;
    for (int it = 0; it < max_iterations; ++it) {
        evaluate(sys, chart, u, g, jac);
        Eigen::MatrixXcd js = jac.topRows(eqs);
        Eigen::VectorXcd gs = g.head(eqs);
        Eigen::Matrix<Complex, 4, 1> step;
        if (eqs == 4) {
            auto lu = js.fullPivLu();
            if (lu.rank() < 4) return {};
            step = lu.solve(-gs);
        } else {
            step = js.completeOrthogonalDecomposition().solve(-gs);
        }
        double len = step.cwiseAbs().maxCoeff();
        if (!std::isfinite(len)) return {};
        if (len > 5) step *= 5 / len;
        u += step;
        if (u.cwiseAbs().maxCoeff() > 1e6) return {};
        if (len < 1e-12 * std::max(1.0, u.cwiseAbs().maxCoeff())) {
            converged = true;
            break;
        }
    }
    if (!converged) return {};
    Frame fr = frame_of(chart, u);
    Solution s = polish(sys, minors(fr.r1, fr.r2), 8);
    s.ok = true;
    return s;
}

std::optional<mpq_class> rationalize(double x, std::int64_t max_den, double tol) {
    if (!std::isfinite(x)) return std::nullopt;
    // continued-fraction convergents h/k
    double frac = x;
    mpz_class h_prev = 1, h = static_cast<long>(std::floor(frac));
    mpz_class k_prev = 0, k = 1;
    double rem = frac - std::floor(frac);
    for (int it = 0; it < 64; ++it) {
        mpq_class q(h, k);
        if (std::abs(q.get_d() - x) <= tol * std::max(1.0, std::abs(x))) return q;
        if (rem < 1e-18) break;
        double inv = 1.0 / rem;
        long a = static_cast<long>(std::floor(inv));
        rem = inv - std::floor(inv);
        mpz_class h_next = a * h + h_prev;
        mpz_class k_next = a * k + k_prev;
        if (k_next > max_den) break;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
    }
    return std::nullopt;
}

}  // namespace

double line_residual(const ApproxForm& f, const ApproxPlucker& t) {
    double m = 0;
    for (const auto& c : f.coeffs()) m = std::max(m, std::abs(c));
    if (m == 0) return 0;
    int chart = best_chart(t);
    auto c = chart_coordinates(t, chart);
    Frame fr = frame_of(chart, Eigen::Matrix<Complex, 4, 1>(c[0], c[1], c[2], c[3]));
    ApproxBinary r = restrict_to_line(f, fr.r1, fr.r2);
    double res = 0;
    for (const auto& x : r.coeffs()) res = std::max(res, std::abs(x));
    return res / m;
}

std::optional<ExactLine> rationalize_line(const ApproxPlucker& t, const ExactForm& f, std::int64_t max_den) {
    std::array<int, 6> order{0, 1, 2, 3, 4, 5};
    std::sort(order.begin(), order.end(), [&t](int a, int b) { return std::abs(t[a]) > std::abs(t[b]); });
    for (int chart : order) {
        if (std::abs(t[chart]) < 1e-6 * max_abs(t)) break;
        auto c = chart_coordinates(t, chart);
        std::array<GaussianRational, 4> exact;
        bool ok = true;
        for (int k = 0; k < 4 && ok; ++k) {
            auto re = rationalize(c[k].real(), max_den, 1e-9);
            auto im = rationalize(c[k].imag(), max_den, 1e-9);
            if (!re || !im) ok = false;
            else exact[k] = GaussianRational(*re, *im);
        }
        if (!ok) continue;
        auto [i, j] = kCharts[chart];
        auto fc = free_columns(chart);
        ExactPoint r1{0, 0, 0, 0}, r2{0, 0, 0, 0};
        r1[i] = 1;
        r2[j] = 1;
        r1[fc[0]] = exact[0];
        r1[fc[1]] = exact[1];
        r2[fc[0]] = exact[2];
        r2[fc[1]] = exact[3];
        ExactLine line(r1, r2);
        if (contains_line(f, line)) return line;
    }
    return std::nullopt;
}

LineSearchReport find_lines(const ExactForm& exact_f, LineSearchOptions opts) {
    int d = exact_f.degree();
    if (d < 1) throw InvalidInput("find_lines needs degree >= 1");
    if (opts.starts_per_chart <= 0) opts.starts_per_chart = 200 * d;

    System sys;
    {
        ApproxForm f = to_approx(exact_f);
        double m = 0;
        for (const auto& c : f.coeffs()) m = std::max(m, std::abs(c));
        sys.f = Complex(1.0 / m) * f;
        sys.grad = sys.f.partials();
    }

    int total = 6 * opts.starts_per_chart;
    Rng master(opts.seed);
    std::vector<Solution> results(static_cast<std::size_t>(total));
    detail::parallel_for(total, opts.threads, [&](int idx) {
        int chart = idx / opts.starts_per_chart;
        Rng rng = master.derive(static_cast<std::uint64_t>(idx));
        Eigen::Matrix<Complex, 4, 1> u;
        for (int k = 0; k < 4; ++k) u(k) = rng.complex_normal();
        results[idx] = newton_from(sys, chart, u, opts.max_iterations);
    });

    LineSearchReport out;
    out.options = opts;
    out.starts = total;
    // cluster by projective distance, keeping the best residual per cluster
    std::vector<Solution> kept;
    for (const auto& s : results) {
        if (!s.ok || s.residual >= opts.accept_tol) continue;
        ++out.converged;
        if (s.rank_deficient) out.positive_dimensional = true;
        auto it = std::find_if(kept.begin(), kept.end(), [&](const Solution& k) {
            return projective_distance(k.plucker.p, s.plucker.p) < opts.dedup_tol;
        });
        if (it == kept.end()) kept.push_back(s);
        else if (s.residual < it->residual) *it = s;
    }
    for (auto& s : kept) {
        Solution p = polish(sys, s.plucker, 30);
        if (p.residual < s.residual) s = p;
        LineFound lf;
        lf.plucker = s.plucker;
        lf.residual = s.residual;
        lf.twistor_margin = twistor_margin(s.plucker);
        lf.is_twistor = lf.twistor_margin < 1e-7;
        lf.exact = rationalize_line(s.plucker, exact_f);
        if (lf.exact) lf.exact_twistor = is_twistor(*lf.exact);
        out.lines.push_back(std::move(lf));
    }
    return out;
}

}  // namespace twistor
