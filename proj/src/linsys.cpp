#include "twistor/linsys.hpp"

#include <algorithm>

#include "twistor/plucker.hpp"
#include "twistor/twistor_core.hpp"

namespace twistor {

namespace {

ExactRow row_of(const ExactPoint& p) { return {p[0], p[1], p[2], p[3]}; }

// powers p_i^e for e = 0..d
std::array<std::vector<GaussianRational>, 4> point_powers(const ExactPoint& p, int d) {
    std::array<std::vector<GaussianRational>, 4> pw;
    for (int i = 0; i < 4; ++i) {
        pw[i].assign(static_cast<std::size_t>(std::max(d, 0) + 1), GaussianRational(1));
        for (int e = 1; e <= d; ++e) pw[i][e] = pw[i][e - 1] * p[i];
    }
    return pw;
}

}  // namespace

bool point_on_line(const ExactPoint& p, const ExactLine& line) {
    return exact_rank({row_of(line.a()), row_of(line.b()), row_of(p)}) == 2;
}

void Configuration::validate() const {
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            if (incidence(lines[i].plucker(), lines[j].plucker()).is_zero())
                throw InvalidInput("configuration lines " + std::to_string(i) + " and " + std::to_string(j) + " meet");
    std::vector<ExactPoint> all = fat_points;
    all.insert(all.end(), simple_points.begin(), simple_points.end());
    for (const auto& p : all)
        if (is_zero_vector(p)) throw InvalidInput("zero point in configuration");
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            if (same_point(all[i], all[j])) throw InvalidInput("configuration points coincide");
    for (const auto& p : simple_points)
        for (const auto& l : lines)
            if (point_on_line(p, l)) throw InvalidInput("simple point lies on a configuration line");
}

ExactMatrix line_rows(const ExactLine& line, int d) { return restriction_matrix(line.a(), line.b(), d); }

ExactMatrix fat_point_rows(const ExactPoint& q, int d) {
    if (d < 1) throw InvalidInput("fat point conditions need d >= 1");
    const auto& ex = exponents(d);
    auto pw = point_powers(q, d);
    ExactMatrix rows(4, ExactRow(ex.size(), GaussianRational(0)));
    for (std::size_t k = 0; k < ex.size(); ++k) {
        const auto& a = ex[k];
        for (int i = 0; i < 4; ++i) {
            if (a[i] == 0) continue;
            GaussianRational v(a[i]);
            for (int j = 0; j < 4; ++j) v *= pw[j][a[j] - (i == j ? 1 : 0)];
            rows[i][k] = v;
        }
    }
    return rows;
}

ExactMatrix embedded_fat_point_rows(const ExactPoint& q, const ExactLine& line, int d) {
    if (!point_on_line(q, line)) throw InvalidInput("fat point is not on the given line");
    ExactMatrix partial_rows = fat_point_rows(q, d);
    // two coordinate directions completing the line to a basis of C^4
    for (int k = 0; k < 4; ++k)
        for (int l = k + 1; l < 4; ++l) {
            ExactPoint ek{0, 0, 0, 0}, el{0, 0, 0, 0};
            ek[k] = 1;
            el[l] = 1;
            if (exact_rank({row_of(line.a()), row_of(line.b()), row_of(ek), row_of(el)}) == 4)
                return {partial_rows[k], partial_rows[l]};
        }
    throw InvariantViolation("no complement to a line in C^4");
}

ExactMatrix simple_point_rows(const ExactPoint& p, int d) {
    const auto& ex = exponents(d);
    auto pw = point_powers(p, d);
    ExactRow row(ex.size());
    for (std::size_t k = 0; k < ex.size(); ++k) {
        const auto& a = ex[k];
        row[k] = pw[0][a[0]] * pw[1][a[1]] * pw[2][a[2]] * pw[3][a[3]];
    }
    return {row};
}

ExactMatrix condition_matrix(const Configuration& config, int d) {
    config.validate();
    ExactMatrix m;
    auto append = [&m](ExactMatrix rows) {
        for (auto& r : rows) m.push_back(std::move(r));
    };
    for (const auto& l : config.lines) append(line_rows(l, d));
    for (const auto& q : config.fat_points) {
        auto host = std::find_if(config.lines.begin(), config.lines.end(),
                                 [&q](const ExactLine& l) { return point_on_line(q, l); });
        append(host == config.lines.end() ? fat_point_rows(q, d) : embedded_fat_point_rows(q, *host, d));
    }
    for (const auto& p : config.simple_points) append(simple_point_rows(p, d));
    return m;
}

CohomologyReport cohomology(const Configuration& config, int d) {
    if (d < 0) throw InvalidInput("negative degree");
    ExactMatrix m = condition_matrix(config, d);
    CohomologyReport r;
    r.d = d;
    r.cols = monomial_count(d);
    r.rows = m.size();
    r.rank = m.empty() ? 0 : exact_rank(m);
    r.h0 = r.cols - r.rank;
    r.h1 = r.rows - r.rank;
    return r;
}

LinearSystem linear_system(const Configuration& config, int d) {
    LinearSystem out;
    out.report = cohomology(config, d);
    ExactMatrix m = condition_matrix(config, d);
    std::vector<ExactRow> basis;
    if (m.empty()) {
        for (std::size_t k = 0; k < out.report.cols; ++k) {
            ExactRow e(out.report.cols, GaussianRational(0));
            e[k] = 1;
            basis.push_back(std::move(e));
        }
    } else {
        basis = nullspace(std::move(m), out.report.cols);
    }
    if (basis.size() != out.report.h0) throw InvariantViolation("nullspace dimension disagrees with rank");
    for (auto& v : basis) out.basis.emplace_back(d, std::move(v));
    for (const auto& f : out.basis)
        for (const auto& l : config.lines)
            if (!restrict_to_line(f, l).is_zero()) throw InvariantViolation("basis element does not contain a line");
    return out;
}

std::int64_t nu(NuKind kind, int d) {
    if (d < 0) throw InvalidInput("nu of negative degree");
    switch (kind) {
        case NuKind::Plain:
            return (binomial(d + 3, 3) - 1) / (d + 1);
        case NuKind::Normal:
            return d >= 2 ? nu(NuKind::Plain, d - 1) : 0;
        case NuKind::Smooth:
            return d >= 4 ? nu(NuKind::Plain, d - 3) : 0;
        case NuKind::JInvariant:
            return d >= 9 ? nu(NuKind::Plain, d - 9) : 0;
    }
    return 0;
}

std::int64_t nu_closed_form(int d) {
    std::int64_t dd = d;
    return d % 3 == 2 ? (dd * dd + 5 * dd + 4) / 6 : (dd * dd + 5 * dd) / 6;
}

std::int64_t nu_smooth_closed_form(int d) {
    std::int64_t dd = d;
    return d % 3 == 2 ? (dd * dd - dd - 2) / 6 : (dd - 3) * (dd + 2) / 6;
}

ExactForm general_member(const std::vector<ExactForm>& basis, Rng& rng, std::int64_t height) {
    if (basis.empty()) throw MathRefusal("general_member of an empty linear system");
    if (basis.size() == 1) return basis.front();
    for (int attempt = 0; attempt < 20; ++attempt) {
        ExactForm f(basis.front().degree());
        for (const auto& b : basis) f = f + GaussianRational(rng.integer(-height, height)) * b;
        if (!f.is_zero()) return f;
    }
    throw InvariantViolation("general_member drew the zero form 20 times");
}

bool is_base_point(const std::vector<ExactForm>& basis, const ExactPoint& p) {
    if (basis.empty()) throw MathRefusal("is_base_point on an empty linear system");
    return std::all_of(basis.begin(), basis.end(), [&p](const ExactForm& f) { return f.evaluate(p).is_zero(); });
}

namespace {

bool contains_point(const std::vector<ExactPoint>& pts, const ExactPoint& p) {
    return std::any_of(pts.begin(), pts.end(), [&p](const ExactPoint& x) { return same_point(x, p); });
}

}  // namespace

bool is_j_invariant(const Configuration& config) {
    for (const auto& l : config.lines) {
        ExactPlucker jl = j_plucker(l.plucker());
        bool found = std::any_of(config.lines.begin(), config.lines.end(),
                                 [&jl](const ExactLine& m) { return same_plucker(m.plucker(), jl); });
        if (!found) return false;
    }
    for (const auto& p : config.fat_points)
        if (!contains_point(config.fat_points, j_point(p))) return false;
    for (const auto& p : config.simple_points)
        if (!contains_point(config.simple_points, j_point(p))) return false;
    return true;
}

namespace {

JInvariantMember finish(ExactForm f, JStrategy strategy, std::size_t h0, std::vector<ExactPoint> added) {
    JInvariantMember out;
    out.form = normalize_j_invariant(f, out.factor);
    out.strategy = strategy;
    out.initial_h0 = h0;
    out.added_points = std::move(added);
    return out;
}

}  // namespace

JInvariantMember j_invariant_member(const Configuration& config, int d, std::uint64_t seed, JStrategy strategy,
                                    std::int64_t height) {
    if (!is_j_invariant(config)) throw InvalidInput("configuration is not j-invariant");
    if (d % 2 != 0)
        throw MathRefusal("no j-invariant form of odd degree exists: j(f) = a f would force |a|^2 = -1");
    LinearSystem sys = linear_system(config, d);
    std::size_t h0 = sys.report.h0;
    if (h0 == 0) throw MathRefusal("h0 = 0: the linear system is empty");
    Rng rng(seed);

    if (strategy == JStrategy::Auto) strategy = h0 % 2 == 1 ? JStrategy::Augment : JStrategy::Symmetrize;

    if (strategy == JStrategy::Symmetrize) {
        for (int attempt = 0; attempt < 20; ++attempt) {
            ExactForm f = general_member(sys.basis, rng, height);
            ExactForm g = f + j_form(f);
            if (!g.is_zero()) return finish(std::move(g), JStrategy::Symmetrize, h0, {});
        }
        throw InvariantViolation("symmetrization produced the zero form 20 times");
    }

    if (h0 % 2 == 0)
        throw MathRefusal("augmentation needs odd h0, got h0 = " + std::to_string(h0) +
                          " (each pair {p, j(p)} removes two conditions)");
    Configuration aug = config;
    std::vector<ExactPoint> added;
    std::size_t current = h0;
    int failures = 0;
    while (current > 1) {
        ExactPoint p = random_point(rng, height);
        Configuration trial = aug;
        trial.simple_points.push_back(p);
        trial.simple_points.push_back(j_point(p));
        std::size_t next = 0;
        try {
            next = cohomology(trial, d).h0;
        } catch (const InvalidInput&) {
            next = current;  // point on a line or repeated; resample
        }
        if (next + 2 != current) {
            if (++failures > 20) throw InvariantViolation("augmentation failed to cut h0 by two 20 times");
            continue;
        }
        aug = std::move(trial);
        added.push_back(p);
        added.push_back(j_point(p));
        current = next;
    }
    LinearSystem last = linear_system(aug, d);
    GaussianRational factor;
    if (!j_proportionality(last.basis.front(), factor))
        throw InvariantViolation("unique member of a j-invariant system is not j-invariant");
    return finish(last.basis.front(), JStrategy::Augment, h0, std::move(added));
}

PlanarReport planar_cohomology(const std::vector<PlanePoint>& points, int t) {
    if (t < 0) throw InvalidInput("negative degree");
    std::vector<std::array<int, 3>> mons;
    for (int a = t; a >= 0; --a)
        for (int b = t - a; b >= 0; --b) mons.push_back({a, b, t - a - b});
    ExactMatrix m;
    for (const auto& p : points) {
        ExactRow row;
        for (const auto& e : mons) {
            GaussianRational v = 1;
            for (int i = 0; i < 3; ++i)
                for (int k = 0; k < e[i]; ++k) v *= p[i];
            row.push_back(v);
        }
        m.push_back(std::move(row));
    }
    PlanarReport r;
    r.cols = mons.size();
    r.rows = points.size();
    r.rank = m.empty() ? 0 : exact_rank(m);
    r.h0 = r.cols - r.rank;
    r.h1 = r.rows - r.rank;
    return r;
}

PlanarReport bidegree_cohomology(const std::vector<std::pair<P1Point, P1Point>>& points, int a, int b) {
    if (a < 0 || b < 0) throw InvalidInput("negative bidegree");
    ExactMatrix m;
    for (const auto& [x, y] : points) {
        ExactRow row;
        for (int i = a; i >= 0; --i)
            for (int j = b; j >= 0; --j) {
                GaussianRational v = 1;
                for (int k = 0; k < i; ++k) v *= x[0];
                for (int k = 0; k < a - i; ++k) v *= x[1];
                for (int k = 0; k < j; ++k) v *= y[0];
                for (int k = 0; k < b - j; ++k) v *= y[1];
                row.push_back(v);
            }
        m.push_back(std::move(row));
    }
    PlanarReport r;
    r.cols = static_cast<std::size_t>((a + 1) * (b + 1));
    r.rows = points.size();
    r.rank = m.empty() ? 0 : exact_rank(m);
    r.h0 = r.cols - r.rank;
    r.h1 = r.rows - r.rank;
    return r;
}

}  // namespace twistor
