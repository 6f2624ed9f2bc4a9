#include "twistor/plucker.hpp"

#include <cmath>

namespace twistor {

bool is_twistor(const ExactPlucker& t) { return proportional(j_plucker(t).p, t.p); }
bool is_twistor(const ExactLine& line) { return is_twistor(line.plucker()); }

double twistor_margin(const ApproxPlucker& t) {
    // |v - phase u| = sqrt(2 - 2|<u, v>|) = sqrt(2) * sigma_2
    return projective_distance(t.p, j_plucker(t).p) / std::sqrt(2.0);
}

namespace {

// Row of the linear functional q -> incidence(p, q).
ExactRow incidence_row(const ExactPlucker& p) { return {p[5], -p[4], p[3], p[2], -p[1], p[0]}; }

ExactPlucker from_row(const ExactRow& v) {
    ExactPlucker t;
    for (int k = 0; k < 6; ++k) t[k] = v[k];
    return t;
}

ExactPlucker combine(const GaussianRational& l, const ExactPlucker& u, const GaussianRational& m,
                     const ExactPlucker& v) {
    ExactPlucker t;
    for (int k = 0; k < 6; ++k) t[k] = l * u[k] + m * v[k];
    return t;
}

void require_disjoint(const std::vector<ExactLine>& lines) {
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            if (incidence(lines[i].plucker(), lines[j].plucker()).is_zero())
                throw InvalidInput("input lines " + std::to_string(i) + " and " + std::to_string(j) + " meet");
}

}  // namespace

TransversalResult transversals(const std::vector<ExactLine>& lines) {
    require_disjoint(lines);
    ExactMatrix m;
    for (const auto& l : lines) m.push_back(incidence_row(l.plucker()));
    auto kernel = nullspace(m, 6);

    TransversalResult out;
    for (const auto& v : kernel) out.kernel.push_back(from_row(v));

    if (kernel.size() >= 3) {
        // a conic (or more) of the Klein quadric inside P(K)
        out.kind = TransversalResult::Kind::Infinite;
        return out;
    }
    if (kernel.size() == 1) {
        const ExactPlucker& u = out.kernel[0];
        if (klein_form(u).is_zero()) {
            out.count = 1;
            out.exact_lines.push_back(line_from_plucker(u));
        }
        return out;
    }
    if (kernel.empty()) return out;

    const ExactPlucker& u = out.kernel[0];
    const ExactPlucker& v = out.kernel[1];
    // Klein(l u + m v) = a l^2 + b l m + c m^2
    GaussianRational a = klein_form(u);
    GaussianRational b = incidence(u, v);
    GaussianRational c = klein_form(v);
    if (a.is_zero() && b.is_zero() && c.is_zero()) {
        out.kind = TransversalResult::Kind::Infinite;
        return out;
    }
    GaussianRational disc = b * b - GaussianRational(4) * a * c;
    out.discriminant = disc;

    std::vector<std::pair<GaussianRational, GaussianRational>> roots;  // (l, m)
    GaussianRational root;
    out.discriminant_is_square = gaussian_sqrt(disc, root);
    if (a.is_zero()) {
        // m (b l + c m) = 0
        roots.emplace_back(1, 0);
        if (!b.is_zero()) roots.emplace_back(-c, b);
    } else if (out.discriminant_is_square) {
        GaussianRational two_a = GaussianRational(2) * a;
        roots.emplace_back(-b + root, two_a);
        if (!disc.is_zero()) roots.emplace_back(-b - root, two_a);
    }

    if (!roots.empty()) {
        for (const auto& [l, mu] : roots) out.exact_lines.push_back(line_from_plucker(combine(l, u, mu, v)));
        out.count = static_cast<int>(out.exact_lines.size());
        return out;
    }

    // Irrational conjugate pair: two distinct transversals.
    Complex ca = a.to_complex(), cb = b.to_complex(), sq = std::sqrt(disc.to_complex());
    for (Complex r : {(-cb + sq) / (2.0 * ca), (-cb - sq) / (2.0 * ca)}) {
        ApproxPlucker t;
        for (int k = 0; k < 6; ++k) t[k] = r * u[k].to_complex() + v[k].to_complex();
        out.approx_lines.push_back(line_from_plucker(t));
    }
    out.count = 2;
    return out;
}

ExactMatrix line_conditions(const std::vector<ExactLine>& lines, int d) {
    ExactMatrix m;
    for (const auto& l : lines) {
        auto rows = restriction_matrix(l.a(), l.b(), d);
        for (auto& r : rows) m.push_back(std::move(r));
    }
    return m;
}

ExactForm quadric_through_three(const ExactLine& l1, const ExactLine& l2, const ExactLine& l3) {
    require_disjoint({l1, l2, l3});
    auto basis = nullspace(line_conditions({l1, l2, l3}, 2), monomial_count(2));
    if (basis.size() != 1)
        throw InvalidInput("quadric through three lines is not unique (nullspace dimension " +
                           std::to_string(basis.size()) + ")");
    return {2, basis.front()};
}

ExactMatrix quadric_matrix(const ExactForm& q) {
    if (q.degree() != 2) throw InvalidInput("quadric_matrix needs a degree-2 form");
    ExactMatrix a(4, ExactRow(4, GaussianRational(0)));
    GaussianRational half(mpq_class(1, 2));
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            Exponent e{0, 0, 0, 0};
            e[i] += 1;
            e[j] += 1;
            const auto& c = q.coeff(e);
            if (i == j) {
                a[i][i] = c;
            } else {
                a[i][j] = c * half;
                a[j][i] = a[i][j];
            }
        }
    return a;
}

bool is_smooth_quadric(const ExactForm& q) { return !determinant(quadric_matrix(q)).is_zero(); }

namespace {

GaussianRational bilinear(const ExactMatrix& a, const ExactPoint& x, const ExactPoint& y) {
    GaussianRational s = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!a[i][j].is_zero()) s += x[i] * a[i][j] * y[j];
    return s;
}

ExactPoint to_point(const ExactRow& v) { return {v[0], v[1], v[2], v[3]}; }

ExactPoint axpy(const GaussianRational& s, const ExactPoint& u, const GaussianRational& t, const ExactPoint& v) {
    return {s * u[0] + t * v[0], s * u[1] + t * v[1], s * u[2] + t * v[2], s * u[3] + t * v[3]};
}

}  // namespace

RulingPair ruling_lines_at(const ExactForm& q, const ExactPoint& x) {
    ExactMatrix a = quadric_matrix(q);
    if (determinant(a).is_zero()) throw InvalidInput("ruling_lines_at needs a smooth quadric");
    if (!q.evaluate(x).is_zero()) throw InvalidInput("point is not on the quadric");

    // Tangent plane {w : x^T A w = 0}; pick u, v completing x to a basis of it.
    ExactRow g(4);
    for (int j = 0; j < 4; ++j) {
        g[j] = 0;
        for (int i = 0; i < 4; ++i) g[j] += x[i] * a[i][j];
    }
    auto plane = nullspace(ExactMatrix{g}, 4);
    std::vector<ExactPoint> complement;
    for (const auto& w : plane) {
        ExactMatrix trial{ExactRow(x.begin(), x.end())};
        for (const auto& c : complement) trial.push_back(ExactRow(c.begin(), c.end()));
        trial.push_back(w);
        if (exact_rank(trial) == trial.size()) complement.push_back(to_point(w));
        if (complement.size() == 2) break;
    }
    if (complement.size() != 2) throw InvariantViolation("tangent plane basis not found");
    const ExactPoint& u = complement[0];
    const ExactPoint& v = complement[1];

    // Q(x + s u + t v) = Q(u) s^2 + 2 B(u, v) s t + Q(v) t^2
    GaussianRational qa = bilinear(a, u, u);
    GaussianRational qb = bilinear(a, u, v);
    GaussianRational qc = bilinear(a, v, v);
    RulingPair out;
    out.discriminant = qb * qb - qa * qc;

    std::vector<std::pair<GaussianRational, GaussianRational>> dirs;
    GaussianRational root;
    if (qa.is_zero()) {
        dirs.emplace_back(1, 0);
        dirs.emplace_back(-qc, GaussianRational(2) * qb);
    } else if (gaussian_sqrt(out.discriminant, root)) {
        dirs.emplace_back(-qb + root, qa);
        dirs.emplace_back(-qb - root, qa);
    }
    if (!dirs.empty()) {
        for (const auto& [s, t] : dirs) out.exact.emplace_back(x, axpy(s, u, t, v));
        for (const auto& l : out.exact) out.approx.push_back(to_approx(l));
        return out;
    }
    Complex sq = std::sqrt(out.discriminant.to_complex());
    for (Complex s : {-qb.to_complex() + sq, -qb.to_complex() - sq}) {
        ApproxPoint dir;
        for (int i = 0; i < 4; ++i) dir[i] = s * u[i].to_complex() + qa.to_complex() * v[i].to_complex();
        out.approx.emplace_back(to_approx(x), dir);
    }
    return out;
}

}  // namespace twistor
