#pragma once

// Points and lines of CP^3 over an exact (Q(i)) or floating (complex double)
// scalar, with Plücker coordinates ordered (p01, p02, p03, p12, p13, p23).

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "twistor/errors.hpp"
#include "twistor/gaussian.hpp"

namespace twistor {

template <class S>
using Point3 = std::array<S, 4>;

using ExactPoint = Point3<GaussianRational>;
using ApproxPoint = Point3<Complex>;

inline constexpr const char* kPluckerOrder = "p01,p02,p03,p12,p13,p23";
inline constexpr std::array<std::array<int, 2>, 6> kPluckerPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

// Default tolerance for floating projective comparisons.
inline constexpr double kApproxTol = 1e-9;

template <class S>
struct PluckerVec {
    std::array<S, 6> p{};

    const S& operator[](int k) const { return p[k]; }
    S& operator[](int k) { return p[k]; }
};

using ExactPlucker = PluckerVec<GaussianRational>;
using ApproxPlucker = PluckerVec<Complex>;

template <class S>
bool is_zero_vector(const Point3<S>& z) {
    if constexpr (std::is_same_v<S, GaussianRational>) {
        return std::all_of(z.begin(), z.end(), [](const S& c) { return c.is_zero(); });
    } else {
        return std::all_of(z.begin(), z.end(), [](const S& c) { return c == S(0); });
    }
}

template <class S>
PluckerVec<S> minors(const Point3<S>& a, const Point3<S>& b) {
    PluckerVec<S> out;
    for (int k = 0; k < 6; ++k) {
        auto [i, j] = kPluckerPairs[k];
        out[k] = a[i] * b[j] - a[j] * b[i];
    }
    return out;
}

// p01 p23 - p02 p13 + p03 p12
template <class S>
S klein_form(const PluckerVec<S>& t) {
    return t[0] * t[5] - t[1] * t[4] + t[2] * t[3];
}

// Polarization of the Klein form; zero iff the two lines meet.
template <class S>
S incidence(const PluckerVec<S>& p, const PluckerVec<S>& q) {
    return p[0] * q[5] + p[5] * q[0] - p[1] * q[4] - p[4] * q[1] + p[2] * q[3] + p[3] * q[2];
}

// Involution induced on Gr(2,4) by j_point, computed from the minors of (j(a), j(b)).
template <class S>
PluckerVec<S> j_plucker(const PluckerVec<S>& t) {
    PluckerVec<S> out;
    out[0] = conj_of(t[0]);
    out[1] = conj_of(t[4]);
    out[2] = -conj_of(t[3]);
    out[3] = -conj_of(t[2]);
    out[4] = conj_of(t[1]);
    out[5] = conj_of(t[5]);
    return out;
}

// j[z0,z1,z2,z3] = [-conj z1, conj z0, -conj z3, conj z2]
template <class S>
Point3<S> j_point(const Point3<S>& z) {
    if (is_zero_vector(z)) throw InvalidInput("j_point of the zero vector");
    return {-conj_of(z[1]), conj_of(z[0]), -conj_of(z[3]), conj_of(z[2])};
}

inline double max_abs(const PluckerVec<Complex>& t) {
    double m = 0;
    for (const auto& c : t.p) m = std::max(m, std::abs(c));
    return m;
}

inline double max_abs(const Point3<Complex>& z) {
    double m = 0;
    for (const auto& c : z) m = std::max(m, std::abs(c));
    return m;
}

inline bool is_zero_plucker(const ExactPlucker& t) {
    return std::all_of(t.p.begin(), t.p.end(), [](const GaussianRational& c) { return c.is_zero(); });
}

// Exact projective equality: every 2x2 minor of the stacked pair vanishes.
template <std::size_t N>
bool proportional(const std::array<GaussianRational, N>& x, const std::array<GaussianRational, N>& y) {
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j)
            if (!(x[i] * y[j] - x[j] * y[i]).is_zero()) return false;
    return true;
}

// Floating projective distance: min over phases of |v - e^{i phi} u| for unit
// representatives, i.e. 2 sin(theta/2) for the Hermitian angle theta. Stays
// accurate near zero, unlike sqrt(1 - cos^2).
template <std::size_t N>
double projective_distance(const std::array<Complex, N>& x, const std::array<Complex, N>& y) {
    double nx = 0, ny = 0;
    Complex dot = 0;
    for (std::size_t i = 0; i < N; ++i) {
        nx += std::norm(x[i]);
        ny += std::norm(y[i]);
        dot += std::conj(x[i]) * y[i];
    }
    if (nx == 0 || ny == 0) return 2.0;
    Complex phase = std::abs(dot) > 0 ? dot / std::abs(dot) : Complex(1);
    double sx = 1 / std::sqrt(nx), sy = 1 / std::sqrt(ny);
    double acc = 0;
    for (std::size_t i = 0; i < N; ++i) acc += std::norm(y[i] * sy - phase * x[i] * sx);
    return std::sqrt(acc);
}

inline bool same_plucker(const ExactPlucker& x, const ExactPlucker& y) { return proportional(x.p, y.p); }
inline bool same_plucker(const ApproxPlucker& x, const ApproxPlucker& y, double tol = kApproxTol) {
    return projective_distance(x.p, y.p) < tol;
}
inline bool same_point(const ExactPoint& x, const ExactPoint& y) { return proportional(x, y); }

template <class S>
Point3<Complex> to_approx(const Point3<S>& z) {
    return {to_complex(z[0]), to_complex(z[1]), to_complex(z[2]), to_complex(z[3])};
}

template <class S>
PluckerVec<Complex> to_approx(const PluckerVec<S>& t) {
    PluckerVec<Complex> out;
    for (int k = 0; k < 6; ++k) out[k] = to_complex(t[k]);
    return out;
}

// Projective line spanned by two independent points; Plücker vector cached.
template <class S>
class Line3 {
public:
    Line3(Point3<S> a, Point3<S> b) : a_(std::move(a)), b_(std::move(b)), plucker_(minors(a_, b_)) {
        if constexpr (std::is_same_v<S, GaussianRational>) {
            if (is_zero_plucker(plucker_)) throw InvalidInput("line spanned by dependent points");
        } else {
            if (max_abs(plucker_) <= 1e-14 * max_abs(a_) * max_abs(b_))
                throw InvalidInput("line spanned by numerically dependent points");
        }
    }

    const Point3<S>& a() const { return a_; }
    const Point3<S>& b() const { return b_; }
    const PluckerVec<S>& plucker() const { return plucker_; }

    // s*a + t*b
    Point3<S> point_at(const S& s, const S& t) const {
        return {s * a_[0] + t * b_[0], s * a_[1] + t * b_[1], s * a_[2] + t * b_[2], s * a_[3] + t * b_[3]};
    }

private:
    Point3<S> a_;
    Point3<S> b_;
    PluckerVec<S> plucker_;
};

using ExactLine = Line3<GaussianRational>;
using ApproxLine = Line3<Complex>;

template <class S>
Line3<Complex> to_approx(const Line3<S>& l) {
    return {to_approx(l.a()), to_approx(l.b())};
}

// The line with Plücker vector t. Uses the columns P e_i, P e_j of the
// antisymmetric Plücker matrix, where p_ij is the pivot coordinate.
template <class S>
Line3<S> line_from_plucker(const PluckerVec<S>& t) {
    int pivot = -1;
    if constexpr (std::is_same_v<S, GaussianRational>) {
        for (int k = 0; k < 6; ++k)
            if (!t[k].is_zero()) {
                pivot = k;
                break;
            }
    } else {
        double best = 0;
        for (int k = 0; k < 6; ++k)
            if (std::abs(t[k]) > best) {
                best = std::abs(t[k]);
                pivot = k;
            }
    }
    if (pivot < 0) throw InvalidInput("zero Plücker vector");
    std::array<std::array<S, 4>, 4> m{};
    for (int k = 0; k < 6; ++k) {
        auto [i, j] = kPluckerPairs[k];
        m[i][j] = t[k];
        m[j][i] = -t[k];
    }
    auto [i, j] = kPluckerPairs[pivot];
    // m = a b^T - b a^T, so column c of m is a*b_c - b*a_c.
    Point3<S> u{m[0][j], m[1][j], m[2][j], m[3][j]};
    Point3<S> v{m[0][i], m[1][i], m[2][i], m[3][i]};
    return {u, v};
}

template <class S>
std::string point_to_string(const Point3<S>& z) {
    std::string out = "[";
    for (int i = 0; i < 4; ++i) {
        if (i) out += ", ";
        if constexpr (std::is_same_v<S, GaussianRational>)
            out += z[i].to_string();
        else
            out += std::to_string(z[i].real()) + (z[i].imag() < 0 ? "" : "+") + std::to_string(z[i].imag()) + "i";
    }
    return out + "]";
}

}  // namespace twistor
