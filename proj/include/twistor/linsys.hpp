#pragma once

// Linear systems of degree-d surfaces through unions of disjoint lines,
// fat points 2q and simple points, computed from exact condition matrices.

#include <cstdint>
#include <optional>
#include <vector>

#include "twistor/exact_linalg.hpp"
#include "twistor/geometry.hpp"
#include "twistor/polyring.hpp"
#include "twistor/random.hpp"

namespace twistor {

struct Configuration {
    std::vector<ExactLine> lines;
    std::vector<ExactPoint> fat_points;
    std::vector<ExactPoint> simple_points;

    // Throws InvalidInput unless lines are pairwise disjoint, points are
    // pairwise distinct and no simple point lies on a line. A fat point may
    // lie on (at most) one line; it then contributes two normal conditions.
    void validate() const;
};

bool point_on_line(const ExactPoint& p, const ExactLine& line);

// Rows of the condition matrix for one component, as linear functionals on
// the graded-lex coefficient vector of a degree-d form.
ExactMatrix line_rows(const ExactLine& line, int d);
ExactMatrix fat_point_rows(const ExactPoint& q, int d);
// 2q on a line of the configuration: f|L = 0 already implies f(q) = 0 and
// the derivative along L, so only two transverse partials remain.
ExactMatrix embedded_fat_point_rows(const ExactPoint& q, const ExactLine& line, int d);
ExactMatrix simple_point_rows(const ExactPoint& p, int d);

ExactMatrix condition_matrix(const Configuration& config, int d);

struct CohomologyReport {
    int d = 0;
    std::size_t cols = 0;  // C(d+3,3)
    std::size_t rows = 0;  // length of the scheme in degree d
    std::size_t rank = 0;
    std::size_t h0 = 0;  // cols - rank
    std::size_t h1 = 0;  // rows - rank
};

struct LinearSystem {
    CohomologyReport report;
    std::vector<ExactForm> basis;  // filled when requested
};

CohomologyReport cohomology(const Configuration& config, int d);
LinearSystem linear_system(const Configuration& config, int d);

enum class NuKind { Plain, Normal, Smooth, JInvariant };

// floor((C(d+3,3) - 1) / (d+1)) and the shifted variants.
std::int64_t nu(NuKind kind, int d);
inline std::int64_t nu(int d) { return nu(NuKind::Plain, d); }
// (d^2+5d)/6 for d = 0,1 mod 3 and (d^2+5d+4)/6 for d = 2 mod 3.
std::int64_t nu_closed_form(int d);
// (d-3)(d+2)/6 for d = 0,1 mod 3 and (d^2-d-2)/6 for d = 2 mod 3, d >= 3.
std::int64_t nu_smooth_closed_form(int d);

// Random integer combination of the basis with coefficients in [-height, height].
ExactForm general_member(const std::vector<ExactForm>& basis, Rng& rng, std::int64_t height = 10);
bool is_base_point(const std::vector<ExactForm>& basis, const ExactPoint& p);

enum class JStrategy { Auto, Symmetrize, Augment };

struct JInvariantMember {
    ExactForm form;
    GaussianRational factor;  // j_form(form) = factor * form
    JStrategy strategy = JStrategy::Auto;
    std::size_t initial_h0 = 0;
    std::vector<ExactPoint> added_points;  // pairs {p, j(p)} when augmenting
};

// Configuration maps to itself under j (lines twistor or swapped in pairs,
// point sets closed under j_point).
bool is_j_invariant(const Configuration& config);

JInvariantMember j_invariant_member(const Configuration& config, int d, std::uint64_t seed,
                                    JStrategy strategy = JStrategy::Auto, std::int64_t height = 10);

struct PlanarReport {
    std::size_t cols = 0;
    std::size_t rows = 0;
    std::size_t rank = 0;
    std::size_t h0 = 0;
    std::size_t h1 = 0;
};

using PlanePoint = std::array<GaussianRational, 3>;
using P1Point = std::array<GaussianRational, 2>;

// Degree-t plane curves through the given points of P^2.
PlanarReport planar_cohomology(const std::vector<PlanePoint>& points, int t);
// Curves of bidegree (a, b) on P^1 x P^1 through the given points.
PlanarReport bidegree_cohomology(const std::vector<std::pair<P1Point, P1Point>>& points, int a, int b);

}  // namespace twistor
