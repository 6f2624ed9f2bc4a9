#pragma once

// Surface-level analysis. contains_line, smooth_along_line and the slice
// certificate are exact; find_lines and singularity_probe are multistart
// numerical searches and report what they tried.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twistor/geometry.hpp"
#include "twistor/plucker.hpp"
#include "twistor/polyring.hpp"

namespace twistor {

bool contains_line(const ExactForm& f, const ExactLine& line);
// Max |restriction coefficient| after normalizing f to unit max coefficient
// and the line to its best-conditioned chart frame.
double line_residual(const ApproxForm& f, const ApproxPlucker& line);

// No point of the line where all four partials vanish. Requires the line to
// lie on the surface.
bool smooth_along_line(const ExactForm& f, const ExactLine& line);

struct SingularCandidate {
    ApproxPoint point;
    double residual = 0;
};

struct SingularityProbe {
    std::vector<SingularCandidate> candidates;
    int starts = 0;
    double tol = 0;
    std::uint64_t seed = 0;

    // Fixed wording; an empty list is not a smoothness certificate.
    std::string summary() const;
};

// Multistart Gauss-Newton on the four partials over the affine charts z_c = 1.
// n_starts is the total, split evenly across the four charts.
SingularityProbe singularity_probe(const ExactForm& f, int n_starts, std::uint64_t seed, double tol = 1e-8,
                                   int threads = 1);
SingularityProbe singularity_probe(const ApproxForm& f, int n_starts, std::uint64_t seed, double tol = 1e-8,
                                   int threads = 1);

struct IrreducibilityResult {
    enum class Verdict { Certified, Inconclusive };

    Verdict verdict = Verdict::Inconclusive;
    int planes_tried = 0;
    // Plane spanned by these three points whose section is a smooth curve
    // (Certified), or the last failing slice (Inconclusive).
    std::vector<ExactPoint> plane;
    std::string reason;
};

// A smooth plane section is an irreducible curve, and a reducible or
// non-reduced surface has only reducible or non-reduced sections, so a single
// smooth slice certifies irreducibility. Smoothness of the slice is decided
// exactly by resultants of its partials.
IrreducibilityResult irreducibility_slice_certificate(const ExactForm& f, std::uint64_t seed, int max_planes = 5);

// Exact check that the plane curve g(x, y, w) (a PolyForm not involving z3)
// has no singular point.
bool plane_curve_is_smooth(const ExactForm& g, std::string* why = nullptr);

struct LineSearchOptions {
    int starts_per_chart = 0;  // 0 means 200 * d
    double accept_tol = 1e-8;
    double dedup_tol = 1e-6;
    std::uint64_t seed = 1;
    int max_iterations = 60;
    int threads = 1;
};

struct LineFound {
    ApproxPlucker plucker;
    double residual = 0;
    bool is_twistor = false;
    double twistor_margin = 0;
    // Rationalize-then-verify: exact line on the surface, when recovered.
    std::optional<ExactLine> exact;
    bool exact_twistor = false;
};

struct LineSearchReport {
    std::vector<LineFound> lines;
    int starts = 0;
    int converged = 0;  // starts whose full residual passed accept_tol
    // Jacobian rank deficiency at a solution, e.g. the rulings of a quadric.
    bool positive_dimensional = false;
    LineSearchOptions options;
};

LineSearchReport find_lines(const ExactForm& f, LineSearchOptions opts = {});

// Exact line whose chart frame rationalizes the approximate Plücker vector
// and which lies on f, if any.
std::optional<ExactLine> rationalize_line(const ApproxPlucker& t, const ExactForm& f, std::int64_t max_den = 1000000);

struct CollinearityReport {
    TransversalResult transversals;
    bool has_common_transversal = false;
    std::optional<bool> lies_on_cubic;  // five input lines only
    std::optional<std::size_t> cubic_h0;
};

CollinearityReport collinearity_report(const std::vector<ExactLine>& lines);

struct SurfaceOptions {
    LineSearchOptions lines;
    int singularity_starts = 800;
    double singularity_tol = 1e-8;
    std::uint64_t seed = 1;
    bool run_lines = true;
    bool run_singularity = true;
    bool run_irreducibility = true;
};

struct SurfaceReport {
    int degree = 0;
    LineSearchReport line_search;
    int n_twistor = 0;
    std::optional<bool> smooth_along_input_lines;
    std::vector<bool> input_lines_contained;
    std::optional<SingularityProbe> singularity;
    std::optional<IrreducibilityResult> irreducibility;
    // Twistor-line bound for smooth surfaces: d^2 in general, 5 for cubics.
    bool twistor_bound_violated = false;
};

SurfaceReport analyze_surface(const ExactForm& f, const std::vector<ExactLine>& input_lines, const SurfaceOptions& opts);

}  // namespace twistor
