#pragma once

#include <vector>

#include "twistor/exact_linalg.hpp"
#include "twistor/geometry.hpp"
#include "twistor/polyring.hpp"

namespace twistor {

template <class S>
PluckerVec<S> plucker_of(const Line3<S>& line) {
    return line.plucker();
}

// Exact: j_plucker(t) is proportional to t.
bool is_twistor(const ExactLine& line);
bool is_twistor(const ExactPlucker& t);

// sqrt(1 - |<u, v>|) for unit representatives u of t and v of j_plucker(t);
// this is the second singular value of the stacked 2x6 matrix.
double twistor_margin(const ApproxPlucker& t);
inline bool is_twistor(const ApproxPlucker& t, double tol = kApproxTol) { return twistor_margin(t) < tol; }

struct TransversalResult {
    enum class Kind { Finite, Infinite };

    Kind kind = Kind::Finite;
    // Number of common transversals when Finite; always exact.
    int count = 0;
    // Exactly representable transversals (square discriminant or linear case).
    std::vector<ExactLine> exact_lines;
    // Floating representatives when the roots are irrational over Q(i).
    std::vector<ApproxLine> approx_lines;
    // Discriminant of the binary quadratic on the two-dimensional kernel,
    // when that case arises.
    std::optional<GaussianRational> discriminant;
    bool discriminant_is_square = false;
    // Kernel basis of the incidence system (the witness when Infinite).
    std::vector<ExactPlucker> kernel;
};

// All lines meeting every input line. Input lines must be pairwise disjoint.
// The kernel of the incidence system is intersected with the Klein quadric;
// a kernel of dimension >= 3, or a pencil lying on the quadric, is Infinite.
TransversalResult transversals(const std::vector<ExactLine>& lines);

// Condition matrix rows of d+1 restriction functionals per line.
ExactMatrix line_conditions(const std::vector<ExactLine>& lines, int d);

// The unique quadric through three pairwise disjoint lines.
ExactForm quadric_through_three(const ExactLine& l1, const ExactLine& l2, const ExactLine& l3);

// Symmetric A with Q(z) = z^T A z.
ExactMatrix quadric_matrix(const ExactForm& q);
bool is_smooth_quadric(const ExactForm& q);

struct RulingPair {
    // Filled when both lines are defined over Q(i).
    std::vector<ExactLine> exact;
    // Always filled (floating copies of the exact lines, or floating roots).
    std::vector<ApproxLine> approx;
    GaussianRational discriminant;

    bool is_exact() const { return exact.size() == 2; }
};

// The two lines through x on a smooth quadric, from the rank-2 conic cut out
// by the tangent plane at x.
RulingPair ruling_lines_at(const ExactForm& q, const ExactPoint& x);

}  // namespace twistor
