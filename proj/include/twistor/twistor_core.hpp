#pragma once

#include <cstdint>
#include <vector>

#include "twistor/geometry.hpp"
#include "twistor/quaternion.hpp"
#include "twistor/random.hpp"

namespace twistor {

// pi[z0,z1,z2,z3] = [z0 + z1 j, z2 + z3 j] in the left quaternionic projective line.
HPoint pi_project(const ExactPoint& z);

// The fiber of pi over h. In chart A, h = [1, q1 + q2 j] and the fiber is
// span((1, 0, q1, q2), (0, 1, -conj q2, conj q1)); chart B is used only when h1 = 0.
ExactLine twistor_fiber(const HPoint& h);
ExactLine twistor_fiber(const Quaternion& q);

// span(z, j(z)), the twistor line through z.
ExactLine fiber_through(const ExactPoint& z);

// Point s*a + t*b helpers for sampling along exact lines.
ExactPoint random_point_on(const ExactLine& line, Rng& rng, std::int64_t height);
ExactPoint random_point(Rng& rng, std::int64_t height);
Quaternion random_quaternion(Rng& rng, std::int64_t height);

// k fibers over pairwise distinct random chart-A points with Gaussian-rational
// coordinates of the given height. Distinct fibers never meet.
std::vector<ExactLine> sample_twistor_lines(int k, std::uint64_t seed, std::int64_t height = 10);
std::vector<ExactLine> sample_twistor_lines(int k, Rng& rng, std::int64_t height = 10);

}  // namespace twistor
