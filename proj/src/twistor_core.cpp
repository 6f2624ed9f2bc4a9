#include "twistor/twistor_core.hpp"

#include <algorithm>

namespace twistor {

HPoint pi_project(const ExactPoint& z) {
    if (is_zero_vector(z)) throw InvalidInput("pi_project of the zero vector");
    return {Quaternion(z[0], z[1]), Quaternion(z[2], z[3])};
}

ExactLine twistor_fiber(const Quaternion& q) {
    const auto& q1 = q.a();
    const auto& q2 = q.b();
    return {ExactPoint{1, 0, q1, q2}, ExactPoint{0, 1, -q2.conj(), q1.conj()}};
}

ExactLine twistor_fiber(const HPoint& h) {
    if (auto q = h.chart_a_coordinate()) return twistor_fiber(*q);
    // h1 = 0: the fiber over [0, 1] is z0 = z1 = 0.
    return {ExactPoint{0, 0, 1, 0}, ExactPoint{0, 0, 0, 1}};
}

ExactLine fiber_through(const ExactPoint& z) { return {z, j_point(z)}; }

ExactPoint random_point(Rng& rng, std::int64_t height) {
    for (;;) {
        ExactPoint z{rng.gaussian(height), rng.gaussian(height), rng.gaussian(height), rng.gaussian(height)};
        if (!is_zero_vector(z)) return z;
    }
}

ExactPoint random_point_on(const ExactLine& line, Rng& rng, std::int64_t height) {
    for (;;) {
        GaussianRational s = rng.gaussian(height);
        GaussianRational t = rng.gaussian(height);
        if (s.is_zero() && t.is_zero()) continue;
        return line.point_at(s, t);
    }
}

Quaternion random_quaternion(Rng& rng, std::int64_t height) {
    GaussianRational q1 = rng.gaussian(height);
    GaussianRational q2 = rng.gaussian(height);
    return {q1, q2};
}

std::vector<ExactLine> sample_twistor_lines(int k, Rng& rng, std::int64_t height) {
    if (k < 1 || height < 1) throw InvalidInput("sample_twistor_lines needs k >= 1 and height >= 1");
    std::vector<Quaternion> bases;
    std::vector<ExactLine> lines;
    while (static_cast<int>(lines.size()) < k) {
        Quaternion q = random_quaternion(rng, height);
        if (std::find(bases.begin(), bases.end(), q) != bases.end()) continue;
        bases.push_back(q);
        lines.push_back(twistor_fiber(q));
    }
    return lines;
}

std::vector<ExactLine> sample_twistor_lines(int k, std::uint64_t seed, std::int64_t height) {
    Rng rng(seed);
    return sample_twistor_lines(k, rng, height);
}

}  // namespace twistor
