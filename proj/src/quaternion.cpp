#include "twistor/quaternion.hpp"

#include "twistor/errors.hpp"

namespace twistor {

Quaternion Quaternion::inverse() const {
    if (is_zero()) throw InvalidInput("inverse of zero quaternion");
    mpq_class n = norm();
    GaussianRational s(1 / n);
    Quaternion c = conj();
    return {c.a() * s, c.b() * s};
}

std::string Quaternion::to_string() const { return "(" + a_.to_string() + ")+(" + b_.to_string() + ")j"; }

HPoint::HPoint(Quaternion h1, Quaternion h2) : h1_(std::move(h1)), h2_(std::move(h2)) {
    if (h1_.is_zero() && h2_.is_zero()) throw InvalidInput("HPoint with both coordinates zero");
}

std::optional<Quaternion> HPoint::chart_a_coordinate() const {
    if (h1_.is_zero()) return std::nullopt;
    return h1_.inverse() * h2_;
}

std::optional<Quaternion> HPoint::chart_b_coordinate() const {
    if (h2_.is_zero()) return std::nullopt;
    return h2_.inverse() * h1_;
}

bool operator==(const HPoint& x, const HPoint& y) {
    if (x.in_chart_a() != y.in_chart_a()) return false;
    if (x.in_chart_a()) return *x.chart_a_coordinate() == *y.chart_a_coordinate();
    return true;  // both are [0, 1]
}

}  // namespace twistor
