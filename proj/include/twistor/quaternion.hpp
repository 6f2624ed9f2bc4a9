#pragma once

#include <optional>
#include <string>

#include "twistor/gaussian.hpp"

namespace twistor {

// a + b*j over Q(i), with j*c = conj(c)*j for complex c.
class Quaternion {
public:
    Quaternion() = default;
    Quaternion(GaussianRational a, GaussianRational b = {}) : a_(std::move(a)), b_(std::move(b)) {}

    static Quaternion unit_j() { return {0, 1}; }

    const GaussianRational& a() const { return a_; }
    const GaussianRational& b() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    Quaternion conj() const { return {a_.conj(), -b_}; }
    mpq_class norm() const { return a_.norm() + b_.norm(); }
    Quaternion inverse() const;

    friend Quaternion operator*(const Quaternion& p, const Quaternion& q) {
        return {p.a_ * q.a_ - p.b_ * q.b_.conj(), p.a_ * q.b_ + p.b_ * q.a_.conj()};
    }
    friend Quaternion operator+(const Quaternion& p, const Quaternion& q) { return {p.a_ + q.a_, p.b_ + q.b_}; }
    friend Quaternion operator-(const Quaternion& p, const Quaternion& q) { return {p.a_ - q.a_, p.b_ - q.b_}; }
    friend Quaternion operator-(const Quaternion& p) { return {-p.a_, -p.b_}; }
    friend bool operator==(const Quaternion& p, const Quaternion& q) { return p.a_ == q.a_ && p.b_ == q.b_; }
    friend bool operator!=(const Quaternion& p, const Quaternion& q) { return !(p == q); }

    std::string to_string() const;

private:
    GaussianRational a_;
    GaussianRational b_;
};

// Point [h1, h2] of the left quaternionic projective line:
// [h1, h2] ~ [l*h1, l*h2] for nonzero l.
class HPoint {
public:
    HPoint(Quaternion h1, Quaternion h2);

    // [1, q]
    static HPoint chart_a(Quaternion q) { return {Quaternion(1), std::move(q)}; }
    static HPoint infinity() { return {Quaternion(), Quaternion(1)}; }

    const Quaternion& h1() const { return h1_; }
    const Quaternion& h2() const { return h2_; }

    bool in_chart_a() const { return !h1_.is_zero(); }
    // h1^{-1} h2, the unique q with [h1, h2] = [1, q].
    std::optional<Quaternion> chart_a_coordinate() const;
    // h2^{-1} h1, the unique q with [h1, h2] = [q, 1].
    std::optional<Quaternion> chart_b_coordinate() const;

    friend bool operator==(const HPoint& x, const HPoint& y);
    friend bool operator!=(const HPoint& x, const HPoint& y) { return !(x == y); }

private:
    Quaternion h1_;
    Quaternion h2_;
};

}  // namespace twistor
