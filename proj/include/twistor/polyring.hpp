#pragma once

// Dense homogeneous forms in z0..z3. Coefficients are indexed by exponent
// vectors of total degree d in graded-lex order: (d,0,0,0) first, then
// descending lexicographically, down to (0,0,0,d).

#include <array>
#include <cstdint>
#include <vector>

#include "twistor/geometry.hpp"

namespace twistor {

using Exponent = std::array<int, 4>;

inline constexpr const char* kMonomialOrder = "gradedlex";

std::int64_t binomial(int n, int k);
// C(d+3, 3)
inline std::size_t monomial_count(int d) { return d < 0 ? 0 : static_cast<std::size_t>(binomial(d + 3, 3)); }
// Exponent vectors of degree d in graded-lex order. Cached per degree.
const std::vector<Exponent>& exponents(int d);
std::size_t monomial_position(const Exponent& alpha);

// f(s, t) = sum_m c[m] s^(d-m) t^m
template <class S>
class BinaryForm {
public:
    BinaryForm() = default;
    explicit BinaryForm(int degree) : degree_(degree), coeffs_(static_cast<std::size_t>(degree + 1), S(0)) {}
    BinaryForm(int degree, std::vector<S> coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != static_cast<std::size_t>(degree_ + 1)) throw InvalidInput("binary form size mismatch");
    }

    int degree() const { return degree_; }
    const std::vector<S>& coeffs() const { return coeffs_; }
    const S& operator[](int m) const { return coeffs_[m]; }
    S& operator[](int m) { return coeffs_[m]; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!(c == S(0))) return false;
        return true;
    }

    friend BinaryForm operator*(const BinaryForm& f, const BinaryForm& g) {
        BinaryForm out(f.degree_ + g.degree_);
        for (int i = 0; i <= f.degree_; ++i) {
            if (f.coeffs_[i] == S(0)) continue;
            for (int j = 0; j <= g.degree_; ++j) out.coeffs_[i + j] += f.coeffs_[i] * g.coeffs_[j];
        }
        return out;
    }

    friend BinaryForm operator+(BinaryForm f, const BinaryForm& g) {
        if (f.degree_ != g.degree_) throw InvalidInput("adding binary forms of different degree");
        for (int m = 0; m <= f.degree_; ++m) f.coeffs_[m] += g.coeffs_[m];
        return f;
    }

    // multiply by s (shift == 0) or t (shift == 1)
    BinaryForm times_variable(int which) const {
        BinaryForm out(degree_ + 1);
        for (int m = 0; m <= degree_; ++m) out.coeffs_[m + which] = coeffs_[m];
        return out;
    }

    // d/ds and d/dt
    BinaryForm derivative(int which) const {
        if (degree_ == 0) return BinaryForm(0);
        BinaryForm out(degree_ - 1);
        for (int m = 0; m <= degree_; ++m) {
            int power = which == 0 ? degree_ - m : m;
            if (power == 0) continue;
            int target = which == 0 ? m : m - 1;
            out.coeffs_[target] += S(power) * coeffs_[m];
        }
        return out;
    }

    S evaluate(const S& s, const S& t) const {
        // Horner in s/t over the two homogeneous variables
        S acc(0);
        S tp(1);
        std::vector<S> spow(static_cast<std::size_t>(degree_ + 1), S(1));
        for (int e = 1; e <= degree_; ++e) spow[e] = spow[e - 1] * s;
        for (int m = 0; m <= degree_; ++m) {
            acc += coeffs_[m] * spow[degree_ - m] * tp;
            tp = tp * t;
        }
        return acc;
    }

private:
    int degree_ = 0;
    std::vector<S> coeffs_{S(0)};
};

using ExactBinary = BinaryForm<GaussianRational>;
using ApproxBinary = BinaryForm<Complex>;

template <class S>
class PolyForm {
public:
    PolyForm() : PolyForm(0) {}
    explicit PolyForm(int degree) : degree_(degree), coeffs_(monomial_count(degree), S(0)) {
        if (degree < 0) throw InvalidInput("negative degree");
    }
    PolyForm(int degree, std::vector<S> coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != monomial_count(degree)) throw InvalidInput("coefficient vector has wrong length");
    }

    static PolyForm monomial(const Exponent& alpha, S c = S(1)) {
        PolyForm f(alpha[0] + alpha[1] + alpha[2] + alpha[3]);
        f.coeffs_[monomial_position(alpha)] = std::move(c);
        return f;
    }
    // c * z_i
    static PolyForm variable(int i, S c = S(1)) {
        Exponent e{0, 0, 0, 0};
        e[i] = 1;
        return monomial(e, std::move(c));
    }

    int degree() const { return degree_; }
    const std::vector<S>& coeffs() const { return coeffs_; }
    std::vector<S>& coeffs() { return coeffs_; }
    const S& coeff(const Exponent& alpha) const { return coeffs_[monomial_position(alpha)]; }
    S& coeff(const Exponent& alpha) { return coeffs_[monomial_position(alpha)]; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!(c == S(0))) return false;
        return true;
    }

    S evaluate(const Point3<S>& z) const {
        // powers per variable, then one product per monomial
        std::array<std::vector<S>, 4> pw;
        for (int i = 0; i < 4; ++i) {
            pw[i].assign(static_cast<std::size_t>(degree_ + 1), S(1));
            for (int e = 1; e <= degree_; ++e) pw[i][e] = pw[i][e - 1] * z[i];
        }
        const auto& ex = exponents(degree_);
        S acc(0);
        for (std::size_t k = 0; k < ex.size(); ++k) {
            if (coeffs_[k] == S(0)) continue;
            const auto& a = ex[k];
            acc += coeffs_[k] * pw[0][a[0]] * pw[1][a[1]] * pw[2][a[2]] * pw[3][a[3]];
        }
        return acc;
    }

    friend PolyForm operator+(PolyForm f, const PolyForm& g) {
        if (f.degree_ != g.degree_) throw InvalidInput("adding forms of different degree");
        for (std::size_t k = 0; k < f.coeffs_.size(); ++k) f.coeffs_[k] += g.coeffs_[k];
        return f;
    }
    friend PolyForm operator-(PolyForm f, const PolyForm& g) {
        if (f.degree_ != g.degree_) throw InvalidInput("subtracting forms of different degree");
        for (std::size_t k = 0; k < f.coeffs_.size(); ++k) f.coeffs_[k] -= g.coeffs_[k];
        return f;
    }
    friend PolyForm operator*(const S& c, PolyForm f) {
        for (auto& x : f.coeffs_) x = c * x;
        return f;
    }
    friend PolyForm operator*(const PolyForm& f, const PolyForm& g) {
        PolyForm out(f.degree_ + g.degree_);
        const auto& ef = exponents(f.degree_);
        const auto& eg = exponents(g.degree_);
        for (std::size_t i = 0; i < ef.size(); ++i) {
            if (f.coeffs_[i] == S(0)) continue;
            for (std::size_t j = 0; j < eg.size(); ++j) {
                if (g.coeffs_[j] == S(0)) continue;
                Exponent e{ef[i][0] + eg[j][0], ef[i][1] + eg[j][1], ef[i][2] + eg[j][2], ef[i][3] + eg[j][3]};
                out.coeffs_[monomial_position(e)] += f.coeffs_[i] * g.coeffs_[j];
            }
        }
        return out;
    }
    friend bool operator==(const PolyForm& f, const PolyForm& g) {
        return f.degree_ == g.degree_ && f.coeffs_ == g.coeffs_;
    }

    PolyForm partial(int i) const {
        if (degree_ == 0) throw InvalidInput("partial derivative of a degree-0 form");
        PolyForm out(degree_ - 1);
        const auto& ex = exponents(degree_);
        for (std::size_t k = 0; k < ex.size(); ++k) {
            if (ex[k][i] == 0 || coeffs_[k] == S(0)) continue;
            Exponent e = ex[k];
            S c = S(e[i]) * coeffs_[k];
            e[i] -= 1;
            out.coeffs_[monomial_position(e)] += c;
        }
        return out;
    }

    std::array<PolyForm, 4> partials() const { return {partial(0), partial(1), partial(2), partial(3)}; }

private:
    int degree_ = 0;
    std::vector<S> coeffs_;
};

using ExactForm = PolyForm<GaussianRational>;
using ApproxForm = PolyForm<Complex>;

template <class S>
PolyForm<Complex> to_approx(const PolyForm<S>& f) {
    std::vector<Complex> c;
    c.reserve(f.coeffs().size());
    for (const auto& x : f.coeffs()) c.push_back(to_complex(x));
    return {f.degree(), std::move(c)};
}

// (a_i s + b_i t)^e for e = 0..d, per coordinate i.
template <class S>
std::array<std::vector<BinaryForm<S>>, 4> linear_powers(const Point3<S>& a, const Point3<S>& b, int d) {
    std::array<std::vector<BinaryForm<S>>, 4> pw;
    for (int i = 0; i < 4; ++i) {
        BinaryForm<S> lin(1, {a[i], b[i]});
        pw[i].reserve(static_cast<std::size_t>(d + 1));
        pw[i].emplace_back(0, std::vector<S>{S(1)});
        for (int e = 1; e <= d; ++e) pw[i].push_back(pw[i].back() * lin);
    }
    return pw;
}

// Column k holds the restriction of the k-th monomial to the line s*a + t*b:
// entry (m, k) is the coefficient of s^(d-m) t^m.
template <class S>
std::vector<std::vector<S>> restriction_matrix(const Point3<S>& a, const Point3<S>& b, int d) {
    auto pw = linear_powers(a, b, d);
    const auto& ex = exponents(d);
    std::vector<std::vector<S>> rows(static_cast<std::size_t>(d + 1), std::vector<S>(ex.size(), S(0)));
    for (std::size_t k = 0; k < ex.size(); ++k) {
        const auto& e = ex[k];
        BinaryForm<S> r = pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]] * pw[3][e[3]];
        for (int m = 0; m <= d; ++m) rows[m][k] = r[m];
    }
    return rows;
}

// f(s*a + t*b) as a binary form of degree d.
template <class S>
BinaryForm<S> restrict_to_line(const PolyForm<S>& f, const Point3<S>& a, const Point3<S>& b) {
    int d = f.degree();
    auto pw = linear_powers(a, b, d);
    const auto& ex = exponents(d);
    BinaryForm<S> out(d);
    for (std::size_t k = 0; k < ex.size(); ++k) {
        if (f.coeffs()[k] == S(0)) continue;
        const auto& e = ex[k];
        BinaryForm<S> r = pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]] * pw[3][e[3]];
        for (int m = 0; m <= d; ++m) out[m] += f.coeffs()[k] * r[m];
    }
    return out;
}

template <class S>
BinaryForm<S> restrict_to_line(const PolyForm<S>& f, const Line3<S>& line) {
    return restrict_to_line(f, line.a(), line.b());
}

// Coefficient-level involution: c'_(a0,a1,a2,a3) = (-1)^(a0+a2) conj c_(a1,a0,a3,a2).
// Satisfies j(j(f)) = (-1)^d f and f(j(z)) = (-1)^d conj(j(f)(z)).
template <class S>
PolyForm<S> j_form(const PolyForm<S>& f) {
    PolyForm<S> out(f.degree());
    const auto& ex = exponents(f.degree());
    for (std::size_t k = 0; k < ex.size(); ++k) {
        const auto& a = ex[k];
        S c = conj_of(f.coeff(Exponent{a[1], a[0], a[3], a[2]}));
        out.coeffs()[k] = ((a[0] + a[2]) % 2 == 0) ? c : -c;
    }
    return out;
}

// f(M z) where column c of the 4x4 matrix `columns` is the image of e_c.
// Used to restrict to planes (fourth column zero) and for coordinate changes.
template <class S>
PolyForm<S> substitute_linear(const PolyForm<S>& f, const std::array<Point3<S>, 4>& columns) {
    // z_i -> sum_c columns[c][i] * w_c
    std::array<PolyForm<S>, 4> lin;
    for (int i = 0; i < 4; ++i) {
        lin[i] = PolyForm<S>(1);
        for (int c = 0; c < 4; ++c) lin[i].coeffs()[monomial_position(Exponent{c == 0, c == 1, c == 2, c == 3})] = columns[c][i];
    }
    int d = f.degree();
    std::array<std::vector<PolyForm<S>>, 4> pw;
    for (int i = 0; i < 4; ++i) {
        pw[i].push_back(PolyForm<S>(0, {S(1)}));
        for (int e = 1; e <= d; ++e) pw[i].push_back(pw[i].back() * lin[i]);
    }
    PolyForm<S> out(d);
    const auto& ex = exponents(d);
    for (std::size_t k = 0; k < ex.size(); ++k) {
        if (f.coeffs()[k] == S(0)) continue;
        const auto& e = ex[k];
        PolyForm<S> term = pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]] * pw[3][e[3]];
        out = out + f.coeffs()[k] * term;
    }
    return out;
}

// Scalar a with j_form(f) = a f, if one exists (f nonzero).
bool j_proportionality(const ExactForm& f, GaussianRational& factor);

// Rescale a j-invariant form so that j_form(f) = f when the factor allows an
// exact square-root normalization in Q(i); otherwise returns f unchanged.
ExactForm normalize_j_invariant(const ExactForm& f, GaussianRational& factor);

// Monic gcd of binary forms over Q(i). Zero forms are ignored.
ExactBinary binary_gcd(const std::vector<ExactBinary>& forms);

// Univariate helpers over Q(i): coefficients from the constant term up.
using UPoly = std::vector<GaussianRational>;
void trim(UPoly& p);
UPoly poly_gcd(UPoly a, UPoly b);
UPoly poly_rem(UPoly a, const UPoly& b);

}  // namespace twistor
