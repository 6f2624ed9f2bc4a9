#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace twistor {

using Complex = std::complex<double>;

// Exact element of Q(i).
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long re) : re_(re), im_(0) {}  // NOLINT: implicit from integers
    GaussianRational(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussianRational i() { return {0, 1}; }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    // |z|^2
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    GaussianRational inverse() const;

    Complex to_complex() const { return {re_.get_d(), im_.get_d()}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    // Literal syntax: "a/b", "a/b+c/di", "c/di", "i", "-i".
    static GaussianRational parse(std::string_view text);
    std::string to_string() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

// Strict rational parse of "n" or "n/d" (no whitespace, d != 0).
mpq_class parse_rational(std::string_view text);
std::string rational_to_string(const mpq_class& q);

// Exact square root in Q(i) when one exists.
bool gaussian_sqrt(const GaussianRational& z, GaussianRational& root);

// Element of Z[i]; used by fraction-free elimination.
struct GaussianInteger {
    mpz_class re{0};
    mpz_class im{0};

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

GaussianInteger mul(const GaussianInteger& a, const GaussianInteger& b);
GaussianInteger sub(const GaussianInteger& a, const GaussianInteger& b);
// a / b, where b divides a exactly in Z[i].
GaussianInteger exact_div(const GaussianInteger& a, const GaussianInteger& b);

// Scalar helpers shared by exact and floating code paths.
inline GaussianRational conj_of(const GaussianRational& z) { return z.conj(); }
inline Complex conj_of(const Complex& z) { return std::conj(z); }
inline bool exactly_zero(const GaussianRational& z) { return z.is_zero(); }
inline Complex to_complex(const GaussianRational& z) { return z.to_complex(); }
inline Complex to_complex(const Complex& z) { return z; }

}  // namespace twistor
