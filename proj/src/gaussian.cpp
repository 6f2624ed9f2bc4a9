#include "twistor/gaussian.hpp"

#include <cctype>
#include <ostream>

#include "twistor/errors.hpp"

namespace twistor {

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw InvalidInput("inverse of zero Gaussian rational");
    mpq_class n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

namespace {

bool is_rational_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t pos = 0;
    if (s[0] == '+' || s[0] == '-') pos = 1;
    bool seen_digit = false;
    bool seen_slash = false;
    bool digit_after_slash = false;
    for (; pos < s.size(); ++pos) {
        char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            seen_digit = true;
            if (seen_slash) digit_after_slash = true;
        } else if (c == '/' && !seen_slash && seen_digit) {
            seen_slash = true;
        } else {
            return false;
        }
    }
    return seen_digit && (!seen_slash || digit_after_slash);
}

}  // namespace

mpq_class parse_rational(std::string_view text) {
    if (!is_rational_literal(text)) throw InvalidInput("malformed rational literal '" + std::string(text) + "'");
    std::string s(text);
    if (s[0] == '+') s.erase(0, 1);
    auto slash = s.find('/');
    mpz_class num(s.substr(0, slash), 10);
    mpz_class den = 1;
    if (slash != std::string::npos) {
        den = mpz_class(s.substr(slash + 1), 10);
        if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

GaussianRational GaussianRational::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw InvalidInput("empty complex literal");
    if (s.back() != 'i') return {parse_rational(s), 0};

    s.pop_back();
    // split at the last sign that is not leading
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if (s[k] == '+' || s[k] == '-') {
            split = k;
            break;
        }
    }
    std::string real_part = split == std::string::npos ? "" : s.substr(0, split);
    std::string imag_part = split == std::string::npos ? s : s.substr(split);
    mpq_class im;
    if (imag_part.empty() || imag_part == "+")
        im = 1;
    else if (imag_part == "-")
        im = -1;
    else
        im = parse_rational(imag_part);
    mpq_class re = real_part.empty() ? mpq_class(0) : parse_rational(real_part);
    return {re, im};
}

std::string GaussianRational::to_string() const {
    if (sgn(im_) == 0) return rational_to_string(re_);
    std::string out;
    if (sgn(re_) != 0) out = rational_to_string(re_);
    if (sgn(im_) > 0 && !out.empty()) out += "+";
    if (im_ == -1)
        out += "-";
    else if (im_ != 1)
        out += rational_to_string(im_);
    return out + "i";
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

namespace {

bool rational_sqrt(const mpq_class& q, mpq_class& root) {
    if (sgn(q) < 0) return false;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return false;
    mpz_class n = sqrt(q.get_num());
    mpz_class d = sqrt(q.get_den());
    root = mpq_class(n, d);
    root.canonicalize();
    return true;
}

}  // namespace

bool gaussian_sqrt(const GaussianRational& z, GaussianRational& root) {
    if (z.is_zero()) {
        root = GaussianRational();
        return true;
    }
    mpq_class modulus;
    if (!rational_sqrt(z.norm(), modulus)) return false;
    mpq_class x2 = (z.re() + modulus) / 2;
    mpq_class x;
    if (sgn(x2) == 0) {
        mpq_class y;
        if (!rational_sqrt(-z.re(), y)) return false;
        root = GaussianRational(0, y);
    } else {
        if (!rational_sqrt(x2, x)) return false;
        root = GaussianRational(x, z.im() / (2 * x));
    }
    return root * root == z;
}

GaussianInteger mul(const GaussianInteger& a, const GaussianInteger& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussianInteger sub(const GaussianInteger& a, const GaussianInteger& b) { return {a.re - b.re, a.im - b.im}; }

GaussianInteger exact_div(const GaussianInteger& a, const GaussianInteger& b) {
    mpz_class n = b.re * b.re + b.im * b.im;
    // a * conj(b) / |b|^2
    mpz_class re = a.re * b.re + a.im * b.im;
    mpz_class im = a.im * b.re - a.re * b.im;
    GaussianInteger q;
    mpz_divexact(q.re.get_mpz_t(), re.get_mpz_t(), n.get_mpz_t());
    mpz_divexact(q.im.get_mpz_t(), im.get_mpz_t(), n.get_mpz_t());
    return q;
}

}  // namespace twistor
