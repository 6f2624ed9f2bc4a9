#include "twistor/exact_linalg.hpp"

#include <algorithm>
#include <cstdint>

#include "twistor/errors.hpp"

namespace twistor {

namespace {

std::size_t column_count(const ExactMatrix& m) { return m.empty() ? 0 : m.front().size(); }

std::vector<std::vector<GaussianInteger>> clear_denominators(const ExactMatrix& m) {
    std::vector<std::vector<GaussianInteger>> out;
    out.reserve(m.size());
    for (const auto& row : m) {
        mpz_class l = 1;
        for (const auto& x : row) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.re().get_den_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.im().get_den_mpz_t());
        }
        std::vector<GaussianInteger> r;
        r.reserve(row.size());
        for (const auto& x : row) {
            GaussianInteger g;
            g.re = x.re().get_num() * (l / x.re().get_den());
            g.im = x.im().get_num() * (l / x.im().get_den());
            r.push_back(std::move(g));
        }
        out.push_back(std::move(r));
    }
    return out;
}

constexpr std::uint64_t kPrime = 998244353;  // 119 * 2^23 + 1

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    b %= kPrime;
    while (e) {
        if (e & 1) r = r * b % kPrime;
        b = b * b % kPrime;
        e >>= 1;
    }
    return r;
}

// 3 generates the multiplicative group, so 3^((p-1)/4) squares to -1.
const std::uint64_t kSqrtMinusOne = pow_mod(3, (kPrime - 1) / 4);

std::uint64_t mpz_mod_p(const mpz_class& z) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), kPrime);
    return r.get_ui();
}

std::optional<std::uint64_t> rational_mod_p(const mpq_class& q) {
    std::uint64_t d = mpz_mod_p(q.get_den());
    if (d == 0) return std::nullopt;
    return mpz_mod_p(q.get_num()) * pow_mod(d, kPrime - 2) % kPrime;
}

}  // namespace

std::size_t rank_bareiss(const ExactMatrix& input) {
    auto a = clear_denominators(input);
    std::size_t rows = a.size();
    std::size_t cols = column_count(input);
    GaussianInteger prev;
    prev.re = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        const GaussianInteger& p = a[rank][c];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t k = c + 1; k < cols; ++k) {
                GaussianInteger num = sub(mul(p, a[r][k]), mul(a[r][c], a[rank][k]));
                a[r][k] = exact_div(num, prev);
            }
            a[r][c] = GaussianInteger{};
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

std::optional<std::size_t> rank_mod_p(const ExactMatrix& m) {
    std::size_t rows = m.size();
    std::size_t cols = column_count(m);
    std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            auto re = rational_mod_p(m[r][c].re());
            auto im = rational_mod_p(m[r][c].im());
            if (!re || !im) return std::nullopt;
            a[r][c] = (*re + *im * kSqrtMinusOne) % kPrime;
        }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        std::uint64_t inv = pow_mod(a[rank][c], kPrime - 2);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (a[r][c] == 0) continue;
            std::uint64_t f = a[r][c] * inv % kPrime;
            for (std::size_t k = c; k < cols; ++k) a[r][k] = (a[r][k] + (kPrime - f) * a[rank][k]) % kPrime;
        }
        ++rank;
    }
    return rank;
}

std::size_t exact_rank(const ExactMatrix& m) {
    std::size_t full = std::min(m.size(), column_count(m));
    if (auto r = rank_mod_p(m); r && *r == full) return full;
    return rank_bareiss(m);
}

std::vector<std::size_t> rref(ExactMatrix& a, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t rows = a.size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        GaussianRational inv = a[rank][c].inverse();
        for (std::size_t k = c; k < cols; ++k) a[rank][k] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c].is_zero()) continue;
            GaussianRational f = a[r][c];
            for (std::size_t k = c; k < cols; ++k)
                if (!a[rank][k].is_zero()) a[r][k] -= f * a[rank][k];
        }
        pivots.push_back(c);
        ++rank;
    }
    a.resize(rank);
    return pivots;
}

std::vector<ExactRow> nullspace(ExactMatrix m, std::size_t cols) {
    auto pivots = rref(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<ExactRow> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        ExactRow v(cols, GaussianRational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

GaussianRational determinant(ExactMatrix a) {
    std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw InvalidInput("determinant of a non-square matrix");
    GaussianRational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c].is_zero()) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        GaussianRational inv = a[c][c].inverse();
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c].is_zero()) continue;
            GaussianRational f = a[r][c] * inv;
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

}  // namespace twistor
