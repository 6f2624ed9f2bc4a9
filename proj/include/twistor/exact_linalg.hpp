#pragma once

#include <optional>
#include <vector>

#include "twistor/gaussian.hpp"

namespace twistor {

using ExactRow = std::vector<GaussianRational>;
using ExactMatrix = std::vector<ExactRow>;

// Rank by fraction-free (Bareiss) elimination over Z[i] after clearing
// denominators row by row.
std::size_t rank_bareiss(const ExactMatrix& m);

// Rank of the reduction modulo a prime p = 1 (mod 4) with i mapped to a
// square root of -1. Always a lower bound for the exact rank; nullopt when a
// denominator is divisible by p.
std::optional<std::size_t> rank_mod_p(const ExactMatrix& m);

// Exact rank. Uses the modular rank when it already certifies full rank,
// Bareiss otherwise.
std::size_t exact_rank(const ExactMatrix& m);

// Reduced row echelon form over Q(i), in place; returns pivot columns.
std::vector<std::size_t> rref(ExactMatrix& m, std::size_t ncols);

// Basis of {x : m x = 0} for a matrix with ncols columns.
std::vector<ExactRow> nullspace(ExactMatrix m, std::size_t ncols);

GaussianRational determinant(ExactMatrix m);

}  // namespace twistor
