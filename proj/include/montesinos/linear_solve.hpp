#pragma once

// Gauss-Jordan elimination over exact rationals.

#include "montesinos/fraction.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace montesinos {

enum class LinearStatus { unique, underdetermined, inconsistent };

struct LinearSolution {
    LinearStatus status = LinearStatus::inconsistent;
    std::vector<Fraction> x;  // filled only when status == unique
    std::size_t rank = 0;
};

/// Solves A x = b for a square or tall A. Rank-deficient systems are reported
/// as underdetermined or inconsistent; no particular solution is chosen.
inline LinearSolution solve_linear(std::vector<std::vector<Fraction>> a, std::vector<Fraction> b) {
    const std::size_t rows = a.size();
    if (b.size() != rows) throw std::invalid_argument("solve_linear: row count mismatch");
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    for (const auto& row : a)
        if (row.size() != cols) throw std::invalid_argument("solve_linear: ragged matrix");

    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        const Fraction inv = Fraction(1) / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            const Fraction factor = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= factor * a[r][j];
            b[i] -= factor * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }

    LinearSolution out;
    out.rank = r;
    for (std::size_t i = r; i < rows; ++i) {
        if (!b[i].is_zero()) {
            out.status = LinearStatus::inconsistent;
            return out;
        }
    }
    if (r < cols) {
        out.status = LinearStatus::underdetermined;
        return out;
    }
    out.status = LinearStatus::unique;
    out.x.assign(cols, Fraction(0));
    for (std::size_t i = 0; i < r; ++i) out.x[pivot_col[i]] = b[i];
    return out;
}

}  // namespace montesinos
