#pragma once

#include <cstddef>
#include <vector>

namespace disklab {

// Dense tableau simplex for  max c.x  s.t.  A x <= b, x >= 0  with b >= 0,
// so the origin is a basic feasible start and no phase-1 is needed.
// Bland's rule on both the entering and leaving choices (anti-cycling).
struct PackingResult {
    std::vector<double> x;         // optimal structural variables
    std::vector<double> row_dual;  // optimal dual value per row (slack reduced costs)
    double objective = 0.0;
    long iterations = 0;
};

class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0.0) {}
    double& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    double at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    double* row(std::size_t i) { return a_.data() + i * cols_; }
    const double* row(std::size_t i) const { return a_.data() + i * cols_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

private:
    std::size_t rows_, cols_;
    std::vector<double> a_;
};

PackingResult simplex_packing(const Matrix& a, const std::vector<double>& b,
                              const std::vector<double>& c);

// Minimal-mass covering solve:  min 1.w  s.t.  K w >= bounds, w >= 0,
// K strictly positive (so always feasible). Solved through the packing dual
// max bounds.y s.t. K^T y <= 1; the optimal w are the dual values of the
// node rows. Large node sets go through a cutting-plane loop over node rows
// so tableaus stay small.
struct CoveringResult {
    std::vector<double> weights;  // one per column of K
    double mass = 0.0;
    long iterations = 0;
};

CoveringResult solve_min_covering(const Matrix& kernel /* rows=constraints, cols=nodes */,
                                  const std::vector<double>& bounds);

}  // namespace disklab
