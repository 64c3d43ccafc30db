#pragma once

#include <cstddef>
#include <vector>

#include "hypercycle/numbers.hpp"

namespace hypercycle {

/// Dense matrix over arbitrary-precision rationals (entries stay canonical:
/// reduced, positive denominator). Row-major storage, 0-based indexing.
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), ent_(rows * cols, Rat(0)) {}

    static ExactMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Rat& at(std::size_t i, std::size_t j) { return ent_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return ent_[i * cols_ + j]; }

    bool is_integral() const;

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
    bool operator==(const ExactMatrix&) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<Rat> ent_;
};

/// Exact determinant. Integer matrices go through fraction-free Bareiss
/// elimination (keeps intermediates integral); general rational matrices use
/// plain exact Gaussian elimination. The 0x0 determinant is 1.
Rat det_fraction_free(const ExactMatrix& m);

/// M^k by repeated squaring; k = 0 yields the identity.
ExactMatrix mat_pow(const ExactMatrix& m, unsigned long k);

/// Exact inverse via Gauss-Jordan; throws SingularMatrixError if det = 0.
ExactMatrix mat_inverse(const ExactMatrix& m);

} // namespace hypercycle
