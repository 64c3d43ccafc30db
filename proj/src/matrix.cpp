#include "hypercycle/matrix.hpp"

#include <utility>

#include "hypercycle/errors.hpp"

namespace hypercycle {

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool ExactMatrix::is_integral() const {
    for (const Rat& q : ent_)
        if (q.get_den() != 1) return false;
    return true;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product: inner dimensions differ");
    ExactMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rat& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionError("matrix difference: shapes differ");
    ExactMatrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.ent_.size(); ++i) c.ent_[i] = a.ent_[i] - b.ent_[i];
    return c;
}

namespace {

Int bareiss_det(std::vector<Int> a, std::size_t n) {
    if (n == 0) return Int(1);
    auto at = [&](std::size_t i, std::size_t j) -> Int& { return a[i * n + j]; };
    Int prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && at(piv, k) == 0) ++piv;
            if (piv == n) return Int(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    return sign > 0 ? at(n - 1, n - 1) : -at(n - 1, n - 1);
}

Rat gauss_det(const ExactMatrix& m) {
    const std::size_t n = m.rows();
    ExactMatrix a = m;
    Rat det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a.at(piv, k) == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
            det = -det;
        }
        det *= a.at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a.at(i, k) == 0) continue;
            Rat f = a.at(i, k) / a.at(k, k);
            for (std::size_t j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
        }
    }
    return det;
}

} // namespace

Rat det_fraction_free(const ExactMatrix& m) {
    if (!m.square()) throw DimensionError("determinant of a non-square matrix");
    if (m.rows() == 0) return Rat(1);
    if (m.is_integral()) {
        std::vector<Int> a;
        a.reserve(m.rows() * m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) a.push_back(m.at(i, j).get_num());
        return Rat(bareiss_det(std::move(a), m.rows()));
    }
    return gauss_det(m);
}

ExactMatrix mat_pow(const ExactMatrix& m, unsigned long k) {
    if (!m.square()) throw DimensionError("power of a non-square matrix");
    ExactMatrix result = ExactMatrix::identity(m.rows());
    ExactMatrix base = m;
    while (k > 0) {
        if (k & 1UL) result = result * base;
        k >>= 1UL;
        if (k > 0) base = base * base;
    }
    return result;
}

ExactMatrix mat_inverse(const ExactMatrix& m) {
    if (!m.square()) throw DimensionError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    ExactMatrix a = m;
    ExactMatrix inv = ExactMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a.at(piv, k) == 0) ++piv;
        if (piv == n) throw SingularMatrixError("matrix is singular");
        if (piv != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(k, j), a.at(piv, j));
                std::swap(inv.at(k, j), inv.at(piv, j));
            }
        Rat p = a.at(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a.at(k, j) /= p;
            inv.at(k, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a.at(i, k) == 0) continue;
            Rat f = a.at(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(k, j);
                inv.at(i, j) -= f * inv.at(k, j);
            }
        }
    }
    return inv;
}

} // namespace hypercycle
