#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hypercycle/numbers.hpp"

namespace hypercycle {

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients, stored low-to-high. Normal form: no trailing zero
/// coefficients; the zero polynomial is the empty vector.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return IntPoly({Int(1)}); }
    static IntPoly variable() { return IntPoly({Int(0), Int(1)}); }
    // c * x^k
    static IntPoly monomial(std::size_t k, Int c = Int(1));
    // x - root
    static IntPoly linear_root(const Int& root) { return IntPoly({-root, Int(1)}); }

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    const std::vector<Int>& coeffs() const { return coeffs_; }
    // Coefficient of x^i (zero beyond the degree).
    const Int& coeff(std::size_t i) const;

    std::size_t trailing_zeros() const;
    // Divide by x^k; requires the k lowest coefficients to be zero.
    IntPoly shifted_down(std::size_t k) const;
    IntPoly shifted_up(std::size_t k) const;

    IntPoly operator-() const;
    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    bool operator==(const IntPoly&) const = default;

    IntPoly pow(unsigned long e) const;

    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;
    double eval(double x) const;

    // Exact division by (x - root); throws if root is not a root.
    IntPoly divide_linear(const Int& root) const;

    // d-th power sum of the roots (Newton's identities); monic input only.
    Int root_power_sum(unsigned long d) const;

    // Human-readable form in the given variable name, e.g. "x^2 - 3x + 1".
    std::string to_string(const std::string& var) const;

private:
    void normalize();
    std::vector<Int> coeffs_;
};

} // namespace hypercycle
