#include "hypercycle/polynomial.hpp"

#include <sstream>

#include "hypercycle/errors.hpp"

namespace hypercycle {

namespace {
const Int kZero(0);
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::monomial(std::size_t k, Int c) {
    std::vector<Int> v(k + 1, Int(0));
    v[k] = std::move(c);
    return IntPoly(std::move(v));
}

const Int& IntPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

std::size_t IntPoly::trailing_zeros() const {
    std::size_t z = 0;
    while (z < coeffs_.size() && coeffs_[z] == 0) ++z;
    return z;
}

IntPoly IntPoly::shifted_down(std::size_t k) const {
    if (is_zero()) return IntPoly();
    if (trailing_zeros() < k)
        throw InternalConsistencyError("shifted_down: polynomial not divisible by x^" + std::to_string(k));
    return IntPoly(std::vector<Int>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()));
}

IntPoly IntPoly::shifted_up(std::size_t k) const {
    if (is_zero()) return IntPoly();
    std::vector<Int> v(k, Int(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> v(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = -coeffs_[i];
    return IntPoly(std::move(v));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
    return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> v(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPoly(std::move(v));
}

IntPoly IntPoly::pow(unsigned long e) const {
    // (x - c)^e via the binomial recurrence: O(e) big-integer operations
    // instead of O(e^2) through repeated squaring of dense polynomials.
    if (degree() == 1 && is_monic()) {
        const Int c = -coeffs_[0];
        std::vector<Int> v(e + 1);
        v[e] = 1;
        for (unsigned long k = e; k-- > 0;) v[k] = v[k + 1] * (-c) * Int(k + 1) / Int(e - k);
        return IntPoly(std::move(v));
    }
    IntPoly result = IntPoly::one();
    IntPoly base = *this;
    while (e > 0) {
        if (e & 1UL) result = result * base;
        e >>= 1UL;
        if (e > 0) base = base * base;
    }
    return result;
}

Int IntPoly::eval(const Int& x) const {
    Int acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

Rat IntPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

double IntPoly::eval(double x) const {
    double acc = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i].get_d();
    return acc;
}

IntPoly IntPoly::divide_linear(const Int& root) const {
    if (is_zero()) throw InternalConsistencyError("divide_linear on zero polynomial");
    std::vector<Int> q(coeffs_.size() - 1, Int(0));
    Int carry(0);
    for (std::size_t i = coeffs_.size(); i-- > 1;) {
        carry = carry * root + coeffs_[i];
        q[i - 1] = carry;
    }
    if (carry * root + coeffs_[0] != 0)
        throw InternalConsistencyError("divide_linear: " + root.get_str() + " is not a root");
    return IntPoly(std::move(q));
}

Int IntPoly::root_power_sum(unsigned long d) const {
    if (!is_monic()) throw InternalConsistencyError("root_power_sum requires a monic polynomial");
    const auto m = static_cast<unsigned long>(degree());
    // e_i = (-1)^i * coeff(m - i); Newton:
    //   p_k = e_1 p_{k-1} - e_2 p_{k-2} + ... + (-1)^{k-1} k e_k   (k <= m)
    //   p_k = e_1 p_{k-1} - ... + (-1)^{m-1} e_m p_{k-m}           (k >  m)
    std::vector<Int> e(m + 1);
    for (unsigned long i = 1; i <= m; ++i) {
        e[i] = coeff(m - i);
        if (i % 2 == 1) e[i] = -e[i];
    }
    std::vector<Int> p(d + 1, Int(0));
    for (unsigned long k = 1; k <= d; ++k) {
        Int acc(0);
        for (unsigned long i = 1; i < k && i <= m; ++i) {
            Int term = e[i] * p[k - i];
            acc += (i % 2 == 1) ? term : -term;
        }
        if (k <= m) {
            Int term = Int(k) * e[k];
            acc += (k % 2 == 1) ? term : -term;
        }
        p[k] = acc;
    }
    return d == 0 ? Int(degree()) : p[d];
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Int& c = coeffs_[i];
        if (c == 0) continue;
        Int a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (i == 0 || a != 1) out << a.get_str();
        if (i > 0) {
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

} // namespace hypercycle
