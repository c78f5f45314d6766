#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qsym/phase.hpp"

namespace qsym {

/// Euler's totient of m >= 1.
std::int64_t euler_phi(std::int64_t m);

/// Coefficients of the m-th cyclotomic polynomial, constant term first.
/// Computed exactly by dividing x^m - 1 by the lower-order cyclotomics.
std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t m);

/// Element of the ring of integers Z[zeta_m] represented by its reduced
/// residue mod the m-th cyclotomic polynomial: an integer vector of length
/// euler_phi(m), constant term first.  Orders 1 and 2 degenerate to plain
/// integers (euler_phi is 1 there), so rational-integer arithmetic carries no
/// cyclotomic cost.  All arithmetic is exact; overflow throws.
class CycInt {
public:
    /// Zero of order 1.
    CycInt() : coeffs_(1, 0) {}

    static CycInt zero(std::int64_t order);
    static CycInt one(std::int64_t order);
    static CycInt from_integer(std::int64_t value, std::int64_t order = 1);

    /// Embeds the root of unity p = zeta_den^num as zeta_order^(num*order/den).
    /// Throws OrderMismatchError unless den divides order.
    static CycInt from_phase(const Phase& p, std::int64_t order);

    std::int64_t order() const { return order_; }
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;

    /// Image under the embedding zeta_m -> zeta_new^(new/m); requires
    /// order() | new_order.  Callers combine mixed orders by rescaling both
    /// sides to the lcm.
    CycInt rescaled(std::int64_t new_order) const;

    CycInt operator-() const;
    friend CycInt operator+(const CycInt& a, const CycInt& b);
    friend CycInt operator-(const CycInt& a, const CycInt& b);
    friend CycInt operator*(const CycInt& a, const CycInt& b);
    friend CycInt operator*(const CycInt& a, std::int64_t k);

    /// Equality of the denoted complex numbers; operands of different orders
    /// are compared at the lcm.
    bool operator==(const CycInt& rhs) const;

    /// Floating image; for test cross-checks and display only.
    std::complex<double> to_complex() const;

    std::string to_string() const;

private:
    CycInt(std::int64_t order, std::vector<std::int64_t> coeffs)
        : order_(order), coeffs_(std::move(coeffs)) {}

    std::int64_t order_ = 1;
    std::vector<std::int64_t> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycInt& v);

}  // namespace qsym
