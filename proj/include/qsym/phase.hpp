#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "qsym/errors.hpp"

namespace qsym {

/// Root of unity exp(2*pi*i * num/den) stored as the reduced fraction
/// num/den with 0 <= num < den.  The set of all phases under multiplication
/// is isomorphic to Q/Z under addition; every operation is exact.
class Phase {
public:
    /// The identity phase 1 (= 0/1).
    Phase() = default;

    /// exp(2*pi*i * num/den); the fraction is reduced mod 1 and by gcd.
    Phase(std::int64_t num, std::int64_t den);

    static Phase one() { return Phase(); }
    static Phase minus_one() { return Phase(1, 2); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_one() const { return num_ == 0; }
    /// True for +1 and -1.
    bool is_real() const { return den_ <= 2; }
    /// Multiplicative order: smallest k >= 1 with p^k = 1.
    std::int64_t order() const { return den_; }

    Phase inverse() const;
    Phase pow(std::int64_t k) const;

    friend Phase operator*(const Phase& a, const Phase& b);

    bool operator==(const Phase&) const = default;

    /// Serialized form "num/den".
    std::string to_string() const;
    /// Accepts "num/den" or a bare integer "num".
    static Phase parse(std::string_view text);

    /// Floating image on the unit circle; intended for test cross-checks and
    /// display, never for arithmetic.
    std::complex<double> to_complex() const;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Phase& p);

}  // namespace qsym
