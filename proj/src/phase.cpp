#include "qsym/phase.hpp"

#include <charconv>
#include <numbers>
#include <numeric>
#include <ostream>

#include "qsym/checked.hpp"

namespace qsym {

Phase::Phase(std::int64_t num, std::int64_t den) {
    if (den <= 0) throw InvalidParameterError("phase denominator must be positive");
    num %= den;
    if (num < 0) num += den;
    const std::int64_t g = num == 0 ? den : std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

Phase Phase::inverse() const { return num_ == 0 ? Phase() : Phase(den_ - num_, den_); }

Phase Phase::pow(std::int64_t k) const {
    std::int64_t e = k % den_;
    if (e < 0) e += den_;
    const auto n = static_cast<std::int64_t>(static_cast<__int128>(num_) * e % den_);
    return Phase(n, den_);
}

Phase operator*(const Phase& a, const Phase& b) {
    const std::int64_t l = checked_lcm(a.den_, b.den_);
    const std::int64_t n =
        checked_add(checked_mul(a.num_, l / a.den_), checked_mul(b.num_, l / b.den_));
    return Phase(n, l);
}

std::string Phase::to_string() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Phase Phase::parse(std::string_view text) {
    const auto parse_int = [&](std::string_view s) {
        std::int64_t v = 0;
        const auto* end = s.data() + s.size();
        const auto [ptr, ec] = std::from_chars(s.data(), end, v);
        if (ec != std::errc() || ptr != end)
            throw ParseError("invalid phase fraction '" + std::string(text) + "'", 1);
        return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Phase(parse_int(text), 1);
    const std::int64_t num = parse_int(text.substr(0, slash));
    const std::int64_t den = parse_int(text.substr(slash + 1));
    if (den <= 0) throw ParseError("phase denominator must be positive", 1);
    return Phase(num, den);
}

std::complex<double> Phase::to_complex() const {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_);
    return std::polar(1.0, angle);
}

std::ostream& operator<<(std::ostream& os, const Phase& p) { return os << p.to_string(); }

}  // namespace qsym
