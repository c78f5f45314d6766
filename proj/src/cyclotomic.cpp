#include "qsym/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <ostream>
#include <sstream>

#include "qsym/checked.hpp"

namespace qsym {

std::int64_t euler_phi(std::int64_t m) {
    if (m < 1) throw InvalidParameterError("totient argument must be >= 1");
    std::int64_t result = m;
    for (std::int64_t p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

/// Quotient of num / den for monic den; throws if the division is not exact.
std::vector<std::int64_t> exact_monic_div(std::vector<std::int64_t> num,
                                          const std::vector<std::int64_t>& den) {
    const std::size_t dn = den.size() - 1;
    if (num.size() < den.size()) throw Error("polynomial division underflow");
    std::vector<std::int64_t> quot(num.size() - den.size() + 1, 0);
    for (std::size_t qi = quot.size(); qi-- > 0;) {
        const std::int64_t c = num[qi + dn];
        quot[qi] = c;
        if (c == 0) continue;
        for (std::size_t k = 0; k <= dn; ++k)
            num[qi + k] = checked_sub(num[qi + k], checked_mul(c, den[k]));
    }
    for (auto v : num)
        if (v != 0) throw Error("polynomial division was not exact");
    return quot;
}

/// Replaces c by its residue mod the monic polynomial phi, in place.
void reduce_mod(std::vector<std::int64_t>& c, const std::vector<std::int64_t>& phi) {
    const std::size_t deg = phi.size() - 1;
    for (std::size_t k = c.size(); k-- > deg;) {
        const std::int64_t t = c[k];
        if (t == 0) continue;
        c[k] = 0;
        for (std::size_t j = 0; j < deg; ++j)
            c[k - deg + j] = checked_sub(c[k - deg + j], checked_mul(t, phi[j]));
    }
    c.resize(deg, 0);
}

const std::vector<std::int64_t>& cyclotomic_cached(std::int64_t m) {
    static std::mutex mu;
    static std::map<std::int64_t, std::vector<std::int64_t>> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(m); it != cache.end()) return it->second;
    }
    // x^m - 1 divided by every lower cyclotomic whose order divides m.
    std::vector<std::int64_t> poly(static_cast<std::size_t>(m) + 1, 0);
    poly[0] = -1;
    poly[static_cast<std::size_t>(m)] = 1;
    for (std::int64_t d = 1; d < m; ++d)
        if (m % d == 0) poly = exact_monic_div(std::move(poly), cyclotomic_cached(d));
    std::lock_guard lock(mu);
    return cache.emplace(m, std::move(poly)).first->second;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t m) {
    if (m < 1) throw InvalidParameterError("cyclotomic order must be >= 1");
    if (m > 10'000) throw InvalidParameterError("cyclotomic order too large");
    return cyclotomic_cached(m);
}

CycInt CycInt::zero(std::int64_t order) {
    if (order < 1) throw InvalidParameterError("cyclotomic order must be >= 1");
    return CycInt(order, std::vector<std::int64_t>(static_cast<std::size_t>(euler_phi(order)), 0));
}

CycInt CycInt::one(std::int64_t order) {
    CycInt v = zero(order);
    v.coeffs_[0] = 1;
    return v;
}

CycInt CycInt::from_integer(std::int64_t value, std::int64_t order) {
    CycInt v = zero(order);
    v.coeffs_[0] = value;
    return v;
}

CycInt CycInt::from_phase(const Phase& p, std::int64_t order) {
    if (order < 1) throw InvalidParameterError("cyclotomic order must be >= 1");
    if (order % p.den() != 0)
        throw OrderMismatchError("phase of order " + std::to_string(p.den()) +
                                 " does not embed at cyclotomic order " + std::to_string(order));
    const std::int64_t k = checked_mul(p.num(), order / p.den());
    std::vector<std::int64_t> c(static_cast<std::size_t>(k) + 1, 0);
    c[static_cast<std::size_t>(k)] = 1;
    const std::int64_t phi = euler_phi(order);
    if (static_cast<std::int64_t>(c.size()) > phi)
        reduce_mod(c, cyclotomic_polynomial(order));
    else
        c.resize(static_cast<std::size_t>(phi), 0);
    return CycInt(order, std::move(c));
}

bool CycInt::is_zero() const {
    for (auto c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycInt::is_one() const {
    if (coeffs_[0] != 1) return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

CycInt CycInt::rescaled(std::int64_t new_order) const {
    if (new_order == order_) return *this;
    if (new_order < 1 || new_order % order_ != 0)
        throw OrderMismatchError("cannot rescale cyclotomic order " + std::to_string(order_) +
                                 " to " + std::to_string(new_order));
    const std::int64_t ratio = new_order / order_;
    std::vector<std::int64_t> c((coeffs_.size() - 1) * static_cast<std::size_t>(ratio) + 1, 0);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        c[k * static_cast<std::size_t>(ratio)] = coeffs_[k];
    const std::int64_t phi = euler_phi(new_order);
    if (static_cast<std::int64_t>(c.size()) > phi)
        reduce_mod(c, cyclotomic_polynomial(new_order));
    else
        c.resize(static_cast<std::size_t>(phi), 0);
    return CycInt(new_order, std::move(c));
}

CycInt CycInt::operator-() const {
    CycInt v = *this;
    for (auto& c : v.coeffs_) c = checked_sub(0, c);
    return v;
}

namespace {

void require_same_order(const CycInt& a, const CycInt& b) {
    if (a.order() != b.order())
        throw OrderMismatchError("cyclotomic orders differ (" + std::to_string(a.order()) +
                                 " vs " + std::to_string(b.order()) + "); rescale to the lcm first");
}

}  // namespace

CycInt operator+(const CycInt& a, const CycInt& b) {
    require_same_order(a, b);
    CycInt v = a;
    for (std::size_t i = 0; i < v.coeffs_.size(); ++i)
        v.coeffs_[i] = checked_add(v.coeffs_[i], b.coeffs_[i]);
    return v;
}

CycInt operator-(const CycInt& a, const CycInt& b) {
    require_same_order(a, b);
    CycInt v = a;
    for (std::size_t i = 0; i < v.coeffs_.size(); ++i)
        v.coeffs_[i] = checked_sub(v.coeffs_[i], b.coeffs_[i]);
    return v;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
    require_same_order(a, b);
    const std::size_t phi = a.coeffs_.size();
    std::vector<std::int64_t> conv(2 * phi - 1, 0);
    for (std::size_t i = 0; i < phi; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < phi; ++j) {
            if (b.coeffs_[j] == 0) continue;
            conv[i + j] = checked_add(conv[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
        }
    }
    if (conv.size() > phi)
        reduce_mod(conv, cyclotomic_polynomial(a.order_));
    else
        conv.resize(phi, 0);
    return CycInt(a.order_, std::move(conv));
}

CycInt operator*(const CycInt& a, std::int64_t k) {
    CycInt v = a;
    for (auto& c : v.coeffs_) c = checked_mul(c, k);
    return v;
}

bool CycInt::operator==(const CycInt& rhs) const {
    if (order_ == rhs.order_) return coeffs_ == rhs.coeffs_;
    const std::int64_t l = checked_lcm(order_, rhs.order_);
    return rescaled(l).coeffs_ == rhs.rescaled(l).coeffs_;
}

std::complex<double> CycInt::to_complex() const {
    std::complex<double> acc = 0;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        acc += static_cast<double>(coeffs_[k]) *
               Phase(static_cast<std::int64_t>(k), order_).to_complex();
    }
    return acc;
}

std::string CycInt::to_string() const {
    if (coeffs_.size() == 1) return std::to_string(coeffs_[0]);
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const std::int64_t c = coeffs_[k];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        const std::int64_t mag = c < 0 ? -c : c;
        if (k == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << "*";
        os << "z" << order_;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycInt& v) { return os << v.to_string(); }

}  // namespace qsym
