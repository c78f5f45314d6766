#include "qsym/grading.hpp"

#include <sstream>

#include "qsym/checked.hpp"

namespace qsym {

GroupSpec::GroupSpec(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli)) {
    if (moduli_.empty()) throw InvalidParameterError("group spec needs at least one factor");
    for (auto m : moduli_) {
        if (m != kFree && m < 2)
            throw InvalidParameterError("cyclic factor modulus must be >= 2 (or 0 for a free factor)");
    }
}

GroupSpec GroupSpec::free_group(std::int64_t rank) {
    if (rank < 1) throw InvalidParameterError("group rank must be >= 1");
    return GroupSpec(std::vector<std::int64_t>(static_cast<std::size_t>(rank), kFree));
}

GroupSpec GroupSpec::cyclic_power(std::int64_t modulus, std::int64_t rank) {
    if (rank < 1) throw InvalidParameterError("group rank must be >= 1");
    return GroupSpec(std::vector<std::int64_t>(static_cast<std::size_t>(rank), modulus));
}

bool GroupSpec::is_finite() const {
    for (auto m : moduli_)
        if (m == kFree) return false;
    return true;
}

bool GroupSpec::is_homogeneous() const {
    for (auto m : moduli_)
        if (m != moduli_.front()) return false;
    return true;
}

bool GroupSpec::is_mod2() const {
    for (auto m : moduli_)
        if (m != 2) return false;
    return true;
}

std::optional<std::uint64_t> GroupSpec::order() const {
    std::uint64_t n = 1;
    for (auto m : moduli_) {
        if (m == kFree) return std::nullopt;
        if (__builtin_mul_overflow(n, static_cast<std::uint64_t>(m), &n)) return std::nullopt;
    }
    return n;
}

std::string GroupSpec::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        if (i) os << ",";
        if (moduli_[i] == kFree)
            os << "inf";
        else
            os << moduli_[i];
    }
    os << "]";
    return os.str();
}

namespace {

std::int64_t reduce_component(std::int64_t c, std::int64_t m) {
    if (m == GroupSpec::kFree) return c;
    c %= m;
    if (c < 0) c += m;
    return c;
}

}  // namespace

GradeVector::GradeVector(GroupSpec spec, std::vector<std::int64_t> components)
    : spec_(std::move(spec)), components_(std::move(components)) {
    if (static_cast<std::int64_t>(components_.size()) != spec_.rank())
        throw SpecMismatchError("component count does not match group rank");
    for (std::size_t i = 0; i < components_.size(); ++i)
        components_[i] = reduce_component(components_[i], spec_.modulus(i));
}

GradeVector GradeVector::zero(const GroupSpec& spec) {
    return GradeVector(spec, std::vector<std::int64_t>(static_cast<std::size_t>(spec.rank()), 0));
}

GradeVector GradeVector::generator(const GroupSpec& spec, std::size_t pos) {
    if (pos >= static_cast<std::size_t>(spec.rank()))
        throw InvalidParameterError("generator position out of range");
    std::vector<std::int64_t> c(static_cast<std::size_t>(spec.rank()), 0);
    c[pos] = 1;
    return GradeVector(spec, std::move(c));
}

bool GradeVector::is_zero() const {
    for (auto c : components_)
        if (c != 0) return false;
    return true;
}

std::string GradeVector::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (i) os << ",";
        os << components_[i];
    }
    os << ")";
    return os.str();
}

GradeVector group_add(const GradeVector& a, const GradeVector& b) {
    if (a.spec() != b.spec()) throw SpecMismatchError("cannot add grades from different groups");
    std::vector<std::int64_t> c(a.components().size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const std::int64_t m = a.spec().modulus(i);
        if (m == GroupSpec::kFree)
            c[i] = checked_add(a.component(i), b.component(i));
        else
            c[i] = static_cast<std::int64_t>(
                (static_cast<__int128>(a.component(i)) + b.component(i)) % m);
    }
    return GradeVector(a.spec(), std::move(c));
}

GradeVector operator+(const GradeVector& a, const GradeVector& b) { return group_add(a, b); }

GroupSpec reduce_grading_group(std::int64_t q_order, std::int64_t rank) {
    if (q_order < 1) throw InvalidParameterError("phase unit order must be >= 1");
    return GroupSpec::cyclic_power(q_order <= 2 ? 2 : q_order, rank);
}

GroupSpec free_grading_group(std::int64_t rank) { return GroupSpec::free_group(rank); }

std::vector<GradeVector> all_elements(const GroupSpec& spec) {
    constexpr std::uint64_t kMaxEnumerated = std::uint64_t{1} << 22;
    const auto n = spec.order();
    if (!n) throw InvalidParameterError("cannot enumerate an infinite group");
    if (*n > kMaxEnumerated) throw InvalidParameterError("group too large to enumerate");

    std::vector<GradeVector> out;
    out.reserve(static_cast<std::size_t>(*n));
    std::vector<std::int64_t> c(static_cast<std::size_t>(spec.rank()), 0);
    while (true) {
        out.emplace_back(spec, c);
        std::size_t i = c.size();
        while (i-- > 0) {
            if (++c[i] < spec.modulus(i)) break;
            c[i] = 0;
            if (i == 0) return out;
        }
    }
}

std::uint64_t element_index(const GradeVector& v) {
    if (!v.spec().is_finite()) throw InvalidParameterError("element index needs a finite group");
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < v.components().size(); ++i)
        idx = idx * static_cast<std::uint64_t>(v.spec().modulus(i)) +
              static_cast<std::uint64_t>(v.component(i));
    return idx;
}

}  // namespace qsym
