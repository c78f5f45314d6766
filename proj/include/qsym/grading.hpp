#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsym/errors.hpp"

namespace qsym {

/// Finitely generated abelian group presented as a direct sum of cyclic
/// factors Z_{m_1} x ... x Z_{m_N}.  A modulus of kFree marks a free (Z)
/// factor; finite moduli must be >= 2.  Immutable after construction.
class GroupSpec {
public:
    static constexpr std::int64_t kFree = 0;

    explicit GroupSpec(std::vector<std::int64_t> moduli);

    static GroupSpec free_group(std::int64_t rank);
    static GroupSpec cyclic_power(std::int64_t modulus, std::int64_t rank);

    std::int64_t rank() const { return static_cast<std::int64_t>(moduli_.size()); }
    std::int64_t modulus(std::size_t i) const { return moduli_.at(i); }
    const std::vector<std::int64_t>& moduli() const { return moduli_; }

    bool is_finite() const;
    /// All factors carry the same modulus.
    bool is_homogeneous() const;
    /// Every factor is Z_2.
    bool is_mod2() const;

    /// Number of elements; nullopt for infinite groups or when the count
    /// does not fit in 64 bits.
    std::optional<std::uint64_t> order() const;

    bool operator==(const GroupSpec&) const = default;

    std::string to_string() const;

private:
    std::vector<std::int64_t> moduli_;
};

/// Element of a GroupSpec.  Components on finite factors are stored reduced
/// to the canonical representative in [0, m_i); free components are arbitrary
/// 64-bit integers.  Immutable value type.
class GradeVector {
public:
    GradeVector(GroupSpec spec, std::vector<std::int64_t> components);

    static GradeVector zero(const GroupSpec& spec);
    /// Standard generator at zero-based position pos.
    static GradeVector generator(const GroupSpec& spec, std::size_t pos);

    const GroupSpec& spec() const { return spec_; }
    const std::vector<std::int64_t>& components() const { return components_; }
    std::int64_t component(std::size_t i) const { return components_.at(i); }

    bool is_zero() const;

    bool operator==(const GradeVector&) const = default;

    std::string to_string() const;  // "(1,0,1)"

private:
    GroupSpec spec_;
    std::vector<std::int64_t> components_;
};

/// Componentwise sum reduced to canonical representatives.  Throws
/// SpecMismatchError when the operands live on different specs and
/// OverflowError when a free component overflows.
GradeVector group_add(const GradeVector& a, const GradeVector& b);
GradeVector operator+(const GradeVector& a, const GradeVector& b);

/// Grading group generated by N charges when the phase unit q has the given
/// multiplicative order: (Z_2)^N for q_order in {1, 2}, (Z_q_order)^N for
/// q_order >= 3.  Throws InvalidParameterError for q_order < 1.
GroupSpec reduce_grading_group(std::int64_t q_order, std::int64_t rank);

/// Grading group for callers that request no reduction: Z^N.
GroupSpec free_grading_group(std::int64_t rank);

/// All elements of a finite spec in mixed-radix order, last component
/// fastest.  Throws InvalidParameterError for infinite or oversized specs.
std::vector<GradeVector> all_elements(const GroupSpec& spec);

/// Position of an element within all_elements(spec).
std::uint64_t element_index(const GradeVector& v);

}  // namespace qsym
