#include "qsym/bicharacter.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <sstream>

#include "qsym/checked.hpp"

namespace qsym {

Biform::Biform(std::vector<std::vector<std::int64_t>> matrix, BiformKind kind)
    : matrix_(std::move(matrix)), kind_(kind) {
    const std::size_t n = matrix_.size();
    if (n == 0) throw InvalidParameterError("biform matrix must be nonempty");
    for (const auto& row : matrix_)
        if (row.size() != n) throw InvalidParameterError("biform matrix must be square");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (kind_ == BiformKind::symmetric && matrix_[i][j] != matrix_[j][i])
                throw InvalidParameterError("symmetric biform requires M = M^T");
            if (kind_ == BiformKind::skew && matrix_[i][j] != -matrix_[j][i])
                throw InvalidParameterError("skew biform requires M = -M^T");
        }
        if (kind_ == BiformKind::skew && matrix_[i][i] != 0)
            throw InvalidParameterError("skew biform requires a zero diagonal");
    }
}

Biform Biform::zero(std::int64_t rank, BiformKind kind) {
    if (rank < 1) throw InvalidParameterError("biform rank must be >= 1");
    return Biform(std::vector<std::vector<std::int64_t>>(
                      static_cast<std::size_t>(rank),
                      std::vector<std::int64_t>(static_cast<std::size_t>(rank), 0)),
                  kind);
}

__int128 Biform::apply(std::span<const std::int64_t> a, std::span<const std::int64_t> b) const {
    if (a.size() != matrix_.size() || b.size() != matrix_.size())
        throw SpecMismatchError("biform argument length does not match its rank");
    __int128 acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            const std::int64_t m = matrix_[i][j];
            if (m == 0 || b[j] == 0) continue;
            const __int128 prod = static_cast<__int128>(a[i]) * b[j];
            __int128 term;
            if (__builtin_mul_overflow(prod, static_cast<__int128>(m), &term))
                throw OverflowError("biform evaluation overflow");
            if (__builtin_add_overflow(acc, term, &acc))
                throw OverflowError("biform evaluation overflow");
        }
    }
    return acc;
}

Bicharacter::Bicharacter(GroupSpec spec, Biform sym, Biform skew, Phase q)
    : spec_(std::move(spec)), sym_(std::move(sym)), skew_(std::move(skew)), q_(q) {
    if (sym_.kind() != BiformKind::symmetric)
        throw InvalidParameterError("sym biform must be symmetric");
    if (skew_.kind() != BiformKind::skew) throw InvalidParameterError("skew biform must be skew");
    if (sym_.rank() != spec_.rank() || skew_.rank() != spec_.rank())
        throw SpecMismatchError("biform rank does not match group rank");

    // Well-definedness on the quotient: shifting any argument by m_i * e_i
    // must not change the value, for every finite factor.
    for (std::size_t i = 0; i < static_cast<std::size_t>(spec_.rank()); ++i) {
        const std::int64_t m = spec_.modulus(i);
        if (m == GroupSpec::kFree) continue;
        for (std::size_t j = 0; j < static_cast<std::size_t>(spec_.rank()); ++j) {
            const __int128 s = static_cast<__int128>(m) * sym_.at(i, j);
            if (s % 2 != 0)
                throw InvalidParameterError(
                    "bicharacter is not well defined on the quotient: modulus " +
                    std::to_string(m) + " times sym entry (" + std::to_string(i + 1) + "," +
                    std::to_string(j + 1) + ") is odd");
            const __int128 k = static_cast<__int128>(m) * skew_.at(i, j);
            if (k % q_.den() != 0)
                throw InvalidParameterError(
                    "bicharacter is not well defined on the quotient: modulus " +
                    std::to_string(m) + " times skew entry (" + std::to_string(i + 1) + "," +
                    std::to_string(j + 1) + ") is not divisible by the order of q");
        }
    }
}

Phase Bicharacter::eval_raw(std::span<const std::int64_t> a,
                            std::span<const std::int64_t> b) const {
    const __int128 s = sym_.apply(a, b);
    const __int128 k = skew_.apply(a, b);
    const Phase sign = (s % 2 != 0) ? Phase::minus_one() : Phase::one();
    __int128 e = k % q_.den();
    if (e < 0) e += q_.den();
    return sign * q_.pow(static_cast<std::int64_t>(e));
}

Phase Bicharacter::eval(const GradeVector& a, const GradeVector& b) const {
    if (a.spec() != spec_ || b.spec() != spec_)
        throw SpecMismatchError("bicharacter argument lives on a different group");
    return eval_raw(a.components(), b.components());
}

Phase Bicharacter::generator_value(std::int64_t i, std::int64_t j) const {
    if (i < 1 || i > spec_.rank() || j < 1 || j > spec_.rank())
        throw InvalidParameterError("generator index out of range");
    return eval(GradeVector::generator(spec_, static_cast<std::size_t>(i - 1)),
                GradeVector::generator(spec_, static_cast<std::size_t>(j - 1)));
}

Phase flux_pair_phase(std::int64_t flux_count, std::int64_t i, std::int64_t j) {
    if (flux_count < 1) throw InvalidParameterError("flux count must be >= 1");
    if (i < 1 || i > flux_count || j < 1 || j > flux_count)
        throw InvalidParameterError("flux index out of range");
    // (-1)^Omega contributes -1 off the diagonal regardless of the sign
    // convention chosen for Omega_ij, and +1 on it.
    const std::int64_t omega_parity = (i == j) ? 0 : 1;
    return ((1 + flux_count + omega_parity) % 2 != 0) ? Phase::minus_one() : Phase::one();
}

Bicharacter flux_bicharacter(std::int64_t flux_count) {
    if (flux_count < 1) throw InvalidParameterError("flux count must be >= 1");
    // The construction-time generator-table audit below costs O(N^4); keep N
    // small enough that it stays instant.
    if (flux_count > 128) throw InvalidParameterError("flux count above 128 is not supported");
    const auto n = static_cast<std::size_t>(flux_count);
    std::vector<std::vector<std::int64_t>> s(n, std::vector<std::int64_t>(n, flux_count));
    for (std::size_t i = 0; i < n; ++i) s[i][i] = flux_count + 1;
    Bicharacter e(GroupSpec::cyclic_power(2, flux_count),
                  Biform(std::move(s), BiformKind::symmetric),
                  Biform::zero(flux_count, BiformKind::skew), Phase::minus_one());
    // The biforms are a derived realization; the generator table is the
    // ground truth, so refuse to hand out anything that deviates from it.
    for (std::int64_t i = 1; i <= flux_count; ++i)
        for (std::int64_t j = 1; j <= flux_count; ++j)
            if (e.generator_value(i, j) != flux_pair_phase(flux_count, i, j))
                throw Error("flux bicharacter realization does not match its generator table");
    return e;
}

namespace {

std::string law_witness(const char* law, const GradeVector& a, const GradeVector& b,
                        const GradeVector& c, const Phase& lhs, const Phase& rhs) {
    std::ostringstream os;
    os << law << " violated at a=" << a.to_string() << " b=" << b.to_string()
       << " c=" << c.to_string() << ": lhs=" << lhs.to_string() << " rhs=" << rhs.to_string();
    return os.str();
}

GradeVector random_element(const GroupSpec& spec, std::mt19937_64& rng) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(spec.rank()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        const std::int64_t m = spec.modulus(i);
        if (m == GroupSpec::kFree) {
            std::uniform_int_distribution<std::int64_t> d(-1000, 1000);
            c[i] = d(rng);
        } else {
            std::uniform_int_distribution<std::int64_t> d(0, m - 1);
            c[i] = d(rng);
        }
    }
    return GradeVector(spec, std::move(c));
}

bool exhaustive_applies(const GroupSpec& spec, const SamplePolicy& policy) {
    const auto n = spec.order();
    return n && *n <= policy.exhaustive_limit;
}

void check_triple(VerifyReport& rep, const PhaseFn& eps, const GradeVector& a,
                  const GradeVector& b, const GradeVector& c) {
    ++rep.checked;
    {
        const Phase lhs = eps(a, group_add(b, c));
        const Phase rhs = eps(a, b) * eps(a, c);
        if (lhs != rhs) rep.fail(law_witness("eps(a,b+c) = eps(a,b)*eps(a,c)", a, b, c, lhs, rhs));
    }
    {
        const Phase lhs = eps(group_add(a, b), c);
        const Phase rhs = eps(a, c) * eps(b, c);
        if (lhs != rhs) rep.fail(law_witness("eps(a+b,c) = eps(a,c)*eps(b,c)", a, b, c, lhs, rhs));
    }
}

}  // namespace

VerifyReport verify_bicharacter(const GroupSpec& spec, const PhaseFn& eps,
                                const SamplePolicy& policy) {
    VerifyReport rep;
    if (exhaustive_applies(spec, policy)) {
        const auto els = all_elements(spec);
        const std::size_t n = els.size();
        // Memoized pair values and addition indices keep the cubic sweep
        // cheap; fall back to direct evaluation for very large tables.
        const bool use_tables = n <= 2048;
        std::vector<Phase> pair_tab;
        std::vector<std::uint32_t> add_tab;
        if (use_tables) {
            pair_tab.resize(n * n);
            add_tab.resize(n * n);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    pair_tab[i * n + j] = eps(els[i], els[j]);
                    add_tab[i * n + j] =
                        static_cast<std::uint32_t>(element_index(group_add(els[i], els[j])));
                }
            }
        }
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                for (std::size_t c = 0; c < n; ++c) {
                    if (!use_tables) {
                        check_triple(rep, eps, els[a], els[b], els[c]);
                        continue;
                    }
                    ++rep.checked;
                    {
                        const Phase lhs = pair_tab[a * n + add_tab[b * n + c]];
                        const Phase rhs = pair_tab[a * n + b] * pair_tab[a * n + c];
                        if (lhs != rhs)
                            rep.fail(law_witness("eps(a,b+c) = eps(a,b)*eps(a,c)", els[a], els[b],
                                                 els[c], lhs, rhs));
                    }
                    {
                        const Phase lhs = pair_tab[add_tab[a * n + b] * n + c];
                        const Phase rhs = pair_tab[a * n + c] * pair_tab[b * n + c];
                        if (lhs != rhs)
                            rep.fail(law_witness("eps(a+b,c) = eps(a,c)*eps(b,c)", els[a], els[b],
                                                 els[c], lhs, rhs));
                    }
                }
            }
        }
        return rep;
    }
    std::mt19937_64 rng(policy.seed);
    for (std::uint64_t s = 0; s < policy.samples; ++s)
        check_triple(rep, eps, random_element(spec, rng), random_element(spec, rng),
                     random_element(spec, rng));
    std::sort(rep.witnesses.begin(), rep.witnesses.end());
    return rep;
}

VerifyReport verify_bicharacter(const Bicharacter& e, const SamplePolicy& policy) {
    return verify_bicharacter(
        e.spec(), [&e](const GradeVector& a, const GradeVector& b) { return e.eval(a, b); },
        policy);
}

VerifyReport verify_normalized(const GroupSpec& spec, const PhaseFn& eps,
                               const SamplePolicy& policy) {
    VerifyReport rep;
    const auto check_pair = [&rep, &eps](const GradeVector& a, const GradeVector& b) {
        ++rep.checked;
        const Phase prod = eps(a, b) * eps(b, a);
        if (!prod.is_one()) {
            std::ostringstream os;
            os << "eps(a,b)*eps(b,a) = 1 violated at a=" << a.to_string()
               << " b=" << b.to_string() << ": got " << prod.to_string();
            rep.fail(os.str());
        }
    };
    if (exhaustive_applies(spec, policy)) {
        const auto els = all_elements(spec);
        for (const auto& a : els)
            for (const auto& b : els) check_pair(a, b);
        return rep;
    }
    std::mt19937_64 rng(policy.seed);
    for (std::uint64_t s = 0; s < policy.samples; ++s)
        check_pair(random_element(spec, rng), random_element(spec, rng));
    std::sort(rep.witnesses.begin(), rep.witnesses.end());
    return rep;
}

VerifyReport verify_normalized(const Bicharacter& e, const SamplePolicy& policy) {
    return verify_normalized(
        e.spec(), [&e](const GradeVector& a, const GradeVector& b) { return e.eval(a, b); },
        policy);
}

BraidedPair braiding_apply(const Bicharacter& e, const GradedBasisVector& u,
                           const GradedBasisVector& v) {
    if (u.grade.spec() != e.spec() || v.grade.spec() != e.spec())
        throw SpecMismatchError("braiding argument lives on a different group");
    return BraidedPair{e.eval(v.grade, u.grade), v, u};
}

namespace {

/// Scalar-decorated word of basis slots; braid moves act on adjacent slots.
struct TensorState {
    Phase coeff;
    std::array<std::size_t, 3> slots;

    bool operator==(const TensorState&) const = default;
};

void braid_move(TensorState& st, std::size_t pos, const PhaseFn& eps,
                const std::vector<GradeVector>& grades) {
    st.coeff = st.coeff * eps(grades[st.slots[pos + 1]], grades[st.slots[pos]]);
    std::swap(st.slots[pos], st.slots[pos + 1]);
}

void check_basis_spec(const GroupSpec& spec, const std::vector<GradeVector>& basis_grades) {
    if (basis_grades.empty()) throw InvalidParameterError("basis must be nonempty");
    for (const auto& g : basis_grades)
        if (g.spec() != spec) throw SpecMismatchError("basis grade lives on a different group");
}

}  // namespace

VerifyReport verify_ybe(const GroupSpec& spec, const PhaseFn& eps,
                        const std::vector<GradeVector>& basis_grades) {
    check_basis_spec(spec, basis_grades);
    VerifyReport rep;
    const std::size_t n = basis_grades.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                ++rep.checked;
                // Composites act right to left.
                TensorState lhs{Phase::one(), {i, j, k}};
                braid_move(lhs, 0, eps, basis_grades);
                braid_move(lhs, 1, eps, basis_grades);
                braid_move(lhs, 0, eps, basis_grades);
                TensorState rhs{Phase::one(), {i, j, k}};
                braid_move(rhs, 1, eps, basis_grades);
                braid_move(rhs, 0, eps, basis_grades);
                braid_move(rhs, 1, eps, basis_grades);
                if (!(lhs == rhs)) {
                    std::ostringstream os;
                    os << "braid relation violated on basis triple (" << i << "," << j << "," << k
                       << "): lhs coeff " << lhs.coeff.to_string() << ", rhs coeff "
                       << rhs.coeff.to_string();
                    rep.fail(os.str());
                }
            }
        }
    }
    return rep;
}

VerifyReport verify_ybe(const Bicharacter& e, const std::vector<GradeVector>& basis_grades) {
    return verify_ybe(
        e.spec(), [&e](const GradeVector& a, const GradeVector& b) { return e.eval(a, b); },
        basis_grades);
}

VerifyReport verify_braid_involution(const GroupSpec& spec, const PhaseFn& eps,
                                     const std::vector<GradeVector>& basis_grades) {
    check_basis_spec(spec, basis_grades);
    VerifyReport rep;
    const std::size_t n = basis_grades.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            ++rep.checked;
            const Phase coeff = eps(basis_grades[j], basis_grades[i]) *
                                eps(basis_grades[i], basis_grades[j]);
            if (!coeff.is_one()) {
                std::ostringstream os;
                os << "Psi^2 = id violated on basis pair (" << i << "," << j
                   << "): coeff " << coeff.to_string();
                rep.fail(os.str());
            }
        }
    }
    return rep;
}

VerifyReport verify_braid_involution(const Bicharacter& e,
                                     const std::vector<GradeVector>& basis_grades) {
    return verify_braid_involution(
        e.spec(), [&e](const GradeVector& a, const GradeVector& b) { return e.eval(a, b); },
        basis_grades);
}

std::vector<GradeVector> single_particle_basis(const GroupSpec& spec) {
    std::vector<GradeVector> basis;
    basis.reserve(static_cast<std::size_t>(spec.rank()));
    for (std::size_t i = 0; i < static_cast<std::size_t>(spec.rank()); ++i)
        basis.push_back(GradeVector::generator(spec, i));
    return basis;
}

}  // namespace qsym
