#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qsym/grading.hpp"
#include "qsym/phase.hpp"
#include "qsym/report.hpp"

namespace qsym {

enum class BiformKind { symmetric, skew };

/// Integer bilinear form on Z^N given by a square matrix.  Symmetric forms
/// must satisfy M = M^T; skew forms M = -M^T with zero diagonal.
class Biform {
public:
    Biform(std::vector<std::vector<std::int64_t>> matrix, BiformKind kind);

    static Biform zero(std::int64_t rank, BiformKind kind);

    std::int64_t rank() const { return static_cast<std::int64_t>(matrix_.size()); }
    std::int64_t at(std::size_t i, std::size_t j) const { return matrix_.at(i).at(j); }
    const std::vector<std::vector<std::int64_t>>& matrix() const { return matrix_; }
    BiformKind kind() const { return kind_; }

    /// a^T M b with 128-bit accumulation; throws OverflowError rather than
    /// wrapping.
    __int128 apply(std::span<const std::int64_t> a, std::span<const std::int64_t> b) const;

    bool operator==(const Biform&) const = default;

private:
    std::vector<std::vector<std::int64_t>> matrix_;
    BiformKind kind_;
};

/// Bicharacter eps(a, b) = (-1)^(sym(a,b)) * q^(skew(a,b)) on a grading
/// group.  Construction validates the biform shapes and that the value is
/// well defined on the quotient: for every finite factor Z_m and every
/// generator pair, m*sym entries must be even and m*skew entries must vanish
/// mod the order of q.  Multiplicativity in each argument and the symmetry
/// eps(a,b)*eps(b,a) = 1 then hold identically; verify_bicharacter and
/// verify_normalized re-check both by explicit evaluation.
class Bicharacter {
public:
    Bicharacter(GroupSpec spec, Biform sym, Biform skew, Phase q);

    const GroupSpec& spec() const { return spec_; }
    const Biform& sym() const { return sym_; }
    const Biform& skew() const { return skew_; }
    const Phase& q() const { return q_; }

    /// eps(a, b); throws SpecMismatchError unless both arguments live on
    /// this bicharacter's group.
    Phase eval(const GradeVector& a, const GradeVector& b) const;

    /// eps on raw, possibly unreduced component vectors.  Exposed so the
    /// quotient invariance eps(a + m*e_i, b) = eps(a, b) can be observed
    /// directly.
    Phase eval_raw(std::span<const std::int64_t> a, std::span<const std::int64_t> b) const;

    /// eps(sigma_i, sigma_j) on one-based generator indices.
    Phase generator_value(std::int64_t i, std::int64_t j) const;

    bool operator==(const Bicharacter&) const = default;

private:
    GroupSpec spec_;
    Biform sym_;
    Biform skew_;
    Phase q_;
};

/// Commutation phase of the charge model with N flux quanta per particle:
/// +1 or -1 according to -(-1)^N * (-1)^(Omega_ij) with Omega_ij = +-1 off
/// the diagonal and 0 on it, i.e. (-1)^N for i != j and -(-1)^N for i = j.
/// One-based indices.
Phase flux_pair_phase(std::int64_t flux_count, std::int64_t i, std::int64_t j);

/// The bicharacter of the flux model on (Z_2)^N: q = -1, zero skew form,
/// symmetric form with diagonal N+1 and off-diagonal N.  The constructor
/// cross-checks every generator pair against flux_pair_phase and refuses to
/// return a table that deviates from it.
Bicharacter flux_bicharacter(std::int64_t flux_count);

/// Arbitrary candidate pairing; lets verifiers run against tables that were
/// never produced by a Bicharacter (corrupted or hand-built ones included).
using PhaseFn = std::function<Phase(const GradeVector&, const GradeVector&)>;

/// Checks multiplicativity in both arguments: eps(a, b+c) = eps(a,b)*eps(a,c)
/// and eps(a+b, c) = eps(a,c)*eps(b,c).  checked counts triples.
VerifyReport verify_bicharacter(const GroupSpec& spec, const PhaseFn& eps,
                                const SamplePolicy& policy = {});
VerifyReport verify_bicharacter(const Bicharacter& e, const SamplePolicy& policy = {});

/// Checks eps(a,b)*eps(b,a) = 1 on pairs.  checked counts pairs.
VerifyReport verify_normalized(const GroupSpec& spec, const PhaseFn& eps,
                               const SamplePolicy& policy = {});
VerifyReport verify_normalized(const Bicharacter& e, const SamplePolicy& policy = {});

/// Homogeneous basis vector of a graded vector space: an identifying index
/// plus its grade.
struct GradedBasisVector {
    std::size_t index;
    GradeVector grade;
};

struct BraidedPair {
    Phase coeff;
    GradedBasisVector first;
    GradedBasisVector second;
};

/// The braiding on homogeneous vectors: u (x) v -> eps(beta, alpha) * v (x) u
/// where alpha, beta are the grades of u, v.
BraidedPair braiding_apply(const Bicharacter& e, const GradedBasisVector& u,
                           const GradedBasisVector& v);

/// Checks the braid relation
///   (Psi (x) id)(id (x) Psi)(Psi (x) id) = (id (x) Psi)(Psi (x) id)(id (x) Psi)
/// on every ordered triple of basis vectors, expanding both composites move
/// by move.  checked counts triples.
VerifyReport verify_ybe(const GroupSpec& spec, const PhaseFn& eps,
                        const std::vector<GradeVector>& basis_grades);
VerifyReport verify_ybe(const Bicharacter& e, const std::vector<GradeVector>& basis_grades);

/// Checks Psi^2 = id on every ordered pair of basis vectors, which holds
/// exactly when the pairing is normalized on the grades involved.  checked
/// counts pairs.
VerifyReport verify_braid_involution(const GroupSpec& spec, const PhaseFn& eps,
                                     const std::vector<GradeVector>& basis_grades);
VerifyReport verify_braid_involution(const Bicharacter& e,
                                     const std::vector<GradeVector>& basis_grades);

/// Grades of the standard one-particle basis: sigma_1 .. sigma_N.
std::vector<GradeVector> single_particle_basis(const GroupSpec& spec);

}  // namespace qsym
