#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qsym/bicharacter.hpp"
#include "qsym/cyclotomic.hpp"
#include "qsym/grading.hpp"
#include "qsym/phase.hpp"
#include "qsym/report.hpp"

namespace qsym {

/// Generator Theta_i^a identified by its one-based flux index i and particle
/// index a (a = 1 throughout one-particle contexts).  The canonical order is
/// lexicographic: flux-major, particle-minor.
struct GeneratorId {
    std::int32_t flux = 1;
    std::int32_t particle = 1;

    auto operator<=>(const GeneratorId&) const = default;
};

/// Product of generators, kept sorted in canonical order.  A generator may
/// repeat only when it is not nilpotent.
using Word = std::vector<GeneratorId>;

/// Reduced nonneg-denominator fraction; used for filling factors.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d);

    bool operator==(const Rational&) const = default;
    std::string to_string() const;  // "num/den"
};

class AlgebraContext;
using AlgebraContextPtr = std::shared_ptr<const AlgebraContext>;

/// Immutable description of a graded algebra presented by generators and
/// pairwise commutation phases: x*y = lambda(x,y) * y*x, with an optional
/// nilpotency flag per generator (x^2 = 0).  Construction enforces
/// lambda(x,y)*lambda(y,x) = 1, lambda(x,x) in {+1,-1}, and that
/// lambda(x,x) = -1 implies nilpotency.
class AlgebraContext {
public:
    AlgebraContext(Bicharacter bichar, std::int64_t flux_count, std::int64_t particle_count,
                   std::vector<Phase> lambda, std::vector<bool> nilpotent, bool flux_model);

    const GroupSpec& spec() const { return bichar_.spec(); }
    const Bicharacter& bicharacter() const { return bichar_; }

    std::int64_t flux_count() const { return flux_count_; }
    std::int64_t particle_count() const { return particle_count_; }
    std::int64_t generator_count() const { return flux_count_ * particle_count_; }
    bool is_flux_model() const { return flux_model_; }

    const std::vector<GeneratorId>& generators() const { return generators_; }

    /// Canonical position of a generator; throws ContextMismatchError for
    /// generators that do not belong to this context.
    std::size_t index_of(GeneratorId g) const;
    const GradeVector& grade_of(GeneratorId g) const;

    Phase lambda(GeneratorId x, GeneratorId y) const;
    bool nilpotent(GeneratorId g) const;

    /// Order of the cyclotomic coefficient ring; 2 whenever every
    /// commutation phase is real, so coefficients are plain integers.
    std::int64_t coefficient_order() const { return coefficient_order_; }

    /// n/N for the flux model; throws InvalidParameterError elsewhere.
    Rational filling_factor() const;

private:
    Bicharacter bichar_;
    std::int64_t flux_count_;
    std::int64_t particle_count_;
    std::vector<GeneratorId> generators_;
    std::vector<GradeVector> grades_;
    std::vector<Phase> lambda_;
    std::vector<bool> nilpotent_;
    std::int64_t coefficient_order_;
    bool flux_model_;
};

/// One-particle algebra of a bicharacter: generators Theta_1 .. Theta_rank
/// with Theta_i Theta_j = eps(sigma_i, sigma_j) Theta_j Theta_i.  Generators
/// with eps(sigma_i, sigma_i) = -1 are forced nilpotent; extra_nilpotent may
/// flag further ones.  rank must equal the rank of the bicharacter's group.
AlgebraContextPtr new_graded_algebra(const Bicharacter& e, std::int64_t rank,
                                     const std::vector<bool>& extra_nilpotent = {});

/// Multi-particle flux model: N*n nilpotent generators Theta_i^a graded by
/// sigma_i, same-particle pairs commuting by the flux phase and
/// distinct-particle pairs by its negative.
AlgebraContextPtr new_flux_algebra(std::int64_t flux_count, std::int64_t particle_count);

/// Canonical form of a generator word: the sorted word together with the
/// product of commutation phases picked up by the sorting transpositions.
struct WordNormalForm {
    Phase coeff;
    Word word;
};

/// Rewrites an arbitrary word into canonical order; nullopt means the word
/// collapses to zero (a nilpotent generator repeats).  The result does not
/// depend on the order in which adjacent swaps are applied.
std::optional<WordNormalForm> normal_form(const AlgebraContext& ctx,
                                          std::span<const GeneratorId> word);

/// Canonical word with a cyclotomic coefficient.
struct Monomial {
    Word word;
    CycInt coeff;
};

/// Finite sum of canonical monomials with exact coefficients, attached to
/// its context.  The zero element has no terms.
class AlgebraElement {
public:
    static AlgebraElement zero(AlgebraContextPtr ctx);
    static AlgebraElement unit(AlgebraContextPtr ctx);
    static AlgebraElement generator(AlgebraContextPtr ctx, GeneratorId g);
    static AlgebraElement from_word(AlgebraContextPtr ctx, std::span<const GeneratorId> word);
    static AlgebraElement from_monomial(AlgebraContextPtr ctx, const Monomial& m);

    const AlgebraContextPtr& context() const { return ctx_; }
    const std::map<Word, CycInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    AlgebraElement operator-() const;
    AlgebraElement operator+(const AlgebraElement& rhs) const;
    AlgebraElement operator-(const AlgebraElement& rhs) const;
    /// Bilinear product; rewrites every cross term to canonical order.
    AlgebraElement operator*(const AlgebraElement& rhs) const;

    AlgebraElement scaled(const CycInt& c) const;
    AlgebraElement scaled(const Phase& p) const;

    bool operator==(const AlgebraElement& rhs) const;

    std::string to_string() const;

private:
    explicit AlgebraElement(AlgebraContextPtr ctx) : ctx_(std::move(ctx)) {}
    void add_term(const Word& w, const CycInt& c);

    AlgebraContextPtr ctx_;
    std::map<Word, CycInt> terms_;
};

/// Sum of the generator grades of a word (zero grade for the empty word).
GradeVector word_grade(const AlgebraContext& ctx, const Word& word);

/// "Theta[i]" / "Theta[i]^a" tokens joined by spaces; "1" for the empty word.
std::string word_to_string(const AlgebraContext& ctx, const Word& word);

/// True iff the monomial's generators are pairwise distinct and every
/// unordered pair commutes with phase exactly +1; pairs that anticommute or
/// carry a non-real phase make the configuration inadmissible.
bool is_admissible(const AlgebraContext& ctx, const Monomial& m);

/// Occupation pattern of distinct generators, classified.
struct Partition {
    Monomial monomial;
    std::int64_t quasiparticles = 0;  // generators bound
    std::int64_t quasiholes = 0;      // flux indices left unbound
    bool admissible = true;
};

struct EnumerateOptions {
    /// Keep only partitions of exactly this degree (enumeration is still
    /// rooted at degree zero).
    std::optional<std::int64_t> degree;
    bool admissible_only = false;
    /// Enumerations over more than 2^20 candidate subsets are refused unless
    /// force is set.
    bool force = false;
};

/// All partitions (subsets of distinct generators in canonical word form,
/// coefficient +1), sorted by degree then word.  Includes the identity
/// partition.  Throws CapExceededError when the candidate count exceeds the
/// cap and force is not set.
std::vector<Partition> enumerate_partitions(const AlgebraContext& ctx,
                                            const EnumerateOptions& options = {});

/// Theta_alpha = Theta_1^(e_1) * ... * Theta_N^(e_N) for a one-particle
/// context; exponents above 1 are rejected on nilpotent generators.
Monomial monomial_from_grade(const AlgebraContext& ctx, std::span<const std::int64_t> exponents);

struct GradedCommutativityPolicy {
    std::int64_t max_degree = 3;
    SamplePolicy sampling;
};

/// Checks a*b = eps(alpha, beta) * b*a over basis monomials up to the degree
/// bound, exhaustively while the pair count stays within the sampling
/// limit.  Only defined for one-particle contexts, where commutation is
/// determined by the grading.  checked counts ordered pairs.
VerifyReport verify_graded_commutativity(const AlgebraContextPtr& ctx,
                                         const GradedCommutativityPolicy& policy = {});

}  // namespace qsym
