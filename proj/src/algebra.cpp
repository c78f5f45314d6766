#include "qsym/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "qsym/checked.hpp"

namespace qsym {

namespace {

constexpr std::int64_t kMaxGenerators = 1024;
constexpr std::uint64_t kPartitionCap = std::uint64_t{1} << 20;
constexpr std::uint64_t kMaxWordLength = std::uint64_t{1} << 20;

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw InvalidParameterError("zero denominator");
    if (d < 0) {
        n = checked_sub(0, n);
        d = checked_sub(0, d);
    }
    const std::int64_t g = n == 0 ? d : std::gcd(n < 0 ? -n : n, d);
    num = n / g;
    den = d / g;
}

std::string Rational::to_string() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

AlgebraContext::AlgebraContext(Bicharacter bichar, std::int64_t flux_count,
                               std::int64_t particle_count, std::vector<Phase> lambda,
                               std::vector<bool> nilpotent, bool flux_model)
    : bichar_(std::move(bichar)),
      flux_count_(flux_count),
      particle_count_(particle_count),
      lambda_(std::move(lambda)),
      nilpotent_(std::move(nilpotent)),
      coefficient_order_(2),
      flux_model_(flux_model) {
    if (flux_count_ < 1 || particle_count_ < 1)
        throw InvalidParameterError("flux and particle counts must be >= 1");
    if (flux_count_ != bichar_.spec().rank())
        throw SpecMismatchError("flux count does not match the grading group rank");
    const std::int64_t g = generator_count();
    if (g > kMaxGenerators) throw InvalidParameterError("too many generators");
    if (static_cast<std::int64_t>(lambda_.size()) != g * g)
        throw InvalidParameterError("commutation table has the wrong size");
    if (static_cast<std::int64_t>(nilpotent_.size()) != g)
        throw InvalidParameterError("nilpotency table has the wrong size");

    generators_.reserve(static_cast<std::size_t>(g));
    grades_.reserve(static_cast<std::size_t>(g));
    for (std::int32_t f = 1; f <= flux_count_; ++f) {
        for (std::int32_t p = 1; p <= particle_count_; ++p) {
            generators_.push_back(GeneratorId{f, p});
            grades_.push_back(
                GradeVector::generator(bichar_.spec(), static_cast<std::size_t>(f - 1)));
        }
    }

    for (std::int64_t x = 0; x < g; ++x) {
        const Phase diag = lambda_[static_cast<std::size_t>(x * g + x)];
        if (!diag.is_real())
            throw InvalidParameterError("self-commutation phase must be +1 or -1");
        if (diag == Phase::minus_one() && !nilpotent_[static_cast<std::size_t>(x)])
            throw InvalidParameterError(
                "a generator anticommuting with itself must be nilpotent");
        for (std::int64_t y = 0; y < g; ++y) {
            const Phase fwd = lambda_[static_cast<std::size_t>(x * g + y)];
            const Phase bwd = lambda_[static_cast<std::size_t>(y * g + x)];
            if (!(fwd * bwd).is_one())
                throw InvalidParameterError(
                    "commutation phases must satisfy lambda(x,y)*lambda(y,x) = 1");
        }
    }
    for (const auto& p : lambda_) coefficient_order_ = checked_lcm(coefficient_order_, p.den());
}

std::size_t AlgebraContext::index_of(GeneratorId g) const {
    if (g.flux < 1 || g.flux > flux_count_ || g.particle < 1 || g.particle > particle_count_) {
        std::ostringstream os;
        os << "generator Theta[" << g.flux << "]";
        if (particle_count_ > 1 || g.particle != 1) os << "^" << g.particle;
        os << " does not belong to this context";
        throw ContextMismatchError(os.str());
    }
    return static_cast<std::size_t>((g.flux - 1) * particle_count_ + (g.particle - 1));
}

const GradeVector& AlgebraContext::grade_of(GeneratorId g) const { return grades_[index_of(g)]; }

Phase AlgebraContext::lambda(GeneratorId x, GeneratorId y) const {
    const std::size_t n = static_cast<std::size_t>(generator_count());
    return lambda_[index_of(x) * n + index_of(y)];
}

bool AlgebraContext::nilpotent(GeneratorId g) const { return nilpotent_[index_of(g)]; }

Rational AlgebraContext::filling_factor() const {
    if (!flux_model_)
        throw InvalidParameterError("filling factor is defined only for the flux model");
    return Rational(particle_count_, flux_count_);
}

AlgebraContextPtr new_graded_algebra(const Bicharacter& e, std::int64_t rank,
                                     const std::vector<bool>& extra_nilpotent) {
    if (rank != e.spec().rank())
        throw SpecMismatchError("requested rank does not match the bicharacter's group");
    if (!extra_nilpotent.empty() &&
        static_cast<std::int64_t>(extra_nilpotent.size()) != rank)
        throw InvalidParameterError("nilpotency overrides must list every generator");
    const auto n = static_cast<std::size_t>(rank);
    std::vector<Phase> lambda(n * n);
    std::vector<bool> nil(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            lambda[i * n + j] = e.generator_value(static_cast<std::int64_t>(i + 1),
                                                  static_cast<std::int64_t>(j + 1));
        nil[i] = lambda[i * n + i] == Phase::minus_one() ||
                 (!extra_nilpotent.empty() && extra_nilpotent[i]);
    }
    return std::make_shared<AlgebraContext>(e, rank, 1, std::move(lambda), std::move(nil), false);
}

AlgebraContextPtr new_flux_algebra(std::int64_t flux_count, std::int64_t particle_count) {
    if (flux_count < 1 || particle_count < 1)
        throw InvalidParameterError("flux and particle counts must be >= 1");
    Bicharacter e = flux_bicharacter(flux_count);
    const auto g = static_cast<std::size_t>(flux_count * particle_count);
    std::vector<Phase> lambda(g * g);
    const auto idx = [particle_count](std::int64_t f, std::int64_t p) {
        return static_cast<std::size_t>((f - 1) * particle_count + (p - 1));
    };
    for (std::int64_t i = 1; i <= flux_count; ++i) {
        for (std::int64_t a = 1; a <= particle_count; ++a) {
            for (std::int64_t j = 1; j <= flux_count; ++j) {
                for (std::int64_t b = 1; b <= particle_count; ++b) {
                    Phase v = flux_pair_phase(flux_count, i, j);
                    if (a != b) v = v * Phase::minus_one();
                    lambda[idx(i, a) * g + idx(j, b)] = v;
                }
            }
        }
    }
    return std::make_shared<AlgebraContext>(std::move(e), flux_count, particle_count,
                                            std::move(lambda), std::vector<bool>(g, true), true);
}

std::optional<WordNormalForm> normal_form(const AlgebraContext& ctx,
                                          std::span<const GeneratorId> word) {
    Word w(word.begin(), word.end());
    for (const auto& g : w) ctx.index_of(g);  // reject foreign generators up front

    // Stable insertion sort; each adjacent transposition of an out-of-order
    // pair (u, v) applies u v = lambda(u, v) v u.  Equal generators never
    // swap, so the accumulated phase is the product over inversion pairs and
    // does not depend on the swap schedule.
    Phase coeff = Phase::one();
    for (std::size_t i = 1; i < w.size(); ++i) {
        for (std::size_t j = i; j > 0 && w[j] < w[j - 1]; --j) {
            coeff = coeff * ctx.lambda(w[j - 1], w[j]);
            std::swap(w[j - 1], w[j]);
        }
    }
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] == w[i - 1] && ctx.nilpotent(w[i])) return std::nullopt;
    return WordNormalForm{coeff, std::move(w)};
}

AlgebraElement AlgebraElement::zero(AlgebraContextPtr ctx) {
    if (!ctx) throw InvalidParameterError("null algebra context");
    return AlgebraElement(std::move(ctx));
}

AlgebraElement AlgebraElement::unit(AlgebraContextPtr ctx) {
    AlgebraElement e = zero(std::move(ctx));
    e.terms_.emplace(Word{}, CycInt::one(e.ctx_->coefficient_order()));
    return e;
}

AlgebraElement AlgebraElement::generator(AlgebraContextPtr ctx, GeneratorId g) {
    AlgebraElement e = zero(std::move(ctx));
    e.ctx_->index_of(g);
    e.terms_.emplace(Word{g}, CycInt::one(e.ctx_->coefficient_order()));
    return e;
}

AlgebraElement AlgebraElement::from_word(AlgebraContextPtr ctx,
                                         std::span<const GeneratorId> word) {
    AlgebraElement e = zero(std::move(ctx));
    const auto nf = normal_form(*e.ctx_, word);
    if (nf)
        e.terms_.emplace(nf->word,
                         CycInt::from_phase(nf->coeff, e.ctx_->coefficient_order()));
    return e;
}

AlgebraElement AlgebraElement::from_monomial(AlgebraContextPtr ctx, const Monomial& m) {
    AlgebraElement e = zero(std::move(ctx));
    const std::int64_t order = e.ctx_->coefficient_order();
    CycInt coeff = m.coeff;
    if (coeff.order() != order) {
        if (order % coeff.order() != 0)
            throw OrderMismatchError("monomial coefficient order is incompatible with context");
        coeff = coeff.rescaled(order);
    }
    const auto nf = normal_form(*e.ctx_, m.word);
    if (nf) e.add_term(nf->word, coeff * CycInt::from_phase(nf->coeff, order));
    return e;
}

void AlgebraElement::add_term(const Word& w, const CycInt& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement e(ctx_);
    for (const auto& [w, c] : terms_) e.terms_.emplace(w, -c);
    return e;
}

namespace {

void require_same_context(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.context() != b.context())
        throw ContextMismatchError("elements belong to different algebra contexts");
}

}  // namespace

AlgebraElement AlgebraElement::operator+(const AlgebraElement& rhs) const {
    require_same_context(*this, rhs);
    AlgebraElement e = *this;
    for (const auto& [w, c] : rhs.terms_) e.add_term(w, c);
    return e;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& rhs) const {
    return *this + (-rhs);
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& rhs) const {
    require_same_context(*this, rhs);
    const std::int64_t order = ctx_->coefficient_order();
    AlgebraElement out(ctx_);
    Word cat;
    for (const auto& [w1, c1] : terms_) {
        for (const auto& [w2, c2] : rhs.terms_) {
            cat.clear();
            cat.reserve(w1.size() + w2.size());
            cat.insert(cat.end(), w1.begin(), w1.end());
            cat.insert(cat.end(), w2.begin(), w2.end());
            const auto nf = normal_form(*ctx_, cat);
            if (!nf) continue;
            out.add_term(nf->word, c1 * c2 * CycInt::from_phase(nf->coeff, order));
        }
    }
    return out;
}

AlgebraElement AlgebraElement::scaled(const CycInt& c) const {
    const std::int64_t order = ctx_->coefficient_order();
    CycInt factor = c;
    if (factor.order() != order) {
        if (order % factor.order() != 0)
            throw OrderMismatchError("scalar order is incompatible with context coefficients");
        factor = factor.rescaled(order);
    }
    AlgebraElement e(ctx_);
    for (const auto& [w, coeff] : terms_) e.add_term(w, coeff * factor);
    return e;
}

AlgebraElement AlgebraElement::scaled(const Phase& p) const {
    return scaled(CycInt::from_phase(p, ctx_->coefficient_order()));
}

bool AlgebraElement::operator==(const AlgebraElement& rhs) const {
    return ctx_ == rhs.ctx_ && terms_ == rhs.terms_;
}

std::string AlgebraElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        const std::string coeff = c.to_string();
        if (coeff.find(' ') != std::string::npos)
            os << "(" << coeff << ")";
        else
            os << coeff;
        os << " · " << word_to_string(*ctx_, w);
    }
    return os.str();
}

GradeVector word_grade(const AlgebraContext& ctx, const Word& word) {
    GradeVector g = GradeVector::zero(ctx.spec());
    for (const auto& gen : word) g = g + ctx.grade_of(gen);
    return g;
}

std::string word_to_string(const AlgebraContext& ctx, const Word& word) {
    if (word.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) os << " ";
        os << "Theta[" << word[i].flux << "]";
        if (ctx.particle_count() > 1) os << "^" << word[i].particle;
    }
    return os.str();
}

bool is_admissible(const AlgebraContext& ctx, const Monomial& m) {
    for (std::size_t i = 0; i < m.word.size(); ++i) {
        for (std::size_t j = i + 1; j < m.word.size(); ++j) {
            if (m.word[i] == m.word[j]) return false;
            if (!(ctx.lambda(m.word[i], m.word[j]) == Phase::one())) return false;
        }
    }
    return true;
}

namespace {

std::int64_t distinct_flux_count(const Word& word) {
    std::int64_t count = 0;
    std::int32_t last = 0;
    for (const auto& g : word) {  // word is flux-major sorted
        if (g.flux != last) {
            ++count;
            last = g.flux;
        }
    }
    return count;
}

/// sum_{k=0..max_size} C(g, k), saturating just above the cap.
std::uint64_t candidate_subsets(std::int64_t g, std::int64_t max_size, std::uint64_t cap) {
    std::uint64_t total = 0;
    std::uint64_t binom = 1;
    for (std::int64_t k = 0;; ++k) {
        total += binom;
        if (total > cap) return cap + 1;
        if (k == max_size) return total;
        if (binom > cap) return cap + 1;
        binom = binom * static_cast<std::uint64_t>(g - k) / static_cast<std::uint64_t>(k + 1);
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(const AlgebraContext& ctx,
                                            const EnumerateOptions& options) {
    const std::int64_t g = ctx.generator_count();
    if (options.degree && *options.degree < 0)
        throw InvalidParameterError("partition degree must be >= 0");
    const std::int64_t max_size = options.degree ? std::min(*options.degree, g) : g;
    if (candidate_subsets(g, max_size, kPartitionCap) > kPartitionCap && !options.force)
        throw CapExceededError(
            "partition enumeration exceeds " + std::to_string(kPartitionCap) +
            " candidate subsets; pass force to run it anyway");

    const auto& gens = ctx.generators();
    std::vector<Partition> out;
    Word cur;

    const auto emit = [&] {
        if (options.degree && static_cast<std::int64_t>(cur.size()) != *options.degree) return;
        Partition p;
        p.monomial = Monomial{cur, CycInt::one(ctx.coefficient_order())};
        p.quasiparticles = static_cast<std::int64_t>(cur.size());
        p.quasiholes = ctx.flux_count() - distinct_flux_count(cur);
        p.admissible = options.admissible_only || is_admissible(ctx, p.monomial);
        if (!options.admissible_only || p.admissible) out.push_back(std::move(p));
    };

    const auto extendable = [&](std::size_t idx) {
        if (!options.admissible_only) return true;
        for (const auto& prev : cur)
            if (!(ctx.lambda(prev, gens[idx]) == Phase::one())) return false;
        return true;
    };

    const auto rec = [&](auto&& self, std::size_t start) -> void {
        emit();
        if (static_cast<std::int64_t>(cur.size()) == max_size) return;
        for (std::size_t idx = start; idx < gens.size(); ++idx) {
            if (!extendable(idx)) continue;
            cur.push_back(gens[idx]);
            self(self, idx + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);

    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        if (a.monomial.word.size() != b.monomial.word.size())
            return a.monomial.word.size() < b.monomial.word.size();
        return a.monomial.word < b.monomial.word;
    });
    return out;
}

Monomial monomial_from_grade(const AlgebraContext& ctx,
                             std::span<const std::int64_t> exponents) {
    if (ctx.particle_count() != 1)
        throw InvalidParameterError("grade monomials are defined for one-particle contexts");
    if (static_cast<std::int64_t>(exponents.size()) != ctx.flux_count())
        throw SpecMismatchError("exponent count does not match the generator count");
    Word w;
    std::uint64_t length = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        const std::int64_t e = exponents[i];
        if (e < 0) throw InvalidParameterError("exponents must be >= 0");
        const GeneratorId gen{static_cast<std::int32_t>(i + 1), 1};
        if (e > 1 && ctx.nilpotent(gen))
            throw InvalidParameterError("exponent " + std::to_string(e) +
                                        " exceeds the nilpotency bound of Theta[" +
                                        std::to_string(i + 1) + "]");
        length += static_cast<std::uint64_t>(e);
        if (length > kMaxWordLength) throw InvalidParameterError("monomial word too long");
        for (std::int64_t k = 0; k < e; ++k) w.push_back(gen);
    }
    return Monomial{std::move(w), CycInt::one(ctx.coefficient_order())};
}

VerifyReport verify_graded_commutativity(const AlgebraContextPtr& ctx,
                                         const GradedCommutativityPolicy& policy) {
    if (!ctx) throw InvalidParameterError("null algebra context");
    if (ctx->particle_count() != 1)
        throw InvalidParameterError(
            "graded commutativity is grade-determined only for one-particle contexts");
    if (policy.max_degree < 0) throw InvalidParameterError("degree bound must be >= 0");

    // Basis monomials up to the degree bound: sorted words, repeats allowed
    // only on non-nilpotent generators.  The list is abandoned in favor of
    // random sampling if it grows past the exhaustive budget.
    const std::size_t list_cap = 4096;
    std::vector<Word> words;
    bool truncated = false;
    Word cur;
    const auto rec = [&](auto&& self, std::size_t start) -> void {
        if (truncated) return;
        if (words.size() >= list_cap) {
            truncated = true;
            return;
        }
        words.push_back(cur);
        if (static_cast<std::int64_t>(cur.size()) == policy.max_degree) return;
        for (std::size_t idx = start; idx < ctx->generators().size(); ++idx) {
            const GeneratorId g = ctx->generators()[idx];
            cur.push_back(g);
            self(self, ctx->nilpotent(g) ? idx + 1 : idx);
            cur.pop_back();
        }
    };
    rec(rec, 0);

    VerifyReport rep;
    const auto check_pair = [&](const Word& wa, const Word& wb) {
        ++rep.checked;
        const AlgebraElement a = AlgebraElement::from_word(ctx, wa);
        const AlgebraElement b = AlgebraElement::from_word(ctx, wb);
        const Phase eps = ctx->bicharacter().eval(word_grade(*ctx, wa), word_grade(*ctx, wb));
        const AlgebraElement lhs = a * b;
        const AlgebraElement rhs = (b * a).scaled(eps);
        if (!(lhs == rhs)) {
            std::ostringstream os;
            os << "a*b = eps(alpha,beta)*b*a violated at a=" << word_to_string(*ctx, wa)
               << ", b=" << word_to_string(*ctx, wb) << " (eps=" << eps.to_string() << ")";
            rep.fail(os.str());
        }
    };

    const std::uint64_t pair_count =
        truncated ? policy.sampling.exhaustive_limit + 1
                  : static_cast<std::uint64_t>(words.size()) *
                        static_cast<std::uint64_t>(words.size());
    if (!truncated && pair_count <= policy.sampling.exhaustive_limit) {
        for (const auto& wa : words)
            for (const auto& wb : words) check_pair(wa, wb);
        return rep;
    }

    std::mt19937_64 rng(policy.sampling.seed);
    const auto random_word = [&] {
        std::uniform_int_distribution<std::int64_t> len_dist(0, policy.max_degree);
        std::uniform_int_distribution<std::size_t> gen_dist(0, ctx->generators().size() - 1);
        Word w;
        const std::int64_t len = len_dist(rng);
        for (std::int64_t k = 0; k < len; ++k) w.push_back(ctx->generators()[gen_dist(rng)]);
        std::sort(w.begin(), w.end());
        Word pruned;
        for (const auto& g : w) {
            if (!pruned.empty() && pruned.back() == g && ctx->nilpotent(g)) continue;
            pruned.push_back(g);
        }
        return pruned;
    };
    for (std::uint64_t s = 0; s < policy.sampling.samples; ++s)
        check_pair(random_word(), random_word());
    std::sort(rep.witnesses.begin(), rep.witnesses.end());
    return rep;
}

}  // namespace qsym
