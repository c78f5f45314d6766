#pragma once

// Independent oracles shared by the unit tests and the acceptance runner.
// Everything here is deliberately written against the public API only, with
// algorithms different from the library's (randomized reduction schedules,
// bitmask subset enumeration, plain complex arithmetic) so agreement means
// something.

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "qsym/algebra.hpp"

namespace qsym::testing {

/// Reduces a word by repeatedly swapping a RANDOMLY chosen out-of-order
/// adjacent pair, multiplying in lambda for each swap.  A correct rewriting
/// system gives the same (coefficient, word) for every schedule.
inline std::optional<WordNormalForm> schedule_reduce(const AlgebraContext& ctx, Word w,
                                                     std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Phase coeff = Phase::one();
    while (true) {
        std::vector<std::size_t> inversions;
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i + 1] < w[i]) inversions.push_back(i);
        if (inversions.empty()) break;
        std::uniform_int_distribution<std::size_t> pick(0, inversions.size() - 1);
        const std::size_t i = inversions[pick(rng)];
        coeff = coeff * ctx.lambda(w[i], w[i + 1]);
        std::swap(w[i], w[i + 1]);
    }
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == w[i + 1] && ctx.nilpotent(w[i])) return std::nullopt;
    return WordNormalForm{coeff, std::move(w)};
}

/// Pairwise commutation filter checked from scratch, both directions.
inline bool brute_admissible(const AlgebraContext& ctx, const Word& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            if (w[i] == w[j]) return false;
            if (!(ctx.lambda(w[i], w[j]) == Phase::one())) return false;
            if (!(ctx.lambda(w[j], w[i]) == Phase::one())) return false;
        }
    }
    return true;
}

/// Every subset of the generator set as a sorted word, by bitmask.
inline std::vector<Word> all_generator_subsets(const AlgebraContext& ctx) {
    const auto& gens = ctx.generators();
    std::vector<Word> out;
    const std::size_t g = gens.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g); ++mask) {
        Word w;
        for (std::size_t i = 0; i < g; ++i)
            if (mask & (std::uint64_t{1} << i)) w.push_back(gens[i]);
        out.push_back(std::move(w));
    }
    return out;
}

inline Word random_word(const AlgebraContext& ctx, std::mt19937_64& rng, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, ctx.generators().size() - 1);
    Word w;
    const std::size_t k = len(rng);
    for (std::size_t i = 0; i < k; ++i) w.push_back(ctx.generators()[pick(rng)]);
    return w;
}

inline bool complex_close(std::complex<double> a, std::complex<double> b, double tol = 1e-9) {
    return std::abs(a - b) <= tol;
}

/// Random cyclotomic integer: a short signed combination of powers of the
/// primitive root.
inline CycInt random_cyc(std::int64_t order, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> exp(0, order - 1);
    std::uniform_int_distribution<std::int64_t> scale(-9, 9);
    CycInt v = CycInt::zero(order);
    for (int k = 0; k < 4; ++k)
        v = v + CycInt::from_phase(Phase(exp(rng), order), order) * scale(rng);
    return v;
}

}  // namespace qsym::testing
