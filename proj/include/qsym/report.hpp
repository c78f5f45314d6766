#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qsym {

/// Controls how verifiers cover their search space.  Verification is
/// exhaustive while the base unit count (group elements for bicharacter
/// laws, monomial pairs for commutativity) stays within exhaustive_limit;
/// beyond that the verifier draws `samples` pseudo-random probes from the
/// given seed, so reports are reproducible.
struct SamplePolicy {
    std::uint64_t exhaustive_limit = 4096;
    std::uint64_t samples = 1000;
    std::uint64_t seed = 0;
};

/// Outcome of a verification pass.  `checked` counts the units examined
/// (triples, pairs, ...); witnesses hold the first violations found, in
/// canonical order, capped at kMaxWitnesses.
struct VerifyReport {
    static constexpr std::size_t kMaxWitnesses = 32;

    bool pass = true;
    std::uint64_t checked = 0;
    std::vector<std::string> witnesses;

    void fail(std::string witness) {
        pass = false;
        if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(witness));
    }
};

}  // namespace qsym
