#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsym/algebra.hpp"
#include "qsym/bicharacter.hpp"

namespace qsym::cli {

/// What the command line selected: the built-in flux model (--flux N n) or a
/// pairing loaded from a JSON file (--model file).  A model file may carry
/// pointwise table "overrides" that patch the evaluated pairing; these feed
/// the verification suites only, so corrupted tables can be probed without
/// inventing an algebra for them.
struct ModelSpec {
    enum class Kind { flux, custom };

    struct Override {
        GradeVector a;
        GradeVector b;
        Phase value;
    };

    Kind kind = Kind::flux;
    std::int64_t flux_count = 1;
    std::int64_t particle_count = 1;
    std::optional<Bicharacter> pairing;  // custom only
    std::vector<bool> nilpotent;         // custom only, may be empty
    std::vector<Override> overrides;     // custom only, may be empty

    std::string describe() const;
};

ModelSpec flux_model(std::int64_t flux_count, std::int64_t particle_count);

/// Parses a custom model object: keys "spec", "q", "sym", "skew", plus
/// optional "nilpotent" (bool per generator) and "overrides"
/// ([{a, b, value}] with raw component vectors).
ModelSpec model_from_json(const std::string& text);
ModelSpec model_from_file(const std::string& path);

/// The pairing the model evaluates, overrides applied.
PhaseFn model_phase_fn(const ModelSpec& spec);

/// The generator algebra of the model.  Overrides do not reach the algebra
/// layer; see ModelSpec.
AlgebraContextPtr model_context(const ModelSpec& spec);

/// Whitespace-separated generator tokens "T<i>" or "T<i>^<a>", one-based.
/// Throws ParseError carrying the 1-based column of the offending token,
/// both for malformed tokens and for generators outside the context.
Word parse_word(const AlgebraContext& ctx, const std::string& text);

/// Word rendered in the same token syntax parse_word accepts; "1" when
/// empty.  Particle superscripts appear only in multi-particle contexts.
std::string word_tokens(const AlgebraContext& ctx, const Word& word);

/// Entry point used by the binary and the tests.  args excludes argv[0].
/// Returns the process exit code: 0 success, 1 verification failure,
/// 2 usage/parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qsym::cli
