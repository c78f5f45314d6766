#include "qsym/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "qsym/json_io.hpp"

namespace qsym::cli {

namespace {

std::string gen_name(const AlgebraContext& ctx, GeneratorId g) {
    std::string s = "Theta[" + std::to_string(g.flux) + "]";
    if (ctx.particle_count() > 1) s += "^" + std::to_string(g.particle);
    return s;
}

Json model_json(const ModelSpec& m) {
    Json j;
    if (m.kind == ModelSpec::Kind::flux) {
        j["kind"] = "flux";
        j["flux_quanta"] = m.flux_count;
        j["particles"] = m.particle_count;
        j["filling_factor"] = Rational(m.particle_count, m.flux_count).to_string();
    } else {
        j["kind"] = "custom";
        j["pairing"] = to_json(*m.pairing);
        j["overrides"] = m.overrides.size();
    }
    return j;
}

void dump_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

}  // namespace

std::string ModelSpec::describe() const {
    std::ostringstream os;
    if (kind == Kind::flux) {
        os << "flux model: N=" << flux_count << ", n=" << particle_count
           << ", filling factor v = " << Rational(particle_count, flux_count).to_string();
    } else {
        os << "custom model: group " << pairing->spec().to_string()
           << ", q = " << pairing->q().to_string();
        if (!overrides.empty()) os << ", table overrides: " << overrides.size();
    }
    return os.str();
}

ModelSpec flux_model(std::int64_t flux_count, std::int64_t particle_count) {
    if (flux_count < 1 || particle_count < 1)
        throw InvalidParameterError("--flux expects N >= 1 and n >= 1");
    ModelSpec m;
    m.kind = ModelSpec::Kind::flux;
    m.flux_count = flux_count;
    m.particle_count = particle_count;
    return m;
}

ModelSpec model_from_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("model file is not valid JSON: ") + e.what(), 1);
    }
    if (!j.is_object()) throw InvalidParameterError("model file must hold a JSON object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "spec" && key != "q" && key != "sym" && key != "skew" &&
            key != "nilpotent" && key != "overrides")
            throw InvalidParameterError("unknown model key \"" + key + "\"");
    }

    ModelSpec m;
    m.kind = ModelSpec::Kind::custom;
    m.pairing = bicharacter_from_json(j);
    const GroupSpec& spec = m.pairing->spec();

    if (j.contains("nilpotent")) {
        const Json& flags = j["nilpotent"];
        if (!flags.is_array() ||
            static_cast<std::int64_t>(flags.size()) != spec.rank())
            throw InvalidParameterError("\"nilpotent\" must list one flag per generator");
        for (const auto& f : flags) {
            if (!f.is_boolean())
                throw InvalidParameterError("\"nilpotent\" entries must be booleans");
            m.nilpotent.push_back(f.get<bool>());
        }
    }

    if (j.contains("overrides")) {
        const Json& ov = j["overrides"];
        if (!ov.is_array()) throw InvalidParameterError("\"overrides\" must be an array");
        for (const auto& item : ov) {
            if (!item.is_object() || !item.contains("a") || !item.contains("b") ||
                !item.contains("value"))
                throw InvalidParameterError("each override needs \"a\", \"b\" and \"value\"");
            const auto components = [&](const Json& arr) {
                if (!arr.is_array() ||
                    static_cast<std::int64_t>(arr.size()) != spec.rank())
                    throw InvalidParameterError(
                        "override elements must list one component per factor");
                std::vector<std::int64_t> c;
                for (const auto& x : arr) {
                    if (!x.is_number_integer())
                        throw InvalidParameterError("override components must be integers");
                    c.push_back(x.get<std::int64_t>());
                }
                return c;
            };
            m.overrides.push_back(ModelSpec::Override{
                GradeVector(spec, components(item["a"])),
                GradeVector(spec, components(item["b"])),
                phase_from_json(item["value"])});
        }
    }
    return m;
}

ModelSpec model_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read model file \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return model_from_json(buf.str());
}

PhaseFn model_phase_fn(const ModelSpec& spec) {
    const Bicharacter e = spec.kind == ModelSpec::Kind::flux
                              ? flux_bicharacter(spec.flux_count)
                              : *spec.pairing;
    using Key = std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>;
    std::map<Key, Phase> patch;
    for (const auto& ov : spec.overrides)
        patch[Key{ov.a.components(), ov.b.components()}] = ov.value;
    return [e, patch](const GradeVector& a, const GradeVector& b) {
        if (!patch.empty()) {
            const auto it = patch.find({a.components(), b.components()});
            if (it != patch.end()) return it->second;
        }
        return e.eval(a, b);
    };
}

AlgebraContextPtr model_context(const ModelSpec& spec) {
    if (spec.kind == ModelSpec::Kind::flux)
        return new_flux_algebra(spec.flux_count, spec.particle_count);
    return new_graded_algebra(*spec.pairing, spec.pairing->spec().rank(), spec.nilpotent);
}

namespace {

GeneratorId parse_token(const AlgebraContext& ctx, std::string_view tok, std::size_t col) {
    const auto bad = [&](const std::string& why) {
        return ParseError("bad generator token \"" + std::string(tok) + "\": " + why, col);
    };
    if (tok.empty() || tok[0] != 'T') throw bad("expected T<i> or T<i>^<a>");
    std::size_t pos = 1;
    const auto read_int = [&](const char* what) {
        std::int64_t v = 0;
        const auto* begin = tok.data() + pos;
        const auto* end = tok.data() + tok.size();
        const auto [ptr, ec] = std::from_chars(begin, end, v);
        if (ec != std::errc() || ptr == begin)
            throw bad(std::string("expected a ") + what + " index");
        pos = static_cast<std::size_t>(ptr - tok.data());
        return v;
    };
    const std::int64_t flux = read_int("flux");
    std::int64_t particle = 1;
    if (pos < tok.size()) {
        if (tok[pos] != '^') throw bad("expected ^<a> or end of token");
        ++pos;
        particle = read_int("particle");
        if (pos != tok.size()) throw bad("trailing characters after particle index");
    }
    if (flux < 1 || flux > ctx.flux_count() || particle < 1 ||
        particle > ctx.particle_count())
        throw ParseError("unknown generator \"" + std::string(tok) + "\" (this model has " +
                             std::to_string(ctx.flux_count()) + " flux and " +
                             std::to_string(ctx.particle_count()) + " particle indices)",
                         col);
    return GeneratorId{static_cast<std::int32_t>(flux), static_cast<std::int32_t>(particle)};
}

}  // namespace

Word parse_word(const AlgebraContext& ctx, const std::string& text) {
    Word word;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t end = i;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])))
            ++end;
        word.push_back(parse_token(ctx, std::string_view(text).substr(i, end - i), i + 1));
        i = end;
    }
    return word;
}

std::string word_tokens(const AlgebraContext& ctx, const Word& word) {
    if (word.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) os << " ";
        os << "T" << word[i].flux;
        if (ctx.particle_count() > 1) os << "^" << word[i].particle;
    }
    return os.str();
}

namespace {

// ---------------------------------------------------------------- relations

void relations_human_flux(const AlgebraContext& ctx, std::ostream& out) {
    const std::int64_t n = ctx.particle_count();
    const bool multi = n > 1;
    const auto sup = [&](const char* a) { return multi ? std::string("^") + a : std::string(); };
    if (ctx.flux_count() > 1) {
        out << "relations for distinct fluxes (i != j):\n";
        const Phase same = ctx.lambda(GeneratorId{1, 1}, GeneratorId{2, 1});
        out << "  Theta[i]" << sup("a") << " Theta[j]" << sup("a") << " = "
            << phase_pretty(same) << " · Theta[j]" << sup("a") << " Theta[i]" << sup("a");
        if (multi) out << "    (same particle, a = b)";
        out << "\n";
        if (multi) {
            const Phase cross = ctx.lambda(GeneratorId{1, 1}, GeneratorId{2, 2});
            out << "  Theta[i]^a Theta[j]^b = " << phase_pretty(cross)
                << " · Theta[j]^b Theta[i]^a    (distinct particles, a != b)\n";
        }
    }
    if (multi) {
        const Phase diag = ctx.lambda(GeneratorId{1, 1}, GeneratorId{1, 2});
        out << "relations for a single flux (i = j):\n";
        out << "  Theta[i]^a Theta[i]^b = " << phase_pretty(diag)
            << " · Theta[i]^b Theta[i]^a    (distinct particles, a != b)\n";
    }
    out << "nilpotency:\n";
    out << "  (Theta[i]" << sup("a") << ")^2 = 0    (every i" << (multi ? ", a" : "")
        << ")\n";
}

void relations_human_custom(const AlgebraContext& ctx, std::ostream& out) {
    const auto& gens = ctx.generators();
    out << "pairwise relations:\n";
    if (gens.size() < 2) out << "  (none)\n";
    for (std::size_t x = 0; x < gens.size(); ++x) {
        for (std::size_t y = x + 1; y < gens.size(); ++y) {
            out << "  " << gen_name(ctx, gens[x]) << " " << gen_name(ctx, gens[y]) << " = "
                << phase_pretty(ctx.lambda(gens[x], gens[y])) << " · "
                << gen_name(ctx, gens[y]) << " " << gen_name(ctx, gens[x]) << "\n";
        }
    }
    out << "nilpotency:\n";
    bool any = false;
    for (const auto& g : gens) {
        if (!ctx.nilpotent(g)) continue;
        any = true;
        out << "  " << gen_name(ctx, g) << "^2 = 0\n";
    }
    if (!any) out << "  (none)\n";
}

int cmd_relations(const ModelSpec& m, bool json, std::ostream& out) {
    const AlgebraContextPtr ctx = model_context(m);
    if (json) {
        Json j;
        j["model"] = model_json(m);
        j["grading_group"] = to_json(ctx->spec());
        Json rels = Json::array();
        const auto& gens = ctx->generators();
        for (std::size_t x = 0; x < gens.size(); ++x) {
            for (std::size_t y = x + 1; y < gens.size(); ++y) {
                Json row;
                row["first"] = gen_name(*ctx, gens[x]);
                row["second"] = gen_name(*ctx, gens[y]);
                row["phase"] = to_json(ctx->lambda(gens[x], gens[y]));
                rels.push_back(std::move(row));
            }
        }
        j["relations"] = std::move(rels);
        Json nil = Json::array();
        for (const auto& g : gens)
            if (ctx->nilpotent(g)) nil.push_back(gen_name(*ctx, g));
        j["nilpotent"] = std::move(nil);
        dump_json(out, j);
        return 0;
    }
    out << m.describe() << "\n";
    out << "grading group: " << ctx->spec().to_string() << "\n";
    if (m.kind == ModelSpec::Kind::flux)
        relations_human_flux(*ctx, out);
    else
        relations_human_custom(*ctx, out);
    return 0;
}

// ---------------------------------------------------------------- partitions

int cmd_partitions(const ModelSpec& m, bool json, const EnumerateOptions& options,
                   std::ostream& out) {
    const AlgebraContextPtr ctx = model_context(m);
    const std::vector<Partition> parts = enumerate_partitions(*ctx, options);
    std::size_t admissible = 0;
    for (const auto& p : parts) admissible += p.admissible ? 1 : 0;

    if (json) {
        Json j;
        j["model"] = model_json(m);
        j["count"] = parts.size();
        j["admissible_count"] = admissible;
        Json rows = Json::array();
        for (const auto& p : parts) rows.push_back(partition_row(*ctx, p));
        j["partitions"] = std::move(rows);
        dump_json(out, j);
        return 0;
    }

    out << m.describe() << "\n";
    out << "partitions";
    if (options.degree) out << " of degree " << *options.degree;
    if (options.admissible_only) out << ", admissible only";
    out << ": " << parts.size() << " (" << admissible << " admissible)\n";
    std::size_t width = 1;
    for (const auto& p : parts)
        width = std::max(width, word_to_string(*ctx, p.monomial.word).size());
    for (const auto& p : parts) {
        out << "  " << std::left << std::setw(static_cast<int>(width))
            << word_to_string(*ctx, p.monomial.word) << "  qp=" << p.quasiparticles
            << "  qh=" << p.quasiholes << "  "
            << (p.admissible ? "admissible" : "excluded") << "\n";
    }
    return 0;
}

// --------------------------------------------------------------- normal-form

int cmd_normal_form(const ModelSpec& m, bool json, const std::string& text,
                    std::ostream& out) {
    const AlgebraContextPtr ctx = model_context(m);
    const Word word = parse_word(*ctx, text);
    const auto nf = normal_form(*ctx, word);
    if (json) {
        Json j;
        j["input"] = text;
        j["zero"] = !nf.has_value();
        j["coeff"] = nf ? Json(to_json(nf->coeff)) : Json(nullptr);
        j["word"] = nf ? Json(word_tokens(*ctx, nf->word)) : Json(nullptr);
        dump_json(out, j);
        return 0;
    }
    if (!nf) {
        out << "0\n";
        return 0;
    }
    out << phase_pretty(nf->coeff) << " · " << word_tokens(*ctx, nf->word) << "\n";
    return 0;
}

// -------------------------------------------------------------------- verify

struct SuiteResult {
    std::string name;
    std::optional<VerifyReport> report;  // nullopt = skipped
    std::string skip_reason;
};

int cmd_verify(const ModelSpec& m, bool json, const std::string& suite, std::uint64_t seed,
               std::ostream& out) {
    SamplePolicy policy;
    policy.seed = seed;
    const Bicharacter base = m.kind == ModelSpec::Kind::flux
                                 ? flux_bicharacter(m.flux_count)
                                 : *m.pairing;
    const PhaseFn eps = model_phase_fn(m);
    const GroupSpec& spec = base.spec();

    const bool algebra_suite_ok = m.particle_count == 1;
    const std::string skip_reason =
        !algebra_suite_ok
            ? "multi-particle commutation is not determined by grades"
            : !m.overrides.empty() ? "table overrides bypass the algebra layer" : "";

    std::vector<SuiteResult> results;
    const auto want = [&](const char* name) { return suite == "all" || suite == name; };
    if (want("bicharacter"))
        results.push_back({"bicharacter", verify_bicharacter(spec, eps, policy), ""});
    if (want("normalized"))
        results.push_back({"normalized", verify_normalized(spec, eps, policy), ""});
    if (want("ybe"))
        results.push_back({"ybe", verify_ybe(spec, eps, single_particle_basis(spec)), ""});
    if (want("graded-comm")) {
        if (!skip_reason.empty()) {
            if (suite != "all")
                throw InvalidParameterError("suite graded-comm is unavailable here: " +
                                            skip_reason);
            results.push_back({"graded-comm", std::nullopt, skip_reason});
        } else {
            GradedCommutativityPolicy gpolicy;
            gpolicy.sampling = policy;
            results.push_back(
                {"graded-comm", verify_graded_commutativity(model_context(m), gpolicy), ""});
        }
    }

    bool all_pass = true;
    for (const auto& r : results)
        if (r.report && !r.report->pass) all_pass = false;

    if (json) {
        Json j;
        j["model"] = model_json(m);
        j["seed"] = seed;
        Json suites = Json::array();
        for (const auto& r : results) {
            Json row;
            row["name"] = r.name;
            if (r.report) {
                row["pass"] = r.report->pass;
                row["checked"] = r.report->checked;
                row["witnesses"] = r.report->witnesses;
            } else {
                row["skipped"] = r.skip_reason;
            }
            suites.push_back(std::move(row));
        }
        j["suites"] = std::move(suites);
        j["pass"] = all_pass;
        dump_json(out, j);
        return all_pass ? 0 : 1;
    }

    out << m.describe() << " (seed " << seed << ")\n";
    for (const auto& r : results) {
        out << std::left << std::setw(12) << r.name;
        if (!r.report) {
            out << "SKIPPED (" << r.skip_reason << ")\n";
            continue;
        }
        out << (r.report->pass ? "PASS" : "FAIL") << "  checked=" << r.report->checked
            << "\n";
        for (const auto& w : r.report->witnesses) out << "    witness: " << w << "\n";
    }
    out << "overall: " << (all_pass ? "PASS" : "FAIL") << "\n";
    return all_pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact graded-commutative algebra workbench"};
    app.name("qsym");
    app.require_subcommand(1);

    struct SubOpts {
        std::vector<std::int64_t> flux;
        std::string model_path;
        bool json = false;
    };
    const auto add_common = [](CLI::App* sub, SubOpts& o) {
        sub->add_option("--flux", o.flux,
                        "built-in flux model: N flux quanta, n particles")
            ->expected(2)
            ->allow_extra_args(false);  // never swallow a trailing word argument
        sub->add_option("--model", o.model_path, "custom model JSON file");
        sub->add_flag("--json", o.json, "machine-readable output");
    };
    const auto resolve = [](const SubOpts& o) {
        const bool has_flux = !o.flux.empty();
        const bool has_model = !o.model_path.empty();
        if (has_flux == has_model)
            throw InvalidParameterError("exactly one of --flux or --model is required");
        return has_flux ? flux_model(o.flux[0], o.flux[1]) : model_from_file(o.model_path);
    };

    SubOpts rel_opts;
    CLI::App* rel = app.add_subcommand("relations", "print the generator relation table");
    add_common(rel, rel_opts);

    SubOpts part_opts;
    std::int64_t degree = 0;
    bool admissible_only = false;
    bool force = false;
    CLI::App* part = app.add_subcommand("partitions", "enumerate quasiparticle partitions");
    add_common(part, part_opts);
    CLI::Option* degree_opt =
        part->add_option("--degree", degree, "keep only partitions of exactly this degree");
    part->add_flag("--admissible-only", admissible_only,
                   "drop partitions excluded by the pairwise commutation rule");
    part->add_flag("--force", force, "run enumerations past the candidate cap");

    SubOpts nf_opts;
    std::vector<std::string> word_args;
    CLI::App* nf = app.add_subcommand("normal-form", "rewrite a generator word");
    add_common(nf, nf_opts);
    nf->add_option("word", word_args, "generator word, e.g. \"T2 T1\" or T2^1 T1^2")
        ->required()
        ->expected(-1);

    SubOpts ver_opts;
    std::string suite = "all";
    std::uint64_t seed = 0;
    CLI::App* ver = app.add_subcommand("verify", "run verification suites");
    add_common(ver, ver_opts);
    ver->add_option("--suite", suite, "bicharacter|normalized|ybe|graded-comm|all")
        ->check(CLI::IsMember({"bicharacter", "normalized", "ybe", "graded-comm", "all"}));
    ver->add_option("--seed", seed, "seed for sampled verification");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (rel->parsed()) return cmd_relations(resolve(rel_opts), rel_opts.json, out);
        if (part->parsed()) {
            EnumerateOptions options;
            if (degree_opt->count() > 0) options.degree = degree;
            options.admissible_only = admissible_only;
            options.force = force;
            return cmd_partitions(resolve(part_opts), part_opts.json, options, out);
        }
        if (nf->parsed()) {
            std::string text;
            for (std::size_t i = 0; i < word_args.size(); ++i) {
                if (i) text += " ";
                text += word_args[i];
            }
            return cmd_normal_form(resolve(nf_opts), nf_opts.json, text, out);
        }
        if (ver->parsed())
            return cmd_verify(resolve(ver_opts), ver_opts.json, suite, seed, out);
    } catch (const ParseError& e) {
        err << "parse error at column " << e.column << ": " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;  // unreachable: require_subcommand(1)
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace qsym::cli
