#include "qsym/json_io.hpp"

namespace qsym {

Json to_json(const GroupSpec& spec) {
    Json moduli = Json::array();
    for (const auto m : spec.moduli()) {
        if (m == GroupSpec::kFree)
            moduli.push_back("inf");
        else
            moduli.push_back(m);
    }
    Json j;
    j["moduli"] = std::move(moduli);
    return j;
}

GroupSpec group_spec_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("moduli") || !j["moduli"].is_array())
        throw InvalidParameterError("group spec must be an object with a \"moduli\" array");
    std::vector<std::int64_t> moduli;
    for (const auto& m : j["moduli"]) {
        if (m.is_string() && m.get<std::string>() == "inf")
            moduli.push_back(GroupSpec::kFree);
        else if (m.is_number_integer())
            moduli.push_back(m.get<std::int64_t>());
        else
            throw InvalidParameterError("each modulus must be an integer >= 2 or \"inf\"");
    }
    return GroupSpec(std::move(moduli));
}

Json to_json(const Phase& p) { return p.to_string(); }

Phase phase_from_json(const Json& j) {
    if (!j.is_string())
        throw InvalidParameterError("phases are serialized as \"num/den\" strings");
    return Phase::parse(j.get<std::string>());
}

Json to_json(const CycInt& c) {
    Json j;
    j["order"] = c.order();
    j["coeffs"] = c.coeffs();
    return j;
}

Json to_json(const Biform& form) {
    Json rows = Json::array();
    for (const auto& row : form.matrix()) rows.push_back(row);
    return rows;
}

Biform biform_from_json(const Json& j, BiformKind kind) {
    if (!j.is_array()) throw InvalidParameterError("a bilinear form must be a matrix");
    std::vector<std::vector<std::int64_t>> matrix;
    for (const auto& row : j) {
        if (!row.is_array()) throw InvalidParameterError("a bilinear form must be a matrix");
        std::vector<std::int64_t> r;
        for (const auto& entry : row) {
            if (!entry.is_number_integer())
                throw InvalidParameterError("matrix entries must be integers");
            r.push_back(entry.get<std::int64_t>());
        }
        matrix.push_back(std::move(r));
    }
    return Biform(std::move(matrix), kind);
}

Json to_json(const Bicharacter& e) {
    Json j;
    j["spec"] = to_json(e.spec());
    j["q"] = to_json(e.q());
    j["sym"] = to_json(e.sym());
    j["skew"] = to_json(e.skew());
    return j;
}

Bicharacter bicharacter_from_json(const Json& j) {
    if (!j.is_object()) throw InvalidParameterError("a pairing must be a JSON object");
    for (const char* key : {"spec", "q", "sym", "skew"})
        if (!j.contains(key))
            throw InvalidParameterError(std::string("pairing is missing \"") + key + "\"");
    return Bicharacter(group_spec_from_json(j["spec"]), biform_from_json(j["sym"], BiformKind::symmetric),
                       biform_from_json(j["skew"], BiformKind::skew), phase_from_json(j["q"]));
}

Json to_json(const VerifyReport& report) {
    Json j;
    j["pass"] = report.pass;
    j["checked"] = report.checked;
    j["witnesses"] = report.witnesses;
    return j;
}

std::string phase_pretty(const Phase& p) {
    if (p.is_one()) return "+1";
    if (p == Phase::minus_one()) return "-1";
    return "e(" + p.to_string() + ")";
}

namespace {

std::string cyc_pretty(const CycInt& c) {
    if (c.is_one()) return "+1";
    if ((-c).is_one()) return "-1";
    return c.to_string();
}

}  // namespace

Json partition_row(const AlgebraContext& ctx, const Partition& p) {
    Json j;
    j["word"] = word_to_string(ctx, p.monomial.word);
    j["coeff"] = cyc_pretty(p.monomial.coeff);
    j["quasiparticles"] = p.quasiparticles;
    j["quasiholes"] = p.quasiholes;
    j["admissible"] = p.admissible;
    return j;
}

}  // namespace qsym
