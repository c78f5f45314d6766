#pragma once

#include <string>

#include <json.hpp>

#include "qsym/algebra.hpp"
#include "qsym/bicharacter.hpp"
#include "qsym/report.hpp"

namespace qsym {

/// Ordered so that serialization is deterministic: the same object always
/// dumps to the same bytes.
using Json = nlohmann::ordered_json;

Json to_json(const GroupSpec& spec);
GroupSpec group_spec_from_json(const Json& j);

Json to_json(const Phase& p);
Phase phase_from_json(const Json& j);

Json to_json(const CycInt& c);

Json to_json(const Biform& form);
Biform biform_from_json(const Json& j, BiformKind kind);

Json to_json(const Bicharacter& e);
Bicharacter bicharacter_from_json(const Json& j);

Json to_json(const VerifyReport& report);

/// "+1", "-1", or "e(num/den)" for a proper root of unity.
std::string phase_pretty(const Phase& p);

Json partition_row(const AlgebraContext& ctx, const Partition& p);

}  // namespace qsym
