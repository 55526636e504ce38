#pragma once

// Canonical JSON for every value crossing the command line. Integers that do
// not fit in 64 bits and non-integral rationals are written as strings
// ("123456789012345678901", "-3/4"); both forms are accepted on input.
// Malformed documents raise ParseError.

#include <string>

#include "json.hpp"

#include "snc/corank_report.hpp"
#include "snc/delta_complex.hpp"
#include "snc/fans.hpp"
#include "snc/mhs.hpp"
#include "snc/stairs.hpp"
#include "snc/weight_ss.hpp"

namespace snc {

using Json = nlohmann::json;

Json to_json(const FanSystem& fs);
FanSystem fan_system_from_json(const Json& j);

Json to_json(const SncReport& report, const FanSystem& fs);

Json to_json(const PureHS& hs);
PureHS pure_hs_from_json(const Json& j);
Json to_json(const MixedHSTable& table);

Json to_json(const StrataComplex& sc);
StrataComplex strata_complex_from_json(const Json& j);

CuspStrataAnnotation cusp_annotation_from_json(const Json& j);

Json to_json(const DeltaComplex& dc);
Json to_json(const PseudomanifoldReport& report);

Json to_json(const SpectralPage& page);
Json to_json(const FnFiltration& f);

Json to_json(const CorankData& cd);
CorankData corank_data_from_json(const Json& j);
Json to_json(const Region& rg);

Json to_json(const CuspInventory& inv);
CuspInventory cusp_inventory_from_json(const Json& j);
Json to_json(const CorankReport& report);

/// Parses text, mapping syntax errors onto ParseError.
Json parse_json(const std::string& text);
/// Two-space indentation and a trailing newline.
std::string dump(const Json& j);

}  // namespace snc
