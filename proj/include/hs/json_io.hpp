#pragma once

#include "hs/correlator.hpp"
#include "hs/exp_combo.hpp"
#include "hs/hurwitz.hpp"
#include "hs/laurent.hpp"
#include "hs/monotone.hpp"
#include "hs/oracle.hpp"

#include <json.hpp>

namespace hs {

using Json = nlohmann::ordered_json;

/// {"exponents": [[e, "p/q"], ...]}, exponents ascending.
Json to_json(const LaurentPoly& p);
/// Throws ParseError.
LaurentPoly laurent_from_json(const Json& j);

/// {"parity": "odd|even", "terms": {"m": "int"}, "m0": "int" or null}.
Json to_json(const ExpCombo& c);
ExpCombo exp_combo_from_json(const Json& j);

/// {"qproducts": [{"coeff": "int", "factors": [...]}, ...], "laurent": ...,
/// "max_score": n}. Terms that still carry a [B] denominator add
/// "divisor": B. qproducts and max_score are null when not computed.
Json to_json(const CorrelatorResult& r);

/// {"mu": [...], "r": 1, "prefactor": "p/q", "C": {"m": "int"}}.
Json to_json(const StructureTable& t);
StructureTable structure_table_from_json(const Json& j);

/// {"query": "...", "count": "int", "weighted": "p/q", "method": "..."}.
Json to_json(const FactorizationQuery& q, const OracleResult& r);

/// {"mu": [...], "normalisation": "...", "model": {"C0": "p/q", "C": {"m": "p/q"}},
///  "validated_g": [...], "all_pass": bool}.
Json to_json(const MonotoneReport& r);

}  // namespace hs
