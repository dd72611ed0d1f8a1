#pragma once
#include <json.hpp>
#include <string>

#include "slnchar/cyclotomic.hpp"
#include "slnchar/green.hpp"
#include "slnchar/laurent.hpp"
#include "slnchar/orbits.hpp"
#include "slnchar/partition.hpp"
#include "slnchar/sheaves.hpp"
#include "slnchar/springer.hpp"

namespace slnchar {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1.0";

// Rationals are written as "a/b" strings so values stay exact.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

// {"conductor": N, "coeffs": [...]} in the power basis
Json to_json(const Cyclotomic& c);
Cyclotomic cyclotomic_from_json(const Json& j);

// {"terms": [{"u": k, "c": <cyclotomic>}, ...]}, ascending u-power
Json to_json(const CycLaurent& c);
CycLaurent laurent_from_json(const Json& j);

Json to_json(const LaurentFraction& f);
LaurentFraction fraction_from_json(const Json& j);

Json to_json(const ZetaTerm& z);
ZetaTerm zeta_term_from_json(const Json& j);

Json to_json(const springer::PairLabel& p);
springer::PairLabel pair_label_from_json(const Json& j);
Json to_json(const springer::Block& b);
Json to_json(const orbits::CyclicF& c);
Json to_json(const sheaves::ScalarRecord& r);

// Conventions in force, echoed in every envelope.
Json provenance_notes();

Json make_envelope(const std::string& command, const Json& config, const Json& payload);

}  // namespace slnchar
