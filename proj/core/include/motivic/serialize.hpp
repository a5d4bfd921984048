#pragma once

// Canonical JSON forms. Multiplicities and coefficients are decimal strings so
// that arbitrary-precision values survive any JSON reader. Key order is fixed
// and terms are emitted in ascending key order, so equal values always
// serialize to identical bytes.

#include <string>

#include <nlohmann/json.hpp>

#include "motivic/motive.hpp"
#include "motivic/polynomial.hpp"
#include "motivic/realization.hpp"

namespace motivic {

using Json = nlohmann::ordered_json;

// {"genus": g, "terms": [{"lambda": b, "lefschetz": c, "mult": "m"}, ...]}
Json to_json(const MotiveClass& m);
// Inverse of to_json. Throws std::invalid_argument on malformed documents.
MotiveClass motive_from_json(const Json& doc);
std::string to_canonical_json(const MotiveClass& m);

// [[degree, "coeff"], ...]
Json to_json(const IntPolynomial& p);
// [[p, q, "coeff"], ...]
Json to_json(const BiPolynomial& h);

// {"genus": g, "blocks": [{"sym_power": k, "twist": j, "hodge": [...]}], "total": [...]}
Json to_json(const BlockReport& report);

}  // namespace motivic
