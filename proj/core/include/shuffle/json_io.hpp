#pragma once

#include <string>

#include "shuffle/engine.hpp"
#include "shuffle/qt_polynomial.hpp"
#include "shuffle/symfunc.hpp"

namespace shuffle {

// Canonical JSON: object keys sorted, compact separators, terms in canonical
// order, coefficients emitted as decimal strings once |c| exceeds the 53-bit
// safe integer range.  Equal values serialize to identical bytes.

std::string to_json_text(const QtPolynomial& p);
std::string to_json_text(const FExpansion& f);
std::string to_json_text(const SchurExpansion& s);
std::string to_json_text(const ShuffleResult& r);

QtPolynomial qt_polynomial_from_json_text(const std::string& text);
FExpansion fexpansion_from_json_text(const std::string& text);
SchurExpansion schur_expansion_from_json_text(const std::string& text);

// Structural problems raise CacheError{Corrupt}; an unexpected "schema" field
// raises CacheError{Version}.  ShuffleResult invariants are NOT checked here;
// cache_load does that.
ShuffleResult shuffle_result_from_json_text(const std::string& text);

}  // namespace shuffle
