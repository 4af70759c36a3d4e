#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "shuffle/parking_function.hpp"
#include "shuffle/symfunc.hpp"

namespace shuffle {

// Default cap keeps a full run at 4,782,969 parking functions; the opt-in
// flag raises it to order 9 (100,000,000 objects).
inline constexpr int kDefaultMaxShuffleOrder = 8;
inline constexpr int kHardMaxShuffleOrder = 9;

// Enumeration order baked into every result for provenance.
inline constexpr std::string_view kEnumerationOrderTag =
    "paths:lex-NE;labels:column-set-lex";

struct EngineOptions {
    int threads = 1;             // <= 1 runs inline on the calling thread
    bool allow_order_9 = false;  // lifts the order cap to kHardMaxShuffleOrder
};

// Sum of q^dinv t^area F_{n,ides} over all parking functions of order n.
// Independent of enumeration order: aggregation is a commutative monoid fold,
// so chunk-parallel runs produce identical results.
FExpansion shuffle_sum(int n, const EngineOptions& options = {});

// Same sum restricted to parking functions with touch = alpha.
FExpansion compositional_shuffle_sum(const Composition& alpha,
                                     const EngineOptions& options = {});

// Sum of q^dinv t^area over parking functions whose word is a shuffle of the
// consecutive increasing blocks of lambda.
QtPolynomial shuffle_coefficient(const Partition& lambda,
                                 const EngineOptions& options = {});

struct ShuffleResult {
    int n = 0;
    FExpansion full;
    std::map<Composition, FExpansion> by_touch;
    SchurExpansion schur;
    std::string engine_version;
    std::string order_tag;

    friend bool operator==(const ShuffleResult&, const ShuffleResult&) = default;
};

// Computes full and by_touch in a single pass over the stream, then the Schur
// form of full.
ShuffleResult compute_shuffle_result(int n, const EngineOptions& options = {});

struct VerifyCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    int n = 0;
    std::vector<VerifyCheck> checks;
    bool all_pass() const;
};

// Runs the six consistency checks: parking-function count, compositional
// decomposition, Schur conversion, Schur nonnegativity, q<->t symmetry, and
// the monomial-coefficient bridge for every partition of n.  Failures are
// report entries, never exceptions.
VerifyReport verify(int n, const EngineOptions& options = {});
VerifyReport verify_result(const ShuffleResult& result,
                           const EngineOptions& options = {});

// Canonical JSON cache round-trip.  Loading validates the schema version and
// the ShuffleResult invariants before returning; violations raise CacheError.
void cache_store(const ShuffleResult& result, const std::filesystem::path& file);
ShuffleResult cache_load(int n, const std::filesystem::path& file);

}  // namespace shuffle
