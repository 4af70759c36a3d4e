#include "shuffle/engine.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include "shuffle/checked.hpp"
#include "shuffle/json_io.hpp"
#include "shuffle/version.hpp"

namespace shuffle {

namespace {

void check_order(int n, const EngineOptions& options) {
    const int cap = options.allow_order_9 ? kHardMaxShuffleOrder : kDefaultMaxShuffleOrder;
    if (n < 1 || n > cap) {
        std::string message = "shuffle engine supports 1 <= n <= " + std::to_string(cap);
        if (!options.allow_order_9 && n == kHardMaxShuffleOrder)
            message += " (set allow_order_9 to lift the cap)";
        throw std::invalid_argument(message);
    }
}

int thread_count(const EngineOptions& options) {
    return options.threads < 1 ? 1 : std::min(options.threads, 64);
}

// Everything about one path that the per-labeling loop needs.  Columns are
// weakly increasing in the row index, which trims the dinv pair candidates:
// for rows i < j on equal diagonals col_i < col_j, so the pair is a primary
// inversion exactly when cars[j] > cars[i]; a secondary inversion needs the
// higher diagonal strictly left, which forces the higher diagonal onto the
// earlier row, and then col_i < col_j holds automatically.
struct PathContext {
    int area = 0;
    Composition touch_composition;
    std::vector<std::pair<int, int>> dinv_candidates;  // counts when cars[x] > cars[y]
    std::vector<int> reading_order;                    // 0-based rows in word order
};

PathContext make_context(const DyckPath& path) {
    PathContext ctx;
    const std::vector<int> columns = path.row_columns();
    const std::vector<int> diagonals = path.row_diagonals();
    const int n = path.order();
    for (int d : diagonals) ctx.area += d;
    ctx.touch_composition = touch(path);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (diagonals[i] == diagonals[j])
                ctx.dinv_candidates.emplace_back(j, i);
            else if (diagonals[i] == diagonals[j] + 1)
                ctx.dinv_candidates.emplace_back(i, j);
        }
    }
    ctx.reading_order.resize(n);
    for (int r = 0; r < n; ++r) ctx.reading_order[r] = r;
    std::sort(ctx.reading_order.begin(), ctx.reading_order.end(), [&](int a, int b) {
        if (diagonals[a] != diagonals[b]) return diagonals[a] > diagonals[b];
        return columns[a] > columns[b];
    });
    return ctx;
}

struct Accumulator {
    FExpansion full;
    std::map<Composition, FExpansion> by_touch;
};

void merge_into(Accumulator& into, Accumulator&& from) {
    into.full += from.full;
    for (auto& [alpha, expansion] : from.by_touch) {
        auto [it, inserted] = into.by_touch.try_emplace(alpha, std::move(expansion));
        if (!inserted) it->second += expansion;
    }
}

// Reusable per-worker scratch; dense is indexed [ides mask][dinv].
struct Scratch {
    std::vector<std::int64_t> dense;
    std::vector<int> positions;
};

void accumulate_path(const DyckPath& path, int n, bool want_by_touch,
                     Accumulator& acc, Scratch& scratch) {
    const PathContext ctx = make_context(path);
    const int dinv_stride = n * (n - 1) / 2 + 1;
    const std::size_t mask_count = std::size_t{1} << (n - 1);
    scratch.dense.assign(mask_count * dinv_stride, 0);
    scratch.positions.assign(n + 2, 0);

    auto* positions = scratch.positions.data();
    const auto& order = ctx.reading_order;
    for_each_labeling(path, [&](const std::vector<int>& cars) {
        int d = 0;
        for (const auto& [x, y] : ctx.dinv_candidates) d += cars[x] > cars[y];
        for (int k = 0; k < n; ++k) positions[cars[order[k]]] = k;
        SubsetMask mask = 0;
        for (int i = 1; i < n; ++i)
            if (positions[i + 1] < positions[i]) mask |= SubsetMask{1} << (i - 1);
        ++scratch.dense[mask * dinv_stride + d];
    });

    FExpansion* touch_slot = nullptr;
    if (want_by_touch)
        touch_slot = &acc.by_touch.try_emplace(ctx.touch_composition, FExpansion(n))
                          .first->second;
    for (std::size_t mask = 0; mask < mask_count; ++mask) {
        for (int d = 0; d < dinv_stride; ++d) {
            const std::int64_t count = scratch.dense[mask * dinv_stride + d];
            if (count == 0) continue;
            acc.full.add_term(static_cast<SubsetMask>(mask), d, ctx.area, count);
            if (touch_slot)
                touch_slot->add_term(static_cast<SubsetMask>(mask), d, ctx.area, count);
        }
    }
}

// Chunk-parallel fold over the paths.  Worker results merge through
// commutative exact map addition, so the outcome does not depend on the
// scheduling or the thread count.
Accumulator run_fold(int n, const std::optional<Composition>& touch_filter,
                     bool want_by_touch, const EngineOptions& options) {
    const std::vector<DyckPath> paths = enumerate_dyck_paths(n);
    const int workers = std::min<int>(thread_count(options),
                                      static_cast<int>(paths.size()));

    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    auto process_range = [&](Accumulator& acc, Scratch& scratch) {
        while (!stop.load(std::memory_order_relaxed)) {
            const std::size_t i = next.fetch_add(1);
            if (i >= paths.size()) break;
            if (touch_filter && touch(paths[i]) != *touch_filter) continue;
            accumulate_path(paths[i], n, want_by_touch, acc, scratch);
        }
    };

    if (workers <= 1) {
        Accumulator acc{FExpansion(n), {}};
        Scratch scratch;
        process_range(acc, scratch);
        return acc;
    }

    std::vector<Accumulator> partials;
    partials.reserve(workers);
    for (int w = 0; w < workers; ++w) partials.push_back({FExpansion(n), {}});
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                try {
                    Scratch scratch;
                    process_range(partials[w], scratch);
                } catch (...) {
                    errors[w] = std::current_exception();
                    stop.store(true);
                }
            });
        for (auto& t : pool) t.join();
    }
    for (const auto& error : errors)
        if (error) std::rethrow_exception(error);
    Accumulator acc{FExpansion(n), {}};
    for (auto& partial : partials) merge_into(acc, std::move(partial));
    return acc;
}

}  // namespace

FExpansion shuffle_sum(int n, const EngineOptions& options) {
    check_order(n, options);
    return run_fold(n, std::nullopt, /*want_by_touch=*/false, options).full;
}

FExpansion compositional_shuffle_sum(const Composition& alpha,
                                     const EngineOptions& options) {
    const int n = alpha.size();
    check_order(n, options);
    return run_fold(n, alpha, /*want_by_touch=*/false, options).full;
}

QtPolynomial shuffle_coefficient(const Partition& lambda,
                                 const EngineOptions& options) {
    const int n = lambda.size();
    check_order(n, options);
    const std::vector<DyckPath> paths = enumerate_dyck_paths(n);

    // block_of[v] and each block's first value, for the word-is-a-shuffle scan.
    std::vector<int> block_of(n + 1, 0);
    std::vector<int> block_start;
    {
        int start = 1;
        for (int part : lambda.parts()) {
            for (int v = start; v < start + part; ++v)
                block_of[v] = static_cast<int>(block_start.size());
            block_start.push_back(start);
            start += part;
        }
    }

    const int workers = std::min<int>(thread_count(options),
                                      static_cast<int>(paths.size()));
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    auto process = [&](QtPolynomial& poly) {
        const int dinv_stride = n * (n - 1) / 2 + 1;
        std::vector<std::int64_t> dense;
        std::vector<int> expected(block_start.size());
        while (!stop.load(std::memory_order_relaxed)) {
            const std::size_t i = next.fetch_add(1);
            if (i >= paths.size()) break;
            const PathContext ctx = make_context(paths[i]);
            dense.assign(dinv_stride, 0);
            for_each_labeling(paths[i], [&](const std::vector<int>& cars) {
                std::copy(block_start.begin(), block_start.end(), expected.begin());
                for (int k = 0; k < n; ++k) {
                    const int v = cars[ctx.reading_order[k]];
                    if (v != expected[block_of[v]]) return;
                    ++expected[block_of[v]];
                }
                int d = 0;
                for (const auto& [x, y] : ctx.dinv_candidates) d += cars[x] > cars[y];
                ++dense[d];
            });
            for (int d = 0; d < dinv_stride; ++d)
                if (dense[d] != 0) poly.add_term(d, ctx.area, dense[d]);
        }
    };

    if (workers <= 1) {
        QtPolynomial poly;
        process(poly);
        return poly;
    }
    std::vector<QtPolynomial> partials(workers);
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                try {
                    process(partials[w]);
                } catch (...) {
                    errors[w] = std::current_exception();
                    stop.store(true);
                }
            });
        for (auto& t : pool) t.join();
    }
    for (const auto& error : errors)
        if (error) std::rethrow_exception(error);
    QtPolynomial poly;
    for (const auto& partial : partials) poly += partial;
    return poly;
}

ShuffleResult compute_shuffle_result(int n, const EngineOptions& options) {
    check_order(n, options);
    Accumulator acc = run_fold(n, std::nullopt, /*want_by_touch=*/true, options);
    ShuffleResult result;
    result.n = n;
    result.full = std::move(acc.full);
    result.by_touch = std::move(acc.by_touch);
    result.schur = fundamental_to_schur(result.full);
    result.engine_version = kEngineVersion;
    result.order_tag = std::string(kEnumerationOrderTag);
    return result;
}

bool VerifyReport::all_pass() const {
    for (const auto& check : checks)
        if (!check.pass) return false;
    return true;
}

VerifyReport verify_result(const ShuffleResult& result, const EngineOptions& options) {
    VerifyReport report;
    report.n = result.n;
    const int n = result.n;

    {
        VerifyCheck check{"pf-count", false, ""};
        try {
            const std::int64_t mass = dimension_specialization(result.full);
            const std::int64_t expected = parking_function_count(n);
            check.pass = mass == expected;
            check.detail = "|PF_" + std::to_string(n) + "| = " + std::to_string(mass) +
                           ", expected (n+1)^(n-1) = " + std::to_string(expected);
        } catch (const std::exception& e) {
            check.detail = e.what();
        }
        report.checks.push_back(std::move(check));
    }

    {
        VerifyCheck check{"compositional-decomposition", false, ""};
        try {
            FExpansion sum(n);
            bool keys_valid = true;
            for (const auto& [alpha, expansion] : result.by_touch) {
                if (alpha.size() != n) keys_valid = false;
                sum += expansion;
            }
            check.pass = keys_valid && sum == result.full;
            check.detail = "sum over " + std::to_string(result.by_touch.size()) +
                           " touch classes " +
                           (check.pass ? "equals the full expansion"
                                       : "differs from the full expansion");
        } catch (const std::exception& e) {
            check.detail = e.what();
        }
        report.checks.push_back(std::move(check));
    }

    SchurExpansion converted;
    {
        VerifyCheck check{"schur-conversion", false, ""};
        try {
            converted = fundamental_to_schur(result.full);
            check.pass = converted == result.schur;
            check.detail = check.pass ? "conversion succeeded and matches the stored form: " +
                                            result.schur.to_string()
                                      : "conversion disagrees with the stored Schur form";
        } catch (const std::exception& e) {
            check.detail = std::string("conversion failed: ") + e.what();
        }
        report.checks.push_back(std::move(check));
    }

    {
        VerifyCheck check{"schur-positivity", false, ""};
        check.pass = result.schur.all_coefficients_nonnegative();
        check.detail = check.pass ? "all Schur coefficients are nonnegative"
                                  : "found a negative Schur coefficient";
        report.checks.push_back(std::move(check));
    }

    {
        VerifyCheck check{"qt-symmetry", false, ""};
        check.pass = result.schur.swap_qt() == result.schur;
        check.detail = check.pass ? "Schur expansion is fixed by swapping q and t"
                                  : "Schur expansion changes under swapping q and t";
        report.checks.push_back(std::move(check));
    }

    {
        VerifyCheck check{"coefficient-bridge", false, ""};
        try {
            bool all_match = true;
            std::string mismatch;
            const std::vector<Partition> partitions = partitions_of(n);
            for (const Partition& lambda : partitions) {
                const QtPolynomial direct = shuffle_coefficient(lambda, options);
                const QtPolynomial via_f =
                    expansion_monomial_coefficient(result.full, composition_of(lambda));
                if (direct != via_f) {
                    all_match = false;
                    mismatch = lambda.to_string();
                    break;
                }
            }
            check.pass = all_match;
            check.detail = all_match
                               ? "shuffle coefficients match the monomial coefficients for all " +
                                     std::to_string(partitions.size()) + " partitions"
                               : "mismatch at lambda = " + mismatch;
        } catch (const std::exception& e) {
            check.detail = e.what();
        }
        report.checks.push_back(std::move(check));
    }

    return report;
}

VerifyReport verify(int n, const EngineOptions& options) {
    check_order(n, options);
    return verify_result(compute_shuffle_result(n, options), options);
}

void cache_store(const ShuffleResult& result, const std::filesystem::path& file) {
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    if (!out)
        throw CacheError(CacheError::Kind::Io, "cannot open cache file for writing: " +
                                                   file.string());
    out << to_json_text(result) << '\n';
    out.flush();
    if (!out)
        throw CacheError(CacheError::Kind::Io, "failed writing cache file: " + file.string());
}

ShuffleResult cache_load(int n, const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in)
        throw CacheError(CacheError::Kind::Io, "cannot open cache file: " + file.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad())
        throw CacheError(CacheError::Kind::Io, "failed reading cache file: " + file.string());

    ShuffleResult result = shuffle_result_from_json_text(buffer.str());
    if (result.n != n)
        throw CacheError(CacheError::Kind::Corrupt,
                         "cache holds order " + std::to_string(result.n) +
                             ", requested " + std::to_string(n));

    // Invariants must hold before the result is trusted.
    try {
        FExpansion sum(result.n);
        for (const auto& [alpha, expansion] : result.by_touch) {
            if (alpha.size() != result.n)
                throw CacheError(CacheError::Kind::Corrupt,
                                 "touch composition does not sum to n");
            sum += expansion;
        }
        if (sum != result.full)
            throw CacheError(CacheError::Kind::Corrupt,
                             "by_touch expansions do not sum to the full expansion");
        if (fundamental_to_schur(result.full) != result.schur)
            throw CacheError(CacheError::Kind::Corrupt,
                             "stored Schur form disagrees with the full expansion");
    } catch (const CacheError&) {
        throw;
    } catch (const std::exception& e) {
        throw CacheError(CacheError::Kind::Corrupt,
                         std::string("cache fails validation: ") + e.what());
    }
    return result;
}

}  // namespace shuffle
