#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "shuffle/partition.hpp"
#include "shuffle/subset.hpp"

using namespace shuffle;

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(Partition({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({3, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
    const Partition p({3, 3, 2});
    CHECK(p.size() == 8);
    CHECK(p.length() == 3);
    CHECK(p.to_string() == "3,3,2");
    CHECK(Partition{}.size() == 0);
}

TEST_CASE("composition validation") {
    CHECK_THROWS_AS(Composition({1, 0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Composition(std::vector<int>{}), std::invalid_argument);
    const Composition c({1, 3, 1});
    CHECK(c.size() == 5);
    CHECK(c.length() == 3);
}

TEST_CASE("transpose examples") {
    CHECK(transpose(Partition({2, 1, 1})) == Partition({3, 1}));
    for (int n = 1; n <= 6; ++n)
        CHECK(transpose(Partition::single_column(n)) == Partition::single_row(n));
    // column-count oracle fixes the expected value for 3,3,2
    const Partition lambda({3, 3, 2});
    CHECK(oracles::transpose_by_columns(lambda) == std::vector<int>{3, 3, 2});
    CHECK(transpose(lambda) == Partition({3, 3, 2}));
}

TEST_CASE("transpose is an involution and matches the column oracle") {
    for (int n = 1; n <= 12; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            CHECK(transpose(lambda).parts() == oracles::transpose_by_columns(lambda));
            CHECK(transpose(transpose(lambda)) == lambda);
        }
    }
}

TEST_CASE("n_stat") {
    CHECK(n_stat(Partition::single_row(7)) == 0);
    for (int n = 1; n <= 9; ++n)
        CHECK(n_stat(Partition::single_column(n)) == n * (n - 1) / 2);
    CHECK(n_stat(Partition({3, 3, 2})) == 3 * 0 + 3 * 1 + 2 * 2);
}

TEST_CASE("partitions_of counts and order") {
    for (int n = 1; n <= 12; ++n) {
        const auto all = partitions_of(n);
        CHECK(static_cast<std::int64_t>(all.size()) == oracles::partition_count(n));
        for (std::size_t i = 0; i < all.size(); ++i) {
            CHECK(all[i].size() == n);
            if (i > 0) CHECK(all[i - 1] < all[i]);
        }
    }
    CHECK(partitions_of(3) == std::vector<Partition>{Partition({1, 1, 1}),
                                                     Partition({2, 1}),
                                                     Partition({3})});
    CHECK_THROWS_AS(partitions_of(0), std::invalid_argument);
}

TEST_CASE("compositions_of counts and order") {
    for (int n = 1; n <= 10; ++n) {
        const auto all = compositions_of(n);
        CHECK(all.size() == (std::size_t{1} << (n - 1)));
        for (std::size_t i = 0; i < all.size(); ++i) {
            CHECK(all[i].size() == n);
            if (i > 0) CHECK(all[i - 1] < all[i]);
        }
    }
    CHECK(compositions_of(3) ==
          std::vector<Composition>{Composition({1, 1, 1}), Composition({1, 2}),
                                   Composition({2, 1}), Composition({3})});
}

TEST_CASE("subset helpers") {
    CHECK(subset_from_elements({2, 4, 6, 7}) == 0b1101010u);
    CHECK(subset_elements(0b1101010u) == std::vector<int>{2, 4, 6, 7});
    CHECK(subset_to_string(0) == "{}");
    CHECK(subset_to_string(subset_from_elements({1, 3})) == "{1,3}");
    CHECK(subset_within(0b100u, 4));
    CHECK_FALSE(subset_within(0b1000u, 4));
    CHECK_THROWS_AS(subset_from_elements({0}), std::invalid_argument);
    CHECK_THROWS_AS(subset_from_elements({2, 2}), std::invalid_argument);
}
