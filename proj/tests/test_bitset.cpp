#include <doctest.h>

#include "idnc/bitset.hpp"

using idnc::DynamicBitset;

TEST_CASE("bitset set/reset/test and counting") {
    DynamicBitset b(130);  // spans three words
    CHECK(b.none());
    CHECK(b.count() == 0);

    b.set(0);
    b.set(63);
    b.set(64);
    b.set(129);
    CHECK(b.count() == 4);
    CHECK(b.test(63));
    CHECK(b.test(64));
    CHECK_FALSE(b.test(65));
    CHECK(b.any());

    b.reset(63);
    CHECK_FALSE(b.test(63));
    CHECK(b.count() == 3);

    b.clear();
    CHECK(b.none());
}

TEST_CASE("bitset set algebra") {
    auto a = DynamicBitset::of(70, {1, 3, 65});
    auto b = DynamicBitset::of(70, {3, 65, 69});

    CHECK((a & b) == DynamicBitset::of(70, {3, 65}));
    CHECK((a | b) == DynamicBitset::of(70, {1, 3, 65, 69}));
    CHECK(a.intersects(b));
    CHECK(a.count_and(b) == 2);

    DynamicBitset diff = a;
    diff.and_not(b);
    CHECK(diff == DynamicBitset::of(70, {1}));

    CHECK(DynamicBitset::of(70, {3, 65}).is_subset_of(a));
    CHECK_FALSE(a.is_subset_of(b));
    CHECK_FALSE(a.intersects(DynamicBitset::of(70, {0, 2, 68})));
}

TEST_CASE("bitset iteration order is ascending") {
    auto b = DynamicBitset::of(200, {5, 64, 66, 199});
    CHECK(b.find_first() == 5);
    CHECK(b.find_next(5) == 64);
    CHECK(b.find_next(64) == 66);
    CHECK(b.find_next(66) == 199);
    CHECK(b.find_next(199) == -1);
    CHECK(b.to_indices() == std::vector<int>{5, 64, 66, 199});

    CHECK(DynamicBitset(40).find_first() == -1);
}

TEST_CASE("bitset mask comparison, highest word first") {
    // Within one word the comparison is plain integer order.
    CHECK(DynamicBitset::of(10, {0, 2}).mask_less(DynamicBitset::of(10, {0, 5})));
    CHECK_FALSE(DynamicBitset::of(10, {0, 5}).mask_less(DynamicBitset::of(10, {0, 2})));
    CHECK_FALSE(DynamicBitset::of(10, {1}).mask_less(DynamicBitset::of(10, {1})));

    // A high-word bit dominates any low-word content.
    auto high = DynamicBitset::of(130, {100});
    auto low = DynamicBitset::of(130, {0, 1, 2, 3, 60});
    CHECK(low.mask_less(high));
    CHECK_FALSE(high.mask_less(low));
}
