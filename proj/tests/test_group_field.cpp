#include <doctest.h>

#include <set>

#include "amdkit/field.hpp"
#include "amdkit/group.hpp"

using namespace amdkit;

TEST_CASE("cyclic group construction") {
    FiniteAbelianGroup z21 = make_cyclic_group(21);
    CHECK(z21.order() == 21);
    CHECK(z21.rank() == 1);

    FiniteAbelianGroup z2 = make_cyclic_group(2);
    CHECK(z2.elements() == std::vector<GroupElement>{{0}, {1}});

    CHECK_THROWS_AS(make_cyclic_group(1), error);
    CHECK_THROWS_AS(make_cyclic_group(0), error);
    CHECK_THROWS_AS(FiniteAbelianGroup({3, 1}), error);
}

TEST_CASE("group arithmetic on worked values") {
    FiniteAbelianGroup z21 = make_cyclic_group(21);
    CHECK(z21.add({3}, {18}) == GroupElement{0});
    CHECK(z21.neg({3}) == GroupElement{18});
    CHECK(z21.neg({0}) == GroupElement{0});

    FiniteAbelianGroup z13 = make_cyclic_group(13);
    CHECK(z13.add({8}, {11}) == GroupElement{6});

    FiniteAbelianGroup z3z3({3, 3});
    CHECK(z3z3.add({1, 2}, {2, 2}) == GroupElement{0, 1});
    CHECK(z3z3.neg({1, 2}) == GroupElement{2, 1});

    CHECK_THROWS_AS(z21.add({3}, {1, 2}), error);
    CHECK_THROWS_AS(z21.add({3}, {21}), error);
}

TEST_CASE("group axioms hold exhaustively on small groups") {
    for (const FiniteAbelianGroup& g : {make_cyclic_group(12), FiniteAbelianGroup({2, 3, 4})}) {
        const std::int64_t n = g.order();
        for (std::int64_t a = 0; a < n; ++a) {
            CHECK(g.add_index(a, 0) == a);
            CHECK(g.add_index(a, g.neg_index(a)) == 0);
            for (std::int64_t b = 0; b < n; ++b) {
                CHECK(g.add_index(a, b) == g.add_index(b, a));
                for (std::int64_t c = 0; c < n; ++c)
                    CHECK(g.add_index(g.add_index(a, b), c) == g.add_index(a, g.add_index(b, c)));
            }
        }
    }
}

TEST_CASE("enumeration is a bijection and index round-trips") {
    FiniteAbelianGroup g({3, 5});
    std::set<GroupElement> seen;
    for (const auto& e : g.elements()) seen.insert(e);
    CHECK(seen.size() == 15);
    for (std::int64_t i = 0; i < g.order(); ++i) CHECK(g.index_of(g.element_at(i)) == i);
    // Lexicographic order means the second coordinate moves fastest.
    CHECK(g.element_at(0) == GroupElement{0, 0});
    CHECK(g.element_at(1) == GroupElement{0, 1});
    CHECK(g.element_at(5) == GroupElement{1, 0});
}

TEST_CASE("abelian groups of a given order") {
    auto nine = abelian_groups_of_order(9);
    REQUIRE(nine.size() == 2);
    CHECK(nine[0].orders() == std::vector<std::int64_t>{3, 3});
    CHECK(nine[1].orders() == std::vector<std::int64_t>{9});

    auto twelve = abelian_groups_of_order(12);
    REQUIRE(twelve.size() == 2); // Z2xZ2xZ3 and Z3xZ4
    CHECK(abelian_groups_of_order(7).size() == 1);
}

TEST_CASE("prime fields") {
    FiniteField f19 = FiniteField::prime(19);
    CHECK(f19.order() == 19);
    CHECK(f19.mul({7}, {11}) == GroupElement{1}); // 77 = 4*19 + 1
    CHECK_THROWS_AS(FiniteField::prime(15), error);
    CHECK(FiniteField::prime(2).order() == 2);
}

TEST_CASE("extension fields") {
    FiniteField f9 = FiniteField::extension(3, {1, 0, 1}); // x^2 + 1
    CHECK(f9.order() == 9);
    CHECK(f9.additive_group().orders() == std::vector<std::int64_t>{3, 3});
    // (x)(x) = x^2 = -1 = 2 mod (x^2+1)
    CHECK(f9.mul({0, 1}, {0, 1}) == GroupElement{2, 0});

    FiniteField f4 = FiniteField::extension(2, {1, 1, 1});
    CHECK(f4.order() == 4);

    // x^2 - 1 factors over Z3
    CHECK_THROWS_AS(FiniteField::extension(3, {-1, 0, 1}), error);
    CHECK_THROWS_AS(FiniteField::extension(3, {1, 0, 2}), error); // not monic
}

TEST_CASE("built-in moduli cover the desk-scale prime powers") {
    for (std::int64_t q : {4, 8, 9, 16, 25, 27, 32, 49, 64}) {
        FiniteField f = FiniteField::of_order(q);
        CHECK(f.order() == q);
    }
    CHECK_THROWS_AS(FiniteField::of_order(81), error);
    CHECK_THROWS_AS(FiniteField::of_order(12), error);
}

TEST_CASE("field axioms spot-checked exhaustively for small q") {
    for (std::int64_t q : {8, 9}) {
        FiniteField f = FiniteField::of_order(q);
        const auto& g = f.additive_group();
        for (std::int64_t i = 0; i < q; ++i) {
            GroupElement a = g.element_at(i);
            CHECK(f.mul(a, f.one()) == a);
            for (std::int64_t j = 0; j < q; ++j) {
                GroupElement b = g.element_at(j);
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (std::int64_t k = 0; k < q; ++k) {
                    GroupElement c = g.element_at(k);
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

namespace {

// Brute-force multiplicative order, independent of FiniteField::multiplicative_order.
std::int64_t order_by_powering(const FiniteField& f, const GroupElement& a) {
    GroupElement acc = a;
    std::int64_t ord = 1;
    while (acc != f.one()) {
        acc = f.mul(acc, a);
        ++ord;
    }
    return ord;
}

} // namespace

TEST_CASE("primitive elements are the canonical first generators") {
    FiniteField f19 = FiniteField::prime(19);
    GroupElement alpha = find_primitive_element(f19);
    CHECK(alpha == GroupElement{2});
    CHECK(order_by_powering(f19, alpha) == 18);

    CHECK(find_primitive_element(FiniteField::prime(3)) == GroupElement{2});

    FiniteField f7 = FiniteField::prime(7);
    CHECK(order_by_powering(f7, {2}) == 3); // 2 generates only {2,4,1}
    CHECK(order_by_powering(f7, {3}) == 6);
    CHECK(find_primitive_element(f7) == GroupElement{3});
}

TEST_CASE("powers of a primitive element enumerate the whole unit group") {
    for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9, 13, 16, 19, 25, 27}) {
        FiniteField f = FiniteField::of_order(q);
        GroupElement alpha = find_primitive_element(f);
        std::set<GroupElement> seen;
        GroupElement acc = f.one();
        for (std::int64_t i = 0; i < q - 1; ++i) {
            seen.insert(acc);
            acc = f.mul(acc, alpha);
        }
        CHECK(static_cast<std::int64_t>(seen.size()) == q - 1);
        CHECK(acc == f.one()); // alpha^(q-1) = 1
    }
}
