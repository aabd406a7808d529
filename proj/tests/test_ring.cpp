#include <doctest.h>

#include "subzeta/polymod.hpp"
#include "subzeta/ring.hpp"

#include <random>

using namespace subzeta;

TEST_CASE("split ring basics") {
    CHECK_THROWS_AS(make_split_ring(0), InputError);

    StructureRing r1 = make_split_ring(1);
    CHECK(r1.constant(0, 0, 0) == 1);
    CHECK_FALSE(r1.validate());

    StructureRing r2 = make_split_ring(2);
    CHECK(r2.constant(0, 0, 0) == 1);
    CHECK(r2.constant(1, 1, 1) == 1);
    CHECK(r2.constant(0, 1, 0) == 0);
    CHECK(r2.constant(0, 1, 1) == 0);
    CHECK(r2.identity() == std::vector<BigInt>{1, 1});

    CHECK_FALSE(make_split_ring(5).validate());
}

TEST_CASE("monogenic rings") {
    // x - 1 is a rank-1 presentation of the integers
    StructureRing z = make_monogenic_ring({-1, 1});
    CHECK(z.rank() == 1);
    CHECK(z.constant(0, 0, 0) == 1);
    CHECK_FALSE(z.validate());

    // x^2 - b: the quadratic model with e2^2 = b e1
    StructureRing quad = make_monogenic_ring({-2, 0, 1});
    CHECK(quad.constant(1, 1, 0) == 2);
    CHECK(quad.constant(1, 1, 1) == 0);
    CHECK(quad.constant(0, 1, 1) == 1);
    CHECK_FALSE(quad.validate());

    StructureRing eis = make_monogenic_ring({1, 1, 1});  // x^2+x+1
    CHECK(eis.constant(1, 1, 0) == -1);
    CHECK(eis.constant(1, 1, 1) == -1);
    CHECK_FALSE(eis.validate());

    CHECK_FALSE(make_monogenic_ring({-2, 0, 0, 1}).validate());  // x^3 - 2
    CHECK_THROWS_AS(make_monogenic_ring({1, 2}), InputError);    // not monic
    CHECK_THROWS_AS(make_monogenic_ring({5}), InputError);       // degree 0
}

TEST_CASE("validate reports the first bad triple") {
    // break commutativity by hand
    std::vector<BigInt> c(8, 0);
    c[(0 * 2 + 0) * 2 + 0] = 1;
    c[(1 * 2 + 1) * 2 + 1] = 1;
    c[(0 * 2 + 1) * 2 + 0] = 1;  // e1*e2 = e1 but e2*e1 = 0
    StructureRing bad(2, c, {1, 1}, "bad");
    auto v = bad.validate();
    REQUIRE(v.has_value());
    CHECK(v->kind == "commutativity");

    // identity law broken
    std::vector<BigInt> c2(8, 0);
    c2[(0 * 2 + 0) * 2 + 0] = 1;
    c2[(1 * 2 + 1) * 2 + 1] = 1;
    StructureRing bad2(2, c2, {1, 2}, "bad-identity");
    auto v2 = bad2.validate();
    REQUIRE(v2.has_value());
    CHECK(v2->kind == "identity");
}

TEST_CASE("product rings") {
    StructureRing z2 = product_ring(make_split_ring(1), make_split_ring(1));
    CHECK(z2.canonical_text() == make_split_ring(2).canonical_text());

    StructureRing z5 = product_ring(make_split_ring(2), make_split_ring(3));
    CHECK(z5.canonical_text() == make_split_ring(5).canonical_text());

    StructureRing gauss = make_monogenic_ring({1, 0, 1});
    StructureRing mixed = product_ring(gauss, make_split_ring(1));
    CHECK(mixed.rank() == 3);
    CHECK(mixed.identity() == std::vector<BigInt>{1, 0, 1});
    CHECK_FALSE(mixed.validate());

    // associative up to concatenation order
    StructureRing a = make_split_ring(1), b = make_monogenic_ring({1, 0, 1}), c = make_split_ring(2);
    CHECK(product_ring(product_ring(a, b), c).canonical_text() ==
          product_ring(a, product_ring(b, c)).canonical_text());
}

TEST_CASE("find_irreducible picks the least tuple") {
    CHECK(find_irreducible(3, 1) == std::vector<BigInt>{0, 1});        // x
    CHECK(find_irreducible(3, 2) == std::vector<BigInt>{1, 0, 1});     // x^2+1
    CHECK(find_irreducible(2, 3) == std::vector<BigInt>{1, 1, 0, 1});  // x^3+x+1
    CHECK(find_irreducible(2, 2) == std::vector<BigInt>{1, 1, 1});     // x^2+x+1

    // quadratic model at p=3: the constant negated must be a non-square mod 3
    auto q3 = find_irreducible(3, 2);
    long long c0 = q3[0].convert_to<long long>();
    bool square = false;
    for (long long t = 0; t < 3; ++t)
        if (((t * t + c0) % 3 + 3) % 3 == 0) square = true;
    CHECK_FALSE(square);
}

TEST_CASE("unramified products") {
    for (long long p : {2, 3, 5, 13})
        for (int d : {1, 2, 3}) {
            SplittingType ones{std::vector<int>(static_cast<size_t>(d), 1)};
            CHECK(make_unramified_product(p, ones).canonical_text() ==
                  make_split_ring(d).canonical_text());
        }

    // p=2, type 1 2: rank 3 with the quadratic block last
    StructureRing m = make_unramified_product(2, SplittingType{{2, 1}});
    CHECK(m.rank() == 3);
    CHECK(m.identity() == std::vector<BigInt>{1, 1, 0});
    CHECK(m.constant(2, 2, 1) == -1);  // y^2 = -1 - y in the x^2+x+1 block
    CHECK_FALSE(m.validate());

    // column convention: parts >= 3 first, then 1s, then 2s
    StructureRing big = make_unramified_product(2, SplittingType{{1, 2, 3, 1}});
    CHECK(big.rank() == 7);
    CHECK(big.identity() == std::vector<BigInt>{1, 0, 0, 1, 1, 1, 0});
    CHECK_FALSE(big.validate());

    CHECK_THROWS_AS(make_unramified_product(3, SplittingType{{}}), InputError);
}

TEST_CASE("every constructed ring validates") {
    for (long long p : {2, 3, 5, 7, 11, 13})
        for (int n = 1; n <= 6; ++n)
            for (const auto& type : partitions_of(n))
                CHECK_FALSE(make_unramified_product(p, type).validate());

    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<int> coeff(-9, 9), deg(1, 5);
    for (int trial = 0; trial < 60; ++trial) {
        int d = deg(rng);
        std::vector<BigInt> poly(static_cast<size_t>(d) + 1);
        for (int i = 0; i < d; ++i) poly[static_cast<size_t>(i)] = coeff(rng);
        poly[static_cast<size_t>(d)] = 1;
        CHECK_FALSE(make_monogenic_ring(poly).validate());
    }
}

TEST_CASE("ring json round trip") {
    StructureRing m = make_unramified_product(3, SplittingType{{2, 1}});
    StructureRing back = ring_from_json_text(ring_to_json_text(m));
    CHECK(back.canonical_text() == m.canonical_text());
    CHECK(back.hash() == m.hash());

    CHECK_THROWS_AS(ring_from_json_text("{\"rank\": 2}"), InputError);
    CHECK_THROWS_AS(ring_from_json_text("not json"), InputError);
    // omitted triples are zero
    StructureRing sparse = ring_from_json_text(
        R"({"rank":2,"identity":[1,1],"constants":[[1,1,1,1],[2,2,2,1]],"label":"zz"})");
    CHECK(sparse.canonical_text() == make_split_ring(2).canonical_text());
}

TEST_CASE("partitions and splitting types") {
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(6).size() == 11);
    SplittingType t{{2, 1, 1, 2}};
    CHECK(t.n() == 6);
    CHECK(t.v() == 2);
    CHECK(t.w() == 2);
    CHECK(t.str() == "1^2 2^2");
}
