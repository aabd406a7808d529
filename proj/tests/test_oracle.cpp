#include <doctest.h>

#include "subzeta/enumerate.hpp"
#include "subzeta/oracle.hpp"
#include "subzeta/ring.hpp"

#include <numeric>

using namespace subzeta;

TEST_CASE("integer lattice membership") {
    GlobalHnf full;
    full.diag = {1, 1};
    full.below = {{}, {0}};
    CHECK(lattice_contains(full, {7, -3}));

    GlobalHnf l;
    l.diag = {1, 3};
    l.below = {{}, {0}};
    CHECK(l.determinant() == 3);
    CHECK(lattice_contains(l, {0, 3}));
    CHECK_FALSE(lattice_contains(l, {0, 1}));

    GlobalHnf m;
    m.diag = {3, 1};
    m.below = {{}, {1}};
    CHECK(lattice_contains(m, {1, 1}));
    CHECK_FALSE(lattice_contains(m, {1, 0}));
    CHECK_THROWS_AS(lattice_contains(m, {1, 0, 0}), InputError);
}

TEST_CASE("p-adic lattice membership") {
    HnfRep rep;
    rep.p = 3;
    rep.diag = {1, 0};
    rep.below = {{}, {1}};
    CHECK(lattice_contains(rep, {1, 1}));   // row 2 itself
    CHECK(lattice_contains(rep, {3, 0}));
    CHECK_FALSE(lattice_contains(rep, {1, 0}));
    CHECK(lattice_contains(rep, {1, 16}));  // c2 = 16, c1 = (1-16)/3 = -5
}

TEST_CASE("count_global spec values") {
    CHECK(count_global(make_split_ring(3), 1, false) == 1);
    CHECK(count_global(make_unramified_product(2, SplittingType{{2, 1}}), 1, true) == 1);
    CHECK(count_global(make_split_ring(2), 6, false) == 9);
    CHECK(count_global(make_split_ring(3), 4, true) ==
          count_index(make_split_ring(3), 2, 2, CountConfig{.unital = true}));
}

TEST_CASE("multiplicativity on coprime indices") {
    for (int d = 2; d <= 3; ++d) {
        StructureRing ring = make_split_ring(d);
        for (long long k1 : {2, 3, 4, 5, 8, 9, 11, 12})
            for (long long k2 : {2, 3, 5, 7, 9, 11}) {
                if (std::gcd(k1, k2) != 1) continue;
                CHECK(count_global(ring, k1 * k2, false) ==
                      count_global(ring, k1, false) * count_global(ring, k2, false));
            }
    }
    // rank 4 at a smaller range
    StructureRing r4 = make_split_ring(4);
    CHECK(count_global(r4, 6, false) == count_global(r4, 2, false) * count_global(r4, 3, false));
    CHECK(count_global(r4, 12, true) == count_global(r4, 4, true) * count_global(r4, 3, true));
}

TEST_CASE("prime powers agree with the local engine") {
    for (int d = 2; d <= 4; ++d) {
        StructureRing ring = make_split_ring(d);
        for (auto [p, m] : std::vector<std::pair<long long, int>>{
                 {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {7, 1}}) {
            BigInt k = big_pow(p, static_cast<unsigned>(m));
            CHECK(count_global(ring, k, false) == count_index(ring, p, m));
            CHECK(count_global(ring, k, true) ==
                  count_index(ring, p, m, CountConfig{.unital = true}));
        }
    }
    // rings with off-prefix products go through the generic engine path
    for (const auto& parts : {std::vector<int>{3}, {2, 2}, {2, 1, 1}, {3, 1}}) {
        for (long long p : {2, 3}) {
            StructureRing model = make_unramified_product(p, SplittingType{parts});
            for (int m = 0; m <= 2; ++m) {
                BigInt k = big_pow(p, static_cast<unsigned>(m));
                CHECK(count_global(model, k, true) ==
                      count_index(model, p, m, CountConfig{.unital = true}));
                CHECK(count_global(model, k, false) == count_index(model, p, m));
            }
        }
    }
}

TEST_CASE("enumerated rank-4 representatives satisfy pairwise membership") {
    StructureRing ring = make_split_ring(4);
    for (long long p : {2, 3})
        for (int m = 0; m <= 3; ++m)
            for (const auto& diag : compositions_colex(m, 4)) {
                EnumOptions opts;
                opts.collector = [&](const HnfRep& rep) {
                    for (int i = 0; i < 4; ++i)
                        for (int j = i; j < 4; ++j) {
                            std::vector<BigInt> vi(4, 0), vj(4, 0), prod(4, 0);
                            vi[static_cast<size_t>(i)] = rep.diag_value(i);
                            vj[static_cast<size_t>(j)] = rep.diag_value(j);
                            for (int c = 0; c < i; ++c) vi[static_cast<size_t>(c)] = rep.below[static_cast<size_t>(i)][static_cast<size_t>(c)];
                            for (int c = 0; c < j; ++c) vj[static_cast<size_t>(c)] = rep.below[static_cast<size_t>(j)][static_cast<size_t>(c)];
                            for (int t = 0; t < 4; ++t) prod[static_cast<size_t>(t)] = vi[static_cast<size_t>(t)] * vj[static_cast<size_t>(t)];
                            CHECK(lattice_contains(rep, prod));
                        }
                };
                count_for_diagonal(ring, p, diag, opts);
            }
}

TEST_CASE("pairwise row products characterize closure") {
    // closure_check(rep) must agree with membership of all pairwise products
    for (int d = 2; d <= 3; ++d) {
        StructureRing ring = make_split_ring(d);
        for (long long p : {2, 3})
            for (int m = 0; m <= 3; ++m)
                for (const auto& diag : compositions_colex(m, d)) {
                    // walk the full residue grid, not just survivors
                    std::vector<BigInt> widths(static_cast<size_t>(d));
                    for (int j = 0; j < d; ++j) widths[static_cast<size_t>(j)] = big_pow(p, static_cast<unsigned>(diag[static_cast<size_t>(j)]));
                    HnfRep rep;
                    rep.p = p;
                    rep.diag = diag;
                    rep.below.resize(static_cast<size_t>(d));
                    for (int i = 0; i < d; ++i) rep.below[static_cast<size_t>(i)].assign(static_cast<size_t>(i), 0);
                    while (true) {
                        bool via_products = true;
                        for (int i = 0; i < d && via_products; ++i)
                            for (int j = i; j < d && via_products; ++j) {
                                std::vector<BigInt> vi(static_cast<size_t>(d), 0), vj(static_cast<size_t>(d), 0), prod(static_cast<size_t>(d), 0);
                                vi[static_cast<size_t>(i)] = rep.diag_value(i);
                                vj[static_cast<size_t>(j)] = rep.diag_value(j);
                                for (int c = 0; c < i; ++c) vi[static_cast<size_t>(c)] = rep.below[static_cast<size_t>(i)][static_cast<size_t>(c)];
                                for (int c = 0; c < j; ++c) vj[static_cast<size_t>(c)] = rep.below[static_cast<size_t>(j)][static_cast<size_t>(c)];
                                for (int a = 0; a < d; ++a)
                                    for (int b = 0; b < d; ++b)
                                        for (const auto& [t, coef] : ring.product_support(a, b))
                                            prod[static_cast<size_t>(t)] += vi[static_cast<size_t>(a)] * vj[static_cast<size_t>(b)] * coef;
                                if (!lattice_contains(rep, prod)) via_products = false;
                            }
                        CHECK(closure_check(ring, rep) == via_products);

                        int i = 1, j = 0;
                        bool carried = true;
                        for (i = 1; i < d && carried; ++i)
                            for (j = 0; j < i && carried; ++j) {
                                auto& e = rep.below[static_cast<size_t>(i)][static_cast<size_t>(j)];
                                e += 1;
                                if (e < widths[static_cast<size_t>(j)])
                                    carried = false;
                                else
                                    e = 0;
                            }
                        if (carried) break;
                    }
                }
    }
}

TEST_CASE("oracle budget") {
    CHECK_THROWS_AS(count_global(make_split_ring(4), 1000, false, 1000), BudgetExceeded);
}
