#include <doctest.h>

#include "subzeta/enumerate.hpp"
#include "subzeta/oracle.hpp"
#include "subzeta/ring.hpp"

#include <cstdio>
#include <filesystem>

using namespace subzeta;

namespace {
HnfRep rep2(long long p, int k1, int k2, long long x21) {
    HnfRep rep;
    rep.p = p;
    rep.diag = {k1, k2};
    rep.below = {{}, {BigInt(x21)}};
    return rep;
}
}  // namespace

TEST_CASE("closure check on 2x2 representatives") {
    StructureRing z2 = make_split_ring(2);
    CHECK(closure_check(z2, rep2(3, 1, 0, 1)));
    CHECK_FALSE(closure_check(z2, rep2(3, 1, 0, 2)));
    CHECK(closure_check(z2, rep2(3, 0, 0, 0)));  // full lattice

    HnfRep bad;
    bad.p = 3;
    bad.diag = {1};
    bad.below = {{}};
    CHECK_THROWS_AS(closure_check(z2, bad), InputError);
}

TEST_CASE("unital check on 2x2 representatives") {
    StructureRing z2 = make_split_ring(2);
    CHECK(unital_check(z2, rep2(3, 1, 0, 1)));
    CHECK_FALSE(unital_check(z2, rep2(3, 0, 1, 0)));
    CHECK(unital_check(z2, rep2(3, 0, 0, 0)));
}

TEST_CASE("counts for fixed diagonals") {
    StructureRing z2 = make_split_ring(2);
    CHECK(count_for_diagonal(z2, 3, {1, 0}) == 2);
    CHECK(count_for_diagonal(z2, 3, {1, 1}) == 1);
    EnumOptions unital;
    unital.unital = true;
    CHECK(count_for_diagonal(z2, 3, {1, 0}, unital) == 1);
    CHECK_THROWS_AS(count_for_diagonal(z2, 3, {1}, EnumOptions{}), InputError);
}

TEST_CASE("count_index spec values") {
    CHECK(count_index(make_split_ring(4), 7, 1) == 10);
    CHECK(count_index(make_split_ring(2), 3, 0) == 1);
    CHECK(count_index(make_split_ring(2), 3, 2) == 4);
    CountConfig unital;
    unital.unital = true;
    CHECK(count_index(make_split_ring(5), 3, 1, unital) == 10);
}

TEST_CASE("first coefficient law") {
    for (int d = 1; d <= 6; ++d)
        for (long long p : {2, 3, 5, 7, 11, 13})
            CHECK(count_index(make_split_ring(d), p, 1) == d * (d + 1) / 2);
}

TEST_CASE("duality between orders and subrings of one rank less") {
    for (int d = 2; d <= 4; ++d)
        for (long long p : {2, 3})
            for (int m = 0; m <= 3; ++m) {
                CountConfig unital;
                unital.unital = true;
                CHECK(count_index(make_split_ring(d), p, m, unital) ==
                      count_index(make_split_ring(d - 1), p, m));
            }
}

TEST_CASE("unital counts never exceed subring counts") {
    for (long long p : {2, 3})
        for (int m = 0; m <= 3; ++m)
            for (int n = 2; n <= 4; ++n)
                for (const auto& type : partitions_of(n)) {
                    StructureRing ring = make_unramified_product(p, type);
                    CountConfig plain, unital;
                    unital.unital = true;
                    CHECK(count_index(ring, p, m, unital) <= count_index(ring, p, m, plain));
                }
}

TEST_CASE("pruned and exhaustive enumeration agree") {
    std::vector<StructureRing> rings;
    rings.push_back(make_split_ring(3));
    rings.push_back(make_unramified_product(2, SplittingType{{2, 1}}));
    rings.push_back(make_unramified_product(3, SplittingType{{3}}));  // support past max(a,b)
    rings.push_back(make_monogenic_ring({-2, 0, 0, 1}));
    for (const auto& ring : rings)
        for (long long p : {2, 3})
            for (int m = 0; m <= 2; ++m)
                for (bool unital : {false, true})
                    for (const auto& diag : compositions_colex(m, ring.rank())) {
                        EnumOptions pruned, exhaustive;
                        pruned.unital = exhaustive.unital = unital;
                        exhaustive.pruned = false;
                        CHECK(count_for_diagonal(ring, p, diag, pruned) ==
                              count_for_diagonal(ring, p, diag, exhaustive));
                    }
}

TEST_CASE("collector representatives all pass the public checks") {
    StructureRing ring = make_unramified_product(3, SplittingType{{2, 1}});
    for (int m = 0; m <= 2; ++m)
        for (const auto& diag : compositions_colex(m, ring.rank())) {
            EnumOptions opts;
            size_t seen = 0;
            opts.collector = [&](const HnfRep& rep) {
                ++seen;
                CHECK(closure_check(ring, rep));
                CHECK(lattice_contains(rep, ring.identity()) == unital_check(ring, rep));
            };
            BigInt n = count_for_diagonal(ring, 3, diag, opts);
            CHECK(n == seen);
        }
}

TEST_CASE("mu volumes") {
    MuVolume mv = mu_volume(make_split_ring(2), 3, {1, 0});
    CHECK(mv.count == 2);
    CHECK(mv.exponent == 1);

    MuVolume full = mu_volume(make_split_ring(3), 5, {0, 0, 0});
    CHECK(full.count == 1);
    CHECK(full.exponent == 0);

    // quadratic bound at the first-coefficient scale
    MuVolume m3 = mu_volume(make_split_ring(3), 5, {1, 0, 0});
    CHECK(m3.count == 3);
    CHECK(m3.exponent == 2);
    CHECK(m3.approx(5) <= 2.0 / 5.0);
}

TEST_CASE("local factor coefficients") {
    std::vector<BigInt> expect{1, 3, 4};
    CHECK(local_factor_coeffs(make_split_ring(2), 3, 2) == expect);
    CHECK(local_factor_coeffs(make_split_ring(2), 3, 0) == std::vector<BigInt>{1});
    CountConfig unital;
    unital.unital = true;
    CHECK(local_factor_coeffs(make_split_ring(5), 3, 1, unital) == std::vector<BigInt>{1, 10});
}

TEST_CASE("workers do not change counts") {
    StructureRing ring = make_split_ring(4);
    for (int m = 0; m <= 4; ++m) {
        CountConfig one, four;
        one.workers = 1;
        four.workers = 4;
        CHECK(count_index(ring, 3, m, one) == count_index(ring, 3, m, four));
    }
}

TEST_CASE("memo table determinism and persistence") {
    namespace fs = std::filesystem;
    fs::path path = fs::temp_directory_path() / "subzeta_cache_test.jsonl";
    fs::remove(path);
    {
        CountTable table(path.string());
        CountConfig cfg;
        cfg.table = &table;
        StructureRing ring = make_split_ring(3);
        BigInt first = count_index(ring, 3, 2, cfg);
        BigInt again = count_index(ring, 3, 2, cfg);
        CHECK(first == again);
        CHECK(table.hits() >= 1);
        CHECK(table.size() == 1);
    }
    {
        // reload from disk, audit mode recomputes and compares
        CountTable table(path.string());
        CHECK(table.size() == 1);
        table.set_audit(true);
        CountConfig cfg;
        cfg.table = &table;
        CHECK_NOTHROW(count_index(make_split_ring(3), 3, 2, cfg));
    }
    {
        // corrupt the cached value: audit must catch it
        CountTable table(path.string());
        auto key = CountTable::Key{make_split_ring(3).hash(), 3, 2, false};
        auto cached = table.lookup(key);
        REQUIRE(cached.has_value());
        FILE* f = fopen(path.string().c_str(), "w");
        BigInt wrong = *cached + 1;
        fprintf(f, "{\"ring\":\"%s\",\"p\":3,\"m\":2,\"unital\":false,\"count\":\"%s\"}\n",
                hex64(make_split_ring(3).hash()).c_str(), wrong.str().c_str());
        fclose(f);
        CountTable bad(path.string());
        bad.set_audit(true);
        CountConfig cfg;
        cfg.table = &bad;
        CHECK_THROWS(count_index(make_split_ring(3), 3, 2, cfg));
    }
    fs::remove(path);
}

TEST_CASE("node budget trips") {
    EnumOptions opts;
    opts.node_budget = 10;
    CHECK_THROWS_AS(count_for_diagonal(make_split_ring(4), 5, {2, 1, 1, 0}, opts), BudgetExceeded);
}

TEST_CASE("compositions are colexicographic") {
    auto comps = compositions_colex(2, 2);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<int>{2, 0});
    CHECK(comps[1] == std::vector<int>{1, 1});
    CHECK(comps[2] == std::vector<int>{0, 2});
    CHECK(compositions_colex(4, 5).size() == 70);
}
