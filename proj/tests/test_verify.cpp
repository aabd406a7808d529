#include <doctest.h>

#include "subzeta/verify.hpp"

#include <map>
#include <sstream>

using namespace subzeta;

namespace {
const BoundCheckReport& find_report(const std::vector<BoundCheckReport>& reps, const std::string& prop) {
    for (const auto& r : reps)
        if (r.prop == prop) return r;
    REQUIRE(false);
    return reps.front();
}
}  // namespace

TEST_CASE("congruence propositions at p=2 hold everywhere") {
    auto reps = check_congruence_props(2, 6, 6);
    REQUIRE(reps.size() == 5);
    for (const auto& r : reps) {
        CHECK(r.violations.empty());
        CHECK(r.worst_ratio <= 1.0);
    }
}

TEST_CASE("congruence propositions at p=3: the shifted-quadratic constant fails only on the critical locus") {
    auto reps = check_congruence_props(3, 6, 6);
    for (const auto& name : {"xy-z", "k+1", "k+1 xy-z", "zk2"})
        CHECK(find_report(reps, name).violations.empty());

    // The constant-6 bound is violated exactly where z sits p-adically close
    // to the critical value of the quadratic; the report classifies every
    // violation onto that locus and confirms the square-root law still holds.
    const auto& klz = find_report(reps, "k-l z");
    CHECK_FALSE(klz.violations.empty());
    REQUIRE_FALSE(klz.notes.empty());
    std::string note = klz.notes.front();
    CHECK(note.find("off locus: 0;") != std::string::npos);
    CHECK(note.find("square-root law 2 p^floor(min(w,k)/2): 0") != std::string::npos);
}

TEST_CASE("congruence budget") {
    CHECK_THROWS_AS(check_congruence_props(5, 6, 6, 1000), BudgetExceeded);
}

TEST_CASE("volume bounds on a small grid") {
    for (int d : {3, 4, 5}) {
        auto reps = check_mu_bounds(d, {2, 3, 5}, 3, CountConfig{.workers = 2});
        for (const auto& r : reps) {
            INFO(r.prop);
            CHECK(r.violations.empty());
        }
    }
    auto reps6 = check_mu_bounds(6, {3}, 2, CountConfig{.workers = 2});
    for (const auto& r : reps6) CHECK(r.violations.empty());
    CHECK_THROWS_AS(check_mu_bounds(7, {3}, 2, CountConfig{}), InputError);
}

TEST_CASE("a1 formula") {
    A1Result five = verify_a1(5, SplittingType{{1, 1, 1, 1, 1}});
    CHECK(five.formula == 10);
    CHECK(five.brute == 10);
    CHECK(five.match);

    A1Result pair = verify_a1(3, SplittingType{{2}});
    CHECK(pair.formula == 1);
    CHECK(pair.brute == 1);

    A1Result cubic = verify_a1(3, SplittingType{{3}});
    CHECK(cubic.formula == 0);
    CHECK(cubic.brute == 0);

    BoundCheckReport rep = verify_a1_suite(4, {2, 3, 5});
    CHECK(rep.violations.empty());
    CHECK(rep.worst_ratio == 1.0);
}

TEST_CASE("quintic exponent diagnostic") {
    BoundCheckReport rep = check_quintic_exponent({3, 5}, {2});
    CHECK(rep.violations.empty());
    CHECK(rep.detail.size() == 2);
    // ratios are positive and decreasing on this range
    CHECK(rep.detail[0].second > rep.detail[1].second);
    CHECK(rep.detail[1].second > 0);
}

TEST_CASE("conjecture probe") {
    BoundCheckReport inert = check_wishful(3, 2, SplittingType{{5}});
    CHECK(inert.violations.empty());
    std::map<std::string, double> rows(inert.detail.begin(), inert.detail.end());
    CHECK(rows.at("i=1 a_i") == 0);
    CHECK(rows.at("i=1 b_i") == 10);

    BoundCheckReport split_type = check_wishful(3, 2, SplittingType{{1, 1, 1, 1, 1}});
    CHECK(split_type.violations.empty());
    std::map<std::string, double> rows2(split_type.detail.begin(), split_type.detail.end());
    CHECK(rows2.at("i=2 a_i") == rows2.at("i=2 b_i"));  // same ring on both sides
}

TEST_CASE("report serialization") {
    BoundCheckReport rep = verify_a1_suite(3, {2});
    std::string json = report_json(rep);
    CHECK(json.find("\"prop\"") != std::string::npos);
    CHECK(json.find("\"violations\":[]") != std::string::npos);
    CHECK(reports_json({rep, rep}).front() == '[');
}
