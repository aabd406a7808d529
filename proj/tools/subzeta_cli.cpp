#include "subzeta/enumerate.hpp"
#include "subzeta/oracle.hpp"
#include "subzeta/permgroup.hpp"
#include "subzeta/polymod.hpp"
#include "subzeta/ring.hpp"
#include "subzeta/series.hpp"
#include "subzeta/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace subzeta;

constexpr int kExitOk = 0;
constexpr int kExitBudget = 2;
constexpr int kExitInput = 3;
constexpr int kExitViolation = 4;

struct ViolationFound : std::runtime_error {
    explicit ViolationFound(const std::string& what) : std::runtime_error(what) {}
};

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// "2,3,5" or "2..13" (primes in range) or combinations
std::vector<long long> parse_primes(const std::string& text) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto dots = tok.find("..");
        if (dots != std::string::npos) {
            long long lo = std::stoll(tok.substr(0, dots)), hi = std::stoll(tok.substr(dots + 2));
            for (long long p = lo; p <= hi; ++p)
                if (is_prime(p)) out.push_back(p);
        } else {
            long long p = std::stoll(tok);
            if (!is_prime(p)) throw InputError("p = " + std::to_string(p) + " is not prime");
            out.push_back(p);
        }
    }
    if (out.empty()) throw InputError("empty prime list");
    return out;
}

std::vector<int> parse_ints(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto dots = tok.find("..");
        if (dots != std::string::npos) {
            int lo = std::stoi(tok.substr(0, dots)), hi = std::stoi(tok.substr(dots + 2));
            for (int v = lo; v <= hi; ++v) out.push_back(v);
        } else {
            out.push_back(std::stoi(tok));
        }
    }
    if (out.empty()) throw InputError("empty integer list");
    return out;
}

StructureRing parse_ring(const std::string& spec) {
    if (spec.rfind("split:", 0) == 0) return make_split_ring(std::stoi(spec.substr(6)));
    if (spec.rfind("mono:", 0) == 0) return make_monogenic_ring(parse_polynomial(spec.substr(5)));
    if (spec.rfind("monogenic:", 0) == 0)
        return make_monogenic_ring(parse_polynomial(spec.substr(10)));
    if (spec.rfind("unram:", 0) == 0) {
        auto rest = spec.substr(6);
        auto colon = rest.find(':');
        if (colon == std::string::npos) throw InputError("unram spec is unram:<p>:<parts>");
        long long p = std::stoll(rest.substr(0, colon));
        if (!is_prime(p)) throw InputError("unram prime is not prime");
        SplittingType type{parse_ints(rest.substr(colon + 1))};
        return make_unramified_product(p, type);
    }
    std::ifstream in(spec);
    if (!in) throw InputError("cannot open ring spec: " + spec);
    std::stringstream buf;
    buf << in.rdbuf();
    StructureRing ring = ring_from_json_text(buf.str());
    if (auto bad = ring.validate())
        throw InputError("ring spec fails validation (" + bad->kind + "): " + bad->detail);
    return ring;
}

std::string cache_path_from(const std::string& flag_value) {
    if (const char* env = std::getenv("SUBRING_ZETA_CACHE"); env && *env) return env;
    return flag_value;
}

int run(int argc, char** argv) {
    CLI::App app{"exact counting of finite-index subrings and orders, with verification suites"};
    app.require_subcommand(1);
    app.fallthrough();

    int workers = 1;
    unsigned long long budget = kDefaultNodeBudget;
    std::string cache_flag;
    bool audit_cache = false;
    app.add_option("--workers", workers, "worker threads for diagonal/grid partitions");
    app.add_option("--budget", budget, "enumeration node budget");
    app.add_option("--cache", cache_flag, "count cache file (JSON lines, append-only)");
    app.add_flag("--audit-cache", audit_cache, "recompute every cache hit and compare");

    // count
    auto* count = app.add_subcommand("count", "exact a(p^m) for one ring");
    count->fallthrough();
    std::string ring_spec, p_text = "2", m_text = "1", format = "plain";
    bool unital = false, dump_reps = false;
    count->add_option("--ring", ring_spec, "split:<d> | mono:<poly> | unram:<p>:<parts> | <file.json>")
        ->required();
    count->add_option("--p", p_text, "prime or list/range, e.g. 3 or 2,3,5 or 2..13");
    count->add_option("--m", m_text, "index exponent(s), e.g. 2 or 0..4");
    count->add_flag("--unital", unital, "count subrings containing the identity (orders)");
    count->add_option("--format", format, "plain | csv | json")->check(CLI::IsMember({"plain", "csv", "json"}));
    count->add_flag("--dump-reps", dump_reps, "also print Hermite representatives (small cases)");

    // series
    auto* series = app.add_subcommand("series", "multiplicative assembly of f(k) and N(B)");
    series->fallthrough();
    std::string family_text;
    long long B = 100;
    std::string fit_text, fit_out, coeffs_file;
    series->add_option("--family", family_text, "split:<d> | monogenic:<poly>")->required();
    series->add_option("--B", B, "assemble f(k) for k <= B");
    series->add_option("--fit", fit_text, "alpha,beta for the diagnostic log-power fit");
    series->add_option("--fit-out", fit_out, "write fit JSON to a file (also printed to stderr)");
    series->add_option("--local-coeffs", coeffs_file,
                       "JSON sidecar {\"p\": [a0,a1,...]} for ramified primes");

    // r2
    auto* r2 = app.add_subcommand("r2", "orbit counts on 2-subsets and the cycle-type average");
    r2->fallthrough();
    std::string groups_file;
    bool table1 = false;
    r2->add_option("--groups", groups_file, "group file (JSON, cycle notation)");
    r2->add_flag("--table1", table1, "use the built-in 12 transitive benchmark groups");

    // verify
    auto* verify = app.add_subcommand("verify", "bound and formula suites");
    verify->fallthrough();
    std::string suite, vp_text = "3", type_text = "5";
    int kmax = 6, lmax = 6, d_order = 4, n_arg = 5, mmax = 2, mu_sum_max = 4;
    std::string mset_text = "2,3";
    double slack = 1.0;
    verify->add_option("--suite", suite, "congruence | mu | a1 | quintic | wishful")->required();
    verify->add_option("--p", vp_text, "prime list");
    verify->add_option("--kmax", kmax, "congruence suite: max k");
    verify->add_option("--lmax", lmax, "congruence suite: max l");
    verify->add_option("--d", d_order, "mu suite: order dimension (3..6)");
    verify->add_option("--sum-max", mu_sum_max, "mu suite: max sum of diagonal exponents");
    verify->add_option("--n", n_arg, "a1 suite: rank (partitions of n)");
    verify->add_option("--type", type_text, "wishful suite: partition, e.g. 5 or 1,2,2");
    verify->add_option("--mmax", mmax, "wishful suite: max index exponent");
    verify->add_option("--mset", mset_text, "quintic suite: list of m values");
    verify->add_option("--slack", slack, "quintic suite: boundedness slack");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    CountTable table(cache_path_from(cache_flag));
    const bool caching = !cache_path_from(cache_flag).empty();
    table.set_audit(audit_cache);
    CountConfig cfg;
    cfg.workers = workers;
    cfg.node_budget = budget;
    cfg.table = caching ? &table : nullptr;

    if (*count) {
        StructureRing ring = parse_ring(ring_spec);
        auto primes = parse_primes(p_text);
        auto ms = parse_ints(m_text);
        CountConfig c = cfg;
        c.unital = unital;
        nlohmann::json jout = nlohmann::json::array();
        if (format == "csv") std::cout << "p,m,unital,count\n";
        for (long long p : primes)
            for (int m : ms) {
                if (m < 0) throw InputError("m must be >= 0");
                BigInt value = count_index(ring, p, m, c);
                if (format == "plain")
                    std::cout << value.str() << "\n";
                else if (format == "csv")
                    std::cout << p << "," << m << "," << (unital ? 1 : 0) << "," << value.str() << "\n";
                else
                    jout.push_back({{"p", p}, {"m", m}, {"unital", unital}, {"count", value.str()}});
                if (dump_reps) {
                    size_t shown = 0;
                    for (const auto& diag : compositions_colex(m, ring.rank())) {
                        EnumOptions opts;
                        opts.unital = unital;
                        opts.node_budget = budget;
                        opts.collector = [&](const HnfRep& rep) {
                            if (++shown > 10000) return;
                            nlohmann::json jr;
                            jr["p"] = rep.p;
                            jr["diag"] = rep.diag;
                            auto rows = nlohmann::json::array();
                            for (const auto& row : rep.below) {
                                auto r = nlohmann::json::array();
                                for (const auto& e : row) r.push_back(e.str());
                                rows.push_back(r);
                            }
                            jr["below"] = rows;
                            std::cerr << jr.dump() << "\n";
                        };
                        count_for_diagonal(ring, p, diag, opts);
                    }
                    if (shown > 10000)
                        std::cerr << "(representative dump truncated at 10000)\n";
                }
            }
        if (format == "json") std::cout << jout.dump() << "\n";
        return kExitOk;
    }

    if (*series) {
        Family family = parse_family(family_text);
        LocalOverrides overrides;
        if (!coeffs_file.empty()) {
            std::ifstream in(coeffs_file);
            if (!in) throw InputError("cannot open local-coeffs file: " + coeffs_file);
            nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
            if (j.is_discarded()) throw InputError("bad local-coeffs JSON");
            for (auto& [key, arr] : j.items()) {
                std::vector<BigInt> coeffs;
                for (const auto& v : arr)
                    coeffs.emplace_back(v.is_string() ? BigInt(v.get<std::string>())
                                                      : BigInt(v.get<long long>()));
                overrides[std::stoll(key)] = std::move(coeffs);
            }
        }
        SeriesProfile profile = assemble_counts(family, B, cfg, overrides);
        for (long long p : profile.excluded_primes)
            std::cerr << "notice: ramified prime " << p
                      << " excluded (local factor treated as 1; supply --local-coeffs to include)\n";
        if (!profile.gap_keys.empty()) {
            std::cerr << "gap report: missing local keys";
            for (auto [p, m] : profile.gap_keys) std::cerr << " (" << p << "," << m << ")";
            std::cerr << "\n";
        }
        std::cout << series_csv(profile);
        if (!fit_text.empty()) {
            auto comma = fit_text.find(',');
            if (comma == std::string::npos) throw InputError("--fit expects alpha,beta");
            double alpha = std::stod(fit_text.substr(0, comma));
            int beta = std::stoi(fit_text.substr(comma + 1));
            AsymptoticFit fit = fit_log_power(profile, alpha, beta);
            std::string fj = fit_json(fit);
            std::cerr << fj << "\n";
            if (!fit_out.empty()) {
                std::ofstream out(fit_out);
                out << fj << "\n";
            }
        }
        return kExitOk;
    }

    if (*r2) {
        std::vector<NamedGroup> groups;
        if (table1) {
            groups = builtin_transitive_groups();
        } else if (!groups_file.empty()) {
            std::ifstream in(groups_file);
            if (!in) throw InputError("cannot open group file: " + groups_file);
            std::stringstream buf;
            buf << in.rdbuf();
            groups = groups_from_json_text(buf.str());
        } else {
            throw InputError("r2 needs --groups <file> or --table1");
        }
        std::vector<R2Row> rows;
        for (const auto& g : groups) {
            R2Row row = r2_report_row(g);
            if (!row.transitive)
                std::cerr << "warning: group " << row.name
                          << " is not transitive; orbit count reported anyway\n";
            if (row.degree < 2)
                std::cerr << "warning: group " << row.name
                          << " has no 2-element subsets to act on; r2 = 0\n";
            rows.push_back(row);
        }
        std::cout << r2_report_csv(rows);
        for (const auto& row : rows)
            if (!row.match) throw ViolationFound("burnside average differs from orbit count for " + row.name);
        return kExitOk;
    }

    if (*verify) {
        auto primes = parse_primes(vp_text);
        std::vector<BoundCheckReport> reports;
        if (suite == "congruence") {
            for (long long p : primes) {
                auto r = check_congruence_props(p, kmax, lmax, budget);
                reports.insert(reports.end(), r.begin(), r.end());
            }
        } else if (suite == "mu") {
            reports = check_mu_bounds(d_order, primes, mu_sum_max, cfg);
        } else if (suite == "a1") {
            reports.push_back(verify_a1_suite(n_arg, primes, cfg));
        } else if (suite == "quintic") {
            reports.push_back(check_quintic_exponent(primes, parse_ints(mset_text), slack, cfg));
        } else if (suite == "wishful") {
            for (long long p : primes)
                reports.push_back(check_wishful(p, mmax, SplittingType{parse_ints(type_text)}, cfg));
        } else {
            throw InputError("unknown suite: " + suite);
        }
        std::cout << reports_json(reports) << "\n";
        size_t violations = 0;
        for (const auto& r : reports) violations += r.violations.size();
        if (violations > 0)
            throw ViolationFound(std::to_string(violations) + " violation(s) found");
        return kExitOk;
    }

    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const subzeta::BudgetExceeded& e) {
        std::cerr << nlohmann::json{{"error", e.what()}, {"kind", "budget"}}.dump() << "\n";
        return kExitBudget;
    } catch (const subzeta::InputError& e) {
        std::cerr << nlohmann::json{{"error", e.what()}, {"kind", "input"}}.dump() << "\n";
        return kExitInput;
    } catch (const ViolationFound& e) {
        std::cerr << nlohmann::json{{"error", e.what()}, {"kind", "violation"}}.dump() << "\n";
        return kExitViolation;
    } catch (const CLI::ParseError&) {
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << nlohmann::json{{"error", e.what()}, {"kind", "internal"}}.dump() << "\n";
        return kExitInput;
    }
}
