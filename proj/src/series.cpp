#include "subzeta/series.hpp"

#include "subzeta/polymod.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

namespace subzeta {

std::string Family::str() const {
    if (kind == Kind::Split) return "split:" + std::to_string(split_rank);
    return "monogenic:" + polynomial_to_string(poly);
}

Family parse_family(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw InputError("family must be split:<d> or monogenic:<poly>");
    std::string kind = text.substr(0, colon), rest = text.substr(colon + 1);
    Family f;
    if (kind == "split") {
        f.kind = Family::Kind::Split;
        f.split_rank = std::stoi(rest);
        if (f.split_rank < 1) throw InputError("split rank must be >= 1");
    } else if (kind == "monogenic" || kind == "mono") {
        f.kind = Family::Kind::Monogenic;
        f.poly = parse_polynomial(rest);
        if (f.poly.back() != 1) throw InputError("monogenic family polynomial must be monic");
    } else {
        throw InputError("unknown family kind: " + kind);
    }
    return f;
}

namespace {

std::vector<long long> primes_up_to(long long B) {
    std::vector<bool> composite(static_cast<size_t>(B) + 1, false);
    std::vector<long long> out;
    for (long long i = 2; i <= B; ++i) {
        if (composite[static_cast<size_t>(i)]) continue;
        out.push_back(i);
        for (long long j = i * i; j <= B; j += i) composite[static_cast<size_t>(j)] = true;
    }
    return out;
}

}  // namespace

SeriesProfile assemble_counts(const Family& family, long long B, const CountConfig& cfg,
                              const LocalOverrides& overrides) {
    if (B < 1) throw InputError("B must be >= 1");
    SeriesProfile profile;
    profile.family = family;
    profile.B = B;

    auto primes = primes_up_to(B);

    // Local coefficient vectors a(p^m) for p^m <= B.  For the split family
    // of rank d the orders of Z^d of index p^m are counted by the
    // not-necessarily-unital subrings of Z^(d-1); the engine computes the
    // latter directly.  Monogenic families go through the splitting type of
    // the defining polynomial at each unramified prime.
    std::vector<std::vector<BigInt>> local(primes.size());
    std::vector<char> excluded(primes.size(), 0);

    std::optional<StructureRing> split_base;
    if (family.kind == Family::Kind::Split && family.split_rank >= 2)
        split_base = make_split_ring(family.split_rank - 1);

    std::atomic<size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto work = [&]() {
        try {
            while (true) {
                size_t idx = next.fetch_add(1);
                if (idx >= primes.size()) break;
                long long p = primes[idx];
                int m_max = 0;
                BigInt pw = p;
                while (pw <= B) {
                    ++m_max;
                    pw *= p;
                }
                std::vector<BigInt> coeffs;
                if (auto it = overrides.find(p); it != overrides.end()) {
                    coeffs = it->second;
                    coeffs.resize(static_cast<size_t>(m_max) + 1, 0);
                    if (coeffs[0] != 1) throw InputError("local override for p=" + std::to_string(p) +
                                                         " must start with a(p^0) = 1");
                } else if (family.kind == Family::Kind::Split) {
                    if (!split_base) {  // rank 1: only the full ring contains 1
                        coeffs.assign(static_cast<size_t>(m_max) + 1, 0);
                        coeffs[0] = 1;
                    } else {
                        CountConfig local_cfg = cfg;
                        local_cfg.workers = 1;  // parallelism lives at the prime level here
                        coeffs = local_factor_coeffs(*split_base, p, m_max, local_cfg);
                    }
                } else {
                    SplittingType type;
                    try {
                        type = splitting_type_of(family.poly, p);
                    } catch (const InputError&) {
                        excluded[idx] = 1;
                        continue;
                    }
                    StructureRing model = make_unramified_product(p, type);
                    CountConfig local_cfg = cfg;
                    local_cfg.workers = 1;
                    local_cfg.unital = true;
                    coeffs = local_factor_coeffs(model, p, m_max, local_cfg);
                }
                local[idx] = std::move(coeffs);
            }
        } catch (...) {
            std::lock_guard lock(err_mu);
            if (!err) err = std::current_exception();
        }
    };
    const int workers = std::max(1, cfg.workers);
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (err) std::rethrow_exception(err);

    std::map<long long, size_t> prime_index;
    for (size_t i = 0; i < primes.size(); ++i) {
        prime_index[primes[i]] = i;
        if (excluded[i]) {
            profile.excluded_primes.push_back(primes[i]);
            BigInt pw = primes[i];
            int m = 1;
            while (pw <= B) {
                profile.gap_keys.emplace_back(primes[i], m);
                pw *= primes[i];
                ++m;
            }
        }
    }

    // smallest-prime-factor sieve, then multiplicative assembly
    std::vector<long long> spf(static_cast<size_t>(B) + 1, 0);
    for (long long p : primes)
        for (long long j = p; j <= B; j += p)
            if (spf[static_cast<size_t>(j)] == 0) spf[static_cast<size_t>(j)] = p;

    profile.f.assign(static_cast<size_t>(B) + 1, 0);
    profile.f[1] = 1;
    for (long long k = 2; k <= B; ++k) {
        long long p = spf[static_cast<size_t>(k)];
        long long rest = k;
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        size_t pi = prime_index.at(p);
        BigInt a = excluded[pi] ? BigInt(0)
                                : local[pi][static_cast<size_t>(e)];
        profile.f[static_cast<size_t>(k)] = a * profile.f[static_cast<size_t>(rest)];
    }

    profile.N.assign(static_cast<size_t>(B) + 1, 0);
    for (long long k = 1; k <= B; ++k)
        profile.N[static_cast<size_t>(k)] = profile.N[static_cast<size_t>(k - 1)] + profile.f[static_cast<size_t>(k)];
    return profile;
}

AsymptoticFit fit_log_power(const SeriesProfile& profile, double alpha, int beta) {
    if (beta < 1) throw InputError("beta must be >= 1");
    if (profile.B < 100) throw InputError("insufficient samples: need B >= 100");
    AsymptoticFit fit;
    fit.alpha = alpha;
    fit.beta = beta;
    fit.B_hi = profile.B;
    fit.B_lo = std::max<long long>(10, profile.B / 10);

    // log-spaced sample points across the top decade
    std::vector<long long> samples;
    const int target = 48;
    double lo = std::log(static_cast<double>(fit.B_lo)), hi = std::log(static_cast<double>(fit.B_hi));
    for (int i = 0; i < target; ++i) {
        long long b = static_cast<long long>(std::llround(std::exp(lo + (hi - lo) * i / (target - 1))));
        b = std::clamp(b, fit.B_lo, fit.B_hi);
        if (samples.empty() || samples.back() != b) samples.push_back(b);
    }
    if (samples.size() < 4) throw InputError("insufficient samples in fit window");

    double sxx = 0, sxy = 0;
    for (long long b : samples) {
        double x = std::pow(static_cast<double>(b), alpha) * std::pow(std::log(static_cast<double>(b)), beta - 1);
        double y = profile.N[static_cast<size_t>(b)].convert_to<double>();
        sxx += x * x;
        sxy += x * y;
    }
    if (sxx == 0) throw InputError("degenerate fit window");
    fit.C = sxy / sxx;
    double worst = 0;
    for (long long b : samples) {
        double x = std::pow(static_cast<double>(b), alpha) * std::pow(std::log(static_cast<double>(b)), beta - 1);
        double y = profile.N[static_cast<size_t>(b)].convert_to<double>();
        if (fit.C * x != 0) worst = std::max(worst, std::abs(y - fit.C * x) / std::abs(fit.C * x));
    }
    fit.residual = worst;
    fit.samples = static_cast<int>(samples.size());
    return fit;
}

std::string series_csv(const SeriesProfile& profile) {
    std::ostringstream os;
    os << "k,f,N\n";
    for (long long k = 1; k <= profile.B; ++k)
        os << k << "," << profile.f[static_cast<size_t>(k)].str() << ","
           << profile.N[static_cast<size_t>(k)].str() << "\n";
    return os.str();
}

std::string fit_json(const AsymptoticFit& fit) {
    nlohmann::json j;
    j["alpha"] = fit.alpha;
    j["beta"] = fit.beta;
    j["C"] = fit.C;
    j["residual"] = fit.residual;
    j["B_range"] = {fit.B_lo, fit.B_hi};
    j["samples"] = fit.samples;
    return j.dump();
}

}  // namespace subzeta
