#include "lrc/sim.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lrc {

SimReport run_simulation(const LinearCode& code, const LocalityProfile& profile,
                         const std::vector<std::vector<std::size_t>>& hint_groups,
                         const SimConfig& config) {
    const std::size_t n = code.length();
    const std::size_t k = code.dimension();
    if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (config.failures_per_trial < 1 || config.failures_per_trial > n)
        throw std::invalid_argument("failures per trial must be in [1, n]");

    LocalityCertificate cert = verify_locality(code, profile, hint_groups);
    if (!cert.ok)
        throw std::invalid_argument("code does not satisfy the claimed locality profile: " +
                                    cert.reason);

    SimReport report;
    report.trials = config.trials;
    report.failures_per_trial = config.failures_per_trial;
    report.seed = config.seed;
    report.parts.resize(profile.parts().size());
    for (std::size_t p = 0; p < profile.parts().size(); ++p) {
        report.parts[p].r = profile.parts()[p].r;
        report.parts[p].delta = profile.parts()[p].delta;
    }

    const std::uint32_t q = code.spec().q();
    std::vector<std::size_t> deck(n);
    for (std::size_t t = 0; t < config.trials; ++t) {
        SplitMix64 rng = SplitMix64::trial_stream(config.seed, t);

        std::vector<std::uint32_t> message(k);
        for (auto& m : message) m = static_cast<std::uint32_t>(rng.below(q));
        std::vector<std::uint32_t> original = code.encode(message);

        // distinct erasures: partial Fisher-Yates over the coordinate deck
        for (std::size_t i = 0; i < n; ++i) deck[i] = i;
        ErasurePattern pattern;
        for (std::size_t i = 0; i < config.failures_per_trial; ++i) {
            std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
            std::swap(deck[i], deck[j]);
            pattern.erased.push_back(deck[i]);
        }
        std::sort(pattern.erased.begin(), pattern.erased.end());

        std::vector<std::uint32_t> received = original;
        for (std::size_t e : pattern.erased) received[e] = 0;
        RepairResult rr = repair(code, std::move(received), profile, pattern, &cert);

        if (!rr.ok) {
            ++report.trials_unrecoverable;
        } else {
            if (rr.word != original)
                throw std::logic_error("repair reported success but the word differs");
            if (rr.used_global)
                ++report.trials_global_fallback;
            else
                ++report.trials_local_only;
        }
        for (const ErasureRepair& er : rr.erasures) {
            SimPartStats& ps = report.parts[profile.part_of(er.index)];
            ++ps.symbols_erased;
            if (er.phase == RepairPhase::local) {
                ++ps.symbols_repaired_locally;
                ps.helpers_read_total += er.helpers_read;
            }
        }
    }
    return report;
}

namespace {

// num/den with six decimals, rounding half away from zero, no floats
std::string fixed_ratio(std::size_t num, std::size_t den) {
    if (den == 0) return "-";
    unsigned long long scaled =
        (static_cast<unsigned long long>(num) * 2000000ull + den) / (2ull * den);
    std::string out = std::to_string(scaled / 1000000ull) + ".";
    std::string frac = std::to_string(scaled % 1000000ull);
    out += std::string(6 - frac.size(), '0') + frac;
    return out;
}

}  // namespace

std::string report_to_text(const SimReport& report) {
    std::ostringstream os;
    os << "trials             " << report.trials << "\n";
    os << "failures_per_trial " << report.failures_per_trial << "\n";
    os << "seed               " << report.seed << "\n";
    os << "\n";
    os << "part    r delta   erased  local_repaired  local_rate  mean_helpers\n";
    for (std::size_t p = 0; p < report.parts.size(); ++p) {
        const SimPartStats& ps = report.parts[p];
        char line[160];
        std::snprintf(line, sizeof line, "%4zu %4zu %5zu %8zu %15zu %11s %13s\n", p + 1, ps.r,
                      ps.delta, ps.symbols_erased, ps.symbols_repaired_locally,
                      fixed_ratio(ps.symbols_repaired_locally, ps.symbols_erased).c_str(),
                      fixed_ratio(ps.helpers_read_total, ps.symbols_repaired_locally).c_str());
        os << line;
    }
    os << "\n";
    os << "local_only_rate      " << fixed_ratio(report.trials_local_only, report.trials) << "\n";
    os << "global_fallback_rate " << fixed_ratio(report.trials_global_fallback, report.trials)
       << "\n";
    os << "unrecoverable_rate   " << fixed_ratio(report.trials_unrecoverable, report.trials)
       << "\n";
    return os.str();
}

}  // namespace lrc
