// acceptance.cpp -- end-to-end acceptance suite.
//
// Runs one numbered check per release criterion and prints a PASS/FAIL line
// for each; the process exit code is the number of failed criteria.  The
// expected values are cross-checked against the independent oracles in
// oracles.hpp, not against the library's own search paths.

#include "fixtures.hpp"
#include "lrc/detail/combinations.hpp"
#include "lrc/json_io.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <unistd.h>

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;
using lrc::json;

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

fs::path scratch_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("lrc-acceptance-" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

struct Run {
    int exit_code;
    std::string out;
};

Run run_cli(const std::string& args) {
    static int counter = 0;
    fs::path out_file = scratch_dir() / ("out" + std::to_string(counter++) + ".txt");
    std::string cmd = std::string(LRC_CLI_BIN) + " " + args + " > " + out_file.string() +
                      " 2> /dev/null";
    int status = std::system(cmd.c_str());
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

lrc::CodeDescriptor build_via_cli(const std::string& args, const std::string& name, Check& c) {
    fs::path file = scratch_dir() / name;
    Run r = run_cli("construct " + args + " --out " + file.string());
    c.require(r.exit_code == 0, "construct exited " + std::to_string(r.exit_code));
    std::ifstream in(file);
    return lrc::descriptor_from_json(json::parse(in));
}

// ---- criterion 1: the [14,8,4] two-locality reproduction -------------------

Check criterion1() {
    Check c;
    lrc::CodeDescriptor d = build_via_cli("--parts 6:2,8:3 --k 8 --q 17", "c1.json", c);
    if (!c.ok) return c;
    lrc::LinearCode code = lrc::code_from_descriptor(d);
    c.require(code.dimension() == 8, "dimension != 8");

    auto h = fixtures::to_ll(code.parity_check());
    std::size_t oracle_d = oracle::min_dependent_columns(h, 14, 17);
    c.require(oracle_d == 4, "oracle distance " + std::to_string(oracle_d) + " != 4");
    c.require(lrc::min_distance(code) == 4, "library distance != 4");

    std::vector<lrc::PartR> parts{{6, 2}, {8, 3}};
    lrc::BoundResult bound = lrc::bound_ml(14, 8, parts);
    c.require(bound.applicable && bound.value == 4, "multi-local bound != 4");
    c.require(d.metadata && d.metadata->optimal == true, "descriptor not marked optimal");
    c.require(d.metadata->bound_d == 4, "descriptor bound != 4");
    return c;
}

// ---- criterion 2: the [18,8,5] delta = 3 reproduction -----------------------

Check criterion2() {
    Check c;
    lrc::CodeDescriptor d = build_via_cli("--parts 8:2,10:3 --k 8 --delta 3 --q 19", "c2.json", c);
    if (!c.ok) return c;
    lrc::LinearCode code = lrc::code_from_descriptor(d);
    c.require(code.length() == 18 && code.dimension() == 8, "not an [18,8] code");

    auto h = fixtures::to_ll(code.parity_check());
    std::size_t oracle_d = oracle::min_dependent_columns(h, 18, 19);
    c.require(oracle_d == 5, "oracle distance " + std::to_string(oracle_d) + " != 5");
    c.require(lrc::min_distance(code) == 5, "library distance != 5");

    std::vector<lrc::PartR> parts{{8, 2}, {10, 3}};
    lrc::BoundResult bound = lrc::bound_equal_delta(18, 8, parts, 3);
    c.require(bound.applicable && bound.value == 5, "equal-delta bound != 5");
    c.require(d.metadata && d.metadata->optimal == true, "descriptor not marked optimal");
    return c;
}

// ---- criterion 3: locality certificates and exhaustive repair sweeps -------

Check check_repair_sweeps(const lrc::CodeDescriptor& d, Check& c) {
    lrc::LinearCode code = lrc::code_from_descriptor(d);
    lrc::LocalityProfile profile = lrc::profile_from_descriptor(d);
    const auto& groups = d.metadata->groups;
    lrc::LocalityCertificate cert = lrc::verify_locality(code, profile, groups);
    c.require(cert.ok, "verify_locality failed: " + cert.reason);
    if (!cert.ok) return c;

    std::vector<std::uint32_t> msg(code.dimension());
    for (std::size_t i = 0; i < msg.size(); ++i)
        msg[i] = static_cast<std::uint32_t>((3 * i + 1) % code.spec().q());
    const std::vector<std::uint32_t> word = code.encode(msg);

    // (a) every pattern of <= delta - 1 failures inside one group repairs
    // locally, each symbol reading at most r_i + delta_i - 2 helpers
    for (const auto& group : groups) {
        const lrc::LocalityPart& part = profile.parts()[profile.part_of(group[0])];
        for (std::size_t w = 1; w + 1 <= part.delta; ++w) {
            lrc::detail::for_each_combination(
                group.size(), w, [&](const std::vector<std::size_t>& pick) {
                    lrc::ErasurePattern pattern;
                    for (std::size_t pos : pick) pattern.erased.push_back(group[pos]);
                    std::vector<std::uint32_t> damaged = word;
                    for (std::size_t e : pattern.erased) damaged[e] = 0;
                    lrc::RepairResult rr = lrc::repair(code, damaged, profile, pattern, &cert);
                    c.require(rr.ok && rr.word == word, "in-group pattern not repaired");
                    for (const auto& er : rr.erasures) {
                        c.require(er.phase == lrc::RepairPhase::local,
                                  "in-group erasure escalated to the global phase");
                        c.require(er.helpers_read <= part.r + part.delta - 2,
                                  "local repair read " + std::to_string(er.helpers_read) +
                                      " helpers, cap " + std::to_string(part.r + part.delta - 2));
                        if (w == 1)
                            c.require(er.helpers_read <= part.r,
                                      "single erasure read more than r helpers");
                    }
                    return !c.ok;
                });
        }
    }

    // (b) every pattern of <= d - 1 failures recovers
    const std::size_t dist = lrc::min_distance(code);
    std::size_t patterns = 0;
    for (std::size_t w = 1; w <= dist - 1 && c.ok; ++w) {
        lrc::detail::for_each_combination(
            code.length(), w, [&](const std::vector<std::size_t>& idx) {
                lrc::ErasurePattern pattern{idx};
                std::vector<std::uint32_t> damaged = word;
                for (std::size_t e : idx) damaged[e] = 0;
                lrc::RepairResult rr = lrc::repair(code, damaged, profile, pattern, &cert);
                ++patterns;
                c.require(rr.ok && rr.word == word,
                          "pattern of " + std::to_string(w) + " failures not recovered");
                return !c.ok;
            });
    }
    c.detail += " " + std::to_string(patterns) + " global patterns;";

    // (c) at least one pattern of d failures is unrecoverable
    std::vector<std::size_t> witness;
    oracle::min_dependent_columns(fixtures::to_ll(code.parity_check()), code.length(),
                                  code.spec().q(), &witness);
    lrc::ErasurePattern pattern{witness};
    std::vector<std::uint32_t> damaged = word;
    for (std::size_t e : witness) damaged[e] = 0;
    lrc::RepairResult rr = lrc::repair(code, damaged, profile, pattern, &cert);
    c.require(!rr.ok, "a dependent d-failure pattern was claimed repaired");
    return c;
}

Check criterion3() {
    Check c;
    lrc::CodeDescriptor d4 = build_via_cli("--parts 6:2,8:3 --k 8 --q 17", "c3a.json", c);
    lrc::CodeDescriptor d5 =
        build_via_cli("--parts 8:2,10:3 --k 8 --delta 3 --q 19", "c3b.json", c);
    if (!c.ok) return c;
    check_repair_sweeps(d4, c);
    check_repair_sweeps(d5, c);
    return c;
}

// ---- criterion 4: bound reduction identities over parameter sweeps ---------

Check criterion4() {
    Check c;

    // (r, delta = 2) against r-local
    std::size_t count_a = 0;
    for (long long n = 3; n <= 24; ++n)
        for (long long k = 1; k < n; ++k)
            for (long long r = 1; r <= k; ++r) {
                lrc::BoundResult a = lrc::bound_r_delta(n, k, r, 2);
                lrc::BoundResult b = lrc::bound_r_local(n, k, r);
                c.require(a.applicable == b.applicable, "applicability differs (r-delta vs r-local)");
                if (a.applicable && b.applicable) {
                    c.require(a.value == b.value, "r-delta(2) != r-local");
                    ++count_a;
                }
            }
    c.require(count_a >= 500, "sweep (a) too small");

    std::size_t count_two = 0, count_multi2 = 0, count_s2 = 0, count_eq = 0;
    for (long long n1 = 3; n1 <= 10; ++n1)
        for (long long r1 = 1; r1 <= 4; ++r1)
            for (long long n2 = 3; n2 <= 10; ++n2)
                for (long long r2 = r1; r2 <= 5; ++r2)
                    for (long long d1 = 2; d1 <= 3; ++d1)
                        for (long long d2 = 2; d2 <= d1; ++d2) {
                            long long n = n1 + n2;
                            for (long long k = 2; k < n; ++k) {
                                lrc::PartRD p1{n1, r1, d1}, p2{n2, r2, d2};
                                lrc::BoundResult two = lrc::bound_two_locality(n, k, p1, p2);
                                std::vector<lrc::PartRD> rd{p1, p2};
                                lrc::BoundResult multi = lrc::bound_multi(n, k, rd);

                                // two parts against the general bound
                                bool two_main = two.applicable &&
                                                two.formula == lrc::BoundFormula::two_locality;
                                if (two_main && multi.applicable) {
                                    c.require(two.value == multi.value, "two-locality != multi");
                                    ++count_s2;
                                }

                                if (d1 == 2 && d2 == 2 && r2 > r1) {
                                    std::vector<lrc::PartR> pr{{n1, r1}, {n2, r2}};
                                    lrc::BoundResult ml = lrc::bound_ml(n, k, pr);
                                    if (two_main && ml.applicable) {
                                        c.require(two.value == ml.value,
                                                  "two-locality(2,2) != multi-local");
                                        ++count_two;
                                    }
                                    if (multi.applicable && ml.applicable) {
                                        c.require(multi.value == ml.value,
                                                  "multi(all 2) != multi-local");
                                        ++count_multi2;
                                    }
                                }
                                if (d1 == d2) {
                                    std::vector<lrc::PartR> pr{{n1, r1}, {n2, r2}};
                                    lrc::BoundResult eq = lrc::bound_equal_delta(n, k, pr, d1);
                                    c.require(eq.applicable == multi.applicable,
                                              "equal-delta applicability differs");
                                    if (eq.applicable && multi.applicable) {
                                        c.require(eq.value == multi.value, "equal-delta != multi");
                                        if (d1 == 2 && r2 > r1) ++count_eq;
                                    }
                                }
                            }
                        }
    c.require(count_two >= 500, "two-locality sweep too small: " + std::to_string(count_two));
    c.require(count_multi2 >= 500, "multi(delta=2) sweep too small: " + std::to_string(count_multi2));
    c.require(count_s2 >= 500, "s=2 sweep too small: " + std::to_string(count_s2));
    c.require(count_eq >= 500, "equal-delta sweep too small: " + std::to_string(count_eq));
    c.detail += " sweeps: " + std::to_string(count_a) + "/" + std::to_string(count_two) + "/" +
                std::to_string(count_multi2) + "/" + std::to_string(count_s2) + "/" +
                std::to_string(count_eq) + ";";
    return c;
}

// ---- criterion 5: regenerating sets against dual-support enumeration -------

Check criterion5() {
    Check c;
    lrc::SplitMix64 rng(20250810);
    std::size_t instances = 0;
    struct Shape {
        std::uint32_t q;
        std::size_t n, rows;
    };
    std::vector<Shape> shapes = {
        {2, 8, 3}, {2, 9, 4}, {2, 10, 4}, {2, 12, 5}, {3, 8, 3},
        {3, 9, 4}, {3, 10, 4}, {5, 8, 3},  {5, 9, 3},  {7, 8, 3},
    };
    for (const Shape& s : shapes) {
        for (int rep = 0; rep < 3; ++rep) {
            lrc::LinearCode code = fixtures::random_code(s.q, s.n, s.rows, rng);
            double dual_words = 1;
            for (std::size_t i = 0; i < code.length() - code.dimension(); ++i)
                dual_words *= s.q;
            if (dual_words > 65536.0) continue;

            auto circuits = lrc::enumerate_regenerating_sets(code, code.length());
            std::set<std::vector<std::size_t>> found;
            for (const auto& circ : circuits) found.insert(circ.coordinates);
            auto expected = oracle::minimal_support_rowspace(
                fixtures::to_ll(code.parity_check()), code.length(), s.q);
            c.require(found == expected, "circuits differ from minimal dual supports");

            lrc::PhiTable t = lrc::phi(code, code.length() - code.dimension());
            for (std::size_t x = 0; x + 1 < t.values.size(); ++x)
                c.require(t.values[x + 1] >= t.values[x] + 1, "Phi lost monotonicity");

            std::size_t bound = lrc::singleton_rho_bound(code);
            c.require(bound >= lrc::min_distance(code), "rho bound below the true distance");
            ++instances;
        }
    }
    c.require(instances >= 20, "only " + std::to_string(instances) + " instances");
    c.detail += " " + std::to_string(instances) + " random codes;";
    return c;
}

// ---- criterion 6: exact Phi against the piecewise locality bound -----------

Check criterion6() {
    Check c;
    lrc::CodeDescriptor d4 = build_via_cli("--parts 6:2,8:3 --k 8 --q 17", "c6a.json", c);
    lrc::CodeDescriptor d5 =
        build_via_cli("--parts 8:2,10:3 --k 8 --delta 3 --q 19", "c6b.json", c);
    if (!c.ok) return c;

    {
        lrc::LinearCode code = lrc::code_from_descriptor(d4);
        lrc::LocalityProfile profile = lrc::profile_from_descriptor(d4);
        lrc::PhiBoundReport rep = lrc::check_phi_locality_bounds(code, profile, 6);
        c.require(rep.ok, "piecewise bound violated on the [14,8] code");
        c.require(rep.rows.size() >= 4, "[14,8] scan too short");
    }
    {
        lrc::LinearCode code = lrc::code_from_descriptor(d5);
        lrc::LocalityProfile profile = lrc::profile_from_descriptor(d5);
        lrc::PhiBoundReport rep = lrc::check_phi_locality_bounds(code, profile, 6);
        c.require(rep.ok, "piecewise bound violated on the [18,8] code");
        c.require(rep.rows.size() >= 6, "[18,8] scan too short");
    }
    return c;
}

// ---- criterion 7: distance search against codeword enumeration -------------

Check criterion7() {
    Check c;
    std::vector<lrc::LinearCode> corpus;
    corpus.push_back(fixtures::repetition3());
    corpus.push_back(fixtures::pair_parity_code());
    corpus.push_back(fixtures::single_parity_code(3, 2));
    corpus.push_back(fixtures::single_parity_code(6, 5));
    corpus.push_back(fixtures::rs_code(6, 3, 7));
    corpus.push_back(fixtures::rs_code(8, 4, 11));
    lrc::SplitMix64 rng(424242);
    for (int it = 0; it < 12; ++it) corpus.push_back(fixtures::random_code(2, 8 + it % 5, 4, rng));
    for (int it = 0; it < 6; ++it) corpus.push_back(fixtures::random_code(3, 7 + it % 4, 3, rng));

    // the constructed codes themselves exceed q^k enumeration, but their
    // punctured local codes are small enough
    lrc::ConstructionOutput th4 = lrc::build_ml_lrc({{{6, 2}, {8, 3}}, 8, 2, 17});
    for (const auto& group : th4.groups) corpus.push_back(lrc::puncture_to(th4.code, group));
    lrc::ConstructionOutput th5 = lrc::build_multi_delta_lrc({{{8, 2}, {10, 3}}, 8, 3, 19});
    for (const auto& group : th5.groups) corpus.push_back(lrc::puncture_to(th5.code, group));

    std::size_t checked = 0;
    for (const lrc::LinearCode& code : corpus) {
        double words = 1;
        bool feasible = true;
        for (std::size_t i = 0; i < code.dimension(); ++i) {
            words *= code.spec().q();
            if (words > 65536.0) feasible = false;
        }
        if (!feasible) continue;
        std::size_t brute =
            oracle::min_weight_bruteforce(fixtures::to_ll(code.generator()), code.spec().q());
        c.require(lrc::min_distance(code) == brute, "distance mismatch against brute force");
        ++checked;
    }
    c.require(checked >= 20, "corpus too small: " + std::to_string(checked));
    c.detail += " " + std::to_string(checked) + " codes;";
    return c;
}

// ---- criterion 8: simulation determinism and helper counts -----------------

Check criterion8() {
    Check c;
    fs::path file = scratch_dir() / "c8.json";
    Run built = run_cli("construct --parts 6:2,8:3 --k 8 --q 17 --out " + file.string());
    c.require(built.exit_code == 0, "construct failed");
    if (!c.ok) return c;

    std::string args =
        "simulate --code " + file.string() + " --trials 10000 --failures 1 --seed 42";
    Run a = run_cli(args);
    Run b = run_cli(args);
    c.require(a.exit_code == 0, "simulate failed");
    c.require(a.out == b.out, "two identical runs differ");
    Run aj = run_cli(args + " --json");
    Run bj = run_cli(args + " --json");
    c.require(aj.out == bj.out, "two identical JSON runs differ");

    json rep = json::parse(aj.out);
    c.require(rep["trials_local_only"] == 10000, "not every single failure repaired locally");
    c.require(rep["trials_unrecoverable"] == 0, "unrecoverable singles");
    const auto& parts = rep["parts"];
    c.require(parts.size() == 2, "expected two parts");
    std::size_t e0 = parts[0]["symbols_erased"], l0 = parts[0]["symbols_repaired_locally"];
    std::size_t h0 = parts[0]["helpers_read_total"];
    std::size_t e1 = parts[1]["symbols_erased"], l1 = parts[1]["symbols_repaired_locally"];
    std::size_t h1 = parts[1]["helpers_read_total"];
    c.require(e0 == l0 && e1 == l1, "local success below 1.0");
    c.require(e0 + e1 == 10000, "erasure accounting off");
    c.require(h0 == 2 * l0, "part-1 mean helpers != 2");
    c.require(h1 == 3 * l1, "part-2 mean helpers != 3");
    return c;
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        const char* name;
        double limit_seconds;
        std::function<Check()> fn;
    };
    std::vector<Criterion> criteria = {
        {1, "two-locality [14,8,4] reproduction, dim and exact distance", 5.0, criterion1},
        {2, "delta=3 [18,8,5] reproduction with the equal-delta bound", 30.0, criterion2},
        {3, "locality certificates and exhaustive repair sweeps", 60.0, criterion3},
        {4, "bound reduction identities over parameter sweeps", 30.0, criterion4},
        {5, "circuit enumeration against dual-support oracles", 60.0, criterion5},
        {6, "exact Phi under the piecewise locality bound", 60.0, criterion6},
        {7, "distance search against codeword enumeration", 60.0, criterion7},
        {8, "simulation determinism, helper counts 2 and 3", 60.0, criterion8},
    };

    int failures = 0;
    for (const auto& crit : criteria) {
        auto start = Clock::now();
        Check result;
        try {
            result = crit.fn();
        } catch (const std::exception& e) {
            result.ok = false;
            result.detail = std::string("exception: ") + e.what();
        }
        double seconds = std::chrono::duration<double>(Clock::now() - start).count();
        if (seconds > crit.limit_seconds) {
            result.ok = false;
            result.detail += " exceeded " + std::to_string(crit.limit_seconds) + "s budget";
        }
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2fs", seconds);
        std::cout << (result.ok ? "PASS" : "FAIL") << " criterion " << crit.number << ": "
                  << crit.name << (result.detail.empty() ? "" : " --" + result.detail) << " ["
                  << buf << "]\n";
        if (!result.ok) ++failures;
    }
    return failures;
}
