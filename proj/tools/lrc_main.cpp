// lrc_main.cpp -- the `lrc` command line tool.
//
// Subcommands: construct, bounds, verify, mindist, phi, simulate.  Codes
// travel as the versioned JSON descriptor (see include/lrc/json_io.hpp).
// Exit codes: 0 success / property holds, 1 verification failed,
// 2 usage or input error.

#include "lrc/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using lrc::json;

std::vector<lrc::ConstructionPart> parse_construct_parts(const std::string& text) {
    std::vector<lrc::ConstructionPart> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t n = 0, r = 0;
        char colon = 0;
        std::stringstream ps(item);
        if (!(ps >> n >> colon >> r) || colon != ':' || !ps.eof())
            throw std::invalid_argument("bad part \"" + item + "\": expected n:r");
        parts.push_back({n, r});
    }
    if (parts.empty()) throw std::invalid_argument("no parts given");
    return parts;
}

std::vector<lrc::PartRD> parse_bound_parts(const std::string& text) {
    std::vector<lrc::PartRD> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        long long n = 0, r = 0, d = 0;
        char c1 = 0, c2 = 0;
        std::stringstream ps(item);
        if (!(ps >> n >> c1 >> r >> c2 >> d) || c1 != ':' || c2 != ':' || !ps.eof())
            throw std::invalid_argument("bad part \"" + item + "\": expected n:r:delta");
        parts.push_back({n, r, d});
    }
    if (parts.empty()) throw std::invalid_argument("no parts given");
    return parts;
}

lrc::CodeDescriptor load_descriptor(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j = json::parse(in);  // throws json::parse_error on malformed input
    return lrc::descriptor_from_json(j);
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write " + out_path);
        out << j.dump(2) << "\n";
    }
}

int cmd_construct(const std::string& parts_text, std::size_t k, std::size_t delta,
                  std::uint64_t q, const std::string& out_path) {
    lrc::ConstructionParams params;
    params.parts = parse_construct_parts(parts_text);
    params.k = k;
    params.delta = delta;
    if (q > 0x80000000ull) throw std::invalid_argument("--q must be a prime <= 2^31");
    if (q != 0) params.q = static_cast<std::uint32_t>(q);

    lrc::ValidationReport rep = lrc::validate(params);
    if (!rep.ok) {
        for (const auto& v : rep.violations) std::cerr << "error: " << v << "\n";
        return 2;
    }
    lrc::ConstructionOutput out = lrc::build_multi_delta_lrc(params);
    emit(lrc::descriptor_to_json(lrc::descriptor_from_output(out)), out_path);
    std::cerr << "built [" << out.code.length() << "," << out.code.dimension() << ","
              << out.achieved_d << "] over GF(" << out.code.spec().q() << "); bound "
              << lrc::formula_name(out.bound.formula) << " = "
              << (out.bound.applicable ? std::to_string(out.bound.value) : "n/a") << "; "
              << (out.optimal ? "optimal" : "not optimal") << "\n";
    return 0;
}

struct BoundRow {
    std::string label;
    lrc::BoundResult result;
};

int cmd_bounds(const std::string& code_path, long long n, long long k, long long r,
               long long delta, const std::string& info_profile, const std::string& parts_text,
               bool as_json) {
    std::vector<lrc::PartRD> parts;
    if (!code_path.empty()) {
        lrc::CodeDescriptor d = load_descriptor(code_path);
        lrc::LinearCode code = lrc::code_from_descriptor(d);
        n = static_cast<long long>(code.length());
        k = static_cast<long long>(code.dimension());
        if (d.profile_parts) {
            for (const auto& p : *d.profile_parts)
                parts.push_back({static_cast<long long>(p.indices.size()),
                                 static_cast<long long>(p.r), static_cast<long long>(p.delta)});
        }
    } else if (!parts_text.empty()) {
        parts = parse_bound_parts(parts_text);
    }
    if (n <= 0 || k <= 0)
        throw std::invalid_argument("need --code or both --n and --k");

    std::vector<BoundRow> rows;
    if (r > 0) {
        rows.push_back({"r=" + std::to_string(r), lrc::bound_r_local(n, k, r)});
        if (delta >= 2)
            rows.push_back({"(r, delta)=(" + std::to_string(r) + ", " + std::to_string(delta) + ")",
                            lrc::bound_r_delta(n, k, r, delta)});
    }
    if (!info_profile.empty()) {
        std::vector<long long> ks;
        std::stringstream ss(info_profile);
        std::string item;
        while (std::getline(ss, item, ',')) ks.push_back(std::stoll(item));
        rows.push_back({"info profile", lrc::bound_info_profile(n, k, ks)});
    }
    if (!parts.empty()) {
        bool uniform_delta = true, all_two = true, strict_r = true;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i].delta != parts[0].delta) uniform_delta = false;
            if (parts[i].delta != 2) all_two = false;
            if (i > 0 && parts[i].r <= parts[i - 1].r) strict_r = false;
        }
        if (all_two && strict_r) {
            std::vector<lrc::PartR> pr;
            for (const auto& p : parts) pr.push_back({p.n, p.r});
            rows.push_back({"parts, delta=2", lrc::bound_ml(n, k, pr)});
        }
        if (parts.size() == 2)
            rows.push_back({"two parts", lrc::bound_two_locality(n, k, parts[0], parts[1])});
        if (parts.size() >= 2) rows.push_back({"all parts", lrc::bound_multi(n, k, parts)});
        if (uniform_delta && parts.size() >= 2) {
            std::vector<lrc::PartR> pr;
            for (const auto& p : parts) pr.push_back({p.n, p.r});
            rows.push_back({"common delta=" + std::to_string(parts[0].delta),
                            lrc::bound_equal_delta(n, k, pr, parts[0].delta)});
        }
        const lrc::PartRD& last = parts.back();
        rows.push_back({"as plain (r_s, delta_s) code",
                        lrc::bound_r_delta(n, k, last.r, last.delta)});
        rows.push_back({"as plain r_s-local code", lrc::bound_r_local(n, k, last.r)});
    }
    if (rows.empty())
        throw std::invalid_argument("nothing to compute: pass --r, --info-profile or --parts");

    if (as_json) {
        json out = json::array();
        for (const auto& row : rows)
            out.push_back(json{{"formula", lrc::formula_name(row.result.formula)},
                               {"inputs", row.label},
                               {"applicable", row.result.applicable},
                               {"value", row.result.value},
                               {"reason", row.result.reason}});
        emit(json{{"version", 1}, {"n", n}, {"k", k}, {"bounds", out}}, "");
    } else {
        std::cout << "n = " << n << ", k = " << k << "\n";
        for (const auto& row : rows) {
            std::string v = row.result.applicable ? std::to_string(row.result.value)
                                                  : ("n/a (" + row.result.reason + ")");
            std::printf("%-18s d <= %-28s [%s]\n", lrc::formula_name(row.result.formula),
                        v.c_str(), row.label.c_str());
        }
    }
    return 0;
}

int cmd_verify(const std::string& code_path) {
    lrc::CodeDescriptor d = load_descriptor(code_path);
    lrc::LinearCode code = lrc::code_from_descriptor(d);
    lrc::LocalityProfile profile = lrc::profile_from_descriptor(d);
    std::vector<std::vector<std::size_t>> hints;
    if (d.metadata) hints = d.metadata->groups;
    lrc::LocalityCertificate cert = lrc::verify_locality(code, profile, hints);
    emit(lrc::certificate_to_json(cert), "");
    return cert.ok ? 0 : 1;
}

int cmd_mindist(const std::string& code_path) {
    lrc::CodeDescriptor d = load_descriptor(code_path);
    lrc::LinearCode code = lrc::code_from_descriptor(d);
    std::cout << lrc::min_distance(code) << "\n";
    return 0;
}

int cmd_phi(const std::string& code_path, long long xmax, bool as_json) {
    lrc::CodeDescriptor d = load_descriptor(code_path);
    lrc::LinearCode code = lrc::code_from_descriptor(d);
    const std::size_t dual_dim = code.length() - code.dimension();
    std::size_t x_top = xmax < 0 ? dual_dim : static_cast<std::size_t>(xmax);
    lrc::PhiTable table = lrc::phi(code, x_top);
    if (as_json) {
        emit(lrc::phi_to_json(table, code.length(), code.dimension()), "");
    } else {
        std::cout << "x   phi\n";
        for (std::size_t x = 0; x < table.values.size(); ++x)
            std::printf("%-3zu %zu\n", x, table.values[x]);
        std::cout << "rho            " << table.rho << (table.rho_exact ? "" : " (lower bound)")
                  << "\n";
        std::cout << "distance_bound " << code.length() - code.dimension() + 1 - table.rho << "\n";
    }
    return 0;
}

int cmd_simulate(const std::string& code_path, std::size_t trials, std::size_t failures,
                 std::uint64_t seed, bool as_json) {
    lrc::CodeDescriptor d = load_descriptor(code_path);
    lrc::LinearCode code = lrc::code_from_descriptor(d);
    lrc::LocalityProfile profile = lrc::profile_from_descriptor(d);
    std::vector<std::vector<std::size_t>> hints;
    if (d.metadata) hints = d.metadata->groups;
    lrc::SimConfig cfg{trials, failures, seed};
    lrc::SimReport report = lrc::run_simulation(code, profile, hints, cfg);
    if (as_json)
        emit(lrc::report_to_json(report), "");
    else
        std::cout << lrc::report_to_text(report);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"locally repairable codes: construction, bounds, verification, repair simulation"};
    app.require_subcommand(1);

    std::string parts_text, out_path, code_path, info_profile;
    std::size_t k = 0, delta = 2, trials = 1000, failures = 1;
    std::uint64_t q = 0, seed = 0;
    long long bn = 0, bk = 0, br = 0, bdelta = 0, xmax = -1;
    bool as_json = false;

    CLI::App* construct = app.add_subcommand("construct", "build an optimal code by parity splitting");
    construct->add_option("--parts", parts_text, "comma list of n:r per part")->required();
    construct->add_option("--k", k, "code dimension")->required();
    construct->add_option("--delta", delta, "group failure tolerance (>= 2)");
    construct->add_option("--q", q, "field size (default: smallest prime > n)");
    construct->add_option("--out", out_path, "write the descriptor here instead of stdout");

    CLI::App* bounds = app.add_subcommand("bounds", "distance upper bounds for given parameters");
    bounds->add_option("--code", code_path, "descriptor file (supplies n, k, parts)");
    bounds->add_option("--n", bn, "code length");
    bounds->add_option("--k", bk, "code dimension");
    bounds->add_option("--r", br, "single locality");
    bounds->add_option("--delta", bdelta, "single group tolerance");
    bounds->add_option("--info-profile", info_profile, "comma list k_1,...,k_r");
    bounds->add_option("--parts", parts_text, "comma list of n:r:delta per part");
    bounds->add_flag("--json", as_json, "JSON output");

    CLI::App* verify = app.add_subcommand("verify", "check the locality profile of a descriptor");
    verify->add_option("--code", code_path, "descriptor file")->required();

    CLI::App* mindist = app.add_subcommand("mindist", "exact minimum distance of a descriptor");
    mindist->add_option("--code", code_path, "descriptor file")->required();

    CLI::App* phi = app.add_subcommand("phi", "regenerating-set Phi table and distance bound");
    phi->add_option("--code", code_path, "descriptor file")->required();
    phi->add_option("--xmax", xmax, "largest x (default n - k)");
    phi->add_flag("--json", as_json, "JSON output");

    CLI::App* simulate = app.add_subcommand("simulate", "Monte-Carlo erasure and repair");
    simulate->add_option("--code", code_path, "descriptor file")->required();
    simulate->add_option("--trials", trials, "number of trials (>= 1)");
    simulate->add_option("--failures", failures, "erasures per trial");
    simulate->add_option("--seed", seed, "RNG seed");
    simulate->add_flag("--json", as_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (construct->parsed()) return cmd_construct(parts_text, k, delta, q, out_path);
        if (bounds->parsed())
            return cmd_bounds(code_path, bn, bk, br, bdelta, info_profile, parts_text, as_json);
        if (verify->parsed()) return cmd_verify(code_path);
        if (mindist->parsed()) return cmd_mindist(code_path);
        if (phi->parsed()) return cmd_phi(code_path, xmax, as_json);
        if (simulate->parsed()) return cmd_simulate(code_path, trials, failures, seed, as_json);
    } catch (const lrc::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
