#include "lrc/json_io.hpp"

#include <stdexcept>

namespace lrc {

namespace {

bool is_nonneg_int(const json& j) {
    return j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0);
}

std::uint32_t take_prime(const json& j, const char* key) {
    if (!j.contains(key) || !is_nonneg_int(j[key]))
        throw std::invalid_argument(std::string("descriptor: missing or bad \"") + key + "\"");
    std::uint64_t q = j[key].get<std::uint64_t>();
    if (q < 2 || q > 0x80000000ull || !is_prime(q))
        throw std::invalid_argument("descriptor: q must be a prime <= 2^31");
    return static_cast<std::uint32_t>(q);
}

std::size_t take_count(const json& j, const char* key) {
    if (!j.contains(key) || !is_nonneg_int(j[key]))
        throw std::invalid_argument(std::string("descriptor: missing or bad \"") + key + "\"");
    return j[key].get<std::size_t>();
}

std::vector<std::vector<std::uint32_t>> take_rows(const json& j, std::size_t n, std::uint32_t q) {
    if (!j.is_array()) throw std::invalid_argument("descriptor: H must be an array of rows");
    std::vector<std::vector<std::uint32_t>> rows;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != n)
            throw std::invalid_argument("descriptor: every H row must have n entries");
        std::vector<std::uint32_t> r;
        r.reserve(n);
        for (const auto& e : row) {
            if (!is_nonneg_int(e) || e.get<std::uint64_t>() >= q)
                throw std::invalid_argument("descriptor: H entries must be integers in [0, q)");
            r.push_back(e.get<std::uint32_t>());
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    return json{{"version", 1}, {"q", m.spec().q()}, {"cols", m.cols()}, {"rows", rows}};
}

Matrix matrix_from_json(const json& j) {
    FieldSpec spec(take_prime(j, "q"));
    std::size_t cols = take_count(j, "cols");
    return Matrix::from_rows(spec, cols, take_rows(j.at("rows"), cols, spec.q()));
}

CodeDescriptor descriptor_from_output(const ConstructionOutput& out) {
    CodeDescriptor d;
    d.q = out.code.spec().q();
    d.n = out.code.length();
    for (std::size_t r = 0; r < out.code.parity_check().rows(); ++r)
        d.parity_rows.push_back(out.code.parity_check().row(r));
    d.profile_parts = out.profile.parts();

    DescriptorMetadata meta;
    meta.construction = out.params;
    meta.groups = out.groups;
    meta.achieved_d = out.achieved_d;
    if (out.bound.applicable) meta.bound_d = out.bound.value;
    meta.bound_formula = formula_name(out.bound.formula);
    meta.optimal = out.optimal;
    d.metadata = std::move(meta);
    return d;
}

json descriptor_to_json(const CodeDescriptor& d) {
    json j;
    j["version"] = 1;
    j["q"] = d.q;
    j["n"] = d.n;
    j["H"] = d.parity_rows;
    if (d.profile_parts) {
        json parts = json::array();
        for (const auto& p : *d.profile_parts)
            parts.push_back(json{{"indices", p.indices}, {"r", p.r}, {"delta", p.delta}});
        j["profile"] = parts;
    }
    if (d.metadata) {
        json meta;
        if (d.metadata->construction) {
            const ConstructionParams& cp = *d.metadata->construction;
            json parts = json::array();
            for (const auto& p : cp.parts) parts.push_back(json{{"n", p.n}, {"r", p.r}});
            meta["construction"] =
                json{{"parts", parts}, {"k", cp.k}, {"delta", cp.delta}, {"q", cp.q.value_or(0)}};
        }
        if (!d.metadata->groups.empty()) meta["groups"] = d.metadata->groups;
        if (d.metadata->achieved_d) meta["achieved_d"] = *d.metadata->achieved_d;
        if (d.metadata->bound_d) meta["bound_d"] = *d.metadata->bound_d;
        if (!d.metadata->bound_formula.empty()) meta["bound_formula"] = d.metadata->bound_formula;
        if (d.metadata->optimal) meta["optimal"] = *d.metadata->optimal;
        j["metadata"] = meta;
    }
    return j;
}

CodeDescriptor descriptor_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("descriptor: expected a JSON object");
    if (j.contains("version") && (!is_nonneg_int(j["version"]) || j["version"] != 1))
        throw std::invalid_argument("descriptor: unsupported version");
    CodeDescriptor d;
    d.q = take_prime(j, "q");
    d.n = take_count(j, "n");
    if (d.n < 1) throw std::invalid_argument("descriptor: n must be >= 1");
    if (!j.contains("H")) throw std::invalid_argument("descriptor: missing \"H\"");
    d.parity_rows = take_rows(j["H"], d.n, d.q);

    if (j.contains("profile")) {
        if (!j["profile"].is_array())
            throw std::invalid_argument("descriptor: profile must be an array");
        std::vector<LocalityPart> parts;
        for (const auto& pj : j["profile"]) {
            LocalityPart p;
            if (!pj.contains("indices") || !pj["indices"].is_array())
                throw std::invalid_argument("descriptor: profile part needs an indices array");
            for (const auto& e : pj["indices"]) {
                if (!e.is_number_unsigned())
                    throw std::invalid_argument("descriptor: profile indices must be integers");
                p.indices.push_back(e.get<std::size_t>());
            }
            p.r = take_count(pj, "r");
            p.delta = take_count(pj, "delta");
            parts.push_back(std::move(p));
        }
        d.profile_parts = std::move(parts);
    }

    if (j.contains("metadata") && j["metadata"].is_object()) {
        const json& mj = j["metadata"];
        DescriptorMetadata meta;
        if (mj.contains("groups") && mj["groups"].is_array()) {
            for (const auto& gj : mj["groups"]) {
                std::vector<std::size_t> g;
                for (const auto& e : gj) g.push_back(e.get<std::size_t>());
                meta.groups.push_back(std::move(g));
            }
        }
        if (mj.contains("construction") && mj["construction"].is_object()) {
            const json& cj = mj["construction"];
            ConstructionParams cp;
            if (cj.contains("parts"))
                for (const auto& pj : cj["parts"])
                    cp.parts.push_back({take_count(pj, "n"), take_count(pj, "r")});
            cp.k = take_count(cj, "k");
            cp.delta = take_count(cj, "delta");
            if (cj.contains("q") && cj["q"].get<std::uint64_t>() != 0)
                cp.q = cj["q"].get<std::uint32_t>();
            meta.construction = std::move(cp);
        }
        if (mj.contains("achieved_d")) meta.achieved_d = mj["achieved_d"].get<std::size_t>();
        if (mj.contains("bound_d")) meta.bound_d = mj["bound_d"].get<long long>();
        if (mj.contains("bound_formula")) meta.bound_formula = mj["bound_formula"].get<std::string>();
        if (mj.contains("optimal")) meta.optimal = mj["optimal"].get<bool>();
        d.metadata = std::move(meta);
    }
    return d;
}

LinearCode code_from_descriptor(const CodeDescriptor& d) {
    FieldSpec spec(d.q);
    Matrix h = Matrix::from_rows(spec, d.n, d.parity_rows);
    return LinearCode::from_parity_check(std::move(h));
}

LocalityProfile profile_from_descriptor(const CodeDescriptor& d) {
    if (!d.profile_parts)
        throw std::invalid_argument("descriptor has no locality profile");
    return LocalityProfile(d.n, *d.profile_parts);
}

json certificate_to_json(const LocalityCertificate& cert) {
    json j;
    j["version"] = 1;
    j["ok"] = cert.ok;
    if (cert.ok) {
        json witnesses = json::array();
        for (std::size_t i = 0; i < cert.witness.size(); ++i)
            witnesses.push_back(json{{"coordinate", i}, {"group", cert.witness[i]}});
        j["witness"] = witnesses;
    } else {
        j["violating_coordinate"] = cert.violating_coordinate;
        j["reason"] = cert.reason;
    }
    return j;
}

json phi_to_json(const PhiTable& table, std::size_t n, std::size_t k) {
    json rows = json::array();
    for (std::size_t x = 0; x < table.values.size(); ++x)
        rows.push_back(json{{"x", x}, {"phi", table.values[x]}});
    return json{{"version", 1},
                {"phi", rows},
                {"rho", table.rho},
                {"rho_exact", table.rho_exact},
                {"distance_bound", n - k + 1 - table.rho}};
}

json report_to_json(const SimReport& report) {
    json parts = json::array();
    for (std::size_t p = 0; p < report.parts.size(); ++p) {
        const SimPartStats& ps = report.parts[p];
        parts.push_back(json{{"part", p + 1},
                             {"r", ps.r},
                             {"delta", ps.delta},
                             {"symbols_erased", ps.symbols_erased},
                             {"symbols_repaired_locally", ps.symbols_repaired_locally},
                             {"helpers_read_total", ps.helpers_read_total}});
    }
    return json{{"version", 1},
                {"trials", report.trials},
                {"failures_per_trial", report.failures_per_trial},
                {"seed", report.seed},
                {"parts", parts},
                {"trials_local_only", report.trials_local_only},
                {"trials_global_fallback", report.trials_global_fallback},
                {"trials_unrecoverable", report.trials_unrecoverable}};
}

}  // namespace lrc
