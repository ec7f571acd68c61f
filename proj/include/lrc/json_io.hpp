// json_io.hpp -- the JSON code descriptor and report serializers.
//
// Descriptor schema (version 1):
//   {
//     "version": 1,
//     "q": <prime>,
//     "n": <length>,
//     "H": [[row-major entries in [0, q)], ...],
//     "profile": [ {"indices": [..], "r": .., "delta": ..}, ... ],   optional
//     "metadata": {                                                  optional
//       "construction": {"parts": [{"n":..,"r":..},..], "k":.., "delta":.., "q":..},
//       "groups": [[..], ...],
//       "achieved_d": .., "bound_d": .., "bound_formula": "..", "optimal": bool
//     }
//   }

#pragma once

#include "lrc/code.hpp"
#include "lrc/construct.hpp"
#include "lrc/regen.hpp"
#include "lrc/sim.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace lrc {

struct DescriptorMetadata {
    std::optional<ConstructionParams> construction;
    std::vector<std::vector<std::size_t>> groups;
    std::optional<std::size_t> achieved_d;
    std::optional<long long> bound_d;
    std::string bound_formula;
    std::optional<bool> optimal;
};

struct CodeDescriptor {
    std::uint32_t q = 2;
    std::size_t n = 1;
    std::vector<std::vector<std::uint32_t>> parity_rows;
    std::optional<std::vector<LocalityPart>> profile_parts;
    std::optional<DescriptorMetadata> metadata;
};

using json = nlohmann::ordered_json;

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);  // expects {"q":.., "rows":[[..]]}

CodeDescriptor descriptor_from_output(const ConstructionOutput& out);
json descriptor_to_json(const CodeDescriptor& d);
// throws std::invalid_argument on schema or range violations
CodeDescriptor descriptor_from_json(const json& j);

LinearCode code_from_descriptor(const CodeDescriptor& d);
// requires a profile block
LocalityProfile profile_from_descriptor(const CodeDescriptor& d);

json certificate_to_json(const LocalityCertificate& cert);
json phi_to_json(const PhiTable& table, std::size_t n, std::size_t k);
json report_to_json(const SimReport& report);

}  // namespace lrc
