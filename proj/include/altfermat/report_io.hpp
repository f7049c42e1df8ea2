#pragma once

// Machine-readable reports and the persisted scan atlas. Schema reference:
// docs/report_schema.md.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "altfermat/prover.hpp"

namespace altfermat {

using Json = nlohmann::ordered_json;

inline constexpr int report_schema_version = 1;
inline constexpr int atlas_format_version = 1;

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a report or atlas document does not match the schema.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// {schema_version, command, params, results}
Json report_envelope(const std::string& command, Json params, Json results);

Json to_json(const ResiduePair& p);
Json to_json(const LiftedPair& p);
Json to_json(const HomogeneousPoly& p);
Json to_json(const FactorStack& s);
Json to_json(const ValuationClassSummary& s);
Json to_json(const IdentityTrialReport& r);
Json to_json(const DivisibilityLawReport& r);
/// elapsed is in seconds; left out when include_elapsed is false so that
/// persisted entries are reproducible.
Json to_json(const ProofReport& r, bool include_elapsed = true);

ProofReport proof_report_from_json(const Json& j);

struct ScanAtlas {
    int format_version = atlas_format_version;
    std::map<std::uint64_t, ProofReport> entries;
    std::string created;
    std::string updated;
};

/// Adds reports for exponents not yet present; existing entries are kept
/// as they are. Returns the number of entries added.
std::size_t upsert(ScanAtlas& atlas, const std::vector<ProofReport>& reports);

Json atlas_to_json(const ScanAtlas& atlas);
ScanAtlas atlas_from_json(const Json& j);

std::string atlas_text(const ScanAtlas& atlas);

/// nullopt when the file does not exist.
std::optional<ScanAtlas> load_atlas(const std::filesystem::path& path);
void save_atlas(const std::filesystem::path& path, const ScanAtlas& atlas);

/// Current UTC time, ISO 8601 with second precision.
std::string utc_timestamp();

} // namespace altfermat
