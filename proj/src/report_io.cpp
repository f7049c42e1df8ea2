#include "altfermat/report_io.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

namespace altfermat {

namespace {

std::string big_to_string(const BigInt& x) { return x.get_str(); }

Json pair_list(const std::vector<ResiduePair>& pairs)
{
    Json arr = Json::array();
    for (const auto& p : pairs)
        arr.push_back(to_json(p));
    return arr;
}

template <typename T>
T field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw SchemaError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("field '") + key + "': " + e.what());
    }
}

std::vector<ResiduePair> residue_pairs_from_json(const Json& arr, std::uint64_t n, const char* key)
{
    if (!arr.is_array())
        throw SchemaError(std::string("field '") + key + "' must be an array");
    std::vector<ResiduePair> out;
    for (const auto& p : arr) {
        if (!p.is_array() || p.size() != 2)
            throw SchemaError(std::string("field '") + key + "' holds a malformed pair");
        out.push_back({p[0].get<std::uint64_t>(), p[1].get<std::uint64_t>(), n});
    }
    return out;
}

} // namespace

Json report_envelope(const std::string& command, Json params, Json results)
{
    Json j;
    j["schema_version"] = report_schema_version;
    j["command"] = command;
    j["params"] = std::move(params);
    j["results"] = std::move(results);
    return j;
}

Json to_json(const ResiduePair& p) { return Json::array({p.delta_a, p.delta_b}); }

Json to_json(const LiftedPair& p) { return Json::array({p.a, p.b}); }

Json to_json(const HomogeneousPoly& p)
{
    Json arr = Json::array();
    for (const auto& c : p.coefficients())
        arr.push_back(big_to_string(c));
    return arr;
}

Json to_json(const FactorStack& s)
{
    Json j;
    j["n"] = s.n;
    j["trinomial_exponent"] = s.trinomial_exponent;
    j["cofactor_degree"] = s.cofactor.degree();
    j["cofactor"] = to_json(s.cofactor);
    j["cofactor_palindromic"] = s.cofactor.is_palindromic();
    j["expansion_matches"] = s.expand() == build_truncated(s.n).poly;
    return j;
}

Json to_json(const ValuationClassSummary& s)
{
    Json j;
    j["modulus"] = s.modulus;
    j["class_one_universal"] = s.class_one_universal;
    j["v2_attainable"] = s.v2_attainable;
    Json w = Json::array();
    for (const auto& p : s.v2_witnesses)
        w.push_back(to_json(p));
    j["v2_witnesses"] = std::move(w);
    j["high_class_pairs"] = pair_list(s.high_class_pairs);
    return j;
}

Json to_json(const IdentityTrialReport& r)
{
    Json j;
    j["n"] = r.n;
    j["trials"] = r.trials;
    Json failures = Json::array();
    for (const auto& t : r.failures)
        failures.push_back({{"A", big_to_string(t.a_val)},
                            {"B", big_to_string(t.b_val)},
                            {"C", big_to_string(t.c_val)}});
    j["failures"] = std::move(failures);
    return j;
}

Json to_json(const DivisibilityLawReport& r)
{
    auto tally = [](const LawTally& t) {
        Json j;
        j["applicable"] = t.applicable;
        j["checked"] = t.checked;
        j["passed"] = t.passed();
        Json f = Json::array();
        for (const auto& c : t.failures)
            f.push_back({{"a", big_to_string(c.a)}, {"b", big_to_string(c.b)}, {"detail", c.detail}});
        j["failures"] = std::move(f);
        return j;
    };
    Json j;
    j["n"] = r.n;
    j["seed"] = r.seed;
    j["sample_count"] = r.sample_count;
    j["laws"] = {{"evenness", tally(r.evenness)},
                 {"trinomial_divides", tally(r.trinomial)},
                 {"trinomial_square_divides", tally(r.trinomial_square)},
                 {"qualified_n_squared", tally(r.qualified_n_squared)}};
    j["unqualified_exception_count"] = r.unqualified_exception_count;
    Json ex = Json::array();
    for (const auto& e : r.unqualified_exceptions)
        ex.push_back({{"a", big_to_string(e.a)},
                      {"b", big_to_string(e.b)},
                      {"argument_valuation", e.argument_valuation.to_string()},
                      {"u_valuation", e.u_valuation.to_string()}});
    j["unqualified_exceptions"] = std::move(ex);
    j["all_pass"] = r.all_pass();
    return j;
}

Json to_json(const ProofReport& r, bool include_elapsed)
{
    Json j;
    j["n"] = r.n;
    j["outcome"] = to_string(r.outcome);
    j["pair_count"] = r.pair_count;
    j["trinomial_zeros"] = pair_list(r.trinomial_zeros);
    j["cofactor_zeros"] = pair_list(r.cofactor_zeros);
    Json w = Json::array();
    for (const auto& p : r.v2_witnesses)
        w.push_back(to_json(p));
    j["v2_witnesses"] = std::move(w);
    Json c = Json::array();
    for (auto cv : r.caveats)
        c.push_back(to_string(cv));
    j["caveats"] = std::move(c);
    if (include_elapsed)
        j["elapsed"] = r.elapsed.count();
    return j;
}

namespace {

ProofReport parse_proof_report(const Json& j)
{
    ProofReport r;
    r.n = field<std::uint64_t>(j, "n");
    if (!is_odd_prime(r.n))
        throw SchemaError("report exponent " + std::to_string(r.n) + " is not an odd prime");
    const auto outcome = parse_outcome(field<std::string>(j, "outcome"));
    if (!outcome)
        throw SchemaError("unknown outcome '" + field<std::string>(j, "outcome") + "'");
    r.outcome = *outcome;
    r.pair_count = field<std::uint64_t>(j, "pair_count");
    r.trinomial_zeros = residue_pairs_from_json(field<Json>(j, "trinomial_zeros"), r.n, "trinomial_zeros");
    r.cofactor_zeros = residue_pairs_from_json(field<Json>(j, "cofactor_zeros"), r.n, "cofactor_zeros");
    for (const auto& p : field<Json>(j, "v2_witnesses")) {
        if (!p.is_array() || p.size() != 2)
            throw SchemaError("field 'v2_witnesses' holds a malformed pair");
        r.v2_witnesses.push_back({p[0].get<std::uint64_t>(), p[1].get<std::uint64_t>()});
    }
    for (const auto& c : field<Json>(j, "caveats")) {
        const auto cv = c.is_string() ? parse_caveat(c.get<std::string>()) : std::nullopt;
        if (!cv)
            throw SchemaError("unknown caveat " + c.dump());
        r.caveats.push_back(*cv);
    }
    if (j.contains("elapsed"))
        r.elapsed = std::chrono::duration<double>(field<double>(j, "elapsed"));
    return r;
}

} // namespace

ProofReport proof_report_from_json(const Json& j)
{
    try {
        return parse_proof_report(j);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("malformed proof report: ") + e.what());
    }
}

std::size_t upsert(ScanAtlas& atlas, const std::vector<ProofReport>& reports)
{
    std::size_t added = 0;
    for (const auto& r : reports) {
        auto stored = r;
        stored.elapsed = {};
        if (atlas.entries.emplace(r.n, std::move(stored)).second)
            ++added;
    }
    return added;
}

Json atlas_to_json(const ScanAtlas& atlas)
{
    Json j;
    j["format_version"] = atlas.format_version;
    j["created"] = atlas.created;
    j["updated"] = atlas.updated;
    Json entries = Json::object();
    for (const auto& [n, r] : atlas.entries)
        entries[std::to_string(n)] = to_json(r, false);
    j["entries"] = std::move(entries);
    return j;
}

ScanAtlas atlas_from_json(const Json& j)
{
    ScanAtlas atlas;
    atlas.format_version = field<int>(j, "format_version");
    if (atlas.format_version != atlas_format_version)
        throw SchemaError("unsupported atlas format_version " + std::to_string(atlas.format_version));
    atlas.created = field<std::string>(j, "created");
    atlas.updated = field<std::string>(j, "updated");
    const Json entries = field<Json>(j, "entries");
    if (!entries.is_object())
        throw SchemaError("field 'entries' must be an object");
    for (const auto& [key, value] : entries.items()) {
        auto r = proof_report_from_json(value);
        if (std::to_string(r.n) != key)
            throw SchemaError("atlas key '" + key + "' does not match report exponent " +
                              std::to_string(r.n));
        r.elapsed = {};
        atlas.entries.emplace(r.n, std::move(r));
    }
    return atlas;
}

std::string atlas_text(const ScanAtlas& atlas)
{
    // One entry per line so diffs stay local to an exponent.
    std::ostringstream os;
    os << "{\n";
    os << "  \"format_version\": " << atlas.format_version << ",\n";
    os << "  \"created\": " << Json(atlas.created).dump() << ",\n";
    os << "  \"updated\": " << Json(atlas.updated).dump() << ",\n";
    os << "  \"entries\": {";
    bool first = true;
    for (const auto& [n, r] : atlas.entries) {
        os << (first ? "\n" : ",\n") << "    \"" << n << "\": " << to_json(r, false).dump();
        first = false;
    }
    os << (first ? "}\n" : "\n  }\n");
    os << "}\n";
    return os.str();
}

std::optional<ScanAtlas> load_atlas(const std::filesystem::path& path)
{
    std::error_code ec;
    if (!std::filesystem::exists(path, ec))
        return std::nullopt;
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open atlas " + path.string());
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError("atlas " + path.string() + " is not valid JSON: " + e.what());
    }
    return atlas_from_json(j);
}

void save_atlas(const std::filesystem::path& path, const ScanAtlas& atlas)
{
    const std::string text = atlas_text(atlas);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot write atlas " + path.string());
    out << text;
    out.flush();
    if (!out)
        throw IoError("failed writing atlas " + path.string());
}

std::string utc_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace altfermat
