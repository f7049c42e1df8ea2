#include "altfermat/cli.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <optional>

#include <CLI11.hpp>

#include "altfermat/report_io.hpp"

namespace altfermat {

namespace {

struct Options {
    std::string format = "text";
    std::uint64_t seed = 42;
    std::uint64_t trials = 1000;
    std::uint64_t samples = 10000;
    std::uint64_t max = 17;
    std::uint64_t bound = default_exponent_bound;
    std::uint64_t n = 0;
    std::string range = "2..13";
    std::string atlas = "altfermat_atlas.json";

    bool json() const { return format == "json"; }
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::optional<std::uint64_t> parse_u64(std::string_view s)
{
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        return std::nullopt;
    return v;
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text)
{
    const auto dots = text.find("..");
    std::optional<std::uint64_t> lo, hi;
    if (dots == std::string::npos) {
        lo = hi = parse_u64(text);
    } else {
        lo = parse_u64(std::string_view(text).substr(0, dots));
        hi = parse_u64(std::string_view(text).substr(dots + 2));
    }
    if (!lo || !hi)
        throw UsageError("invalid range '" + text + "': expected LO..HI");
    if (*lo < 2 || *hi < *lo)
        throw UsageError("invalid range '" + text + "': need 2 <= LO <= HI");
    if (*hi > 1000)
        throw UsageError("invalid range '" + text + "': exponents above 1000 are not supported");
    return {*lo, *hi};
}

std::string pair_text(const std::vector<ResiduePair>& pairs)
{
    std::string s;
    for (const auto& p : pairs)
        s += " (" + std::to_string(p.delta_a) + "," + std::to_string(p.delta_b) + ")";
    return s;
}

std::string pair_text(const std::vector<LiftedPair>& pairs)
{
    std::string s;
    for (const auto& p : pairs)
        s += " (" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
    return s;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_identities(const Options& o, std::ostream& out)
{
    if (o.trials < 1)
        throw UsageError("--trials must be at least 1");
    const auto [lo, hi] = parse_range(o.range);

    std::vector<IdentityTrialReport> reports;
    bool all_pass = true;
    for (std::uint64_t n = lo; n <= hi; ++n) {
        reports.push_back(run_identity_trials(n, o.trials, o.seed));
        all_pass = all_pass && reports.back().failures.empty();
    }

    if (o.json()) {
        Json results = Json::array();
        for (const auto& r : reports)
            results.push_back(to_json(r));
        emit(out, report_envelope("identities",
                                  {{"range", o.range}, {"trials", o.trials}, {"seed", o.seed}},
                                  std::move(results)));
    } else {
        out << "seed: " << o.seed << '\n';
        out << std::left << std::setw(6) << "n" << std::setw(10) << "trials" << std::setw(10)
            << "failures" << "status\n";
        for (const auto& r : reports)
            out << std::setw(6) << r.n << std::setw(10) << r.trials << std::setw(10)
                << r.failures.size() << (r.failures.empty() ? "PASS" : "FAIL") << '\n';
    }
    return all_pass ? exit_success : exit_inconclusive;
}

void render_report(const ProofReport& r, std::ostream& out)
{
    out << "n: " << r.n << '\n';
    out << "outcome: " << to_string(r.outcome) << " (per the incompatibility criterion)\n";
    out << "pair_count: " << r.pair_count << '\n';
    out << "trinomial_zeros: " << r.trinomial_zeros.size() << pair_text(r.trinomial_zeros) << '\n';
    out << "cofactor_zeros: " << r.cofactor_zeros.size() << pair_text(r.cofactor_zeros) << '\n';
    out << "v2_witnesses: " << r.v2_witnesses.size() << pair_text(r.v2_witnesses) << '\n';
    out << "caveats:";
    for (auto c : r.caveats)
        out << ' ' << to_string(c);
    out << '\n';
    out << "elapsed: " << r.elapsed.count() << " s\n";
}

int cmd_prove(const Options& o, std::ostream& out)
{
    require_odd_prime(o.n, "prove");
    const auto r = prove_first_case(o.n, o.bound);
    if (o.json())
        emit(out, report_envelope("prove", {{"n", o.n}, {"bound", o.bound}}, Json::array({to_json(r)})));
    else
        render_report(r, out);
    return is_proven(r.outcome) ? exit_success : exit_inconclusive;
}

int cmd_factor(const Options& o, std::ostream& out)
{
    require_odd_prime(o.n, "factor");
    const auto s = factor_stack(o.n);
    const bool matches = s.expand() == build_truncated(o.n).poly;
    if (o.json()) {
        emit(out, report_envelope("factor", {{"n", o.n}}, Json::array({to_json(s)})));
    } else {
        out << "n: " << s.n << '\n';
        out << "trinomial_exponent: " << s.trinomial_exponent << '\n';
        out << "cofactor_degree: " << s.cofactor.degree() << '\n';
        out << "cofactor:";
        for (const auto& c : s.cofactor.coefficients())
            out << ' ' << c;
        out << '\n';
        out << "expansion_check: " << (matches ? "ok" : "MISMATCH") << '\n';
    }
    return matches ? exit_success : exit_inconclusive;
}

int cmd_scan(const Options& o, std::ostream& out)
{
    if (o.max < 3)
        throw UsageError("--max must be at least 3");
    const auto reports = scan(o.max, o.bound);

    auto atlas = load_atlas(o.atlas).value_or(ScanAtlas{});
    const std::string now = utc_timestamp();
    if (atlas.created.empty())
        atlas.created = now;
    atlas.updated = now;
    const auto added = upsert(atlas, reports);
    save_atlas(o.atlas, atlas);

    if (o.json()) {
        Json results = Json::array();
        for (const auto& r : reports)
            results.push_back(to_json(r));
        emit(out, report_envelope("scan", {{"max", o.max}, {"bound", o.bound}, {"atlas", o.atlas}},
                                  std::move(results)));
    } else {
        out << std::left << std::setw(6) << "n" << std::setw(18) << "outcome" << std::setw(8)
            << "pairs" << std::setw(9) << "T-zeros" << "H-zeros\n";
        for (const auto& r : reports)
            out << std::setw(6) << r.n << std::setw(18) << to_string(r.outcome) << std::setw(8)
                << r.pair_count << std::setw(9) << r.trinomial_zeros.size()
                << r.cofactor_zeros.size() << '\n';
        out << "atlas: " << o.atlas << " (" << added << " added, " << atlas.entries.size()
            << " total)\n";
    }
    return exit_success;
}

int cmd_residues(const Options& o, std::ostream& out)
{
    require_odd_prime(o.n, "residues");
    const auto pairs = admissible_pairs(o.n);
    const auto stack = factor_stack(o.n);
    const auto t_zeros = zero_set(HomogeneousPoly::trinomial(), o.n, pairs);
    const auto h_zeros = zero_set(stack.cofactor, o.n, pairs);
    const auto classes = valuation_classes(o.n, o.bound);

    if (o.json()) {
        Json pr = Json::array();
        for (const auto& p : pairs.pairs)
            pr.push_back(to_json(p));
        Json tz = Json::array(), hz = Json::array();
        for (const auto& p : t_zeros)
            tz.push_back(to_json(p));
        for (const auto& p : h_zeros)
            hz.push_back(to_json(p));
        Json r;
        r["n"] = o.n;
        r["count"] = pairs.count;
        r["pairs"] = std::move(pr);
        r["trinomial_zeros"] = std::move(tz);
        r["cofactor_zeros"] = std::move(hz);
        r["valuation_classes"] = to_json(classes);
        emit(out, report_envelope("residues", {{"n", o.n}, {"bound", o.bound}},
                                  Json::array({std::move(r)})));
    } else {
        out << "n: " << o.n << '\n';
        out << "count: " << pairs.count << '\n';
        out << "pairs:" << pair_text(pairs.pairs) << '\n';
        out << "trinomial_zeros: " << t_zeros.size() << pair_text(t_zeros) << '\n';
        out << "cofactor_zeros: " << h_zeros.size() << pair_text(h_zeros) << '\n';
        out << "class_one_universal: " << std::boolalpha << classes.class_one_universal << '\n';
        out << "v2_attainable: " << classes.v2_attainable << '\n';
        out << "v2_witnesses: " << classes.v2_witnesses.size() << pair_text(classes.v2_witnesses)
            << '\n';
        out << "high_class_pairs: " << classes.high_class_pairs.size()
            << pair_text(classes.high_class_pairs) << '\n';
    }
    return exit_success;
}

int cmd_laws(const Options& o, std::ostream& out)
{
    if (o.samples < 1)
        throw UsageError("--samples must be at least 1");
    require_odd_prime(o.n, "laws");
    const auto r = check_divisibility_laws(o.n, o.samples, o.seed);
    if (o.json()) {
        emit(out, report_envelope("laws", {{"n", o.n}, {"samples", o.samples}, {"seed", o.seed}},
                                  Json::array({to_json(r)})));
    } else {
        auto line = [&](const char* name, const LawTally& t) {
            out << std::left << std::setw(26) << name;
            if (!t.applicable)
                out << "n/a\n";
            else
                out << (t.passed() ? "PASS" : "FAIL") << "  checked=" << t.checked
                    << " failures=" << t.failures.size() << '\n';
        };
        out << "n: " << r.n << "  seed: " << r.seed << "  samples: " << r.sample_count << '\n';
        line("evenness", r.evenness);
        line("trinomial_divides", r.trinomial);
        line("trinomial_square_divides", r.trinomial_square);
        line("qualified_n_squared", r.qualified_n_squared);
        out << "unqualified_exceptions: " << r.unqualified_exception_count << '\n';
        for (const auto& e : r.unqualified_exceptions)
            out << "  a=" << e.a << " b=" << e.b << " v(arg)=" << e.argument_valuation.to_string()
                << " v(U)=" << e.u_valuation.to_string() << '\n';
    }
    return r.all_pass() ? exit_success : exit_inconclusive;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Truncated-binomial toolkit for the first case of Fermat's equation"};
    app.name(args.empty() ? "altfermat" : args.front());
    app.require_subcommand(1);

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };
    auto add_bound = [&](CLI::App* sub) {
        sub->add_option("--bound", o.bound, "Largest exponent the analyzer accepts")
            ->capture_default_str();
    };

    auto* identities = app.add_subcommand("identities", "Check the split binomial identities on random triples");
    identities->add_option("--range", o.range, "Exponent range LO..HI")->capture_default_str();
    identities->add_option("--trials", o.trials, "Random triples per exponent")->capture_default_str();
    identities->add_option("--seed", o.seed, "Generator seed")->capture_default_str();
    add_format(identities);

    auto* prove = app.add_subcommand("prove", "Run the first-case incompatibility pipeline for one prime");
    prove->add_option("n", o.n, "Odd prime exponent")->required();
    add_format(prove);
    add_bound(prove);

    auto* factor = app.add_subcommand("factor", "Print the factor stack of the truncated binomial");
    factor->add_option("n", o.n, "Odd prime exponent")->required();
    add_format(factor);

    auto* scan_cmd = app.add_subcommand("scan", "Prove every odd prime up to --max and update the atlas");
    scan_cmd->add_option("--max", o.max, "Largest exponent")->capture_default_str();
    scan_cmd->add_option("--atlas", o.atlas, "Atlas file")->capture_default_str();
    add_format(scan_cmd);
    add_bound(scan_cmd);

    auto* residues = app.add_subcommand("residues", "Dump admissible pairs, zero sets and valuation classes");
    residues->add_option("n", o.n, "Odd prime exponent")->required();
    add_format(residues);
    add_bound(residues);

    auto* laws = app.add_subcommand("laws", "Sample the divisibility laws of the truncated binomial");
    laws->add_option("n", o.n, "Odd prime exponent")->required();
    laws->add_option("--samples", o.samples, "Sample count")->capture_default_str();
    laws->add_option("--seed", o.seed, "Generator seed")->capture_default_str();
    add_format(laws);

    try {
        std::vector<std::string> rest(args.rbegin(), args.rend());
        if (!rest.empty())
            rest.pop_back();
        app.parse(rest);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_success;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_success;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (identities->parsed())
            return cmd_identities(o, out);
        if (prove->parsed())
            return cmd_prove(o, out);
        if (factor->parsed())
            return cmd_factor(o, out);
        if (scan_cmd->parsed())
            return cmd_scan(o, out);
        if (residues->parsed())
            return cmd_residues(o, out);
        if (laws->parsed())
            return cmd_laws(o, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const DomainError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const ResourceError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << '\n';
        return exit_io;
    } catch (const SchemaError& e) {
        err << "I/O error: " << e.what() << '\n';
        return exit_io;
    }
    return exit_usage;
}

} // namespace altfermat
