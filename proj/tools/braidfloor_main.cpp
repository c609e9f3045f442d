// braidfloor: decide the Dehornoy ordering, compute Dehornoy floors, and
// bound the genus of braid closures from the command line.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "braidfloor/bounds.hpp"
#include "braidfloor/braid_io.hpp"
#include "braidfloor/burau.hpp"
#include "braidfloor/catalogue.hpp"
#include "braidfloor/errors.hpp"
#include "braidfloor/order.hpp"
#include "braidfloor/sampling.hpp"

namespace bf = braidfloor;
using nlohmann::ordered_json;

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string format = "text";
    std::uint64_t seed = 0;
    long trials = 1000;
    int max_strands = 5;
    int max_len = 20;
    std::uint64_t step_limit = 10'000'000;

    bf::ReduceOptions reduce() const { return {step_limit}; }
};

const std::vector<std::string>& csv_columns() {
    static const std::vector<std::string> columns = {
        "braid", "n", "len", "floor", "chi_lower", "g_lower", "g_upper",
        "check_theorem_chi", "check_corollary_upper", "check_prop1_sigma1",
        "check_bounds_order", "check_floor_lower_consistent",
    };
    return columns;
}

std::string csv_header() {
    std::string out;
    for (const std::string& c : csv_columns()) {
        if (!out.empty()) out += ',';
        out += c;
    }
    return out;
}

std::string report_csv_row(const bf::VerificationReport& report) {
    std::string out = bf::to_grammar(report.braid);
    out += ',' + std::to_string(report.braid.strands());
    out += ',' + std::to_string(report.braid.length());
    out += ',' + std::to_string(report.floor);
    out += ',' + std::to_string(report.chi_lower);
    if (report.genus) {
        out += ',' + std::to_string(report.genus->lower);
        out += ',' + std::to_string(report.genus->upper);
    } else {
        out += ",,";
    }
    for (const std::string& name : bf::verification_check_names()) {
        const bf::BoundCheck* check = report.find_check(name);
        out += ',';
        if (check) out += check->holds ? '1' : '0';
    }
    return out;
}

std::string check_text(const bf::BoundCheck& check, bool strict) {
    return "check " + check.name + ": " + bf::to_string(check.lhs) + (strict ? " < " : " <= ") +
           bf::to_string(check.rhs) + (check.holds ? " holds" : " FAILS");
}

bool check_is_strict(const std::string& name) {
    return name != "bounds-order" && name != "floor-lower-consistent";
}

std::string report_text(const bf::VerificationReport& report) {
    std::string out;
    out += "braid = " + bf::to_grammar(report.braid) + '\n';
    out += "n = " + std::to_string(report.braid.strands()) + '\n';
    out += "length = " + std::to_string(report.braid.length()) + '\n';
    out += "floor = " + std::to_string(report.floor) + '\n';
    out += "chi_lower = " + std::to_string(report.chi_lower) + '\n';
    if (report.genus) {
        out += "genus_lower = " + std::to_string(report.genus->lower) + " (" +
               report.genus->lower_source + ")\n";
        out += "genus_upper = " + std::to_string(report.genus->upper) + " (" +
               report.genus->upper_source + ")\n";
    } else {
        out += "genus = n/a (closure has " +
               std::to_string(bf::closure_components(report.braid)) + " components)\n";
    }
    for (const bf::BoundCheck& check : report.checks)
        out += check_text(check, check_is_strict(check.name)) + '\n';
    out += std::string("result = ") + (report.all_hold() ? "pass" : "fail") + '\n';
    return out;
}

ordered_json report_json(const bf::VerificationReport& report) {
    ordered_json j;
    j["braid"] = bf::to_grammar(report.braid);
    j["n"] = report.braid.strands();
    j["length"] = report.braid.length();
    j["floor"] = report.floor;
    j["chi_lower"] = report.chi_lower;
    if (report.genus) {
        j["genus_lower"] = report.genus->lower;
        j["lower_source"] = report.genus->lower_source;
        j["genus_upper"] = report.genus->upper;
        j["upper_source"] = report.genus->upper_source;
    } else {
        j["genus_lower"] = nullptr;
        j["genus_upper"] = nullptr;
        j["closure_components"] = bf::closure_components(report.braid);
    }
    ordered_json checks = ordered_json::array();
    for (const bf::BoundCheck& check : report.checks) {
        checks.push_back({{"name", check.name},
                          {"holds", check.holds},
                          {"lhs", bf::to_string(check.lhs)},
                          {"rhs", bf::to_string(check.rhs)}});
    }
    j["checks"] = std::move(checks);
    j["all_hold"] = report.all_hold();
    return j;
}

void emit_json(const ordered_json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_compare(const Options& opt, const std::string& a_text, const std::string& b_text) {
    const bf::BraidWord a = bf::parse_braid(a_text);
    const bf::BraidWord b = bf::parse_braid(b_text);
    const bf::OrderResult result = bf::compare(a, b, opt.reduce());
    std::string relation;
    if (result == bf::OrderResult::Less)
        relation = bf::to_sigma_string(a) + " <_D " + bf::to_sigma_string(b);
    else if (result == bf::OrderResult::Greater)
        relation = bf::to_sigma_string(b) + " <_D " + bf::to_sigma_string(a);

    if (opt.format == "json") {
        ordered_json j;
        j["command"] = "compare";
        j["a"] = bf::to_grammar(a);
        j["b"] = bf::to_grammar(b);
        j["result"] = bf::to_string(result);
        if (!relation.empty()) j["relation"] = relation;
        emit_json(j);
    } else if (opt.format == "csv") {
        std::cout << "result\n" << bf::to_string(result) << '\n';
    } else {
        std::cout << bf::to_string(result);
        if (!relation.empty()) std::cout << " (" << relation << ")";
        std::cout << '\n';
    }
    return kExitSuccess;
}

int cmd_reduce(const Options& opt, const std::string& text) {
    const bf::BraidWord w = bf::parse_braid(text);
    const bf::BraidWord reduced = bf::handle_reduce(w, opt.reduce());
    if (opt.format == "json") {
        ordered_json j;
        j["command"] = "reduce";
        j["input"] = bf::to_grammar(w);
        j["reduced"] = bf::to_grammar(reduced);
        emit_json(j);
    } else if (opt.format == "csv") {
        std::cout << "braid\n" << bf::to_grammar(reduced) << '\n';
    } else {
        std::cout << bf::to_grammar(reduced) << '\n';
    }
    return kExitSuccess;
}

int cmd_floor(const Options& opt, const std::string& text) {
    const bf::BraidWord w = bf::parse_braid(text);
    const bf::FloorResult result = bf::dehornoy_floor(w, opt.reduce());
    if (opt.format == "json") {
        ordered_json j;
        j["command"] = "floor";
        j["braid"] = bf::to_grammar(w);
        j["floor"] = result.floor;
        emit_json(j);
    } else if (opt.format == "csv") {
        std::cout << "floor\n" << result.floor << '\n';
    } else {
        std::cout << "floor = " << result.floor << '\n';
    }
    return kExitSuccess;
}

int cmd_alexander(const Options& opt, const std::string& text) {
    const bf::BraidWord w = bf::parse_braid(text);
    const std::string poly = bf::alexander_polynomial(w).to_string();
    if (opt.format == "json") {
        ordered_json j;
        j["command"] = "alexander";
        j["braid"] = bf::to_grammar(w);
        j["alexander"] = poly;
        emit_json(j);
    } else if (opt.format == "csv") {
        std::cout << "alexander\n" << poly << '\n';
    } else {
        std::cout << poly << '\n';
    }
    return kExitSuccess;
}

int cmd_genus(const Options& opt, const std::string& text) {
    const bf::BraidWord w = bf::parse_braid(text);
    const bf::VerificationReport report = bf::verify_braid(w, opt.reduce());
    if (!report.genus)
        throw bf::not_a_knot("genus bounds require a one-component closure");
    const bf::GenusBounds& g = *report.genus;
    if (opt.format == "json") {
        ordered_json j;
        j["command"] = "genus";
        j["braid"] = bf::to_grammar(w);
        j["genus_lower"] = g.lower;
        j["lower_source"] = g.lower_source;
        j["genus_upper"] = g.upper;
        j["upper_source"] = g.upper_source;
        emit_json(j);
    } else if (opt.format == "csv") {
        std::cout << "g_lower,g_upper,lower_source,upper_source\n"
                  << g.lower << ',' << g.upper << ',' << g.lower_source << ',' << g.upper_source
                  << '\n';
    } else {
        std::cout << "genus_lower = " << g.lower << " (" << g.lower_source << ")\n"
                  << "genus_upper = " << g.upper << " (" << g.upper_source << ")\n";
    }
    return kExitSuccess;
}

int cmd_verify(const Options& opt, const std::string& text) {
    const bf::BraidWord w = bf::parse_braid(text);
    const bf::VerificationReport report = bf::verify_braid(w, opt.reduce());
    if (opt.format == "json") {
        ordered_json j;
        j["command"] = "verify";
        j.update(report_json(report));
        emit_json(j);
    } else if (opt.format == "csv") {
        std::cout << csv_header() << '\n' << report_csv_row(report) << '\n';
    } else {
        std::cout << report_text(report);
    }
    return report.all_hold() ? kExitSuccess : kExitCheckFailure;
}

ordered_json campaign_json(const bf::CampaignOutcome& outcome) {
    ordered_json j;
    j["total"] = outcome.total;
    j["passed"] = outcome.passed;
    ordered_json failures = ordered_json::array();
    for (long index : outcome.failing) {
        const bf::CampaignRecord& record = outcome.records[static_cast<std::size_t>(index)];
        ordered_json f;
        f["sample"] = record.sample_index;
        f.update(report_json(record.report));
        failures.push_back(std::move(f));
    }
    j["failures"] = std::move(failures);
    return j;
}

int cmd_sample(const Options& opt) {
    bf::CampaignConfig config;
    config.seed = opt.seed;
    config.trials = opt.trials;
    config.max_strands = opt.max_strands;
    config.max_len = opt.max_len;
    config.step_limit = opt.step_limit;

    const bf::CampaignOutcome braids = bf::run_braid_campaign(config);
    const bf::CampaignOutcome bands = bf::run_band_campaign(config);
    const bool all_passed = braids.all_passed() && bands.all_passed();

    if (opt.format == "json") {
        ordered_json j;
        j["command"] = "sample";
        j["seed"] = opt.seed;
        j["trials"] = opt.trials;
        j["max_strands"] = opt.max_strands;
        j["max_len"] = opt.max_len;
        j["random_braids"] = campaign_json(braids);
        j["band_products"] = campaign_json(bands);
        j["all_passed"] = all_passed;
        emit_json(j);
    } else if (opt.format == "csv") {
        std::cout << csv_header() << '\n';
        for (const bf::CampaignRecord& record : braids.records)
            std::cout << report_csv_row(record.report) << '\n';
        for (const bf::CampaignRecord& record : bands.records)
            std::cout << report_csv_row(record.report) << '\n';
    } else {
        auto print_failures = [](const char* kind, const bf::CampaignOutcome& outcome) {
            for (long index : outcome.failing) {
                const bf::CampaignRecord& record =
                    outcome.records[static_cast<std::size_t>(index)];
                std::cout << "FAIL " << kind << " sample " << record.sample_index << '\n'
                          << report_text(record.report);
            }
        };
        print_failures("random braid", braids);
        print_failures("band product", bands);
        std::cout << "random braids: " << braids.passed << '/' << braids.total << " passed\n";
        std::cout << "band products: " << bands.passed << '/' << bands.total << " passed\n";
        std::cout << "total: " << braids.passed + bands.passed << '/'
                  << braids.total + bands.total << " passed\n";
    }
    return all_passed ? kExitSuccess : kExitCheckFailure;
}

int cmd_catalogue(const Options& opt) {
    const std::vector<bf::CatalogueEntry> entries = bf::catalogue();
    if (opt.format == "json") {
        ordered_json j;
        j["command"] = "catalogue";
        ordered_json rows = ordered_json::array();
        for (const bf::CatalogueEntry& entry : entries) {
            const bf::VerificationReport report = bf::verify_braid(entry.braid, opt.reduce());
            const int n = entry.braid.strands();
            ordered_json row;
            row["name"] = entry.name;
            row["braid"] = bf::to_grammar(entry.braid);
            row["n"] = n;
            row["floor"] = report.floor;
            row["exact_genus"] = entry.exact_genus;
            row["genus_lower"] = report.genus->lower;
            row["genus_upper"] = report.genus->upper;
            row["theorem_rhs"] = bf::to_string(bf::theorem_rhs(n, 1 - 2 * entry.exact_genus));
            row["corollary_rhs"] = bf::to_string(bf::corollary_rhs(n, entry.exact_genus));
            row["certification"] = entry.certification;
            rows.push_back(std::move(row));
        }
        j["entries"] = std::move(rows);
        j["all_certified"] = true;
        emit_json(j);
    } else if (opt.format == "csv") {
        std::cout << "name,braid,n,floor,exact_genus,g_lower,g_upper,theorem_rhs,corollary_rhs\n";
        for (const bf::CatalogueEntry& entry : entries) {
            const bf::VerificationReport report = bf::verify_braid(entry.braid, opt.reduce());
            const int n = entry.braid.strands();
            std::cout << entry.name << ',' << bf::to_grammar(entry.braid) << ',' << n << ','
                      << report.floor << ',' << entry.exact_genus << ',' << report.genus->lower
                      << ',' << report.genus->upper << ','
                      << bf::to_string(bf::theorem_rhs(n, 1 - 2 * entry.exact_genus)) << ','
                      << bf::to_string(bf::corollary_rhs(n, entry.exact_genus)) << '\n';
        }
    } else {
        for (const bf::CatalogueEntry& entry : entries) {
            const bf::VerificationReport report = bf::verify_braid(entry.braid, opt.reduce());
            const int n = entry.braid.strands();
            std::cout << entry.name << ": braid = " << bf::to_grammar(entry.braid)
                      << ", floor = " << report.floor << ", genus = [" << report.genus->lower
                      << ", " << report.genus->upper << "], exact_genus = " << entry.exact_genus
                      << ", theorem: " << report.floor << " < "
                      << bf::to_string(bf::theorem_rhs(n, 1 - 2 * entry.exact_genus))
                      << ", corollary: " << report.floor << " < "
                      << bf::to_string(bf::corollary_rhs(n, entry.exact_genus)) << ", certified\n";
        }
        std::cout << "all entries certified\n";
    }
    return kExitSuccess;
}

void add_common_options(CLI::App* cmd, Options& opt) {
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--step-limit", opt.step_limit, "Handle-reduction step limit")
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dehornoy ordering, Dehornoy floors, and genus bounds for braid closures"};
    app.require_subcommand(1);

    Options opt;
    std::string braid_a;
    std::string braid_b;

    CLI::App* compare = app.add_subcommand("compare", "Compare two braids in the Dehornoy ordering");
    compare->add_option("a", braid_a, "First braid, e.g. \"B3: 1\"")->required();
    compare->add_option("b", braid_b, "Second braid")->required();
    add_common_options(compare, opt);

    CLI::App* reduce = app.add_subcommand("reduce", "Handle-reduce a braid word");
    reduce->add_option("braid", braid_a, "Braid word")->required();
    add_common_options(reduce, opt);

    CLI::App* floor_cmd = app.add_subcommand("floor", "Dehornoy floor of a braid");
    floor_cmd->add_option("braid", braid_a, "Braid word")->required();
    add_common_options(floor_cmd, opt);

    CLI::App* alexander = app.add_subcommand("alexander", "Alexander polynomial of a knot closure");
    alexander->add_option("braid", braid_a, "Braid word with one-component closure")->required();
    add_common_options(alexander, opt);

    CLI::App* genus = app.add_subcommand("genus", "Certified genus bounds of a knot closure");
    genus->add_option("braid", braid_a, "Braid word with one-component closure")->required();
    add_common_options(genus, opt);

    CLI::App* verify = app.add_subcommand("verify", "Evaluate every inequality check on one braid");
    verify->add_option("braid", braid_a, "Braid word")->required();
    add_common_options(verify, opt);

    CLI::App* sample = app.add_subcommand("sample", "Randomized verification campaign");
    add_common_options(sample, opt);
    sample->add_option("--seed", opt.seed, "Campaign seed")->capture_default_str();
    sample->add_option("--trials", opt.trials, "Samples per campaign kind")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    sample->add_option("--max-strands", opt.max_strands, "Largest strand count sampled")
        ->check(CLI::Range(2, 64))
        ->capture_default_str();
    sample->add_option("--max-len", opt.max_len, "Largest word length / band count sampled")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    CLI::App* catalogue = app.add_subcommand("catalogue", "Certified knot catalogue");
    add_common_options(catalogue, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (compare->parsed()) return cmd_compare(opt, braid_a, braid_b);
        if (reduce->parsed()) return cmd_reduce(opt, braid_a);
        if (floor_cmd->parsed()) return cmd_floor(opt, braid_a);
        if (alexander->parsed()) return cmd_alexander(opt, braid_a);
        if (genus->parsed()) return cmd_genus(opt, braid_a);
        if (verify->parsed()) return cmd_verify(opt, braid_a);
        if (sample->parsed()) return cmd_sample(opt);
        if (catalogue->parsed()) return cmd_catalogue(opt);
    } catch (const bf::parse_error& e) {
        std::cerr << "parse error at position " << e.position() << ": " << e.what() << '\n';
        return kExitUsage;
    } catch (const bf::strand_mismatch& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const bf::not_a_knot& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const bf::invalid_braid& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const bf::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCheckFailure;
    }
    return kExitUsage;
}
