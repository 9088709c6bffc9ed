// brt: decides whether restriction of generalized Brauer characters from a
// finite permutation group to a subgroup is injective / an isomorphism,
// computing both sides of the criterion independently over exact arithmetic.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "brt/brauer.hpp"
#include "brt/catalog.hpp"
#include "brt/errors.hpp"
#include "brt/report.hpp"
#include "brt/subgroups.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCap = 2;
constexpr int kExitVerify = 3;

struct Options {
    std::string group_spec;
    std::string subgroup_spec;
    std::vector<std::uint64_t> primes;
    std::string format = "text";
    std::uint64_t max_order = brt::kDefaultEnumerationCap;
    std::uint64_t max_subgroups = 100000;
};

// Primes dividing |G| plus the smallest prime not dividing it.
std::vector<std::uint64_t> auto_primes(const brt::PermGroup& g, std::uint64_t cap) {
    const std::uint64_t order = g.order_u64();
    (void)cap;
    std::vector<std::uint64_t> primes;
    std::uint64_t rest = order;
    for (std::uint64_t p = 2; p * p <= rest; ++p)
        if (rest % p == 0) {
            primes.push_back(p);
            while (rest % p == 0) rest /= p;
        }
    if (rest > 1) primes.push_back(rest);
    for (std::uint64_t p = 2;; ++p)
        if (brt::is_prime(p) && order % p != 0) {
            primes.push_back(p);
            break;
        }
    std::sort(primes.begin(), primes.end());
    return primes;
}

int run_analyze(const Options& opt) {
    const brt::PermGroup g = brt::parse_group_spec(opt.group_spec);
    const brt::SubgroupEmbedding emb = brt::parse_subgroup_spec(g, opt.subgroup_spec);
    if (opt.primes.size() != 1 || !brt::is_prime(opt.primes.front())) {
        std::cerr << "analyze requires a single prime --prime\n";
        return kExitUsage;
    }
    const std::uint64_t p = opt.primes.front();
    const brt::RestrictionReport report = brt::analyze(emb, p, opt.max_order);
    if (opt.format == "structured") {
        nlohmann::json doc;
        doc["tool"] = brt::kToolName;
        doc["version"] = brt::kToolVersion;
        doc["command"] = "analyze";
        doc["group"] = brt::group_provenance_json(opt.group_spec, g, opt.max_order);
        doc["subgroup"] =
            brt::group_provenance_json(opt.subgroup_spec, emb.subgroup, opt.max_order);
        doc["prime"] = p;
        doc["report"] = brt::report_to_json(report);
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "group:              " << opt.group_spec << "\n";
        std::cout << "subgroup:           " << opt.subgroup_spec << "\n";
        std::cout << brt::report_to_text(report);
    }
    return kExitOk;
}

int run_table(const Options& opt) {
    const brt::PermGroup g = brt::parse_group_spec(opt.group_spec);
    const brt::CharacterTable table = brt::character_table(g, opt.max_order);
    if (opt.format == "structured") {
        nlohmann::json doc;
        doc["tool"] = brt::kToolName;
        doc["version"] = brt::kToolVersion;
        doc["command"] = "table";
        doc["group_spec"] = opt.group_spec;
        doc["table"] = brt::table_to_json(table);
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "group: " << opt.group_spec << "\n" << brt::table_to_text(table);
    }
    return kExitOk;
}

int run_sweep(const Options& opt) {
    const brt::PermGroup g = brt::parse_group_spec(opt.group_spec);
    std::vector<std::uint64_t> primes = opt.primes;
    if (primes.empty()) primes = auto_primes(g, opt.max_order);
    for (const std::uint64_t p : primes)
        if (!brt::is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");

    brt::SubgroupSearchLimits limits;
    limits.max_order = opt.max_order;
    limits.max_subgroups = opt.max_subgroups;
    const std::vector<brt::SubgroupEmbedding> subgroups = brt::enumerate_subgroups(g, limits);
    const brt::CharacterTable tg = brt::character_table(g, opt.max_order);

    nlohmann::json rows = nlohmann::json::array();
    std::vector<std::string> lines;
    for (std::size_t si = 0; si < subgroups.size(); ++si) {
        const brt::SubgroupEmbedding& emb = subgroups[si];
        const brt::CharacterTable th = brt::character_table(emb.subgroup, opt.max_order);
        std::string gens;
        for (const brt::Permutation& x : emb.subgroup.generators()) {
            if (!gens.empty()) gens += ';';
            gens += x.cycle_string();
        }
        if (gens.empty()) gens = "()";
        for (const std::uint64_t p : primes) {
            const brt::RestrictionReport r = brt::analyze(tg, th, emb, p, opt.max_order);
            if (opt.format == "structured") {
                nlohmann::json row;
                row["subgroup_index"] = si + 1;
                row["generators"] = gens;
                row["report"] = brt::report_to_json(r);
                rows.push_back(std::move(row));
            } else {
                std::ostringstream line;
                line << "H#" << si + 1 << " |H|=" << r.subgroup_order.get_str() << " p=" << p
                     << " rG=" << r.r_g << " rH=" << r.r_h << " cov=" << (r.coverage ? 'y' : 'n')
                     << " inj=" << (r.injective ? 'y' : 'n')
                     << " bij=" << (r.class_meet_bijection ? 'y' : 'n')
                     << " idx=" << (r.image_index ? r.image_index->get_str() : "inf")
                     << " iso=" << (r.isomorphism ? 'y' : 'n') << "  gens=" << gens;
                lines.push_back(line.str());
            }
        }
    }
    if (opt.format == "structured") {
        nlohmann::json doc;
        doc["tool"] = brt::kToolName;
        doc["version"] = brt::kToolVersion;
        doc["command"] = "sweep";
        doc["group"] = brt::group_provenance_json(opt.group_spec, g, opt.max_order);
        doc["rows"] = std::move(rows);
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "sweep of " << opt.group_spec << " (" << subgroups.size()
                  << " subgroup classes)\n";
        for (const std::string& line : lines) std::cout << line << "\n";
    }
    return kExitOk;
}

struct Fixture {
    std::string name;
    bool passed;
    std::string detail;
};

int run_verify_paper() {
    std::vector<Fixture> results;
    const auto check = [&](const std::string& name, bool ok, const std::string& detail) {
        results.push_back({name, ok, detail});
    };

    {
        const brt::PermGroup a5 = brt::parse_group_spec("A5");
        const brt::SubgroupEmbedding d10 =
            brt::parse_subgroup_spec(a5, "gens:(1,2,3,4,5);(2,5)(3,4)");
        const brt::RestrictionReport r = brt::analyze(d10, 3);
        check("A5/D10 p=3: injective with class bijection, index > 1",
              r.coverage && r.injective && r.class_meet_bijection && r.r_g == 4 && r.r_h == 4 &&
                  r.image_index && *r.image_index > 1 && !r.isomorphism,
              "index = " + (r.image_index ? r.image_index->get_str() : std::string("infinite")));
    }
    {
        const brt::PermGroup a5 = brt::parse_group_spec("A5");
        const brt::SubgroupEmbedding s3 = brt::parse_subgroup_spec(a5, "gens:(1,2,3);(1,2)(4,5)");
        const brt::RestrictionReport r = brt::analyze(s3, 5);
        check("A5/S3 p=5: injective with equal Brauer character counts",
              r.injective && r.r_g == 3 && r.r_h == 3,
              "r_G = " + std::to_string(r.r_g) + ", r_H = " + std::to_string(r.r_h));
    }
    {
        const brt::PermGroup g = brt::g72();
        const brt::SubgroupEmbedding s3 =
            brt::parse_subgroup_spec(g, "gens:(1,2,3)(4,5,6)(7,8,9);(2,3)(4,7)(5,9)(6,8)");
        const brt::RestrictionReport r = brt::analyze(s3, 2);
        check("G72/S3 p=2: solvable example satisfies the criterion",
              r.coverage && r.injective && r.subgroup_order == 6,
              "r_G = " + std::to_string(r.r_g) + ", r_H = " + std::to_string(r.r_h));
    }
    {
        const brt::PermGroup c6 = brt::parse_group_spec("C6");
        const brt::SubgroupEmbedding whole = brt::subgroup(c6, c6.generators());
        const brt::RestrictionReport r = brt::analyze(whole, 5);
        check("C6/C6 p=5: identity restriction is an isomorphism",
              r.isomorphism && r.image_index && *r.image_index == 1, "index = 1");
    }
    // Criterion sweep: both sides agree on every subgroup of S4 and A5 for
    // every prime dividing the order plus one coprime prime.
    for (const std::string spec : {"S4", "A5"}) {
        const brt::PermGroup g = brt::parse_group_spec(spec);
        const brt::CharacterTable tg = brt::character_table(g);
        std::size_t triples = 0;
        bool all_ok = true;
        for (const brt::SubgroupEmbedding& emb : brt::enumerate_subgroups(g)) {
            const brt::CharacterTable th = brt::character_table(emb.subgroup);
            for (const std::uint64_t p : auto_primes(g, brt::kDefaultEnumerationCap)) {
                const brt::RestrictionReport r = brt::analyze(tg, th, emb, p);
                all_ok = all_ok && r.theorem_a_consistent;
                ++triples;
            }
        }
        check("criterion sweep over subgroups of " + spec, all_ok,
              std::to_string(triples) + " triples checked");
    }

    bool all = true;
    for (const Fixture& f : results) {
        std::cout << (f.passed ? "PASS" : "FAIL") << "  " << f.name << " (" << f.detail << ")\n";
        all = all && f.passed;
    }
    std::cout << (all ? "verify-paper: all fixtures passed\n"
                      : "verify-paper: FIXTURE FAILURES\n");
    return all ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact injectivity analysis for restriction of generalized Brauer characters"};
    app.require_subcommand(1);

    Options opt;
    CLI::App* analyze = app.add_subcommand("analyze", "analyze one (group, subgroup, prime) triple");
    analyze->add_option("--group", opt.group_spec, "group spec")->required();
    analyze->add_option("--subgroup", opt.subgroup_spec, "subgroup spec (gens: form)")->required();
    analyze->add_option("--prime", opt.primes, "prime p")->required();
    analyze->add_option("--format", opt.format, "text|structured")
        ->check(CLI::IsMember({"text", "structured"}));
    analyze->add_option("--max-order", opt.max_order, "enumeration cap");

    CLI::App* table = app.add_subcommand("table", "print the exact character table");
    table->add_option("--group", opt.group_spec, "group spec")->required();
    table->add_option("--format", opt.format, "text|structured")
        ->check(CLI::IsMember({"text", "structured"}));
    table->add_option("--max-order", opt.max_order, "enumeration cap");

    CLI::App* sweep = app.add_subcommand("sweep", "analyze all subgroup classes");
    sweep->add_option("--group", opt.group_spec, "group spec")->required();
    sweep->add_option("--prime", opt.primes, "primes (default: divisors of |G| plus one coprime)");
    sweep->add_option("--format", opt.format, "text|structured")
        ->check(CLI::IsMember({"text", "structured"}));
    sweep->add_option("--max-order", opt.max_order, "enumeration / subgroup-order cap");
    sweep->add_option("--max-subgroups", opt.max_subgroups, "cap on subgroup classes");

    CLI::App* verify = app.add_subcommand("verify-paper", "run the worked-example fixtures");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (analyze->parsed()) return run_analyze(opt);
        if (table->parsed()) return run_table(opt);
        if (sweep->parsed()) return run_sweep(opt);
        if (verify->parsed()) return run_verify_paper();
    } catch (const brt::cap_exceeded& e) {
        std::cerr << "resource cap exceeded: " << e.what() << "\n";
        return kExitCap;
    } catch (const brt::spec_parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerify;
    }
    return kExitUsage;
}
