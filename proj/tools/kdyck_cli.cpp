#include <CLI11.hpp>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kdyck/branch_tree.hpp"
#include "kdyck/enumerate.hpp"
#include "kdyck/graded.hpp"
#include "kdyck/maps.hpp"
#include "kdyck/tableau.hpp"
#include "kdyck/verify.hpp"

namespace {

using namespace kdyck;
using nlohmann::json;

constexpr long kMaxClassPaths = 1000000;

std::string join_tokens(const std::vector<std::string>& tokens) {
    std::string word;
    for (size_t i = 0; i < tokens.size(); ++i) {
        if (i > 0) word += ' ';
        word += tokens[i];
    }
    return word;
}

std::string seq_str(const std::vector<int>& values) {
    std::string out;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ' ';
        out += std::to_string(values[i]);
    }
    return out;
}

// The rearrangement-class count bounds the path count of every mode
// (a single vector, the class, or a prefixed class over the same parts),
// so it works as a fail-fast guard against accidental huge inputs.
void guard_path_count(const std::vector<int>& all_parts) {
    mpz_class bound = count_paths(KVector(all_parts), true);
    if (bound > kMaxClassPaths)
        throw std::invalid_argument("about " + bound.get_str() +
                                    " paths requested; the limit is " +
                                    std::to_string(kMaxClassPaths));
}

std::pair<Statistic, Statistic> parse_stats_pair(const std::string& text) {
    size_t comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("--stats wants two comma-separated names, e.g. area,depth");
    return {statistic_from_name(text.substr(0, comma)),
            statistic_from_name(text.substr(comma + 1))};
}

int run_stats(const std::string& word, bool as_json) {
    DyckPath path = DyckPath::parse(word);
    RankSequences ranks = rank_sequences(path);
    StatSequence area_stat = area(path);
    StatSequence bounce_stat = bounce(path);
    StatSequence depth_stat = depth(path);
    int dinv_stat = dinv(path);
    int run_stat = run(path);
    int ret_stat = ret(path);

    if (as_json) {
        json out = {
            {"kvec", path.kvec().parts()},
            {"word", path.to_string()},
            {"r", ranks.start},
            {"rdot", ranks.end},
            {"area_seq", area_stat.sequence},
            {"area", area_stat.total},
            {"dinv", dinv_stat},
            {"bounce_seq", bounce_stat.sequence},
            {"bounce", bounce_stat.total},
            {"depth_seq", depth_stat.sequence},
            {"depth", depth_stat.total},
            {"run", run_stat},
            {"ret", ret_stat},
        };
        std::cout << out.dump() << "\n";
        return 0;
    }
    std::cout << "k: " << path.kvec().to_string() << "\n"
              << "word: " << path.to_string() << "\n"
              << "r: " << seq_str(ranks.start) << "\n"
              << "rdot: " << seq_str(ranks.end) << "\n"
              << "area_seq: " << seq_str(area_stat.sequence) << "\n"
              << "area: " << area_stat.total << "\n"
              << "dinv: " << dinv_stat << "\n"
              << "bounce_seq: " << seq_str(bounce_stat.sequence) << "\n"
              << "bounce: " << bounce_stat.total << "\n"
              << "depth_seq: " << seq_str(depth_stat.sequence) << "\n"
              << "depth: " << depth_stat.total << "\n"
              << "run: " << run_stat << "\n"
              << "ret: " << ret_stat << "\n";
    return 0;
}

int run_map(const std::string& kind, const std::string& word, bool check) {
    DyckPath path = DyckPath::parse(word);
    DyckPath image = [&] {
        if (kind == "sweep") return sweep_map(path);
        if (kind == "omega") return omega(path);
        if (kind == "theta") return theta(path);
        throw std::invalid_argument("unknown map '" + kind + "' (sweep, omega, theta)");
    }();
    std::cout << image.to_string() << "\n";
    if (!check) return 0;

    bool ok = true;
    auto expect = [&](bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            std::cerr << "verify failed: " << what << "\n";
        }
    };
    if (kind == "sweep") {
        expect(dinv(path) == area(image).total, "dinv(path) = area(image)");
        expect(area(path).total == bounce(image).total, "area(path) = bounce(image)");
    } else {
        expect(area(path).total == depth(image).total, "area(path) = depth(image)");
        expect(depth(path).total == area(image).total, "depth(path) = area(image)");
        DyckPath twice = kind == "omega" ? omega(image) : theta(image);
        expect(twice == path, "applying the map twice restores the path");
        if (kind == "omega")
            expect(image.kvec().part(1) == path.kvec().part(1), "first part unchanged");
    }
    if (ok) std::cerr << "verify: ok\n";
    return ok ? 0 : 1;
}

int run_enumerate(const std::string& klist, bool class_mode, bool as_json, int max_letters) {
    KVector kvec = KVector::parse(klist);
    EnumerationOptions opts{max_letters};
    guard_path_count(kvec.parts());

    if (!class_mode) {
        std::vector<DyckPath> paths = enumerate_paths(kvec, opts);
        if (as_json) {
            json words = json::array();
            for (const DyckPath& path : paths) words.push_back(path.to_string());
            std::cout << json{{"kvec", kvec.parts()}, {"class", false}, {"paths", words}}.dump()
                      << "\n";
        } else {
            for (const DyckPath& path : paths) std::cout << path.to_string() << "\n";
        }
        return 0;
    }

    auto blocks = enumerate_class(kvec, opts);
    if (as_json) {
        json out_blocks = json::array();
        for (const auto& [rearranged, paths] : blocks) {
            json words = json::array();
            for (const DyckPath& path : paths) words.push_back(path.to_string());
            out_blocks.push_back({{"kvec", rearranged.parts()}, {"paths", words}});
        }
        std::cout << json{{"kvec", kvec.parts()}, {"class", true}, {"blocks", out_blocks}}.dump()
                  << "\n";
    } else {
        for (const auto& [rearranged, paths] : blocks) {
            std::cout << "# k = " << rearranged.to_string() << "\n";
            for (const DyckPath& path : paths) std::cout << path.to_string() << "\n";
        }
    }
    return 0;
}

int run_count(const std::string& klist, bool class_mode) {
    std::cout << count_paths(KVector::parse(klist), class_mode).get_str() << "\n";
    return 0;
}

int run_poly(const std::string& klist, const std::string& stats_text, bool class_mode,
             std::optional<int> prefix, bool as_json, bool check_symmetry, int max_letters) {
    KVector kvec = KVector::parse(klist);
    auto [stat_q, stat_t] = parse_stats_pair(stats_text);
    EnumerationOptions opts{max_letters};

    std::vector<int> all_parts = kvec.parts();
    if (prefix) all_parts.insert(all_parts.begin(), *prefix);
    guard_path_count(all_parts);

    // --prefix always sums over the rearrangement class of the base vector
    // with the extra part attached; a single prefixed vector is just
    // --k a,<parts>.
    QTPolynomial poly = class_mode || prefix
                            ? class_poly(kvec, stat_q, stat_t, prefix, opts)
                            : graded_poly(enumerate_paths(kvec, opts), stat_q, stat_t);
    SymmetryResult symmetry = symmetry_check(poly);

    if (as_json) {
        json out = {
            {"kvec", kvec.parts()},
            {"stats", {statistic_name(stat_q), statistic_name(stat_t)}},
            {"class", class_mode || prefix.has_value()},
            {"terms", poly.terms_json()},
            {"symmetric", symmetry.symmetric},
        };
        if (prefix) out["prefix"] = *prefix;
        std::cout << out.dump() << "\n";
        return 0;
    }
    std::cout << poly.to_string() << "\n";
    if (check_symmetry) {
        std::cout << "symmetric: " << (symmetry.symmetric ? "yes" : "no") << "\n";
        std::cout << "difference: " << symmetry.difference.to_string() << "\n";
    }
    return 0;
}

int run_verify(const std::string& suite, std::optional<int> max_size) {
    verify::Report report;
    bool observational = false;
    if (suite == "figures") {
        report = verify::figures();
    } else if (suite == "involutions") {
        report = verify::involutions(max_size.value_or(12), 5);
    } else if (suite == "sweep") {
        report = verify::sweep(max_size.value_or(12));
    } else if (suite == "symmetry") {
        int bound = max_size.value_or(8);
        report = verify::symmetry_class(bound);
        verify::Report prefixed = verify::symmetry_prefixed(4, std::min(bound, 5));
        report.insert(report.end(), prefixed.begin(), prefixed.end());
    } else if (suite == "counting") {
        report = verify::counting(max_size.value_or(8));
    } else if (suite == "closedform") {
        report = verify::closed_form(max_size.value_or(5));
    } else if (suite == "depth-bounce") {
        report = verify::depth_bounce(max_size.value_or(6), 5);
    } else if (suite == "conjectures") {
        report = verify::conjectures();
        observational = true;
    } else {
        throw std::invalid_argument("unknown suite '" + suite +
                                    "' (figures, involutions, sweep, symmetry, counting, "
                                    "closedform, depth-bounce, conjectures)");
    }

    size_t passed = 0;
    for (const verify::Check& check : report) {
        if (observational) {
            std::cout << "OBSERVE " << check.name << ": " << check.detail << "\n";
            ++passed;
            continue;
        }
        if (check.pass) {
            std::cout << "PASS " << check.name << "\n";
            ++passed;
        } else {
            std::cout << "FAIL " << check.name << ": " << check.detail << "\n";
        }
    }
    std::cout << passed << "/" << report.size()
              << (observational ? " observations" : " checks passed") << "\n";
    return observational || passed == report.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"statistics, bijections and exact q,t-polynomials of k-Dyck paths"};
    app.require_subcommand(1);
    std::function<int()> action;

    auto* stats_cmd = app.add_subcommand("stats", "print every statistic of one path");
    auto stats_tokens = std::make_shared<std::vector<std::string>>();
    auto stats_json = std::make_shared<bool>(false);
    stats_cmd->add_option("word", *stats_tokens, "SW-word tokens, e.g. S2 W S1 W W")->required();
    stats_cmd->add_flag("--json", *stats_json, "structured output");
    stats_cmd->callback(
        [&action, stats_tokens, stats_json] {
            action = [=] { return run_stats(join_tokens(*stats_tokens), *stats_json); };
        });

    auto* map_cmd = app.add_subcommand("map", "apply sweep, omega or theta to a path");
    auto map_kind = std::make_shared<std::string>();
    auto map_tokens = std::make_shared<std::vector<std::string>>();
    auto map_check = std::make_shared<bool>(false);
    map_cmd->add_option("kind", *map_kind, "sweep | omega | theta")->required();
    map_cmd->add_option("word", *map_tokens, "SW-word tokens")->required();
    map_cmd->add_flag("--verify", *map_check,
                      "also check the defining identities and the involution property");
    map_cmd->callback([&action, map_kind, map_tokens, map_check] {
        action = [=] { return run_map(*map_kind, join_tokens(*map_tokens), *map_check); };
    });

    auto* enum_cmd = app.add_subcommand("enumerate", "list all paths of a k vector or its class");
    auto enum_k = std::make_shared<std::string>();
    auto enum_class = std::make_shared<bool>(false);
    auto enum_json = std::make_shared<bool>(false);
    auto enum_max = std::make_shared<int>(40);
    enum_cmd->add_option("--k", *enum_k, "comma-separated parts, e.g. 4,2,3,1")->required();
    enum_cmd->add_flag("--class", *enum_class, "all distinct rearrangements");
    enum_cmd->add_flag("--json", *enum_json, "structured output");
    enum_cmd->add_option("--max-size", *enum_max, "letter cap per path (default 40)");
    enum_cmd->callback([&action, enum_k, enum_class, enum_json, enum_max] {
        action = [=] { return run_enumerate(*enum_k, *enum_class, *enum_json, *enum_max); };
    });

    auto* count_cmd = app.add_subcommand("count", "closed-form path count");
    auto count_k = std::make_shared<std::string>();
    auto count_class = std::make_shared<bool>(false);
    count_cmd->add_option("--k", *count_k, "comma-separated parts")->required();
    count_cmd->add_flag("--class", *count_class,
                        "count the whole rearrangement class (any parts); without it only "
                        "constant vectors have a closed form");
    count_cmd->callback([&action, count_k, count_class] {
        action = [=] { return run_count(*count_k, *count_class); };
    });

    auto* poly_cmd = app.add_subcommand("poly", "graded q,t-polynomial over a path family");
    auto poly_k = std::make_shared<std::string>();
    auto poly_stats = std::make_shared<std::string>("area,depth");
    auto poly_class = std::make_shared<bool>(false);
    auto poly_prefix = std::make_shared<int>(0);
    auto poly_json = std::make_shared<bool>(false);
    auto poly_sym = std::make_shared<bool>(false);
    auto poly_max = std::make_shared<int>(40);
    poly_cmd->add_option("--k", *poly_k, "comma-separated parts")->required();
    poly_cmd->add_option("--stats", *poly_stats,
                         "grading pair out of area,dinv,bounce,depth,run,ret (default area,depth)");
    poly_cmd->add_flag("--class", *poly_class, "sum over all distinct rearrangements");
    poly_cmd->add_option("--prefix", *poly_prefix,
                         "prepend this part to every rearrangement (implies --class)")
        ->check(CLI::PositiveNumber);
    poly_cmd->add_flag("--json", *poly_json, "structured output");
    poly_cmd->add_flag("--check-symmetry", *poly_sym, "report q,t-symmetry and the difference");
    poly_cmd->add_option("--max-size", *poly_max, "letter cap per path (default 40)");
    poly_cmd->callback([&action, poly_cmd, poly_k, poly_stats, poly_class, poly_prefix, poly_json,
                        poly_sym, poly_max] {
        std::optional<int> prefix;
        if (poly_cmd->count("--prefix") > 0) prefix = *poly_prefix;
        action = [=] {
            return run_poly(*poly_k, *poly_stats, *poly_class, prefix, *poly_json, *poly_sym,
                            *poly_max);
        };
    });

    auto* verify_cmd = app.add_subcommand("verify", "run a named property suite");
    auto verify_suite = std::make_shared<std::string>();
    auto verify_max = std::make_shared<int>(0);
    verify_cmd
        ->add_option("suite", *verify_suite,
                     "figures | involutions | sweep | symmetry | counting | closedform | "
                     "depth-bounce | conjectures")
        ->required();
    verify_cmd->add_option("--max-size", *verify_max, "override the suite's size bound");
    verify_cmd->callback([&action, verify_cmd, verify_suite, verify_max] {
        std::optional<int> bound;
        if (verify_cmd->count("--max-size") > 0) bound = *verify_max;
        action = [=] { return run_verify(*verify_suite, bound); };
    });

    CLI11_PARSE(app, argc, argv);
    try {
        return action();
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 2;
    }
}
