#include "kdyck/verify.hpp"

#include <algorithm>
#include <sstream>

#include "kdyck/branch_tree.hpp"
#include "kdyck/enumerate.hpp"
#include "kdyck/graded.hpp"
#include "kdyck/maps.hpp"
#include "kdyck/tableau.hpp"

namespace kdyck::verify {

namespace {

const char* kGoldenPathWord = "S4 W S2 W W W W S3 W W S1 W W W";
const char* kGoldenSweepWord = "S4 W S3 W S1 W W W W S2 W W W W";
const char* kClassicalWord = "S1 S1 W W S1 S1 S1 W W S1 W W S1 S1 W W";

void add(Report& report, const std::string& name, bool pass, const std::string& detail = "") {
    report.push_back({name, pass, pass ? "" : detail});
}

std::string seq_str(const std::vector<int>& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(v[i]);
    }
    return out + ")";
}

// Partition shapes whose paths have at most max_letters letters.
std::vector<KVector> classes_capped_by_letters(int max_letters) {
    std::vector<KVector> shapes;
    for (int m = 1; m < max_letters; ++m)
        for (const KVector& shape : partitions_of(m))
            if (shape.letters() <= max_letters) shapes.push_back(shape);
    return shapes;
}

std::vector<DyckPath> all_class_paths(const KVector& shape) {
    std::vector<DyckPath> paths;
    for (auto& [rearranged, block] : enumerate_class(shape))
        paths.insert(paths.end(), block.begin(), block.end());
    return paths;
}

// The frozen asymmetric difference of the (1,1,2,1) polynomial:
// -q^4 t + q t^4 + q^3 t - q t^3.
QTPolynomial golden_difference_1121() {
    QTPolynomial diff;
    diff.add_term(4, 1, -1);
    diff.add_term(1, 4, 1);
    diff.add_term(3, 1, 1);
    diff.add_term(1, 3, -1);
    return diff;
}

}  // namespace

bool all_pass(const Report& report) {
    return std::all_of(report.begin(), report.end(), [](const Check& c) { return c.pass; });
}

Report golden_path_checks() {
    Report report;
    const DyckPath path = DyckPath::parse(kGoldenPathWord);

    add(report, "golden path k vector", path.kvec().parts() == std::vector<int>{4, 2, 3, 1});
    add(report, "golden path round-trip", path.to_string() == kGoldenPathWord);

    RankSequences ranks = rank_sequences(path);
    const std::vector<int> expected_start = {0, 4, 3, 5, 4, 3, 2, 1, 4, 3, 2, 3, 2, 1};
    const std::vector<int> expected_end = {4, 3, 5, 4, 3, 2, 1, 4, 3, 2, 3, 2, 1, 0};
    add(report, "starting rank sequence", ranks.start == expected_start,
        "got " + seq_str(ranks.start));
    add(report, "ending rank sequence", ranks.end == expected_end, "got " + seq_str(ranks.end));

    StatSequence a = area(path);
    add(report, "area sequence (0,3,1,2), area 6",
        a.sequence == std::vector<int>{0, 3, 1, 2} && a.total == 6,
        "got " + seq_str(a.sequence) + " sum " + std::to_string(a.total));
    add(report, "dinv 10", dinv(path) == 10, "got " + std::to_string(dinv(path)));

    FillingTableau min_fill = fill_min(path);
    const std::vector<std::vector<int>> expected_min = {
        {1, 2, 4, 6, 9}, {3, 5, 7}, {8, 10, 12, 14}, {11, 13}};
    add(report, "smallest-active filling tableau", min_fill.columns() == expected_min,
        "\n" + min_fill.to_string());
    RankingTableau min_rank = rank_tableau(min_fill);
    const std::vector<std::vector<int>> expected_min_rank = {
        {0, 1, 2, 3, 4}, {1, 2, 3}, {3, 4, 5, 6}, {4, 5}};
    add(report, "ranking of smallest-active filling", min_rank.columns == expected_min_rank,
        "\n" + min_rank.to_string());
    StatSequence b = bounce(path);
    add(report, "bounce sequence (0,1,3,4), bounce 8",
        b.sequence == std::vector<int>{0, 1, 3, 4} && b.total == 8,
        "got " + seq_str(b.sequence) + " sum " + std::to_string(b.total));

    FillingTableau max_fill = fill_max(path);
    const std::vector<std::vector<int>> expected_max = {
        {1, 2, 6, 7, 14}, {3, 4, 5}, {8, 9, 10, 13}, {11, 12}};
    add(report, "largest-active filling tableau", max_fill.columns() == expected_max,
        "\n" + max_fill.to_string());
    RankingTableau max_rank = rank_tableau(max_fill);
    const std::vector<std::vector<int>> expected_max_rank = {
        {0, 1, 2, 3, 4}, {1, 2, 3}, {3, 4, 5, 6}, {5, 6}};
    add(report, "ranking of largest-active filling", max_rank.columns == expected_max_rank,
        "\n" + max_rank.to_string());
    StatSequence d = depth(path);
    add(report, "depth sequence (0,1,3,5), depth 9",
        d.sequence == std::vector<int>{0, 1, 3, 5} && d.total == 9,
        "got " + seq_str(d.sequence) + " sum " + std::to_string(d.total));

    add(report, "both fillings valid",
        validate(min_fill).ok && validate(max_fill).ok);

    DyckPath swept = sweep_map(path);
    add(report, "sweep image word", swept.to_string() == kGoldenSweepWord,
        "got " + swept.to_string());
    add(report, "sweep takes dinv to area and area to bounce",
        dinv(path) == area(swept).total && a.total == bounce(swept).total);
    return report;
}

Report figures() {
    Report report = golden_path_checks();
    const DyckPath path = DyckPath::parse(kGoldenPathWord);
    FillingTableau max_fill = fill_max(path);

    // 16-letter classical path.
    const DyckPath classical = DyckPath::parse(kClassicalWord);
    FillingTableau classical_fill = fill_max(classical);
    const std::vector<std::vector<int>> expected_classical = {
        {1, 4}, {2, 3}, {5, 12}, {6, 9}, {7, 8}, {10, 11}, {13, 16}, {14, 15}};
    add(report, "classical largest-active filling", classical_fill.columns() == expected_classical,
        "\n" + classical_fill.to_string());
    StatSequence classical_depth = depth(classical);
    const std::vector<int> expected_labels = {0, 0, 1, 1, 1, 2, 2, 2};
    add(report, "classical depth labeling (0,0,1,1,1,2,2,2), depth 9",
        classical_depth.sequence == expected_labels && classical_depth.total == 9,
        "got " + seq_str(classical_depth.sequence));
    add(report, "classical grid labeling agrees",
        classical_depth_labeling(classical) == expected_labels,
        "got " + seq_str(classical_depth_labeling(classical)));

    // Branch tree of the golden path and its dual.
    LabeledBranchTree tree = tree_from_tableau(max_fill);
    TreeStats stats = tree_stats(tree);
    add(report, "tree area sequence (0,3,1,2)", stats.area_seq == std::vector<int>{0, 3, 1, 2},
        "got " + seq_str(stats.area_seq));
    add(report, "tree depth sequence (0,1,3,5)", stats.depth_seq == std::vector<int>{0, 1, 3, 5},
        "got " + seq_str(stats.depth_seq));
    LabeledBranchTree dual_tree = dual(tree);
    TreeStats dual_stats = tree_stats(dual_tree);
    add(report, "dual tree area sequence (0,3,5,1)",
        dual_stats.area_seq == std::vector<int>{0, 3, 5, 1}, "got " + seq_str(dual_stats.area_seq));
    add(report, "dual tree depth sequence (0,1,2,3)",
        dual_stats.depth_seq == std::vector<int>{0, 1, 2, 3},
        "got " + seq_str(dual_stats.depth_seq));
    add(report, "dual of dual restores the tree", dual(dual_tree) == tree);
    add(report, "tableau round-trips through the tree",
        tableau_from_tree(tree) == max_fill);

    DyckPath mapped = omega(path);
    add(report, "omega swaps area 6 and depth 9",
        area(mapped).total == 9 && depth(mapped).total == 6,
        "got area " + std::to_string(area(mapped).total) + " depth " +
            std::to_string(depth(mapped).total));
    add(report, "omega keeps the first part", mapped.kvec().part(1) == 4);
    add(report, "omega is an involution here", omega(mapped) == path);

    // Three-run involution sample on D_(2,1,1).
    const DyckPath sample = DyckPath::parse("S2 W S1 S1 W W W");
    const DyckPath sample_image = theta(sample);
    add(report, "theta sample image", sample_image.to_string() == "S2 W S1 W S1 W W",
        "got " + sample_image.to_string());
    add(report, "theta sample swaps area 3 and depth 2",
        area(sample).total == 3 && depth(sample).total == 2 && area(sample_image).total == 2 &&
            depth(sample_image).total == 3);
    add(report, "theta sample involution", theta(sample_image) == sample);

    for (const Check& check : asymmetry_goldens()) report.push_back(check);
    return report;
}

Report classical_cross_oracle(int max_n) {
    Report report;
    const DyckPath classical = DyckPath::parse(kClassicalWord);
    const std::vector<int> expected = {0, 0, 1, 1, 1, 2, 2, 2};
    add(report, "16-letter classical path labeling",
        depth(classical).sequence == expected &&
            classical_depth_labeling(classical) == expected && depth(classical).total == 9,
        "tableau " + seq_str(depth(classical).sequence) + " grid " +
            seq_str(classical_depth_labeling(classical)));

    for (int n = 1; n <= max_n; ++n) {
        KVector ones(std::vector<int>(static_cast<size_t>(n), 1));
        bool ok = true;
        std::string detail;
        for (const DyckPath& path : enumerate_paths(ones)) {
            if (depth(path).sequence != classical_depth_labeling(path)) {
                ok = false;
                detail = "mismatch at " + path.to_string();
                break;
            }
        }
        add(report, "grid labeling = tableau labeling, n = " + std::to_string(n), ok, detail);
    }
    return report;
}

Report symmetry_class(int max_size) {
    Report report;
    for (int m = 1; m <= max_size; ++m) {
        for (const KVector& shape : partitions_of(m)) {
            SymmetryResult result =
                symmetry_check(class_poly(shape, Statistic::Area, Statistic::Depth));
            add(report, "class polynomial symmetric, shape (" + shape.to_string() + ")",
                result.symmetric, "difference " + result.difference.to_string());
        }
    }
    return report;
}

Report symmetry_prefixed(int max_a, int max_size) {
    Report report;
    for (int a = 1; a <= max_a; ++a) {
        for (int m = 1; m <= max_size; ++m) {
            for (const KVector& shape : partitions_of(m)) {
                SymmetryResult result = symmetry_check(
                    class_poly(shape, Statistic::Area, Statistic::Depth, a));
                add(report,
                    "prefixed class polynomial symmetric, a = " + std::to_string(a) +
                        ", shape (" + shape.to_string() + ")",
                    result.symmetric, "difference " + result.difference.to_string());
            }
        }
    }
    return report;
}

Report involutions(int max_letters, int theta_max) {
    Report report;
    for (const KVector& shape : classes_capped_by_letters(max_letters)) {
        bool ok = true;
        std::string detail;
        std::vector<int> sorted_parts = shape.sorted_decreasing();
        for (const DyckPath& path : all_class_paths(shape)) {
            DyckPath image = omega(path);
            if (omega(image) != path) {
                ok = false;
                detail = "omega^2 != id at " + path.to_string();
                break;
            }
            if (area(path).total != depth(image).total ||
                depth(path).total != area(image).total) {
                ok = false;
                detail = "area/depth not swapped at " + path.to_string();
                break;
            }
            if (image.kvec().part(1) != path.kvec().part(1) ||
                image.kvec().sorted_decreasing() != sorted_parts) {
                ok = false;
                detail = "image left the class block at " + path.to_string();
                break;
            }
            LabeledBranchTree tree = tree_from_tableau(fill_max(path));
            if (dual(dual(tree)) != tree) {
                ok = false;
                detail = "dual^2 != id at " + path.to_string();
                break;
            }
            TreeStats stats = tree_stats(tree);
            if (stats.area_seq != area(path).sequence ||
                stats.depth_seq != depth(path).sequence) {
                ok = false;
                detail = "tree statistics disagree with path statistics at " + path.to_string();
                break;
            }
        }
        add(report, "omega and dual involutions, shape (" + shape.to_string() + ")", ok, detail);
    }

    for (int a = 1; a <= theta_max; ++a) {
        bool ok = true;
        std::string detail;
        for (int b = 1; b <= theta_max && ok; ++b) {
            for (int c = 1; c <= theta_max && ok; ++c) {
                for (const DyckPath& path : enumerate_paths(KVector({a, b, c}))) {
                    DyckPath image = theta(path);
                    if (theta(image) != path || image.kvec() != path.kvec()) {
                        ok = false;
                        detail = "theta^2 != id at " + path.to_string();
                        break;
                    }
                    if (area(path).total != depth(image).total ||
                        depth(path).total != area(image).total) {
                        ok = false;
                        detail = "theta does not swap area/depth at " + path.to_string();
                        break;
                    }
                }
            }
        }
        add(report, "theta involution on D_(a,b,c), a = " + std::to_string(a), ok, detail);
    }
    return report;
}

Report sweep(int max_letters) {
    Report report;
    for (const KVector& shape : classes_capped_by_letters(max_letters)) {
        std::vector<DyckPath> paths = all_class_paths(shape);
        bool ok = true;
        std::string detail;
        std::vector<DyckPath> images;
        images.reserve(paths.size());
        for (const DyckPath& path : paths) {
            DyckPath image = sweep_map(path);
            if (dinv(path) != area(image).total || area(path).total != bounce(image).total) {
                ok = false;
                detail = "statistic identity fails at " + path.to_string();
                break;
            }
            images.push_back(image);
        }
        if (ok) {
            std::vector<DyckPath> sorted_paths = paths;
            std::sort(sorted_paths.begin(), sorted_paths.end());
            std::sort(images.begin(), images.end());
            if (images != sorted_paths) {
                ok = false;
                detail = "sweep is not a bijection of the class";
            }
        }
        if (ok) {
            QTPolynomial dinv_area = graded_poly(paths, Statistic::Dinv, Statistic::Area);
            QTPolynomial area_bounce = graded_poly(paths, Statistic::Area, Statistic::Bounce);
            if (dinv_area != area_bounce) {
                ok = false;
                detail = "(dinv,area) and (area,bounce) polynomials differ: " +
                         dinv_area.to_string() + " vs " + area_bounce.to_string();
            }
        }
        add(report, "sweep map, shape (" + shape.to_string() + ")", ok, detail);
    }
    return report;
}

Report counting(int max_size) {
    Report report;
    for (int m = 1; m <= max_size; ++m) {
        for (const KVector& shape : partitions_of(m)) {
            size_t enumerated = 0;
            for (auto& [rearranged, block] : enumerate_class(shape)) enumerated += block.size();
            mpz_class formula = count_paths(shape, true);
            add(report, "class count, shape (" + shape.to_string() + ")",
                formula == static_cast<long>(enumerated),
                "formula " + formula.get_str() + " vs enumerated " + std::to_string(enumerated));
        }
    }

    for (int n = 1; 2 * n <= 16; ++n) {
        KVector ones(std::vector<int>(static_cast<size_t>(n), 1));
        mpz_class catalan;
        mpz_bin_uiui(catalan.get_mpz_t(), 2 * static_cast<unsigned long>(n),
                     static_cast<unsigned long>(n));
        catalan /= n + 1;
        bool ok = count_paths(ones, false) == catalan &&
                  static_cast<long>(enumerate_paths(ones).size()) == catalan;
        add(report, "Catalan count, n = " + std::to_string(n), ok);
    }
    for (int k = 1; k <= 15; ++k) {
        for (int n = 1; (k + 1) * n <= 16; ++n) {
            KVector constant(std::vector<int>(static_cast<size_t>(n), k));
            mpz_class fuss;
            mpz_bin_uiui(fuss.get_mpz_t(),
                         static_cast<unsigned long>((k + 1) * n),
                         static_cast<unsigned long>(n));
            fuss /= k * n + 1;
            bool ok = count_paths(constant, false) == fuss &&
                      static_cast<long>(enumerate_paths(constant).size()) == fuss;
            add(report,
                "Fuss-Catalan count, k = " + std::to_string(k) + ", n = " + std::to_string(n),
                ok);
        }
    }
    return report;
}

Report asymmetry_goldens() {
    Report report;
    const QTPolynomial golden = golden_difference_1121();

    QTPolynomial poly_1121 =
        graded_poly(enumerate_paths(KVector({1, 1, 2, 1})), Statistic::Area, Statistic::Depth);
    SymmetryResult check_1121 = symmetry_check(poly_1121);
    add(report, "(1,1,2,1) difference is -q^4*t + q*t^4 + q^3*t - q*t^3",
        check_1121.difference == golden, "got " + check_1121.difference.to_string());

    QTPolynomial poly_1211 =
        graded_poly(enumerate_paths(KVector({1, 2, 1, 1})), Statistic::Area, Statistic::Depth);
    QTPolynomial negated;
    negated -= golden;
    SymmetryResult check_1211 = symmetry_check(poly_1211);
    add(report, "(1,2,1,1) difference is q^4*t - q*t^4 - q^3*t + q*t^3",
        check_1211.difference == negated, "got " + check_1211.difference.to_string());

    QTPolynomial poly_1131 =
        graded_poly(enumerate_paths(KVector({1, 1, 3, 1})), Statistic::Area, Statistic::Depth);
    QTPolynomial poly_1311 =
        graded_poly(enumerate_paths(KVector({1, 3, 1, 1})), Statistic::Area, Statistic::Depth);
    QTPolynomial poly_1113 =
        graded_poly(enumerate_paths(KVector({1, 1, 1, 3})), Statistic::Area, Statistic::Depth);
    add(report, "(1,1,3,1) and (1,3,1,1) are asymmetric alone",
        !symmetry_check(poly_1131).symmetric && !symmetry_check(poly_1311).symmetric);
    add(report, "(1,1,3,1) + (1,3,1,1) is symmetric",
        symmetry_check(poly_1131 + poly_1311).symmetric,
        symmetry_check(poly_1131 + poly_1311).difference.to_string());
    add(report, "(1,1,1,3) is symmetric", symmetry_check(poly_1113).symmetric);
    add(report, "(1,1,3,1) + (1,3,1,1) + (1,1,1,3) is symmetric",
        symmetry_check(poly_1131 + poly_1311 + poly_1113).symmetric);
    return report;
}

Report closed_form(int max_abc) {
    Report report;
    for (int a = 1; a <= max_abc; ++a) {
        for (int b = 1; b <= max_abc; ++b) {
            bool ok = true;
            std::string detail;
            QTPolynomial at_c1 = closed_form_abc(a, b, 1);
            for (int c = 1; c <= max_abc; ++c) {
                QTPolynomial coefficient = closed_form_abc(a, b, c);
                if (coefficient != at_c1) {
                    ok = false;
                    detail = "coefficient depends on c at c = " + std::to_string(c);
                    break;
                }
                QTPolynomial enumerated = graded_poly(enumerate_paths(KVector({a, b, c})),
                                                      Statistic::Area, Statistic::Depth);
                if (coefficient != enumerated) {
                    ok = false;
                    detail = "series " + coefficient.to_string() + " vs enumerated " +
                             enumerated.to_string() + " at c = " + std::to_string(c);
                    break;
                }
            }
            add(report,
                "closed form matches enumeration, a = " + std::to_string(a) +
                    ", b = " + std::to_string(b),
                ok, detail);
        }
    }
    return report;
}

Report depth_bounce(int max_part, int a1c_max) {
    Report report;

    bool ok = true;
    std::string detail;
    for (int i = 1; i <= max_part && ok; ++i) {
        for (const DyckPath& path : enumerate_paths(KVector({i}))) {
            if (depth(path).total != bounce(path).total) {
                ok = false;
                detail = "mismatch at " + path.to_string();
                break;
            }
        }
    }
    add(report, "depth = bounce for one-part vectors", ok, detail);

    ok = true;
    detail.clear();
    for (int i = 1; i <= max_part && ok; ++i) {
        for (int j = 1; j <= max_part && ok; ++j) {
            for (const DyckPath& path : enumerate_paths(KVector({i, j}))) {
                if (depth(path).total != bounce(path).total) {
                    ok = false;
                    detail = "mismatch at " + path.to_string();
                    break;
                }
            }
        }
    }
    add(report, "depth = bounce for two-part vectors", ok, detail);

    ok = true;
    detail.clear();
    for (int a = 1; a <= a1c_max && ok; ++a) {
        for (int c = 1; c <= a1c_max && ok; ++c) {
            for (const DyckPath& path : enumerate_paths(KVector({a, 1, c}))) {
                if (depth(path).total != bounce(path).total) {
                    ok = false;
                    detail = "mismatch at " + path.to_string();
                    break;
                }
            }
        }
    }
    add(report, "depth = bounce for (a,1,c)", ok, detail);

    const std::vector<std::vector<int>> prefixes = {
        {1},       {2},       {3},       {4},       {5},
        {1, 1},    {1, 2},    {2, 1},    {2, 2},    {3, 1},
        {1, 3},    {3, 2},    {2, 3},    {4, 1},    {1, 4},
        {1, 1, 1}, {2, 1, 1}, {1, 2, 1}, {1, 1, 2}, {2, 2, 1},
    };
    for (const std::vector<int>& prefix : prefixes) {
        std::vector<int> parts = prefix;
        parts.push_back(1);
        QTPolynomial base =
            graded_poly(enumerate_paths(KVector(parts)), Statistic::Area, Statistic::Depth);
        ok = true;
        detail.clear();
        for (int last = 2; last <= 5; ++last) {
            parts.back() = last;
            QTPolynomial other =
                graded_poly(enumerate_paths(KVector(parts)), Statistic::Area, Statistic::Depth);
            if (other != base) {
                ok = false;
                detail = "changed with last part " + std::to_string(last);
                break;
            }
        }
        add(report, "last part does not matter, prefix (" + KVector(prefix).to_string() + ")",
            ok, detail);
    }
    return report;
}

Report conjectures() {
    Report report;

    auto observe_family = [&](const std::string& name,
                              const std::vector<KVector>& vectors,
                              Statistic stat_q, Statistic stat_t) {
        int symmetric = 0;
        std::vector<std::string> asymmetric;
        for (const KVector& kvec : vectors) {
            QTPolynomial poly = graded_poly(enumerate_paths(kvec), stat_q, stat_t);
            if (symmetry_check(poly).symmetric)
                ++symmetric;
            else
                asymmetric.push_back("(" + kvec.to_string() + ")");
        }
        std::ostringstream out;
        out << symmetric << "/" << vectors.size() << " symmetric";
        if (!asymmetric.empty()) {
            out << "; asymmetric:";
            for (const std::string& v : asymmetric) out << ' ' << v;
        }
        report.push_back({name, true, out.str()});
    };

    // (bounce, depth) polynomials for the observed shapes.
    std::vector<KVector> shapes;
    for (int a = 1; a <= 4; ++a)
        for (int c = 1; c <= 4; ++c) shapes.emplace_back(std::vector<int>{a, 2, c});
    observe_family("(bounce,depth) on (a,2,c), a,c <= 4", shapes, Statistic::Bounce,
                   Statistic::Depth);

    shapes.clear();
    for (int a = 1; a <= 3; ++a)
        for (int d = 1; d <= 3; ++d) shapes.emplace_back(std::vector<int>{a, 1, 1, d});
    observe_family("(bounce,depth) on (a,1,1,d), a,d <= 3", shapes, Statistic::Bounce,
                   Statistic::Depth);

    shapes.clear();
    for (int a = 1; a <= 2; ++a)
        for (int d = 1; d <= 2; ++d) shapes.emplace_back(std::vector<int>{a, 2, 1, d});
    observe_family("(bounce,depth) on (a,2,1,d), a,d <= 2", shapes, Statistic::Bounce,
                   Statistic::Depth);

    shapes.clear();
    for (int a = 1; a <= 2; ++a)
        for (int e = 1; e <= 2; ++e) shapes.emplace_back(std::vector<int>{a, 1, 1, 1, e});
    observe_family("(bounce,depth) on (a,1,1,1,e), a,e <= 2", shapes, Statistic::Bounce,
                   Statistic::Depth);

    observe_family("(bounce,depth) on a length-6 vector",
                   {KVector({1, 1, 1, 1, 1, 1})}, Statistic::Bounce, Statistic::Depth);

    // (area, depth) symmetry with appended and wrapped parts.
    auto class_with_suffix = [](const KVector& kvec, std::optional<int> prefix, int suffix) {
        QTPolynomial sum;
        for (const KVector& rearranged : rearrangements(kvec)) {
            std::vector<int> parts;
            if (prefix) parts.push_back(*prefix);
            parts.insert(parts.end(), rearranged.parts().begin(), rearranged.parts().end());
            parts.push_back(suffix);
            sum += graded_poly(enumerate_paths(KVector(parts)), Statistic::Area,
                               Statistic::Depth);
        }
        return sum;
    };

    {
        const std::vector<KVector> bases = {KVector({1, 2}), KVector({1, 3}), KVector({2, 3}),
                                            KVector({1, 1, 2})};
        int symmetric = 0, total = 0;
        std::vector<std::string> asymmetric;
        for (const KVector& base : bases) {
            for (int b = 1; b <= 3; ++b) {
                ++total;
                if (symmetry_check(class_with_suffix(base, std::nullopt, b)).symmetric)
                    ++symmetric;
                else
                    asymmetric.push_back("(" + base.to_string() + ")^" + std::to_string(b));
            }
        }
        std::ostringstream out;
        out << symmetric << "/" << total << " symmetric";
        if (!asymmetric.empty()) {
            out << "; asymmetric:";
            for (const std::string& v : asymmetric) out << ' ' << v;
        }
        report.push_back({"(area,depth) on suffixed classes K^b", true, out.str()});
    }

    {
        const std::vector<KVector> bases = {KVector({1, 2}), KVector({2, 3})};
        int symmetric = 0, total = 0;
        std::vector<std::string> asymmetric;
        for (const KVector& base : bases) {
            for (int a = 1; a <= 2; ++a) {
                for (int b = 1; b <= 2; ++b) {
                    ++total;
                    if (symmetry_check(class_with_suffix(base, a, b)).symmetric)
                        ++symmetric;
                    else
                        asymmetric.push_back("^" + std::to_string(a) + "(" + base.to_string() +
                                             ")^" + std::to_string(b));
                }
            }
        }
        std::ostringstream out;
        out << symmetric << "/" << total << " symmetric";
        if (!asymmetric.empty()) {
            out << "; asymmetric:";
            for (const std::string& v : asymmetric) out << ' ' << v;
        }
        report.push_back({"(area,depth) on wrapped classes ^aK^b", true, out.str()});
    }

    return report;
}

}  // namespace kdyck::verify
