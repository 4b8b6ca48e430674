#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "kdyck/enumerate.hpp"
#include "kdyck/maps.hpp"
#include "kdyck/tableau.hpp"

using namespace kdyck;

namespace {

const char* kGoldenWord = "S4 W S2 W W W W S3 W W S1 W W W";

// Every well-formed shape for the given k vector: labels 1..n distributed
// into columns of size k_i + 1 with increasing columns and increasing first
// row. Brute-force oracle for the validate/fill image comparison.
std::vector<std::vector<std::vector<int>>> all_shapes(const KVector& kvec) {
    int n = kvec.letters();
    std::vector<std::vector<std::vector<int>>> shapes;
    std::vector<std::vector<int>> columns(static_cast<size_t>(kvec.length()));
    // Labels are placed in increasing order, so appending keeps columns
    // increasing; a label may open column c only when column c-1 is open.
    std::function<void(int)> place = [&](int label) {
        if (label > n) {
            shapes.push_back(columns);
            return;
        }
        for (int c = 0; c < kvec.length(); ++c) {
            auto& column = columns[static_cast<size_t>(c)];
            if (static_cast<int>(column.size()) == kvec.part(c + 1) + 1) continue;
            if (column.empty() && c > 0 && columns[static_cast<size_t>(c - 1)].empty()) break;
            column.push_back(label);
            place(label + 1);
            column.pop_back();
            if (column.empty()) break;  // opening a later column instead is handled above
        }
    };
    place(1);
    return shapes;
}

std::vector<DyckPath> sample_paths() {
    std::vector<DyckPath> paths;
    for (const KVector& shape :
         {KVector({1, 1, 1}), KVector({2, 1}), KVector({1, 2, 2}), KVector({3, 1, 2})})
        for (const auto& [rearranged, block] : enumerate_class(shape))
            paths.insert(paths.end(), block.begin(), block.end());
    return paths;
}

}  // namespace

TEST_CASE("golden-path filling tableaux") {
    DyckPath path = DyckPath::parse(kGoldenWord);

    FillingTableau min_fill = fill_min(path);
    CHECK(min_fill.columns() == std::vector<std::vector<int>>{
                                    {1, 2, 4, 6, 9}, {3, 5, 7}, {8, 10, 12, 14}, {11, 13}});
    CHECK(rank_tableau(min_fill).columns ==
          std::vector<std::vector<int>>{{0, 1, 2, 3, 4}, {1, 2, 3}, {3, 4, 5, 6}, {4, 5}});

    FillingTableau max_fill = fill_max(path);
    CHECK(max_fill.columns() == std::vector<std::vector<int>>{
                                    {1, 2, 6, 7, 14}, {3, 4, 5}, {8, 9, 10, 13}, {11, 12}});
    CHECK(rank_tableau(max_fill).columns ==
          std::vector<std::vector<int>>{{0, 1, 2, 3, 4}, {1, 2, 3}, {3, 4, 5, 6}, {5, 6}});

    CHECK(min_fill.first_row() == std::vector<int>{1, 3, 8, 11});
    CHECK(max_fill.first_row() == min_fill.first_row());
}

TEST_CASE("small fillings by hand") {
    // With both columns active the smallest entry is 1 and the largest 2,
    // so the two algorithms split here.
    DyckPath path = DyckPath::parse("S1 S1 W W");
    CHECK(fill_min(path).columns() == std::vector<std::vector<int>>{{1, 3}, {2, 4}});
    CHECK(fill_max(path).columns() == std::vector<std::vector<int>>{{1, 4}, {2, 3}});

    DyckPath single = DyckPath::parse("S4 W W W W");
    CHECK(fill_min(single).columns() == std::vector<std::vector<int>>{{1, 2, 3, 4, 5}});
    CHECK(fill_max(single) == FillingTableau(KVector({4}), {{1, 2, 3, 4, 5}}, FillVariant::Max));
    CHECK(rank_tableau(fill_min(single)).columns ==
          std::vector<std::vector<int>>{{0, 1, 2, 3, 4}});
}

TEST_CASE("bounce and depth") {
    DyckPath golden = DyckPath::parse(kGoldenWord);
    CHECK(bounce(golden).sequence == std::vector<int>{0, 1, 3, 4});
    CHECK(bounce(golden).total == 8);
    CHECK(depth(golden).sequence == std::vector<int>{0, 1, 3, 5});
    CHECK(depth(golden).total == 9);

    CHECK(bounce(DyckPath::parse("S3 W W W")).sequence == std::vector<int>{0});
    CHECK(bounce(DyckPath::parse("S1 W S1 W")).sequence == std::vector<int>{0, 1});
    CHECK(bounce(DyckPath::parse("S1 W S1 W")).total == 1);
    CHECK(depth(DyckPath::parse("S1 S1 W W")).sequence == std::vector<int>{0, 0});
    CHECK(depth(DyckPath::parse("S1 S1 W W")).total == 0);

    DyckPath classical = DyckPath::parse("S1 S1 W W S1 S1 S1 W W S1 W W S1 S1 W W");
    CHECK(depth(classical).sequence == std::vector<int>{0, 0, 1, 1, 1, 2, 2, 2});
    CHECK(depth(classical).total == 9);
}

TEST_CASE("first rows record the S positions") {
    for (const DyckPath& path : sample_paths()) {
        CHECK(fill_min(path).first_row() == path.south_positions());
        CHECK(fill_max(path).first_row() == path.south_positions());
    }
}

TEST_CASE("unfill inverts both fillings") {
    for (const DyckPath& path : sample_paths()) {
        CHECK(unfill(fill_min(path)) == path);
        CHECK(unfill(fill_max(path)) == path);
    }
    CHECK(unfill(FillingTableau(KVector({3}), {{1, 2, 3, 4}}, FillVariant::Min)).to_string() ==
          "S3 W W W");
}

TEST_CASE("filling properties over every class up to 12 letters") {
    for (int m = 1; m <= 11; ++m) {
        for (const KVector& shape : partitions_of(m)) {
            if (shape.letters() > 12) continue;
            for (const auto& [rearranged, block] : enumerate_class(shape)) {
                for (const DyckPath& path : block) {
                    FillingTableau min_fill = fill_min(path);
                    FillingTableau max_fill = fill_max(path);
                    CHECK(unfill(min_fill) == path);
                    CHECK(unfill(max_fill) == path);
                    CHECK(min_fill.first_row() == max_fill.first_row());
                    CHECK(validate(min_fill).ok);
                    CHECK(validate(max_fill).ok);
                }
            }
        }
    }
}

TEST_CASE("shape validation in the constructor") {
    KVector two(std::vector<int>{1, 1});
    CHECK_THROWS_AS(FillingTableau(two, {{1, 2}}, FillVariant::Min), std::invalid_argument);
    CHECK_THROWS_AS(FillingTableau(two, {{1, 2, 3}, {4}}, FillVariant::Min),
                    std::invalid_argument);
    CHECK_THROWS_AS(FillingTableau(two, {{1, 2}, {2, 4}}, FillVariant::Min),
                    std::invalid_argument);  // repeated label
    CHECK_THROWS_AS(FillingTableau(two, {{2, 3}, {1, 4}}, FillVariant::Min),
                    std::invalid_argument);  // first row not increasing
    CHECK_THROWS_AS(FillingTableau(two, {{1, 9}, {2, 3}}, FillVariant::Min),
                    std::invalid_argument);  // label out of range
    CHECK_THROWS_AS(FillingTableau(two, {{3, 1}, {2, 4}}, FillVariant::Min),
                    std::invalid_argument);  // column not increasing
}

TEST_CASE("variant membership validation") {
    DyckPath golden = DyckPath::parse(kGoldenWord);
    CHECK(validate(fill_min(golden)).ok);
    CHECK(validate(fill_max(golden)).ok);

    // 4 sits below 2 but label 3 does not fill an entire column; the
    // adjacency (1,3) trapping label 2 witnesses the same failure.
    FillingTableau bad_max(KVector({1, 1}), {{1, 3}, {2, 4}}, FillVariant::Max);
    ValidationResult result = validate(bad_max);
    CHECK_FALSE(result.ok);
    REQUIRE(result.witness.has_value());
    bool genuine_witness =
        *result.witness == std::make_pair(1, 3) || *result.witness == std::make_pair(2, 4);
    CHECK(genuine_witness);
    CHECK_THROWS_AS(unfill(bad_max), std::invalid_argument);

    // Row 2 reads (4, 3): not a smallest-active image.
    CHECK_FALSE(validate(FillingTableau(KVector({1, 1}), {{1, 4}, {2, 3}}, FillVariant::Min)).ok);
}

TEST_CASE("validate agrees with the fill images") {
    for (const KVector& kvec :
         {KVector({1, 1}), KVector({1, 2}), KVector({2, 1}), KVector({1, 1, 1})}) {
        std::set<std::vector<std::vector<int>>> min_images, max_images;
        for (const DyckPath& path : enumerate_paths(kvec)) {
            min_images.insert(fill_min(path).columns());
            max_images.insert(fill_max(path).columns());
        }
        for (const auto& columns : all_shapes(kvec)) {
            CHECK(validate(FillingTableau(kvec, columns, FillVariant::Min)).ok ==
                  (min_images.count(columns) > 0));
            CHECK(validate(FillingTableau(kvec, columns, FillVariant::Max)).ok ==
                  (max_images.count(columns) > 0));
        }
    }
}

TEST_CASE("tableau equality respects the variant") {
    FillingTableau as_min(KVector({1, 1}), {{1, 2}, {3, 4}}, FillVariant::Min);
    FillingTableau as_max(KVector({1, 1}), {{1, 2}, {3, 4}}, FillVariant::Max);
    CHECK(as_min == as_min);
    CHECK_FALSE(as_min == as_max);
}

TEST_CASE("debug layout") {
    CHECK(fill_min(DyckPath::parse(kGoldenWord)).to_string() ==
          " 1  3  8 11\n"
          " 2  5 10 13\n"
          " 4  7 12  -\n"
          " 6  - 14  -\n"
          " 9  -  -  -\n");
}

TEST_CASE("depth equals bounce for short vectors") {
    for (int i = 1; i <= 4; ++i) {
        for (const DyckPath& path : enumerate_paths(KVector({i})))
            CHECK(depth(path).total == bounce(path).total);
        for (int j = 1; j <= 4; ++j)
            for (const DyckPath& path : enumerate_paths(KVector({i, j})))
                CHECK(depth(path).total == bounce(path).total);
    }
    for (int a = 1; a <= 3; ++a)
        for (int c = 1; c <= 3; ++c)
            for (const DyckPath& path : enumerate_paths(KVector({a, 1, c})))
                CHECK(depth(path).total == bounce(path).total);
}

TEST_CASE("classical depth agrees with the grid labeling") {
    for (int n = 1; n <= 6; ++n) {
        KVector ones(std::vector<int>(static_cast<size_t>(n), 1));
        for (const DyckPath& path : enumerate_paths(ones))
            CHECK(depth(path).sequence == classical_depth_labeling(path));
    }
}
