#include <catch2/catch_amalgamated.hpp>

#include <filesystem>

#include "mzv/export.hpp"

using namespace mzv;

namespace {
struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("mzv-cache-test-" + std::to_string(::getpid()));
        std::filesystem::remove_all(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};
}  // namespace

TEST_CASE("json round trip is the identity, formal and numeric") {
    auto mf = build_matrix_formal(10, 2);
    auto back_f = matrix_from_json<FormalCoeff>(matrix_to_json(mf));
    CHECK(back_f == mf);

    auto mn = build_matrix_numeric(12, 2);
    auto back_n = matrix_from_json<Rat>(matrix_to_json(mn));
    CHECK(back_n == mn);

    CHECK_THROWS_AS(matrix_from_json<Rat>(matrix_to_json(mf)), std::invalid_argument);
}

TEST_CASE("csv flattening matches the table typography") {
    auto m = build_matrix_formal(10, 2);
    std::string csv = matrix_to_csv(m);
    CHECK(csv.find("\"C23 - C32 - C122\"") != std::string::npos);
    CHECK(csv.find(",223,232,23,322,32,3") != std::string::npos);

    auto n = build_matrix_numeric(10, 2);
    std::string ncsv = matrix_to_csv(n);
    CHECK(ncsv.find("-11/2") != std::string::npos);

    std::string tex = matrix_to_latex(m);
    CHECK(tex.find("C_{122}") != std::string::npos);
}

TEST_CASE("numeric csv of the empty-word column uses the display form") {
    auto m = build_matrix_numeric(5, 1);
    std::string csv = matrix_to_csv(m);
    CHECK(csv.find("ε") != std::string::npos);
}

TEST_CASE("cache stores, validates, and reloads identical payloads") {
    TempDir t;
    MatrixCache cache(t.path.string());

    auto miss = cache.get_or_build<FormalCoeff>(10, 2);
    CHECK(std::filesystem::exists(cache.path_for(10, 2, true)));
    auto hit = cache.get_or_build<FormalCoeff>(10, 2);
    CHECK(miss == hit);
    CHECK(miss == build_matrix_formal(10, 2));

    auto num = cache.get_or_build<Rat>(10, 2);
    CHECK(num == build_matrix_numeric(10, 2));
    CHECK(std::filesystem::exists(cache.path_for(10, 2, false)));
}

TEST_CASE("corrupted cache entries are recomputed") {
    TempDir t;
    MatrixCache cache(t.path.string());
    cache.store(build_matrix_numeric(8, 2));
    {
        std::ofstream f(cache.path_for(8, 2, false));
        f << "{\"schema\": 1, \"garbage\": true}";
    }
    CHECK(!cache.load<Rat>(8, 2).has_value());
    auto rebuilt = cache.get_or_build<Rat>(8, 2);
    CHECK(rebuilt == build_matrix_numeric(8, 2));
    // digest mismatch: flip a byte inside the payload
    {
        std::ifstream f(cache.path_for(8, 2, false));
        std::stringstream ss;
        ss << f.rdbuf();
        std::string text = ss.str();
        auto pos = text.find("\"entries\"");
        REQUIRE(pos != std::string::npos);
        text[pos + 1] = 'X';
        std::ofstream out(cache.path_for(8, 2, false));
        out << text;
    }
    CHECK(!cache.load<Rat>(8, 2).has_value());
}
