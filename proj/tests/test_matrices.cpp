#include <catch2/catch_amalgamated.hpp>

#include "mzv/matrices.hpp"

using namespace mzv;

namespace {
Word23 W(const std::string& s) { return Word23(s); }
FormalCoeff C(const std::string& w) { return FormalCoeff::symbol(*SWord::parse(w)); }

// Plain rational Gaussian elimination, kept independent of the
// fraction-free path it checks.
Rat det_by_rational_elimination(std::vector<std::vector<Rat>> m) {
    const int n = static_cast<int>(m.size());
    Rat det(1);
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (!m[i][k].is_zero()) { piv = i; break; }
        if (piv < 0) return Rat(0);
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (int i = k + 1; i < n; ++i) {
            Rat f = m[i][k] / m[k][k];
            for (int j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return det;
}
}  // namespace

TEST_CASE("one-by-one blocks") {
    auto m = build_matrix_numeric(3, 1);
    REQUIRE(m.size() == 1);
    CHECK(m.rows == std::vector<Word23>{W("3")});
    CHECK(m.cols == std::vector<Word23>{Word23()});
    CHECK(m.at(0, 0) == Rat(1));
    CHECK(determinant_exact(m) == Rat(1));
}

TEST_CASE("empty blocks are empty matrices") {
    CHECK(build_matrix_numeric(4, 1).size() == 0);
}

TEST_CASE("the weight-10 level-2 formal matrix, all 36 entries") {
    auto m = build_matrix_formal(10, 2);
    REQUIRE(m.size() == 6);
    std::vector<Word23> rows{W("2233"), W("2323"), W("2332"), W("3223"), W("3232"), W("3322")};
    std::vector<Word23> cols{W("223"), W("232"), W("23"), W("322"), W("32"), W("3")};
    CHECK(m.rows == rows);
    CHECK(m.cols == cols);

    // Weight bookkeeping fixes each entry's column: a span-(2r+1) window
    // carries weight-(2r+1) symbols, so weight-5 symbols sit in weight-5
    // columns. In row 2332 that places C23 - C32 in column 32.
    const FormalCoeff z;
    std::vector<std::vector<FormalCoeff>> expect{
        {C("3") - C("12"), z, C("23") - C("32") - C("122"), z, z, C("223") - C("322")},
        {z, C("3") - C("12"), C("23"), z, z, z},
        {z, z, C("32"), z, C("23") - C("32"), z},
        {C("12"), z, C("32") - C("23") + C("122"), C("3") - C("12"), C("23") - C("122"), C("322")},
        {z, C("12"), z, z, C("32"), C("232")},
        {z, z, z, C("12"), C("32") - C("23") + C("122"), C("322")}};
    CHECK(m.entries == expect);

    // Each nonzero entry's symbols weigh exactly N minus the column weight.
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j)
            for (auto& [s, c] : m.at(i, j).terms())
                CHECK(s.weight() == 10 - m.cols[j].weight());
}

TEST_CASE("numeric specialization of the worked table") {
    auto m = build_matrix_numeric(10, 2);
    // entry (3322, 32): c_32 - c_23 + c_122 = 9/2 + 11/2 + 2
    CHECK(m.at(5, 4) == Rat(12));
    auto cert = certify_two_adic(m);
    CHECK(cert.pass());
    std::vector<ValP> expect{ValP::of(0), ValP::of(0), ValP::of(-1),
                             ValP::of(0), ValP::of(-1), ValP::of(-4)};
    CHECK(cert.diag == expect);
}

TEST_CASE("certificate on hand-made matrices") {
    std::vector<std::vector<Rat>> good{{Rat(1, 2), Rat(3)}, {Rat(2), Rat(1, 2)}};
    CHECK(certify_two_adic(good).pass());

    std::vector<std::vector<Rat>> bad{{Rat(2)}};
    auto c = certify_two_adic(bad);
    CHECK(!c.pass());
    CHECK(c.below_ok);
    CHECK(!c.diag_ok);
}

TEST_CASE("exact determinants") {
    std::vector<std::vector<Rat>> d{{Rat(1), Rat(0)}, {Rat(0), Rat(1, 2)}};
    CHECK(determinant_exact(d) == Rat(1, 2));

    std::vector<std::vector<Rat>> sing{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
    CHECK(determinant_exact(sing) == Rat(0));

    auto m = build_matrix_numeric(10, 2);
    Rat det = determinant_exact(m);
    CHECK(det == det_by_rational_elimination(m.entries));
    CHECK(v2(det) == ValP::of(-6));

    // a matrix needing a row swap
    std::vector<std::vector<Rat>> sw{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
    CHECK(determinant_exact(sw) == Rat(-1));
}

TEST_CASE("determinants agree with rational elimination on every block up to weight 14") {
    for (int N = 3; N <= 14; ++N) {
        for (int l = 1; 3 * l <= N; ++l) {
            auto m = build_matrix_numeric(N, l);
            if (m.size() == 0) continue;
            CHECK(determinant_exact(m) == det_by_rational_elimination(m.entries));
        }
    }
}

TEST_CASE("verification sweep up to weight 12") {
    auto rep = verify_up_to(12);
    CHECK(rep.all_ok);
    bool saw_10_2 = false;
    for (auto& b : rep.blocks) {
        CHECK(b.cert.pass());
        CHECK(b.det_nonzero);
        CHECK(b.diag_sum_matches);
        if (b.N == 10 && b.level == 2) {
            saw_10_2 = true;
            CHECK(b.v2det == ValP::of(-6));
            CHECK(b.size == 6);
        }
    }
    CHECK(saw_10_2);
    for (auto& d : rep.dims_rows) CHECK(d.ok);
}

TEST_CASE("reduced matrices are upper-triangular with the expected diagonal") {
    for (int N = 3; N <= 20; ++N) {
        for (int l = 1; 3 * l <= N; ++l) {
            auto m = build_matrix_formal(N, l);
            if (m.size() == 0) continue;
            for (int i = 0; i < m.size(); ++i) {
                for (int j = 0; j < m.size(); ++j) {
                    FormalCoeff red = m.at(i, j).canonical_mod_reversal();
                    if (i > j) {
                        CHECK(red.is_zero());
                    } else if (i == j) {
                        int r = (N - m.cols[j].weight() - 1) / 2;
                        CHECK(red == C(SWord::level1(r - 1, 0).str()));  // canonical 3 2^{r-1}
                    } else if (!red.is_zero()) {
                        REQUIRE(red.terms().size() == 1);
                        auto& [s, c] = *red.terms().begin();
                        CHECK(c == 1);
                        CHECK(!s.is_one_two());
                        CHECK(s.weight() == N - m.cols[j].weight());
                    }
                }
            }
        }
    }
}

TEST_CASE("the specialization sends every reversal generator to an even integer") {
    // generators: C_w - C_{reversed w} for level-1 w, and C_{1 2^k}
    for (int a = 0; a <= 19; ++a)
        for (int b = 0; a + b <= 19; ++b) {  // weight 2(a+b)+3 <= 41
            Rat d = (coeff_c(SWord::level1(a, b)) - coeff_c(SWord::level1(b, a))) / Rat(2);
            CHECK(d.is_integer());
        }
    for (int k = 1; 2 * k + 1 <= 41; ++k) {
        Rat h = coeff_c(SWord::one_two(k)) / Rat(2);
        CHECK(h.is_integer());
    }
}
