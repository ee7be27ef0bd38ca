#include <catch2/catch_amalgamated.hpp>

#include "mzv/words.hpp"

using namespace mzv;

namespace {
Word23 W(const std::string& s) { return Word23(s); }

std::vector<Word23> words_of_weight(int N) {
    std::vector<Word23> out;
    if (N == 0) {
        out.emplace_back();
        return out;
    }
    if (N >= 2)
        for (auto& w : words_of_weight(N - 2)) out.push_back(W("2") + w);
    if (N >= 3)
        for (auto& w : words_of_weight(N - 3)) out.push_back(W("3") + w);
    return out;
}
}  // namespace

TEST_CASE("rho encoding") {
    CHECK(rho(W("2")).str() == "0;10;1");
    CHECK(rho(W("3")).str() == "0;100;1");
    CHECK(rho(W("3322")).str() == "0;1001001010;1");
    CHECK(rho(Word23()).str() == "0;;1");
}

TEST_CASE("unrho parses exactly the image of rho") {
    CHECK(unrho(*BinarySeq::parse("0;1010;1")) == W("22"));
    CHECK(unrho(*BinarySeq::parse("0;100;1")) == W("3"));
    CHECK(!unrho(*BinarySeq::parse("0;1000;1")).has_value());
    CHECK(!unrho(*BinarySeq::parse("0;101;1")).has_value());
    CHECK(!unrho(*BinarySeq::parse("0;0110;1")).has_value());
    CHECK(!unrho(*BinarySeq::parse("1;10;0")).has_value());
    CHECK(unrho(*BinarySeq::parse("0;;1")) == Word23());

    for (int N = 0; N <= 12; ++N)
        for (auto& w : words_of_weight(N)) CHECK(unrho(rho(w)) == w);
}

TEST_CASE("weight and level") {
    CHECK(word_stats(W("2233")) == std::pair{10, 2});
    CHECK(word_stats(Word23()) == std::pair{0, 0});
    CHECK(word_stats(W("32")) == std::pair{5, 1});
}

TEST_CASE("word order matches the published row and column orders") {
    CHECK(Word23::compare(W("2233"), W("2323")) < 0);
    CHECK(Word23::compare(W("232"), W("23")) < 0);
    CHECK(Word23::compare(W("32"), W("3")) < 0);
    CHECK(Word23::compare(W("3"), W("3")) == 0);
    CHECK(Word23::compare(W("3"), W("32")) > 0);
}

TEST_CASE("basis enumeration reproduces the published bases") {
    auto b = enumerate_basis(10, 2, BasisKind::B);
    std::vector<Word23> expect_b{W("2233"), W("2323"), W("2332"),
                                 W("3223"), W("3232"), W("3322")};
    CHECK(b == expect_b);

    auto bp = enumerate_basis(10, 2, BasisKind::Bprime);
    std::vector<Word23> expect_bp{W("223"), W("232"), W("23"), W("322"), W("32"), W("3")};
    CHECK(bp == expect_bp);

    CHECK(enumerate_basis(3, 1, BasisKind::B) == std::vector<Word23>{W("3")});
    CHECK(enumerate_basis(4, 1, BasisKind::B).empty());
    CHECK_THROWS_AS(enumerate_basis(10, 0, BasisKind::B), std::invalid_argument);
}

TEST_CASE("dimension recursion") {
    CHECK(dims(0) == 1);
    CHECK(dims(1) == 0);
    CHECK(dims(2) == 1);
    CHECK(dims(12) == 12);
}

TEST_CASE("basis sizes: binomial count and dimension accounting") {
    for (int N = 2; N <= 40; ++N) {
        Int total = (N % 2 == 0) ? 1 : 0;  // level-0 words
        for (int l = 1; 3 * l <= N; ++l) {
            auto b = enumerate_basis(N, l, BasisKind::B);
            if ((N - 3 * l) % 2 != 0) {
                CHECK(b.empty());
                continue;
            }
            int m = (N - 3 * l) / 2;
            CHECK(Int(b.size()) == binomial(m + l, l));
            CHECK(b.size() == enumerate_basis(N, l, BasisKind::Bprime).size());
            total += static_cast<long>(b.size());
        }
        CHECK(total == dims(N));
    }
}

TEST_CASE("appending 3 2^{r-1} is an order-preserving bijection onto the basis") {
    for (int N = 4; N <= 30; ++N) {
        for (int l = 1; 3 * l <= N; ++l) {
            if ((N - 3 * l) % 2 != 0) continue;
            auto b = enumerate_basis(N, l, BasisKind::B);
            auto bp = enumerate_basis(N, l, BasisKind::Bprime);
            REQUIRE(b.size() == bp.size());
            for (size_t i = 0; i < bp.size(); ++i) {
                int deficit = N - bp[i].weight() - 3;
                REQUIRE(deficit >= 0);
                REQUIRE(deficit % 2 == 0);
                Word23 img = bp[i] + W("3") + W(std::string(deficit / 2, '2'));
                CHECK(img == b[i]);
            }
        }
    }
}

TEST_CASE("shuffle of binary words") {
    auto s = shuffle_words("1", "0");
    CHECK(s == std::map<std::string, Int>{{"10", 1}, {"01", 1}});

    auto d = shuffle_words("10", "10");
    CHECK(d == std::map<std::string, Int>{{"1010", 2}, {"1100", 4}});

    CHECK(shuffle_words("101", "") == std::map<std::string, Int>{{"101", 1}});
}

TEST_CASE("shuffle properties") {
    auto total = [](const std::map<std::string, Int>& m) {
        Int t = 0;
        for (auto& [w, c] : m) t += c;
        return t;
    };
    std::vector<std::pair<std::string, std::string>> samples{
        {"10", "110"}, {"0", "0101"}, {"100", "100"}, {"11", "00"}};
    for (auto& [u, v] : samples) {
        CHECK(shuffle_words(u, v) == shuffle_words(v, u));
        CHECK(total(shuffle_words(u, v)) == binomial(u.size() + v.size(), u.size()));
    }
    // associativity on a sample
    auto lhs = std::map<std::string, Int>{};
    for (auto& [w, c] : shuffle_words("10", "0"))
        for (auto& [w2, c2] : shuffle_words(w, "1")) lhs[w2] += c * c2;
    auto rhs = std::map<std::string, Int>{};
    for (auto& [w, c] : shuffle_words("0", "1"))
        for (auto& [w2, c2] : shuffle_words("10", w)) rhs[w2] += c * c2;
    CHECK(lhs == rhs);
}
