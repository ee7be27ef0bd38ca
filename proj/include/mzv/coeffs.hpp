#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mzv/arith.hpp"
#include "mzv/words.hpp"

namespace mzv {

/// Index of a coefficient symbol: either the level-1 word 2^a 3 2^b, or the
/// divergent word 1*2^k (k >= 1). These are exactly the words whose symbols
/// can appear as window projections.
class SWord {
public:
    static SWord level1(int a, int b) {
        if (a < 0 || b < 0) throw std::invalid_argument("SWord: a,b must be >= 0");
        SWord s;
        s.one2_ = false;
        s.a_ = a;
        s.b_ = b;
        return s;
    }
    static SWord one_two(int k) {
        if (k < 1) throw std::invalid_argument("SWord: k must be >= 1");
        SWord s;
        s.one2_ = true;
        s.k_ = k;
        return s;
    }
    static std::optional<SWord> from_word(const Word23& w) {
        if (w.level() != 1) return std::nullopt;
        const std::string& d = w.digits();
        int a = static_cast<int>(d.find('3'));
        int b = static_cast<int>(d.size()) - a - 1;
        return level1(a, b);
    }
    /// Parses "223", "3", "122", "12"; rejects anything outside the index set.
    static std::optional<SWord> parse(const std::string& s) {
        if (s.empty()) return std::nullopt;
        if (s[0] == '1') {
            for (size_t i = 1; i < s.size(); ++i)
                if (s[i] != '2') return std::nullopt;
            if (s.size() < 2) return std::nullopt;  // bare "1" is not indexed
            return one_two(static_cast<int>(s.size()) - 1);
        }
        auto w = Word23::parse(s);
        if (!w) return std::nullopt;
        return from_word(*w);
    }

    bool is_one_two() const { return one2_; }
    int a() const { check_level1(); return a_; }
    int b() const { check_level1(); return b_; }
    int k() const {
        if (!one2_) throw std::logic_error("SWord: not a 1*2^k word");
        return k_;
    }
    int weight() const { return one2_ ? 2 * k_ + 1 : 2 * (a_ + b_) + 3; }

    Word23 word() const {
        check_level1();
        return Word23(std::string(a_, '2') + "3" + std::string(b_, '2'));
    }
    std::string str() const {
        if (one2_) return "1" + std::string(k_, '2');
        return std::string(a_, '2') + "3" + std::string(b_, '2');
    }

    SWord reversed() const { check_level1(); return level1(b_, a_); }
    /// min(w, reversal of w) under the word order: more leading 2s first.
    SWord canonical() const {
        if (one2_) return *this;
        return level1(std::max(a_, b_), std::min(a_, b_));
    }

    friend bool operator==(const SWord& x, const SWord& y) {
        if (x.one2_ != y.one2_) return false;
        return x.one2_ ? x.k_ == y.k_ : (x.a_ == y.a_ && x.b_ == y.b_);
    }
    friend bool operator!=(const SWord& x, const SWord& y) { return !(x == y); }
    // Level-1 words in word order first, then 1*2^k by k.
    friend bool operator<(const SWord& x, const SWord& y) {
        if (x.one2_ != y.one2_) return y.one2_;
        if (x.one2_) return x.k_ < y.k_;
        return Word23::compare(x.word(), y.word()) < 0;
    }

private:
    void check_level1() const {
        if (one2_) throw std::logic_error("SWord: not a level-1 word");
    }
    bool one2_ = false;
    int a_ = 0, b_ = 0, k_ = 0;
};

/// A^r_{a,b} = binom(2r, 2a+2), B^r_{a,b} = (1 - 2^{-2r}) binom(2r, 2b+1).
inline std::pair<Rat, Rat> zagier_ab(int r, int a, int b) {
    if (r < 1 || a < 0 || b < 0) throw std::invalid_argument("zagier_ab: need r >= 1, a,b >= 0");
    Rat A(binomial(2 * r, 2 * a + 2));
    Int p = pow_int(2, 2 * r);
    Rat B = Rat(p - 1, p) * Rat(binomial(2 * r, 2 * b + 1));
    return {A, B};
}

/// c_w for w in the index set: 2(-1)^{a+b+1}(A - B) for 2^a 3 2^b, 2(-1)^k for 1*2^k.
inline Rat coeff_c(const SWord& w) {
    if (w.is_one_two()) return Rat(w.k() % 2 == 0 ? 2 : -2);
    int n = w.a() + w.b() + 1;
    auto [A, B] = zagier_ab(n, w.a(), w.b());
    Rat c = Rat(2) * (A - B);
    return (n % 2 == 0) ? c : -c;
}

/// Coefficients alpha_r, r = 1..a+b+1, of zeta(2r+1) zeta(2^{a+b+1-r}) in the
/// level-1 expansion of zeta(2^a 3 2^b).
inline std::vector<std::pair<int, Rat>> level1_expansion(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("level1_expansion: a,b must be >= 0");
    std::vector<std::pair<int, Rat>> out;
    int n = a + b + 1;
    for (int r = 1; r <= n; ++r) {
        auto [A, B] = zagier_ab(r, a, b);
        Rat alpha = Rat(2) * (A - B);
        if (r % 2 != 0) alpha = -alpha;
        out.emplace_back(r, alpha);
    }
    return out;
}

/// Checks both collapse identities at (a, b, r); sums range over
/// alpha + beta + 1 = r with alpha, beta >= 0.
inline bool verify_collapse(int a, int b, int r) {
    if (a < 0 || b < 0 || r < 1 || r > a + b + 1)
        throw std::invalid_argument("verify_collapse: need a,b >= 0, 1 <= r <= a+b+1");
    Int p = pow_int(2, 2 * r);
    Rat scale(p - 1, p);
    Rat lhsA(0), lhsB(0);
    for (int alpha = 0; alpha <= r - 1; ++alpha) {
        int beta = r - 1 - alpha;
        if (alpha <= a && beta <= b) {
            lhsA += Rat(binomial(2 * r, 2 * alpha + 2));
            lhsB += scale * Rat(binomial(2 * r, 2 * beta + 1));
        }
        if (alpha <= a && beta <= b - 1) {
            lhsA -= Rat(binomial(2 * r, 2 * beta + 2));
            lhsB -= scale * Rat(binomial(2 * r, 2 * alpha + 1));
        }
    }
    lhsA += Rat((b >= r ? 1 : 0) - (a >= r ? 1 : 0));
    auto [A, B] = zagier_ab(r, a, b);
    return lhsA == A && lhsB == B;
}

struct TwoAdicReport {
    ValP v;                    // v_2(c_{2^a 3 2^b})
    bool symmetric_diff_even;  // c_w - c_{reversed w} in 2Z
    bool lower_bound_ok;       // v_2(c_{3 2^{a+b}}) <= v <= 0
};

inline TwoAdicReport twoadic_report(int a, int b) {
    Rat cw = coeff_c(SWord::level1(a, b));
    Rat cr = coeff_c(SWord::level1(b, a));
    Rat diff = cw - cr;
    Rat half = diff / Rat(2);
    bool even = half.is_integer();
    ValP v = v2(cw);
    ValP vb = v2(coeff_c(SWord::level1(0, a + b)));
    bool lb = vb <= v && v <= ValP::of(0);
    return {v, even, lb};
}

}  // namespace mzv
