#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mzv/arith.hpp"

namespace mzv {

/// A word over the alphabet {2,3}. Weight 2*(#2) + 3*(#3), level #3.
class Word23 {
public:
    Word23() = default;
    explicit Word23(std::string s) : w_(std::move(s)) {
        for (char c : w_)
            if (c != '2' && c != '3')
                throw std::invalid_argument("Word23: letters must be '2' or '3'");
    }

    static std::optional<Word23> parse(const std::string& s) {
        for (char c : s)
            if (c != '2' && c != '3') return std::nullopt;
        return Word23(s);
    }

    bool empty() const { return w_.empty(); }
    int size() const { return static_cast<int>(w_.size()); }

    int weight() const {
        int n = 0;
        for (char c : w_) n += (c == '2') ? 2 : 3;
        return n;
    }
    int level() const {
        return static_cast<int>(std::count(w_.begin(), w_.end(), '3'));
    }

    const std::string& digits() const { return w_; }
    std::string display() const { return w_.empty() ? "ε" : w_; }

    Word23 reversed() const { return Word23(std::string(w_.rbegin(), w_.rend())); }

    friend Word23 operator+(const Word23& a, const Word23& b) {
        return Word23(a.w_ + b.w_);
    }

    // Letter-by-letter with 2 < 3; a longer word precedes its proper prefixes
    // (equivalently, pad with an end marker greater than both letters).
    static int compare(const Word23& u, const Word23& v) {
        const std::string &a = u.w_, &b = v.w_;
        size_t n = std::min(a.size(), b.size());
        for (size_t i = 0; i < n; ++i) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        if (a.size() == b.size()) return 0;
        return a.size() > b.size() ? -1 : 1;
    }

    friend bool operator==(const Word23& a, const Word23& b) { return a.w_ == b.w_; }
    friend bool operator!=(const Word23& a, const Word23& b) { return a.w_ != b.w_; }
    friend bool operator<(const Word23& a, const Word23& b) { return compare(a, b) < 0; }

private:
    std::string w_;
};

inline std::pair<int, int> word_stats(const Word23& w) {
    return {w.weight(), w.level()};
}

/// Iterated-integral symbol (a0; a1...an; a_{n+1}) with letters in {0,1}.
struct BinarySeq {
    int a0 = 0;
    int a1 = 1;
    std::string interior;  // chars '0'/'1'

    BinarySeq() = default;
    BinarySeq(int left, std::string in, int right)
        : a0(left), a1(right), interior(std::move(in)) {
        if ((a0 != 0 && a0 != 1) || (a1 != 0 && a1 != 1))
            throw std::invalid_argument("BinarySeq: endpoints must be 0 or 1");
        for (char c : interior)
            if (c != '0' && c != '1')
                throw std::invalid_argument("BinarySeq: letters must be '0' or '1'");
    }

    int length() const { return static_cast<int>(interior.size()); }

    std::string str() const {
        return std::to_string(a0) + ";" + interior + ";" + std::to_string(a1);
    }

    static std::optional<BinarySeq> parse(const std::string& s) {
        auto p1 = s.find(';');
        auto p2 = s.rfind(';');
        if (p1 == std::string::npos || p2 == p1) return std::nullopt;
        std::string l = s.substr(0, p1), mid = s.substr(p1 + 1, p2 - p1 - 1),
                    r = s.substr(p2 + 1);
        if ((l != "0" && l != "1") || (r != "0" && r != "1")) return std::nullopt;
        for (char c : mid)
            if (c != '0' && c != '1') return std::nullopt;
        return BinarySeq(l == "1", mid, r == "1");
    }

    friend bool operator==(const BinarySeq& a, const BinarySeq& b) {
        return a.a0 == b.a0 && a.a1 == b.a1 && a.interior == b.interior;
    }
    friend bool operator<(const BinarySeq& a, const BinarySeq& b) {
        return std::tie(a.a0, a.interior, a.a1) < std::tie(b.a0, b.interior, b.a1);
    }
};

/// rho(2) = 10, rho(3) = 100, endpoints (0;...;1).
inline BinarySeq rho(const Word23& w) {
    std::string s;
    s.reserve(w.digits().size() * 3);
    for (char c : w.digits()) s += (c == '2') ? "10" : "100";
    return BinarySeq(0, s, 1);
}

/// Inverse of rho on interiors: factor into tokens {10, 100}.
inline std::optional<Word23> unrho_interior(const std::string& in) {
    std::string out;
    size_t i = 0, n = in.size();
    while (i < n) {
        if (in[i] != '1') return std::nullopt;
        size_t z = 0;
        ++i;
        while (i < n && in[i] == '0') { ++z; ++i; }
        if (z == 1) out += '2';
        else if (z == 2) out += '3';
        else return std::nullopt;  // 000 run, trailing 1, or 11
    }
    return Word23(out);
}

inline std::optional<Word23> unrho(const BinarySeq& b) {
    if (b.a0 != 0 || b.a1 != 1) return std::nullopt;
    return unrho_interior(b.interior);
}

/// d_N with d_0 = 1, d_1 = 0, d_2 = 1, d_k = d_{k-2} + d_{k-3}.
inline Int dims(int N) {
    if (N < 0) throw std::invalid_argument("dims: N must be >= 0");
    Int d0 = 1, d1 = 0, d2 = 1;
    if (N == 0) return d0;
    if (N == 1) return d1;
    if (N == 2) return d2;
    for (int k = 3; k <= N; ++k) {
        Int d = d1 + d0;  // d_{k-2} + d_{k-3}
        d0 = d1;
        d1 = d2;
        d2 = d;
    }
    return d2;
}

enum class BasisKind { B, Bprime };

namespace detail {
inline void words_with(int twos, int threes, std::vector<Word23>& out) {
    std::string s(twos, '2');
    s.append(threes, '3');
    do {
        out.emplace_back(s);
    } while (std::next_permutation(s.begin(), s.end()));
}
}  // namespace detail

/// kind B: all words of weight N, level `level`.
/// kind Bprime: all words of weight < N-1 (including the empty word) of
/// level `level`-1. Both sorted by Word23::compare.
inline std::vector<Word23> enumerate_basis(int N, int level, BasisKind kind) {
    if (level < 1) throw std::invalid_argument("enumerate_basis: level must be >= 1");
    std::vector<Word23> out;
    if (kind == BasisKind::B) {
        int rest = N - 3 * level;
        if (rest >= 0 && rest % 2 == 0) detail::words_with(rest / 2, level, out);
    } else {
        int l = level - 1;
        for (int w = 0; w < N - 1; ++w) {
            int rest = w - 3 * l;
            if (rest >= 0 && rest % 2 == 0) detail::words_with(rest / 2, l, out);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Shuffle product of binary interior words, with multiplicities.
inline std::map<std::string, Int> shuffle_words(const std::string& u,
                                                const std::string& v) {
    if (u.empty()) return {{v, 1}};
    if (v.empty()) return {{u, 1}};
    std::map<std::string, Int> out;
    for (auto& [w, c] : shuffle_words(u.substr(1), v))
        out[u.substr(0, 1) + w] += c;
    for (auto& [w, c] : shuffle_words(u, v.substr(1)))
        out[v.substr(0, 1) + w] += c;
    return out;
}

}  // namespace mzv
