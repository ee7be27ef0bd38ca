#pragma once

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "mzv/arith.hpp"
#include "mzv/coeffs.hpp"
#include "mzv/motivic.hpp"
#include "mzv/words.hpp"

namespace mzv {

/// Closed interval with exact rational endpoints; arithmetic is exact.
struct RatInterval {
    Rat lo, hi;

    RatInterval() : lo(0), hi(0) {}
    explicit RatInterval(const Rat& x) : lo(x), hi(x) {}
    RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (hi < lo) throw std::invalid_argument("RatInterval: lo must be <= hi");
    }

    Rat width() const { return hi - lo; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    bool contains_zero() const { return contains(Rat(0)); }
    bool contains(const RatInterval& o) const { return lo <= o.lo && o.hi <= hi; }

    friend RatInterval operator+(const RatInterval& a, const RatInterval& b) {
        return {a.lo + b.lo, a.hi + b.hi};
    }
    friend RatInterval operator-(const RatInterval& a, const RatInterval& b) {
        return {a.lo - b.hi, a.hi - b.lo};
    }
    friend RatInterval operator*(const RatInterval& a, const RatInterval& b) {
        Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
        Rat lo = p1, hi = p1;
        for (const Rat* p : {&p2, &p3, &p4}) {
            if (*p < lo) lo = *p;
            if (hi < *p) hi = *p;
        }
        return {lo, hi};
    }
    RatInterval scaled(const Rat& c) const {
        return c.sign() >= 0 ? RatInterval{lo * c, hi * c} : RatInterval{hi * c, lo * c};
    }
    RatInterval pow(unsigned k) const {
        RatInterval r{Rat(1)};
        for (unsigned i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    /// ["lo","hi"] as exact rational strings.
    std::string str() const { return "[\"" + lo.str() + "\", \"" + hi.str() + "\"]"; }
};

inline Rat pow10_inv(int d) { return Rat(Int(1), pow_int(10, d)); }

namespace detail {

/// A_t = sum_{j>=0} j^t 2^{-j}, exact integers (2, 2, 6, 26, 150, ...).
inline Int geometric_moment(int t) {
    static std::vector<Int> table{2};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    for (int s = static_cast<int>(table.size()); s <= t; ++s) {
        Int a = 0;
        for (int i = 0; i < s; ++i) a += binomial(s, i) * table[i];
        table.push_back(a);
    }
    return table[t];
}

/// Exact closed form of sum_{k>K} k^s 2^{-k}.
inline Rat tail_pow2(int s, int K) {
    Int acc = 0;
    Int kp = 1;  // (K+1)^{s-t}, built from t = s downward
    for (int t = s; t >= 0; --t) {
        acc += binomial(s, t) * kp * geometric_moment(t);
        kp *= K + 1;
    }
    return Rat(acc, pow_int(2, K + 1));
}

inline std::string reflect_path(const std::string& v) {
    std::string r(v.rbegin(), v.rend());
    for (char& c : r) c = (c == '0') ? '1' : '0';
    return r;
}

}  // namespace detail

/// Exact partial sum of sum_{0<k_1<...<k_r} 2^{-k_r} / prod k_i^{n_i} up to
/// k_r <= K, widened by the closed-form tail bound sum_{k>K} k^{r-1} 2^{-k}.
inline RatInterval polylog_half(const std::vector<int>& args, int K) {
    const int r = static_cast<int>(args.size());
    if (r < 1) throw std::invalid_argument("polylog_half: depth must be >= 1");
    for (int n : args)
        if (n < 1) throw std::invalid_argument("polylog_half: entries must be >= 1");
    if (K < r) throw std::invalid_argument("polylog_half: K must be >= depth");

    // u[i][k] = sum over 0 < k_1 < ... < k_i <= k of prod k_j^{-n_j};
    // rolled over k with u[i](k) = u[i](k-1) + u[i-1](k-1) k^{-n_i}.
    std::vector<Rat> u(r, Rat(0));
    Rat sum(0);
    Rat half(1, 2), p2(1);
    for (int k = 1; k <= K; ++k) {
        p2 *= half;  // 2^{-k}
        Rat prev_top = (r >= 2) ? u[r - 2] : Rat(1);
        // Update from the deep end so each u[i-1] is still the k-1 value.
        for (int i = r - 1; i >= 1; --i)
            u[i] += u[i - 1] / Rat(pow_int(k, args[i]));
        u[0] += Rat(Int(1), pow_int(k, args[0]));
        if (r == 1)
            sum += p2 / Rat(pow_int(k, args[0]));
        else
            sum += prev_top * p2 / Rat(pow_int(k, args[r - 1]));
    }
    return {sum, sum + detail::tail_pow2(r - 1, K)};
}

namespace detail {

inline RatInterval polylog_cached(const std::vector<int>& args, int K) {
    if (args.empty()) return RatInterval(Rat(1));
    static std::map<std::pair<std::vector<int>, int>, RatInterval> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({args, K});
        if (it != cache.end()) return it->second;
    }
    RatInterval v = polylog_half(args, K);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::make_pair(args, K), v);
    return v;
}

}  // namespace detail

/// Rigorous enclosure of zeta(n_1,...,n_r), increasing-index convention,
/// computed by splitting the iterated integral at the midpoint and reflecting
/// the upper part; interval width < 10^{-digits}.
inline RatInterval mzv_numeric(const std::vector<int>& args, int digits) {
    if (args.empty() || args.back() < 2)
        throw std::invalid_argument("mzv_numeric: composition must be admissible");
    for (int n : args)
        if (n < 1) throw std::invalid_argument("mzv_numeric: entries must be >= 1");
    if (digits < 1) throw std::invalid_argument("mzv_numeric: digits must be >= 1");

    static std::map<std::pair<std::vector<int>, int>, RatInterval> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({args, digits});
        if (it != cache.end()) return it->second;
    }

    const std::string word = comp_word(args);
    const int N = static_cast<int>(word.size());
    const Rat target = pow10_inv(digits);

    int K = 4 * digits / 3 + 2 * N + 8;
    RatInterval total;
    for (;; K += K / 2) {
        // Uniform a-priori bound on the total width, then verify exactly.
        if (Rat(2 * (N + 1)) * detail::tail_pow2(N, K) >= target) continue;
        total = RatInterval(Rat(0));
        for (int p = 0; p <= N; ++p) {
            std::string u = word.substr(0, p), v = word.substr(p);
            std::vector<int> cu = u.empty() ? std::vector<int>{} : word_comp(u);
            std::vector<int> cv =
                v.empty() ? std::vector<int>{} : word_comp(detail::reflect_path(v));
            total = total + detail::polylog_cached(cu, K) * detail::polylog_cached(cv, K);
        }
        if (total.width() < target) break;
    }

    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::make_pair(args, digits), total);
    return total;
}

struct IdentityResult {
    RatInterval residual;
    bool pass = false;
};

namespace detail {
inline IdentityResult finish(RatInterval residual, int digits) {
    bool ok = residual.contains_zero() && residual.width() < pow10_inv(digits - 5);
    return {std::move(residual), ok};
}
inline std::vector<int> twos(int n) { return std::vector<int>(n, 2); }
inline RatInterval zeta_two_pow(int n, int digits) {
    return n == 0 ? RatInterval(Rat(1)) : mzv_numeric(twos(n), digits);
}
}  // namespace detail

/// zeta(2^a 3 2^b) minus its expansion over zeta(2r+1) zeta(2^{n-r}) with the
/// closed-form coefficients 2(-1)^r (A - B).
inline IdentityResult verify_zagier(int a, int b, int digits) {
    std::vector<int> comp;
    for (int i = 0; i < a; ++i) comp.push_back(2);
    comp.push_back(3);
    for (int i = 0; i < b; ++i) comp.push_back(2);
    RatInterval lhs = mzv_numeric(comp, digits);
    const int n = a + b + 1;
    RatInterval rhs{Rat(0)};
    for (int r = 1; r <= n; ++r) {
        auto [A, B] = zagier_ab(r, a, b);
        Rat c = Rat(2) * (A - B);
        if (r % 2 != 0) c = -c;
        rhs = rhs + (mzv_numeric({2 * r + 1}, digits) * detail::zeta_two_pow(n - r, digits)).scaled(c);
    }
    return detail::finish(lhs - rhs, digits);
}

/// Same expansion but with the coefficients taken from level1_expansion.
inline IdentityResult verify_level1(int a, int b, int digits) {
    std::vector<int> comp;
    for (int i = 0; i < a; ++i) comp.push_back(2);
    comp.push_back(3);
    for (int i = 0; i < b; ++i) comp.push_back(2);
    RatInterval lhs = mzv_numeric(comp, digits);
    const int n = a + b + 1;
    RatInterval rhs{Rat(0)};
    for (auto& [r, alpha] : level1_expansion(a, b))
        rhs = rhs + (mzv_numeric({2 * r + 1}, digits) * detail::zeta_two_pow(n - r, digits)).scaled(alpha);
    return detail::finish(lhs - rhs, digits);
}

/// zeta(2n) - b_n zeta(2)^n.
inline IdentityResult verify_euler(int n, int digits) {
    if (n < 1) throw std::invalid_argument("verify_euler: n must be >= 1");
    RatInterval lhs = mzv_numeric({2 * n}, digits);
    RatInterval rhs = mzv_numeric({2}, digits).pow(n).scaled(euler_b(n));
    return detail::finish(lhs - rhs, digits);
}

/// zeta(2^n) - (6^n / (2n+1)!) zeta(2)^n.
inline IdentityResult verify_two_power(int n, int digits) {
    if (n < 1) throw std::invalid_argument("verify_two_power: n must be >= 1");
    RatInterval lhs = mzv_numeric(detail::twos(n), digits);
    Rat c = Rat(pow_int(6, n), factorial(2 * n + 1));
    RatInterval rhs = mzv_numeric({2}, digits).pow(n).scaled(c);
    return detail::finish(lhs - rhs, digits);
}

/// I(u) I(v) - sum of the shuffle expansion, all words read as admissible
/// integral words (must start with 1 and end with 0).
inline IdentityResult verify_shuffle(const std::string& u, const std::string& v, int digits) {
    auto comp_of = [](const std::string& w) {
        if (w.empty() || w.front() != '1' || w.back() != '0')
            throw std::invalid_argument("verify_shuffle: words must start 1 and end 0");
        return word_comp(w);
    };
    RatInterval lhs = mzv_numeric(comp_of(u), digits) * mzv_numeric(comp_of(v), digits);
    RatInterval rhs{Rat(0)};
    for (auto& [w, c] : shuffle_words(u, v))
        rhs = rhs + mzv_numeric(comp_of(w), digits).scaled(Rat(c));
    return detail::finish(lhs - rhs, digits);
}

}  // namespace mzv
