#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mzv/arith.hpp"
#include "mzv/words.hpp"

namespace mzv {

/// Basis word of the universal comodule: a word in letters f_m (m odd >= 3)
/// times a power of the central letter f_2, which is kept apart.
struct FWord {
    std::vector<int> odd;
    int k2 = 0;

    FWord() = default;
    FWord(std::vector<int> letters, int f2exp) : odd(std::move(letters)), k2(f2exp) {
        if (k2 < 0) throw std::invalid_argument("FWord: f2 exponent must be >= 0");
        for (int m : odd)
            if (m < 3 || m % 2 == 0)
                throw std::invalid_argument("FWord: letters must be odd and >= 3");
    }

    int weight() const {
        int w = 2 * k2;
        for (int m : odd) w += m;
        return w;
    }
    bool is_unit() const { return odd.empty() && k2 == 0; }

    friend bool operator==(const FWord& a, const FWord& b) {
        return a.odd == b.odd && a.k2 == b.k2;
    }
    friend bool operator<(const FWord& a, const FWord& b) {
        return std::tie(a.odd, a.k2) < std::tie(b.odd, b.k2);
    }

    /// "f3 f5 | f2^2"; the empty word prints as "1".
    std::string str() const {
        std::string s;
        for (size_t i = 0; i < odd.size(); ++i) {
            if (i) s += ' ';
            s += "f" + std::to_string(odd[i]);
        }
        if (k2 > 0) {
            if (!s.empty()) s += " | ";
            s += "f2";
            if (k2 > 1) s += "^" + std::to_string(k2);
        }
        return s.empty() ? "1" : s;
    }
};

/// Rational linear combination of FWords.
class UElement {
public:
    UElement() = default;
    static UElement single(const FWord& w, Rat c = Rat(1)) {
        UElement u;
        u.add(w, c);
        return u;
    }

    bool is_zero() const { return t_.empty(); }
    void add(const FWord& w, const Rat& c) {
        if (c.is_zero()) return;
        auto it = t_.find(w);
        if (it == t_.end()) {
            t_.emplace(w, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
    UElement& operator+=(const UElement& o) {
        for (auto& [w, c] : o.t_) add(w, c);
        return *this;
    }
    UElement operator*(const Rat& s) const {
        UElement u;
        if (s.is_zero()) return u;
        for (auto& [w, c] : t_) u.t_.emplace(w, c * s);
        return u;
    }
    const std::map<FWord, Rat>& terms() const { return t_; }

    friend bool operator==(const UElement& x, const UElement& y) { return x.t_ == y.t_; }
    friend bool operator!=(const UElement& x, const UElement& y) { return !(x == y); }

    std::string str() const {
        if (t_.empty()) return "0";
        std::string s;
        for (auto& [w, c] : t_) {
            if (!s.empty()) s += " + ";
            s += c.str() + "*(" + w.str() + ")";
        }
        return s;
    }

private:
    std::map<FWord, Rat> t_;
};

/// Shuffle product; f_2 exponents add.
inline UElement f_shuffle(const FWord& u, const FWord& v) {
    std::map<std::vector<int>, Int> words;
    auto go = [&](auto&& self, std::vector<int>& acc, size_t i, size_t j) -> void {
        if (i == u.odd.size() && j == v.odd.size()) {
            words[acc] += 1;
            return;
        }
        if (i < u.odd.size()) {
            acc.push_back(u.odd[i]);
            self(self, acc, i + 1, j);
            acc.pop_back();
        }
        if (j < v.odd.size()) {
            acc.push_back(v.odd[j]);
            self(self, acc, i, j + 1);
            acc.pop_back();
        }
    };
    std::vector<int> acc;
    go(go, acc, 0, 0);
    UElement out;
    for (auto& [w, c] : words) out.add(FWord(w, u.k2 + v.k2), Rat(c));
    return out;
}

/// Deconcatenation; the f_2 power stays entirely on the right factor,
/// left factors live in the odd-letter algebra.
inline std::vector<std::pair<FWord, FWord>> f_deconcat(const FWord& w) {
    std::vector<std::pair<FWord, FWord>> out;
    const size_t n = w.odd.size();
    for (size_t k = 0; k <= n; ++k) {
        FWord left(std::vector<int>(w.odd.begin(), w.odd.begin() + k), 0);
        FWord right(std::vector<int>(w.odd.begin() + k, w.odd.end()), w.k2);
        out.emplace_back(std::move(left), std::move(right));
    }
    return out;
}

/// First-letter extraction: the unique v_r with xi = sum f_m v_m + c f_N.
inline UElement extract_left(const UElement& xi, int m) {
    if (m < 3 || m % 2 == 0) throw std::invalid_argument("extract_left: m must be odd and >= 3");
    UElement out;
    for (auto& [w, c] : xi.terms()) {
        if (w.odd.empty() || w.odd.front() != m) continue;
        out.add(FWord(std::vector<int>(w.odd.begin() + 1, w.odd.end()), w.k2), c);
    }
    return out;
}

/// All FWords of the given weight, sorted.
inline std::vector<FWord> enumerate_fwords(int N) {
    if (N < 0) throw std::invalid_argument("enumerate_fwords: N must be >= 0");
    std::vector<FWord> out;
    std::vector<int> letters;
    auto go = [&](auto&& self, int rest) -> void {
        if (rest % 2 == 0) out.emplace_back(letters, rest / 2);
        for (int m = 3; m <= rest; m += 2) {
            letters.push_back(m);
            self(self, rest - m);
            letters.pop_back();
        }
    };
    go(go, N);
    std::sort(out.begin(), out.end());
    return out;
}

/// The canonical primitive of weight N: the letter f_N for odd N, and
/// b_{N/2} f_2^{N/2} for even N.
inline UElement f_element(int N) {
    if (N < 2) throw std::invalid_argument("f_element: N must be >= 2");
    if (N % 2 == 1) return UElement::single(FWord({N}, 0));
    if (N == 2) return UElement::single(FWord({}, 1));
    return UElement::single(FWord({}, N / 2), euler_b(N / 2));
}

namespace detail {
/// Reduced row echelon form; returns the pivot column of each row.
inline std::vector<int> rref(std::vector<std::vector<Rat>>& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        Rat inv = Rat(1) / m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rat f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    return pivots;
}

/// Kernel basis of the column-vector map given by the matrix.
inline std::vector<std::vector<Rat>> nullspace(std::vector<std::vector<Rat>> m, int cols) {
    auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[c] = Rat(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][c];
        basis.push_back(std::move(v));
    }
    return basis;
}
}  // namespace detail

/// Intersection of the kernels of first-letter extraction for all odd
/// 3 <= m < N on the weight-N graded piece.
inline std::vector<UElement> derivation_kernel(int N) {
    if (N < 2) throw std::invalid_argument("derivation_kernel: N must be >= 2");
    auto basis = enumerate_fwords(N);
    const int cols = static_cast<int>(basis.size());

    std::vector<std::vector<Rat>> constraints;
    for (int m = 3; m < N; m += 2) {
        auto target = enumerate_fwords(N - m);
        std::map<FWord, int> index;
        for (size_t i = 0; i < target.size(); ++i) index[target[i]] = static_cast<int>(i);
        std::vector<std::vector<Rat>> block(target.size(), std::vector<Rat>(cols, Rat(0)));
        for (int j = 0; j < cols; ++j) {
            UElement ext = extract_left(UElement::single(basis[j]), m);
            for (auto& [w, c] : ext.terms()) block[index.at(w)][j] += c;
        }
        for (auto& row : block) constraints.push_back(std::move(row));
    }
    if (constraints.empty()) constraints.emplace_back(cols, Rat(0));

    std::vector<UElement> out;
    for (auto& v : detail::nullspace(std::move(constraints), cols)) {
        UElement u;
        for (int j = 0; j < cols; ++j) u.add(basis[j], v[j]);
        out.push_back(std::move(u));
    }
    return out;
}

/// Coefficient of f_N in an odd-letter element modulo shuffle products
/// (complement spanned by the products of lower-weight words). Small weights
/// only; used to cross-check first-letter extraction against the coproduct.
inline Rat indecomposable_coefficient(const UElement& xi, int N) {
    if (N < 3 || N % 2 == 0)
        throw std::invalid_argument("indecomposable_coefficient: N must be odd >= 3");
    for (auto& [w, c] : xi.terms())
        if (w.k2 != 0 || w.weight() != N)
            throw std::invalid_argument("indecomposable_coefficient: element not homogeneous odd-letter");

    // Columns: f_N, then all shuffles of lower-weight odd words.
    std::vector<FWord> basis;
    for (auto& w : enumerate_fwords(N))
        if (w.k2 == 0) basis.push_back(w);
    std::map<FWord, int> index;
    for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);

    std::vector<UElement> columns;
    columns.push_back(UElement::single(FWord({N}, 0)));
    for (int w1 = 3; w1 <= N - 3; ++w1) {
        for (auto& a : enumerate_fwords(w1)) {
            if (a.k2 != 0 || a.odd.empty()) continue;
            for (auto& b : enumerate_fwords(N - w1)) {
                if (b.k2 != 0 || b.odd.empty()) continue;
                columns.push_back(f_shuffle(a, b));
            }
        }
    }

    const int rows = static_cast<int>(basis.size());
    std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(columns.size() + 1, Rat(0)));
    for (size_t j = 0; j < columns.size(); ++j)
        for (auto& [w, c] : columns[j].terms()) m[index.at(w)][j] += c;
    for (auto& [w, c] : xi.terms()) m[index.at(w)][columns.size()] += c;

    auto pivots = detail::rref(m);
    const int last = static_cast<int>(columns.size());
    Rat lambda(0);
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == last)
            throw std::logic_error("indecomposable_coefficient: element outside span");
        if (pivots[r] == 0) lambda = m[r][last];
    }
    return lambda;
}

/// The derivation through the coproduct: deconcatenate, project the left
/// factor onto the weight-m indecomposables, pair with f_m.
inline UElement derivation_via_coproduct(const FWord& w, int m) {
    UElement out;
    for (auto& [left, right] : f_deconcat(w)) {
        if (left.odd.empty() || left.weight() != m) continue;
        out += UElement::single(right) * indecomposable_coefficient(UElement::single(left), m);
    }
    return out;
}

}  // namespace mzv
