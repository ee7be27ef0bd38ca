#pragma once

#include <map>
#include <string>
#include <vector>

#include "mzv/coeffs.hpp"
#include "mzv/words.hpp"

namespace mzv {

/// Composition (n_1,...,n_r); the empty composition stands for the unit.
/// Admissible means n_r >= 2 (or empty).
using MzvComp = std::vector<int>;

inline bool comp_admissible(const MzvComp& c) { return c.empty() || c.back() >= 2; }

inline int comp_weight(const MzvComp& c) {
    int w = 0;
    for (int n : c) w += n;
    return w;
}

inline std::string comp_str(const MzvComp& c) {
    std::string s = "zeta(";
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c[i]);
    }
    return s + ")";
}

/// The binary interior word 1 0^{n_1-1} ... 1 0^{n_r-1} of a composition.
inline std::string comp_word(const MzvComp& c) {
    std::string s;
    for (int n : c) {
        s += '1';
        s.append(n - 1, '0');
    }
    return s;
}

/// Blocks of a word starting with '1'; entries are 1 + following zero-run.
inline MzvComp word_comp(const std::string& w) {
    MzvComp c;
    size_t i = 0;
    while (i < w.size()) {
        if (w[i] != '1') throw std::logic_error("word_comp: block must start with 1");
        int n = 1;
        ++i;
        while (i < w.size() && w[i] == '0') { ++n; ++i; }
        c.push_back(n);
    }
    return c;
}

namespace detail {
inline std::string complement_reverse(const std::string& w) {
    std::string r(w.rbegin(), w.rend());
    for (char& c : r) c = (c == '0') ? '1' : '0';
    return r;
}
inline bool all_equal(const std::string& w) {
    return w.find_first_not_of(w[0]) == std::string::npos;
}
// Duality-canonical representative of an admissible composition: the smaller
// of the two binary words w, complement_reverse(w).
inline MzvComp canonical_comp(const MzvComp& c) {
    if (c.empty()) return c;
    std::string w = comp_word(c);
    std::string d = complement_reverse(w);
    return word_comp(std::min(w, d));
}
}  // namespace detail

/// A Rat-linear combination of admissible compositions in canonical form;
/// the empty combination is zero, the empty composition is the scalar 1.
class NormalForm {
public:
    static NormalForm zero() { return {}; }
    static NormalForm unit() {
        NormalForm f;
        f.t_[{}] = Rat(1);
        return f;
    }

    bool is_zero() const { return t_.empty(); }
    bool is_unit() const {
        return t_.size() == 1 && t_.begin()->first.empty() && t_.begin()->second == Rat(1);
    }

    void add(const MzvComp& c, const Rat& r) {
        if (r.is_zero()) return;
        auto it = t_.find(c);
        if (it == t_.end()) {
            t_.emplace(c, r);
            return;
        }
        it->second += r;
        if (it->second.is_zero()) t_.erase(it);
    }

    NormalForm& operator+=(const NormalForm& o) {
        for (auto& [c, r] : o.t_) add(c, r);
        return *this;
    }
    NormalForm operator*(const Rat& s) const {
        NormalForm f;
        if (s.is_zero()) return f;
        for (auto& [c, r] : t_) f.t_.emplace(c, r * s);
        return f;
    }

    const std::map<MzvComp, Rat>& terms() const { return t_; }

    friend bool operator==(const NormalForm& x, const NormalForm& y) { return x.t_ == y.t_; }
    friend bool operator!=(const NormalForm& x, const NormalForm& y) { return !(x == y); }
    friend bool operator<(const NormalForm& x, const NormalForm& y) { return x.t_ < y.t_; }

    std::string str() const {
        if (t_.empty()) return "0";
        std::string s;
        bool first = true;
        for (auto& [c, r] : t_) {
            std::string coef = r.str();
            if (first) {
                s += coef;
                first = false;
            } else if (coef[0] == '-') {
                s += " - " + coef.substr(1);
            } else {
                s += " + " + coef;
            }
            if (!c.empty()) s += "*" + comp_str(c);
        }
        return s;
    }

private:
    std::map<MzvComp, Rat> t_;
};

/// Expansion of the leading-zero symbol zeta_{n0}(args) over admissible ones:
/// (-1)^{n0} sum over i_1+...+i_r = n0 of prod binom(n_j+i_j-1, i_j)
/// zeta(n_1+i_1,...,n_r+i_r). Output terms are duality-canonicalized.
inline NormalForm shuffle_regularize(int n0, const MzvComp& args) {
    if (n0 < 0) throw std::invalid_argument("shuffle_regularize: n0 must be >= 0");
    if (!comp_admissible(args))
        throw std::invalid_argument("shuffle_regularize: args must be admissible");
    if (args.empty()) return n0 == 0 ? NormalForm::unit() : NormalForm::zero();

    NormalForm out;
    const int r = static_cast<int>(args.size());
    std::vector<int> add(r, 0);
    Rat sign((n0 % 2 == 0) ? 1 : -1);

    auto emit = [&]() {
        Int coef = 1;
        MzvComp cur(args);
        for (int j = 0; j < r; ++j) {
            coef *= binomial(args[j] + add[j] - 1, add[j]);
            cur[j] += add[j];
        }
        out.add(detail::canonical_comp(cur), sign * Rat(coef));
    };

    // Weak compositions of n0 into r parts.
    auto go = [&](auto&& self, int j, int rem) -> void {
        if (j == r - 1) {
            add[j] = rem;
            emit();
            return;
        }
        for (int i = 0; i <= rem; ++i) {
            add[j] = i;
            self(self, j + 1, rem - i);
        }
    };
    go(go, 0, n0);
    return out;
}

/// Canonical reduction of an iterated-integral symbol:
/// unit and vanishing rules, reflections, then shuffle regularization.
/// Total on all symbols; output is over duality-canonical admissible forms.
inline NormalForm normalize_symbol(const BinarySeq& s) {
    const int n = s.length();
    if (n == 0) return NormalForm::unit();
    if (s.a0 == s.a1) return NormalForm::zero();
    if (detail::all_equal(s.interior)) return NormalForm::zero();

    Rat sign(1);
    std::string w = s.interior;
    if (s.a0 == 1) {  // reflect onto the (0;...;1) form
        std::reverse(w.begin(), w.end());
        if (n % 2 != 0) sign = Rat(-1);
    }
    if (w.back() == '1') {
        std::string d = detail::complement_reverse(w);
        if (d.back() == '0') w = std::move(d);
    }
    if (w.back() == '1') {
        // Divergent at both ends: strip the trailing ones with the shuffle
        // identity 0 = I(base x| 1) = k I(w) + (insertions left of the tail).
        size_t k = 0;
        for (auto it = w.rbegin(); it != w.rend() && *it == '1'; ++it) ++k;
        std::string base = w.substr(0, w.size() - 1);
        NormalForm acc;
        for (size_t pos = 0; pos <= base.size(); ++pos) {
            std::string ins = base.substr(0, pos) + "1" + base.substr(pos);
            if (ins == w) continue;
            acc += normalize_symbol(BinarySeq(0, ins, 1));
        }
        return acc * (sign * Rat(-1, static_cast<long>(k)));
    }

    size_t lead = w.find('1');  // exists: not all '0'
    int n0 = static_cast<int>(lead);
    MzvComp args = word_comp(w.substr(lead));
    return shuffle_regularize(n0, args) * sign;
}

/// Projection of an odd-length window to a signed coefficient symbol.
struct WindowImage {
    enum class Kind { Zero, Symbol, Deep };
    Kind kind = Kind::Zero;
    int sign = 0;
    SWord sym = SWord::level1(0, 0);

    static WindowImage zero() { return {}; }
    static WindowImage deep() {
        WindowImage w;
        w.kind = Kind::Deep;
        return w;
    }
    static WindowImage symbol(int sign, const SWord& s) {
        WindowImage w;
        w.kind = Kind::Symbol;
        w.sign = sign;
        w.sym = s;
        return w;
    }
    friend bool operator==(const WindowImage& a, const WindowImage& b) {
        if (a.kind != b.kind) return false;
        if (a.kind != Kind::Symbol) return true;
        return a.sign == b.sign && a.sym == b.sym;
    }
    std::string str() const {
        switch (kind) {
            case Kind::Zero: return "0";
            case Kind::Deep: return "DEEP";
            default: return std::string(sign < 0 ? "-" : "+") + "C" + sym.str();
        }
    }
};

/// pi on windows of odd interior length: ZERO when killed by the vanishing
/// rule, +-C_{2^a 3 2^b} or +-C_{1 2^r} for the single-00 types, DEEP when the
/// window carries two or more 00s (handled by the level filtration instead).
inline WindowImage project_window(const BinarySeq& s) {
    const int n = s.length();
    if (n % 2 == 0) throw std::invalid_argument("project_window: interior length must be odd");
    if (s.a0 == s.a1) return WindowImage::zero();
    if (detail::all_equal(s.interior)) return WindowImage::zero();

    int sign = 1;
    std::string w = s.interior;
    if (s.a0 == 1) {  // (-1)^n with n odd
        sign = -1;
        std::reverse(w.begin(), w.end());
    }

    if (w[0] == '1') {
        if (auto word = unrho_interior(w)) {
            if (word->level() == 1) return WindowImage::symbol(sign, *SWord::from_word(*word));
            if (word->level() >= 2) return WindowImage::deep();
            throw std::logic_error("project_window: level-0 window of odd length");
        }
    } else {
        if (auto rest = unrho_interior(w.substr(1)); rest && rest->level() == 0 && !rest->empty())
            return WindowImage::symbol(sign, SWord::one_two(rest->size()));
    }

    // Count 00 adjacencies across the whole window, endpoints included.
    std::string full = "0" + w + "1";
    int zz = 0;
    for (size_t i = 0; i + 1 < full.size(); ++i)
        if (full[i] == '0' && full[i + 1] == '0') ++zz;
    if (zz >= 2) return WindowImage::deep();
    throw std::logic_error("project_window: window not of a recognized type");
}

}  // namespace mzv
