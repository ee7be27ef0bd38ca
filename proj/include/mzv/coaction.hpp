#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mzv/motivic.hpp"

namespace mzv {

/// Integer combination of coefficient symbols C_w, w in the index set.
class FormalCoeff {
public:
    FormalCoeff() = default;
    static FormalCoeff symbol(const SWord& s, Int c = 1) {
        FormalCoeff f;
        if (c != 0) f.t_.emplace(s, std::move(c));
        return f;
    }

    bool is_zero() const { return t_.empty(); }

    void add(const SWord& s, const Int& c) {
        if (c == 0) return;
        auto it = t_.find(s);
        if (it == t_.end()) {
            t_.emplace(s, c);
            return;
        }
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }

    FormalCoeff& operator+=(const FormalCoeff& o) {
        for (auto& [s, c] : o.t_) add(s, c);
        return *this;
    }
    FormalCoeff& operator-=(const FormalCoeff& o) {
        for (auto& [s, c] : o.t_) add(s, -c);
        return *this;
    }
    friend FormalCoeff operator+(FormalCoeff a, const FormalCoeff& b) { return a += b; }
    friend FormalCoeff operator-(FormalCoeff a, const FormalCoeff& b) { return a -= b; }
    FormalCoeff operator*(const Int& k) const {
        FormalCoeff f;
        if (k == 0) return f;
        for (auto& [s, c] : t_) f.t_.emplace(s, c * k);
        return f;
    }

    /// Specialization C_w -> c_w.
    Rat mu() const {
        Rat r(0);
        for (auto& [s, c] : t_) r += Rat(c) * coeff_c(s);
        return r;
    }

    /// Kill C_{1 2^k}; send C_w to C_{min(w, reversed w)}.
    FormalCoeff canonical_mod_reversal() const {
        FormalCoeff f;
        for (auto& [s, c] : t_) {
            if (s.is_one_two()) continue;
            f.add(s.canonical(), c);
        }
        return f;
    }

    const std::map<SWord, Int>& terms() const { return t_; }

    friend bool operator==(const FormalCoeff& x, const FormalCoeff& y) { return x.t_ == y.t_; }
    friend bool operator!=(const FormalCoeff& x, const FormalCoeff& y) { return !(x == y); }

    /// "C23 - C32 - C122"; zero prints as "0".
    std::string str() const {
        if (t_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto& [s, c] : t_) {
            Int a = c > 0 ? c : Int(-c);
            if (first) {
                if (c < 0) out += "-";
                first = false;
            } else {
                out += c < 0 ? " - " : " + ";
            }
            if (a != 1) out += a.get_str() + " ";
            out += "C" + s.str();
        }
        return out;
    }

private:
    std::map<SWord, Int> t_;
};

/// A linear combination of {2,3}-words, kept in word order.
template <class Coeff>
class HoffVector {
public:
    void add(const Word23& w, const Coeff& c) {
        if (c.is_zero()) return;
        auto it = t_.find(w);
        if (it == t_.end()) {
            t_.emplace(w, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }

    bool empty() const { return t_.empty(); }
    size_t size() const { return t_.size(); }
    Coeff get(const Word23& w) const {
        auto it = t_.find(w);
        return it == t_.end() ? Coeff{} : it->second;
    }
    const std::map<Word23, Coeff>& terms() const { return t_; }

    friend bool operator==(const HoffVector& x, const HoffVector& y) { return x.t_ == y.t_; }
    friend bool operator!=(const HoffVector& x, const HoffVector& y) { return !(x == y); }

    std::string str() const {
        if (t_.empty()) return "0";
        std::string out;
        for (auto& [w, c] : t_) {
            if (!out.empty()) out += " + ";
            out += "(" + coeff_str(c) + ")*(" + w.display() + ")";
        }
        return out;
    }

private:
    static std::string coeff_str(const Rat& r) { return r.str(); }
    static std::string coeff_str(const FormalCoeff& f) { return f.str(); }
    std::map<Word23, Coeff> t_;
};

/// One window of the graded derivation of span 2r+1 at position p.
struct WindowTerm {
    int pos;
    WindowImage img;
    std::optional<Word23> quotient;  // set whenever the window survives
};

/// All windows of the given odd span across (0; rho(w); 1), with quotients.
inline std::vector<WindowTerm> derivation_windows(const Word23& w, int span) {
    const int N = w.weight();
    if (span < 3 || span > N || span % 2 == 0)
        throw std::invalid_argument("derivation_windows: span must be odd, 3 <= span <= weight");
    const std::string full = "0" + rho(w).interior + "1";  // a_0 ... a_{N+1}
    std::vector<WindowTerm> out;
    for (int p = 0; p + span + 1 <= N + 1; ++p) {
        BinarySeq window(full[p] - '0', full.substr(p + 1, span), full[p + span + 1] - '0');
        WindowImage img = project_window(window);
        if (img.kind == WindowImage::Kind::Zero) {
            out.push_back({p, img, std::nullopt});
            continue;
        }
        std::string q = full.substr(1, p) + full.substr(p + span + 1, N - span - p);
        auto qw = unrho_interior(q);
        if (!qw) throw std::logic_error("derivation_windows: surviving window with non-parsing quotient");
        out.push_back({p, img, qw});
    }
    return out;
}

/// The level-graded derivation, formal coefficients. A window contributes
/// exactly when its quotient drops one level; windows carrying two or more
/// 00s drop further and are discarded (their quotient level is < level-1).
inline HoffVector<FormalCoeff> derivation_formal(const Word23& w) {
    HoffVector<FormalCoeff> out;
    const int l = w.level();
    if (l == 0) return out;  // every odd window dies by parity
    const int N = w.weight();
    for (int span = 3; span <= N; span += 2) {
        for (const auto& t : derivation_windows(w, span)) {
            if (t.img.kind == WindowImage::Kind::Zero) continue;
            const Word23& q = *t.quotient;
            if (q.level() == l - 1) {
                if (t.img.kind != WindowImage::Kind::Symbol)
                    throw std::logic_error("derivation_formal: deep window dropped one level");
                out.add(q, FormalCoeff::symbol(t.img.sym, t.img.sign));
            } else {
                if (t.img.kind != WindowImage::Kind::Deep || q.level() >= l - 1)
                    throw std::logic_error("derivation_formal: window/quotient level mismatch");
            }
        }
    }
    return out;
}

/// The graded derivation with specialized rational coefficients.
inline HoffVector<Rat> derivation_numeric(const Word23& w) {
    HoffVector<Rat> out;
    HoffVector<FormalCoeff> formal = derivation_formal(w);
    for (auto& [q, c] : formal.terms()) out.add(q, c.mu());
    return out;
}

/// Reduce all coefficients modulo the reversal relations.
inline HoffVector<FormalCoeff> reduce_mod_reversal(const HoffVector<FormalCoeff>& v) {
    HoffVector<FormalCoeff> out;
    for (auto& [w, c] : v.terms()) out.add(w, c.canonical_mod_reversal());
    return out;
}

/// Deconcatenation: sum of C_v (u) over splittings w = uv with v of level 1,
/// with C_v reduced to its reversal-canonical representative.
inline HoffVector<FormalCoeff> deconcatenation_model(const Word23& w) {
    HoffVector<FormalCoeff> out;
    const std::string& d = w.digits();
    for (size_t cut = 0; cut < d.size(); ++cut) {
        Word23 u(d.substr(0, cut)), v(d.substr(cut));
        if (v.level() != 1) continue;
        out.add(u, FormalCoeff::symbol(SWord::from_word(v)->canonical()));
    }
    return out;
}

class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One term of the full coaction: a product of normalized left factors
/// (unit factors dropped) against a right symbol, with multiplicity.
struct CoTensorTerm {
    Int mult;
    std::vector<NormalForm> left;
    BinarySeq right;
};

/// The full coaction sum over marked subsequences. Left factors are
/// normalized; terms with a vanishing factor are removed; no product
/// reduction is applied to the left side.
inline std::vector<CoTensorTerm> coproduct_symbolic(const BinarySeq& s, int max_interior = 14) {
    const int n = s.length();
    if (n > max_interior)
        throw ResourceError("coproduct_symbolic: interior length exceeds the configured bound");
    const std::string full = std::to_string(s.a0) + s.interior + std::to_string(s.a1);

    std::map<std::pair<std::vector<NormalForm>, BinarySeq>, Int> acc;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        std::vector<int> cuts;  // chosen interior positions, 1-based
        for (int i = 0; i < n; ++i)
            if (mask & (1ul << i)) cuts.push_back(i + 1);

        std::vector<int> bounds;
        bounds.push_back(0);
        bounds.insert(bounds.end(), cuts.begin(), cuts.end());
        bounds.push_back(n + 1);

        std::vector<NormalForm> left;
        bool dead = false;
        for (size_t q = 0; q + 1 < bounds.size(); ++q) {
            int x = bounds[q], y = bounds[q + 1];
            if (y - x < 2) continue;  // empty window is the unit
            NormalForm nf = normalize_symbol(
                BinarySeq(full[x] - '0', full.substr(x + 1, y - x - 1), full[y] - '0'));
            if (nf.is_zero()) {
                dead = true;
                break;
            }
            if (nf.is_unit()) continue;
            left.push_back(std::move(nf));
        }
        if (dead) continue;

        std::string rightw;
        for (int c : cuts) rightw += full[c];
        std::sort(left.begin(), left.end());
        acc[{std::move(left), BinarySeq(s.a0, rightw, s.a1)}] += 1;
    }

    std::vector<CoTensorTerm> out;
    out.reserve(acc.size());
    for (auto& [key, m] : acc) out.push_back({m, key.first, key.second});
    return out;
}

}  // namespace mzv
