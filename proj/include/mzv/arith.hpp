#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace mzv {

using Int = mpz_class;

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int pow_int(unsigned long base, unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

inline bool is_prime(const Int& p) {
    return mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

/// Exact rational, always in lowest terms, denominator > 0.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(const Int& n) : v_(n) {}
    Rat(const Int& num, const Int& den) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rat(long num, long den) : Rat(Int(num), Int(den)) {}

    // Accepts "7" and "-11/2" style strings (canonical or not).
    static Rat parse(const std::string& s) {
        try {
            mpq_class q(s, 10);
            if (q.get_den() == 0) throw std::invalid_argument("");
            q.canonicalize();
            return wrap(std::move(q));
        } catch (const std::exception&) {
            throw std::invalid_argument("Rat: cannot parse '" + s + "'");
        }
    }

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return wrap(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }
    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat abs() const { return sign() < 0 ? -*this : *this; }

    std::string str() const { return v_.get_str(); }

private:
    static Rat wrap(mpq_class q) {
        Rat r;
        r.v_ = std::move(q);
        return r;
    }
    mpq_class v_;
};

/// p-adic valuation value: an integer, or infinity (valuation of 0 only).
struct ValP {
    static ValP infinity() { return ValP{true, 0}; }
    static ValP of(long v) { return ValP{false, v}; }

    bool is_infinite() const { return inf_; }
    long value() const {
        if (inf_) throw std::domain_error("ValP: infinite valuation has no value");
        return v_;
    }

    friend bool operator==(const ValP& a, const ValP& b) {
        return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
    }
    friend bool operator!=(const ValP& a, const ValP& b) { return !(a == b); }
    friend bool operator<(const ValP& a, const ValP& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.v_ < b.v_;
    }
    friend bool operator<=(const ValP& a, const ValP& b) { return a < b || a == b; }
    friend bool operator>(const ValP& a, const ValP& b) { return b < a; }
    friend bool operator>=(const ValP& a, const ValP& b) { return b <= a; }

    // Valuation of a product.
    friend ValP operator+(const ValP& a, const ValP& b) {
        if (a.inf_ || b.inf_) return infinity();
        return of(a.v_ + b.v_);
    }

    std::string str() const { return inf_ ? "inf" : std::to_string(v_); }

    bool inf_;
    long v_;
};

inline ValP vp(const Rat& x, const Int& p) {
    if (p < 2 || !is_prime(p)) throw std::invalid_argument("vp: p must be prime");
    if (x.is_zero()) return ValP::infinity();
    Int tmp;
    Int num = x.num();
    long vn = static_cast<long>(mpz_remove(tmp.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()));
    Int den = x.den();
    long vd = static_cast<long>(mpz_remove(tmp.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()));
    return ValP::of(vn - vd);
}

inline ValP v2(const Rat& x) { return vp(x, Int(2)); }

/// Bernoulli number B_n by the Akiyama-Tanigawa tableau (B_1 = +1/2 convention;
/// only even indices are consumed here, where the conventions agree).
inline Rat bernoulli(unsigned n) {
    std::vector<Rat> a(n + 1);
    for (unsigned m = 0; m <= n; ++m) {
        a[m] = Rat(1, static_cast<long>(m) + 1);
        for (unsigned j = m; j >= 1; --j)
            a[j - 1] = Rat(static_cast<long>(j)) * (a[j - 1] - a[j]);
    }
    return a[0];
}

/// b_n with zeta(2n) = b_n * zeta(2)^n.
inline Rat euler_b(unsigned n) {
    if (n == 0) throw std::invalid_argument("euler_b: n must be >= 1");
    Rat r = bernoulli(2 * n) * Rat(pow_int(24, n)) / Rat(Int(2) * factorial(2 * n));
    return (n % 2 == 0) ? -r : r;  // (-1)^{n+1}
}

}  // namespace mzv
