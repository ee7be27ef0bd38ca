#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "mzv/coaction.hpp"

namespace mzv {

/// The matrix of the graded derivation: rows indexed by the weight-N level-l
/// words, columns by the words one level down, both in word order.
template <class Coeff>
struct DerivMatrix {
    int N = 0;
    int level = 0;
    std::vector<Word23> rows;
    std::vector<Word23> cols;
    std::vector<std::vector<Coeff>> entries;

    int size() const { return static_cast<int>(rows.size()); }
    const Coeff& at(int i, int j) const { return entries[i][j]; }

    friend bool operator==(const DerivMatrix& a, const DerivMatrix& b) {
        return a.N == b.N && a.level == b.level && a.rows == b.rows &&
               a.cols == b.cols && a.entries == b.entries;
    }
};

namespace detail {
template <class Coeff, class RowFn>
DerivMatrix<Coeff> build_matrix_impl(int N, int level, RowFn row_of) {
    DerivMatrix<Coeff> m;
    m.N = N;
    m.level = level;
    m.rows = enumerate_basis(N, level, BasisKind::B);
    if (m.rows.empty()) return m;
    m.cols = enumerate_basis(N, level, BasisKind::Bprime);
    if (m.rows.size() != m.cols.size())
        throw std::logic_error("build_matrix: row/column counts differ");
    std::map<Word23, int> colindex;
    for (size_t j = 0; j < m.cols.size(); ++j) colindex[m.cols[j]] = static_cast<int>(j);
    m.entries.assign(m.rows.size(), std::vector<Coeff>(m.cols.size()));
    for (size_t i = 0; i < m.rows.size(); ++i) {
        auto row = row_of(m.rows[i]);
        for (auto& [q, c] : row.terms()) {
            auto it = colindex.find(q);
            if (it == colindex.end())
                throw std::logic_error("build_matrix: derivation left the column basis");
            m.entries[i][it->second] = c;
        }
    }
    return m;
}
}  // namespace detail

inline DerivMatrix<FormalCoeff> build_matrix_formal(int N, int level) {
    return detail::build_matrix_impl<FormalCoeff>(N, level, derivation_formal);
}

inline DerivMatrix<Rat> build_matrix_numeric(int N, int level) {
    return detail::build_matrix_impl<Rat>(N, level, derivation_numeric);
}

/// 2-adic invertibility certificate: (i) valuations strictly below the
/// diagonal are >= 1; (ii) each diagonal entry attains its column-minimum
/// valuation, and that minimum is <= 0.
struct TwoAdicCertificate {
    std::vector<ValP> diag;
    std::vector<ValP> col_min;
    ValP below_min = ValP::infinity();
    bool below_ok = false;
    bool diag_ok = false;

    bool pass() const { return below_ok && diag_ok; }

    ValP diag_sum() const {
        ValP s = ValP::of(0);
        for (const auto& v : diag) s = s + v;
        return s;
    }

    std::string describe() const {
        if (pass()) return "pass";
        std::string s = "fail:";
        if (!below_ok) s += " below-diagonal valuation < 1";
        if (!diag_ok) s += " diagonal does not attain column minimum <= 0";
        return s;
    }
};

inline TwoAdicCertificate certify_two_adic(const std::vector<std::vector<Rat>>& m) {
    const int n = static_cast<int>(m.size());
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("certify_two_adic: matrix must be square");
    TwoAdicCertificate c;
    c.below_ok = true;
    c.diag_ok = true;
    for (int j = 0; j < n; ++j) {
        ValP cmin = ValP::infinity();
        for (int i = 0; i < n; ++i) {
            ValP v = v2(m[i][j]);
            if (v < cmin) cmin = v;
            if (i > j && v < c.below_min) c.below_min = v;
        }
        c.col_min.push_back(cmin);
        ValP d = v2(m[j][j]);
        c.diag.push_back(d);
        if (!(d == cmin && cmin <= ValP::of(0))) c.diag_ok = false;
    }
    if (c.below_min < ValP::of(1)) c.below_ok = false;
    return c;
}

inline TwoAdicCertificate certify_two_adic(const DerivMatrix<Rat>& m) {
    return certify_two_adic(m.entries);
}

/// Exact determinant: clear denominators per column, then fraction-free
/// (Bareiss) elimination over the integers.
inline Rat determinant_exact(std::vector<std::vector<Rat>> a) {
    const int n = static_cast<int>(a.size());
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("determinant_exact: matrix must be square");
    if (n == 0) return Rat(1);

    Int divisor = 1;
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
    for (int j = 0; j < n; ++j) {
        Int L = 1;
        for (int i = 0; i < n; ++i) {
            Int l;
            Int d = a[i][j].den();
            mpz_lcm(l.get_mpz_t(), L.get_mpz_t(), d.get_mpz_t());
            L = l;
        }
        for (int i = 0; i < n; ++i) {
            Rat scaled = a[i][j] * Rat(L);
            m[i][j] = scaled.num();  // integral by construction
        }
        divisor *= L;
    }

    int sign = 1;
    Int prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) { piv = i; break; }
            if (piv < 0) return Rat(0);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Int det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return Rat(det, divisor);
}

inline Rat determinant_exact(const DerivMatrix<Rat>& m) {
    return determinant_exact(m.entries);
}

struct VerifyBlock {
    int N = 0, level = 0, size = 0;
    TwoAdicCertificate cert;
    Rat det;
    ValP v2det = ValP::infinity();
    bool det_nonzero = false;
    bool diag_sum_matches = false;

    bool ok() const { return cert.pass() && det_nonzero && diag_sum_matches; }
};

struct DimsRow {
    int N = 0;
    Int basis_total;  // sum over levels of |B_{N,l}|
    Int expected;     // d_N
    bool ok = false;
};

struct VerifyReport {
    std::vector<VerifyBlock> blocks;
    std::vector<DimsRow> dims_rows;
    bool all_ok = true;
};

/// Certificates and exact determinants for every nonempty block with
/// N <= Nmax, plus the dimension accounting per weight.
inline VerifyReport verify_up_to(int Nmax) {
    if (Nmax < 2) throw std::invalid_argument("verify_up_to: Nmax must be >= 2");
    VerifyReport rep;
    for (int N = 2; N <= Nmax; ++N) {
        DimsRow dr;
        dr.N = N;
        dr.basis_total = (N % 2 == 0) ? 1 : 0;  // the level-0 word, when it exists
        for (int l = 1; 3 * l <= N; ++l) {
            auto rows = enumerate_basis(N, l, BasisKind::B);
            if (rows.empty()) continue;
            dr.basis_total += static_cast<long>(rows.size());

            VerifyBlock b;
            b.N = N;
            b.level = l;
            b.size = static_cast<int>(rows.size());
            auto m = build_matrix_numeric(N, l);
            b.cert = certify_two_adic(m);
            b.det = determinant_exact(m);
            b.det_nonzero = !b.det.is_zero();
            b.v2det = b.det_nonzero ? v2(b.det) : ValP::infinity();
            b.diag_sum_matches = b.det_nonzero && b.v2det == b.cert.diag_sum();
            if (!b.ok()) rep.all_ok = false;
            rep.blocks.push_back(std::move(b));
        }
        dr.expected = dims(N);
        dr.ok = dr.basis_total == dr.expected;
        if (!dr.ok) rep.all_ok = false;
        rep.dims_rows.push_back(std::move(dr));
    }
    return rep;
}

}  // namespace mzv
