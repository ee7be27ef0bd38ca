#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "mzv/export.hpp"
#include "mzv/falphabet.hpp"
#include "mzv/numerics.hpp"

using namespace mzv;

namespace {

// Exact decimal truncation toward zero, for reporting guaranteed digits.
std::string decimal_floor(const Rat& x, int places) {
    Int num = x.num(), den = x.den();
    bool neg = num < 0;
    if (neg) num = -num;
    Int ip = num / den, rem = num % den;
    std::string s = (neg ? "-" : "") + ip.get_str() + ".";
    for (int i = 0; i < places; ++i) {
        rem *= 10;
        Int digit = rem / den;
        s += digit.get_str();
        rem %= den;
    }
    return s;
}

std::string guaranteed_digits(const RatInterval& iv, int places) {
    std::string a = decimal_floor(iv.lo, places), b = decimal_floor(iv.hi, places);
    size_t n = 0;
    while (n < a.size() && n < b.size() && a[n] == b[n]) ++n;
    return a.substr(0, n);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
        f << text;
    }
}

int cmd_matrix(int N, int level, bool formal, const std::string& format,
               const std::string& out_path, bool no_cache) {
    auto render = [&](const auto& m) {
        if (format == "json") return matrix_to_json(m).dump(1);
        if (format == "csv") return matrix_to_csv(m);
        if (format == "latex") return matrix_to_latex(m);
        throw std::invalid_argument("unknown format: " + format);
    };
    std::string text;
    if (formal) {
        auto m = no_cache ? build_matrix_formal(N, level)
                          : MatrixCache().get_or_build<FormalCoeff>(N, level);
        text = render(m);
    } else {
        auto m = no_cache ? build_matrix_numeric(N, level)
                          : MatrixCache().get_or_build<Rat>(N, level);
        text = render(m);
    }
    emit(text, out_path);
    return 0;
}

int cmd_certify(int N, int level) {
    auto m = MatrixCache().get_or_build<Rat>(N, level);
    if (m.size() == 0) {
        std::cout << "empty block, nothing to certify\n";
        return 0;
    }
    auto cert = certify_two_adic(m);
    std::cout << "block N=" << N << " level=" << level << " size=" << m.size() << "\n";
    std::cout << "diagonal valuations:";
    for (auto& v : cert.diag) std::cout << " " << v.str();
    std::cout << "\ncolumn minima:     ";
    for (auto& v : cert.col_min) std::cout << " " << v.str();
    std::cout << "\nbelow-diagonal minimum: " << cert.below_min.str() << "\n";
    std::cout << (cert.pass() ? "PASS" : "FAIL") << " " << cert.describe() << "\n";
    return cert.pass() ? 0 : 1;
}

int cmd_verify_all(int maxN) {
    auto rep = verify_up_to(maxN);
    std::cout << "  N lvl size cert     v2(det) diag-sum\n";
    for (auto& b : rep.blocks) {
        std::cout << std::setw(3) << b.N << " " << std::setw(3) << b.level << " "
                  << std::setw(4) << b.size << " " << (b.cert.pass() ? "pass" : "FAIL")
                  << std::setw(9) << b.v2det.str() << " "
                  << (b.diag_sum_matches ? "ok" : "MISMATCH")
                  << (b.det_nonzero ? "" : " det=0!") << "\n";
    }
    for (auto& d : rep.dims_rows) {
        std::cout << "weight " << std::setw(2) << d.N << ": basis total "
                  << d.basis_total.get_str() << " expected " << d.expected.get_str()
                  << (d.ok ? " ok" : " MISMATCH") << "\n";
    }
    std::cout << (rep.all_ok ? "ALL PASS" : "FAILURES FOUND") << "\n";
    return rep.all_ok ? 0 : 1;
}

int cmd_deconcat_check(int max_weight) {
    long checked = 0;
    std::function<bool(const Word23&)> ok = [](const Word23& w) {
        return reduce_mod_reversal(derivation_formal(w)) == deconcatenation_model(w);
    };
    std::vector<Word23> stack{Word23()};
    for (int N = 3; N <= max_weight; ++N) {
        std::function<void(std::string, int)> gen = [&](std::string prefix, int rest) {
            if (rest == 0) {
                Word23 w(prefix);
                if (w.level() >= 1) {
                    ++checked;
                    if (!ok(w)) {
                        std::cout << "FAIL at word " << w.display() << "\n";
                        std::exit(1);
                    }
                }
                return;
            }
            if (rest >= 2) gen(prefix + "2", rest - 2);
            if (rest >= 3) gen(prefix + "3", rest - 3);
        };
        gen("", N);
    }
    std::cout << "PASS deconcatenation model matches on " << checked
              << " words of weight <= " << max_weight << "\n";
    return 0;
}

int cmd_collapse_check(int max_a, int max_b) {
    long n = 0;
    for (int a = 0; a <= max_a; ++a)
        for (int b = 0; b <= max_b; ++b)
            for (int r = 1; r <= a + b + 1; ++r, ++n)
                if (!verify_collapse(a, b, r)) {
                    std::cout << "FAIL at (a,b,r) = (" << a << "," << b << "," << r << ")\n";
                    return 1;
                }
    std::cout << "PASS " << n << " collapse identities\n";
    return 0;
}

int cmd_kernel(int N) {
    auto k = derivation_kernel(N);
    std::cout << "kernel dimension in weight " << N << ": " << k.size() << "\n";
    for (auto& u : k) std::cout << "  " << u.str() << "\n";
    bool expected = k.size() == 1 && !k[0].is_zero() &&
                    k[0].terms().begin()->first == f_element(N).terms().begin()->first;
    std::cout << (expected ? "PASS spanned by the weight primitive" : "FAIL unexpected kernel")
              << "\n";
    return expected ? 0 : 1;
}

int cmd_mzv(const std::vector<int>& args, int digits) {
    auto iv = mzv_numeric(args, digits);
    std::cout << iv.str() << "\n";
    std::cout << "guaranteed digits: " << guaranteed_digits(iv, digits) << "\n";
    return 0;
}

int cmd_zagier(int a, int b, int digits) {
    auto r = verify_zagier(a, b, digits);
    int k = 0;
    while (k < digits + 10 &&
           RatInterval{-pow10_inv(k + 1), pow10_inv(k + 1)}.contains(r.residual))
        ++k;
    std::cout << (r.pass ? "PASS" : "FAIL") << " residual in (-1e-" << k << ", 1e-" << k
              << "), width < 1e-" << (digits - 5) << " required\n";
    return r.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact derivation matrices on {2,3}-words, 2-adic certificates, "
                 "and rigorous multiple zeta numerics"};
    app.require_subcommand(1);
    std::function<int()> action;

    auto* dims_cmd = app.add_subcommand("dims", "graded dimensions d_N");
    auto dims_max = std::make_shared<int>(12);
    dims_cmd->add_option("--max", *dims_max, "largest weight")->required();
    dims_cmd->callback([dims_max, &action] {
        action = [dims_max] {
            for (int n = 0; n <= *dims_max; ++n)
                std::cout << n << " -> " << dims(n).get_str() << "\n";
            return 0;
        };
    });

    auto* basis_cmd = app.add_subcommand("basis", "basis words of a block");
    auto bN = std::make_shared<int>(), bl = std::make_shared<int>();
    auto bkind = std::make_shared<std::string>("B");
    basis_cmd->add_option("N", *bN, "weight")->required();
    basis_cmd->add_option("level", *bl, "level")->required();
    basis_cmd->add_option("--kind", *bkind, "B or Bprime")
        ->check(CLI::IsMember({"B", "Bprime"}));
    basis_cmd->callback([=, &action] {
        action = [=] {
            auto kind = *bkind == "B" ? BasisKind::B : BasisKind::Bprime;
            for (auto& w : enumerate_basis(*bN, *bl, kind)) std::cout << w.display() << "\n";
            return 0;
        };
    });

    auto* coeff_cmd = app.add_subcommand("coeff", "coefficient c_w of an index word");
    auto cw = std::make_shared<std::string>();
    coeff_cmd->add_option("word", *cw, "word such as 223 or 122")->required();
    coeff_cmd->callback([=, &action] {
        action = [=] {
            auto s = SWord::parse(*cw);
            if (!s) throw std::invalid_argument("not an index word: " + *cw);
            std::cout << coeff_c(*s).str() << "\n";
            return 0;
        };
    });

    auto* matrix_cmd = app.add_subcommand("matrix", "derivation matrix of a block");
    auto mN = std::make_shared<int>(), ml = std::make_shared<int>();
    auto mformal = std::make_shared<bool>(false), mnocache = std::make_shared<bool>(false);
    auto mformat = std::make_shared<std::string>("json");
    auto mout = std::make_shared<std::string>();
    matrix_cmd->add_option("N", *mN, "weight")->required();
    matrix_cmd->add_option("level", *ml, "level")->required();
    matrix_cmd->add_flag("--formal", *mformal, "symbolic coefficients");
    matrix_cmd->add_option("--format", *mformat, "json | csv | latex")
        ->check(CLI::IsMember({"json", "csv", "latex"}));
    matrix_cmd->add_option("--out", *mout, "write to file instead of stdout");
    matrix_cmd->add_flag("--no-cache", *mnocache, "bypass the on-disk cache");
    matrix_cmd->callback([=, &action] {
        action = [=] { return cmd_matrix(*mN, *ml, *mformal, *mformat, *mout, *mnocache); };
    });

    auto* certify_cmd = app.add_subcommand("certify", "2-adic certificate of a block");
    auto cN = std::make_shared<int>(), cl = std::make_shared<int>();
    certify_cmd->add_option("N", *cN, "weight")->required();
    certify_cmd->add_option("level", *cl, "level")->required();
    certify_cmd->callback([=, &action] { action = [=] { return cmd_certify(*cN, *cl); }; });

    auto* verify_cmd = app.add_subcommand("verify-all", "certificates and determinants up to a weight");
    auto vmax = std::make_shared<int>(20);
    verify_cmd->add_option("--max", *vmax, "largest weight")->required();
    verify_cmd->callback([=, &action] { action = [=] { return cmd_verify_all(*vmax); }; });

    auto* dec_cmd = app.add_subcommand("deconcat-check", "reduced derivation vs deconcatenation");
    auto dmax = std::make_shared<int>(18);
    dec_cmd->add_option("--max-weight", *dmax, "largest weight");
    dec_cmd->callback([=, &action] { action = [=] { return cmd_deconcat_check(*dmax); }; });

    auto* col_cmd = app.add_subcommand("collapse-check", "binomial collapse identities");
    auto ca = std::make_shared<int>(10), cb = std::make_shared<int>(10);
    col_cmd->add_option("--max-a", *ca, "largest a");
    col_cmd->add_option("--max-b", *cb, "largest b");
    col_cmd->callback([=, &action] { action = [=] { return cmd_collapse_check(*ca, *cb); }; });

    auto* ker_cmd = app.add_subcommand("kernel", "kernel of the derivations in one weight");
    auto kN = std::make_shared<int>();
    ker_cmd->add_option("N", *kN, "weight")->required();
    ker_cmd->callback([=, &action] { action = [=] { return cmd_kernel(*kN); }; });

    auto* mzv_cmd = app.add_subcommand("mzv", "rigorous interval for a zeta value");
    auto margs = std::make_shared<std::vector<int>>();
    auto mdig = std::make_shared<int>(20);
    mzv_cmd->add_option("args", *margs, "composition, e.g. 2 3 2")->required();
    mzv_cmd->add_option("--digits", *mdig, "guaranteed decimal digits");
    mzv_cmd->callback([=, &action] { action = [=] { return cmd_mzv(*margs, *mdig); }; });

    auto* zag_cmd = app.add_subcommand("zagier", "numeric check of one level-1 evaluation");
    auto za = std::make_shared<int>(), zb = std::make_shared<int>();
    auto zdig = std::make_shared<int>(25);
    zag_cmd->add_option("a", *za, "leading 2-count")->required();
    zag_cmd->add_option("b", *zb, "trailing 2-count")->required();
    zag_cmd->add_option("--digits", *zdig, "working precision");
    zag_cmd->callback([=, &action] { action = [=] { return cmd_zagier(*za, *zb, *zdig); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return action ? action() : 2;
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
