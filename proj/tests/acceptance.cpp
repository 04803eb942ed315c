// Acceptance gate: every release-blocking behavior as one pass/fail line,
// each with its wall-clock budget enforced. Exit code 0 only when all pass.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <initializer_list>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <tuple>
#include <vector>

#include "qpolya/algdecide.hpp"
#include "qpolya/linalg.hpp"

using namespace qpolya;

namespace {

int failures = 0;

const LineSpec central{0, 0, 2, 1};

template <class F>
void criterion(int id, const char* label, double budget_sec, F&& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body(note);
    } catch (const std::exception& e) {
        ok = false;
        note = std::string("exception: ") + e.what();
    }
    double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && sec > budget_sec) {
        ok = false;
        note = "over budget (" + std::to_string(budget_sec) + " s)";
    }
    std::printf("%s criterion %2d: %-52s %7.2f s%s%s\n", ok ? "PASS" : "FAIL", id, label, sec,
                note.empty() ? "" : "  -- ", note.c_str());
    if (!ok) ++failures;
}

Cyclotomic rat(long num, long den = 1) { return Cyclotomic(make_rational(Int(num), Int(den))); }

BiPoly<Cyclotomic> equation(std::initializer_list<std::tuple<long, long, Cyclotomic>> ts) {
    BiPoly<Cyclotomic> p;
    for (const auto& [i, j, c] : ts) p.add_term(i, j, c);
    return p;
}

bool run_cli(const std::string& args, int& exit_code, std::string& out) {
    const char* cli = std::getenv("QPOLYA_CLI");
    if (!cli) return false;
    std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return false;
    std::array<char, 4096> buf;
    std::size_t got;
    out.clear();
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    exit_code = WEXITSTATUS(pclose(pipe));
    return true;
}

} // namespace

int main() {
    criterion(1, "CLI prefix of the central line at q = 2", 1.0, [](std::string& note) {
        int code = -1;
        std::string out;
        if (!run_cli("series 0 0 2 1 --q 2 --terms 5", code, out)) {
            note = "QPOLYA_CLI not set or CLI not runnable";
            return false;
        }
        if (code != 0) {
            note = "exit code " + std::to_string(code);
            return false;
        }
        if (out != "1, 3, 35, 1395, 200787\n") {
            note = "got: " + out;
            return false;
        }
        return true;
    });

    criterion(2, "exact integer growth u_j > 2^(j^2), j <= 8", 5.0, [](std::string& note) {
        GrowthReport rep = growth_report(central, Cyclotomic(2), 8);
        if (!(rep.exact_checked && rep.exact_holds && rep.first_violation == -1)) {
            note = "first violation at j = " + std::to_string(rep.first_violation);
            return false;
        }
        return true;
    });

    criterion(3, "lattice-path area oracle, all x + y <= 10", 30.0, [](std::string& note) {
        for (long x = 0; x <= 10; ++x)
            for (long y = 0; x + y <= 10; ++y)
                if (path_area_distribution(x, y).distribution != q_binomial(x + y, x)) {
                    note = "mismatch at (" + std::to_string(x) + ", " + std::to_string(y) + ")";
                    return false;
                }
        return true;
    });

    criterion(4, "digit rule vs direct evaluation, x, y <= 24", 60.0, [](std::string& note) {
        for (unsigned long s : {2ul, 3ul, 4ul, 5ul, 6ul, 8ul, 12ul}) {
            Cyclotomic omega = Cyclotomic::zeta(s);
            for (long x = 0; x <= 24; ++x)
                for (long y = 0; y <= x; ++y)
                    if (q_lucas_eval(x, y, omega) != eval_at(q_binomial(x, y), omega)) {
                        note = "mismatch at s=" + std::to_string(s) + " (" + std::to_string(x) +
                               ", " + std::to_string(y) + ")";
                        return false;
                    }
        }
        return true;
    });

    criterion(5, "decision, root-of-unity side (q = 1, -1, zeta_3)", 120.0,
              [](std::string& note) {
        BiPoly<Cyclotomic> q1_expected =
            equation({{0, 0, rat(1)}, {0, 2, rat(-1)}, {1, 2, rat(4)}});
        Verdict v1 = decide(central, Cyclotomic(1));
        if (v1.kind != Verdict::Kind::Algebraic || v1.equation->poly != q1_expected ||
            v1.equation->verified_order < 60) {
            note = "q = 1 verdict wrong";
            return false;
        }
        if (!verify_algebraic(v1.equation->poly, prefix(central, Cyclotomic(1), 120).terms).ok) {
            note = "q = 1 re-verification at 120 terms failed";
            return false;
        }

        Verdict vm = decide(central, Cyclotomic(-1));
        if (vm.kind != Verdict::Kind::Algebraic || vm.equation->verified_order < 60) {
            note = "q = -1 verdict wrong";
            return false;
        }
        BiPoly<Cyclotomic> substituted; // x -> x^2 on the q = 1 equation
        for (const auto& [key, c] : q1_expected.terms())
            substituted.add_term(2 * key.first, key.second, c);
        if (vm.equation->poly != substituted) {
            note = "q = -1 equation is not the x -> x^2 substitution";
            return false;
        }
        if (!verify_algebraic(vm.equation->poly, prefix(central, Cyclotomic(-1), 120).terms).ok) {
            note = "q = -1 re-verification failed";
            return false;
        }

        Cyclotomic w = Cyclotomic::zeta(3);
        Verdict vw = decide(central, w);
        if (vw.kind != Verdict::Kind::Algebraic || vw.equation->verified_order < 60) {
            note = "q = zeta_3 verdict wrong";
            return false;
        }
        VerifyOutcome chk = verify_algebraic(vw.equation->poly, prefix(central, w, 120).terms);
        if (!chk.ok || chk.index < 60) {
            note = "q = zeta_3 re-verification failed at " + std::to_string(chk.index);
            return false;
        }
        return true;
    });

    criterion(6, "decision, transcendental side (q = 2, unimodular)", 120.0,
              [](std::string& note) {
        Verdict v2 = decide(central, Cyclotomic(2));
        UniPoly<Int> jsq;
        jsq.set_coeff(2, Int(1));
        if (v2.kind != Verdict::Kind::Transcendental || !v2.degree_growth ||
            v2.degree_growth->degree_poly != jsq ||
            v2.degree_growth->leading_coefficient != 1 ||
            v2.degree_growth->abs_class != AbsClass::Greater) {
            note = "q = 2 certificate wrong";
            return false;
        }
        auto terms80 = prefix(central, Cyclotomic(2), 80).terms;
        if (guess_algebraic(terms80, 6, 6).has_value()) {
            note = "unexpected algebraic equation at (6, 6)";
            return false;
        }
        auto terms60 = prefix(central, Cyclotomic(2), 60).terms;
        if (guess_precurrence(terms60, 4, 4).has_value()) {
            note = "unexpected recurrence at (4, 4)";
            return false;
        }

        Cyclotomic q = (Cyclotomic(3) + Cyclotomic(4) * Cyclotomic::zeta(4)) / Cyclotomic(5);
        if (!(q * q.conj()).is_one() || q.pow(4).is_one()) {
            note = "unimodular test value malformed";
            return false;
        }
        Verdict vu = decide(central, q);
        if (vu.kind != Verdict::Kind::Transcendental || !vu.not_root_of_unity ||
            vu.not_root_of_unity->exponent != 4 ||
            vu.not_root_of_unity->abs_class != AbsClass::Equal) {
            note = "unimodular certificate wrong";
            return false;
        }
        return true;
    });

    criterion(7, "exact ratio identity, three specs, j <= 10", 30.0, [](std::string& note) {
        for (const LineSpec& spec :
             {LineSpec{0, 0, 2, 1}, LineSpec{1, 0, 3, 2}, LineSpec{2, 1, 3, 1}}) {
            for (long j = 0; j <= 10; ++j)
                if (!ratio_identity_check(spec, j)) {
                    note = "failed at j = " + std::to_string(j);
                    return false;
                }
        }
        return true;
    });

    criterion(8, "residue-class reassembly vs 40-term prefix", 60.0, [](std::string& note) {
        for (const LineSpec& spec :
             {LineSpec{0, 0, 2, 1}, LineSpec{1, 0, 3, 2}, LineSpec{2, 1, 3, 1}}) {
            for (unsigned long s : {2ul, 3ul, 4ul}) {
                Cyclotomic omega = Cyclotomic::zeta(s);
                auto parts = lucas_decomposition(spec, omega);
                SeriesPrefix p = prefix(spec, omega, 40);
                for (std::size_t j = 0; j < 40; ++j) {
                    const LucasComponent& part = parts[j % s];
                    long l = static_cast<long>(j / s);
                    Cyclotomic expect =
                        part.scalar *
                        Cyclotomic(Rational(binomial(
                            static_cast<unsigned long>(part.shifted_n + spec.a * l),
                            static_cast<unsigned long>(part.shifted_k + spec.b * l))));
                    if (p.terms[j] != expect) {
                        note = "mismatch at s=" + std::to_string(s) + " j=" + std::to_string(j);
                        return false;
                    }
                }
            }
        }
        return true;
    });

    criterion(9, "Vandermonde determinant factorizations, d <= 3", 60.0, [](std::string& note) {
        VandermondeFactorization f1 = vandermonde_det(1);
        std::vector<Rational> zz{Rational(0), Rational(1), Rational(-2), Rational(1)};
        if (f1.det != UniPoly<Rational>(zz)) {
            note = "d = 1 determinant is not z (z - 1)^2";
            return false;
        }
        for (int d = 0; d <= 3; ++d) {
            VandermondeFactorization f = vandermonde_det(d);
            if (sgn(f.constant) == 0) {
                note = "zero constant at d = " + std::to_string(d);
                return false;
            }
            UniPoly<Rational> rebuilt = UniPoly<Rational>::monomial(f.constant, f.z_power);
            for (const auto& [s, mult] : f.cyclotomic_multiplicities) {
                UniPoly<Rational> phi = to_rational_poly(cyclotomic_poly(s));
                for (unsigned long m = 0; m < mult; ++m) rebuilt *= phi;
            }
            if (rebuilt != f.det) {
                note = "non-constant residue at d = " + std::to_string(d);
                return false;
            }
        }
        return true;
    });

    criterion(10, "finite zero test: 200 random witnesses within 15", 30.0,
              [](std::string& note) {
        std::mt19937 rng(90210u);
        std::uniform_int_distribution<long> coeff(-6, 6);
        std::uniform_int_distribution<int> count(1, 6);
        int tested = 0;
        for (int it = 0; tested < 200 && it < 1000; ++it) {
            BiPoly<Cyclotomic> p;
            int terms = count(rng);
            for (int t = 0; t < terms; ++t) {
                std::uniform_int_distribution<long> di(0, 4);
                long i = di(rng);
                std::uniform_int_distribution<long> dj(0, 4 - i);
                p.add_term(i, dj(rng), Cyclotomic(coeff(rng)));
            }
            if (p.is_zero_poly()) continue;
            ++tested;
            ZeroTestResult r = zero_test_via_samples(p, Cyclotomic(2));
            if (r.identically_zero || r.witness_j < 1 || r.witness_j > 15) {
                note = "bad witness index " + std::to_string(r.witness_j);
                return false;
            }
        }
        ZeroTestResult z = zero_test_via_samples(BiPoly<Cyclotomic>(), Cyclotomic(2));
        if (!z.identically_zero) {
            note = "zero polynomial not recognized";
            return false;
        }
        return tested == 200;
    });

    criterion(11, "refuter degree bookkeeping and leading terms", 60.0, [](std::string& note) {
        for (long a = 2; a <= 6; ++a) {
            for (long b = 1; b < a; ++b) {
                if (std::gcd(a, b) != 1) continue;
                for (int r = 1; r <= 5; ++r) {
                    if (!leading_monomial_check({0, 0, a, b}, r).ok) {
                        note = "bookkeeping failed at a=" + std::to_string(a) +
                               " b=" + std::to_string(b) + " r=" + std::to_string(r);
                        return false;
                    }
                }
            }
        }

        struct Triple {
            LineSpec spec;
            int r;
        };
        for (const Triple& t : {Triple{{1, 0, 2, 1}, 1}, Triple{{1, 0, 3, 1}, 2},
                                Triple{{1, 1, 3, 2}, 2}}) {
            BiPoly<Int> pr = theorem4_factor_poly(t.spec, t.r, t.r);
            long ra = static_cast<long>(t.r) * t.spec.a;
            if (pr.deg_first() != t.spec.a * ra) {
                note = "expanded y-degree mismatch";
                return false;
            }
            UniPoly<Int> lead = pr.coeff_of_first(t.spec.a * ra);
            auto expo = static_cast<std::size_t>(ra * t.spec.n + ra * (ra + 1) / 2);
            if (lead != UniPoly<Int>::monomial(Int(1), expo)) {
                note = "expanded leading coefficient mismatch";
                return false;
            }
        }

        // candidate recurrence that holds at q = 1 but not q = 3: the refuter
        // value p(j, q^j) must vanish exactly where the residual does
        PRecurrence rec;
        rec.order = 1;
        rec.degree = 1;
        UniPoly<Cyclotomic> c0, c1;
        c0.set_coeff(0, Cyclotomic(-2));
        c0.set_coeff(1, Cyclotomic(-4));
        c1.set_coeff(0, Cyclotomic(1));
        c1.set_coeff(1, Cyclotomic(1));
        rec.coeffs = {c0, c1};
        Cyclotomic q(3);
        BiPoly<Cyclotomic> p = build_theorem4_polynomial(central, q, rec);
        SeriesPrefix pfx = prefix(central, q, 10);
        for (long j = 0; j <= 8; ++j) {
            auto ju = static_cast<std::size_t>(j);
            Cyclotomic residual = c0.eval(Cyclotomic(j)) * pfx.terms[ju] +
                                  c1.eval(Cyclotomic(j)) * pfx.terms[ju + 1];
            Cyclotomic value = p.eval(Cyclotomic(j), q.pow(j));
            if (value.is_zero_value() != residual.is_zero_value()) {
                note = "vanishing disagrees at j = " + std::to_string(j);
                return false;
            }
        }
        return true;
    });

    criterion(12, "dump, load, re-dump byte-identical 5 x 3", 5.0, [](std::string& note) {
        std::vector<LineSpec> specs = {{0, 0, 2, 1}, {1, 0, 3, 1}, {1, 1, 3, 2},
                                       {2, 1, 3, 1}, {1, 0, 3, 2}};
        std::vector<Cyclotomic> qs = {
            Cyclotomic(2), Cyclotomic::zeta(3),
            (Cyclotomic(3) + Cyclotomic(4) * Cyclotomic::zeta(4)) / Cyclotomic(5)};
        for (const auto& spec : specs) {
            for (const auto& q : qs) {
                SeriesPrefix p = prefix(spec, q, 12);
                std::ostringstream first;
                dump_prefix(p, first);
                std::istringstream in(first.str());
                PrefixDump d = load_prefix(in);
                std::ostringstream second;
                dump_prefix(d, second);
                if (first.str() != second.str() || d.terms != p.terms) {
                    note = "round trip differs";
                    return false;
                }
            }
        }
        return true;
    });

    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
