#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "qpolya/algdecide.hpp"
#include "qpolya/parser.hpp"

using json = nlohmann::json;
using namespace qpolya;

namespace {

json value_json(const Cyclotomic& v) {
    json coords = json::array();
    for (const Rational& c : v.coordinates()) coords.push_back(to_fraction_string(c));
    return json{{"order", v.order()}, {"coordinates", coords}};
}

json int_poly_json(const UniPoly<Int>& p) {
    json a = json::array();
    for (long e = 0; e <= p.degree(); ++e)
        a.push_back(p.coeff(static_cast<std::size_t>(e)).get_str());
    return a;
}

json rat_poly_json(const UniPoly<Rational>& p) {
    json a = json::array();
    for (long e = 0; e <= p.degree(); ++e)
        a.push_back(to_fraction_string(p.coeff(static_cast<std::size_t>(e))));
    return a;
}

json cyc_poly_json(const UniPoly<Cyclotomic>& p) {
    json a = json::array();
    for (long e = 0; e <= p.degree(); ++e)
        a.push_back(value_json(p.coeff(static_cast<std::size_t>(e))));
    return a;
}

json bipoly_json(const BiPoly<Cyclotomic>& p, const char* first, const char* second) {
    json a = json::array();
    for (const auto& [key, coeff] : p.terms())
        a.push_back(json{{first, key.first}, {second, key.second}, {"coeff", value_json(coeff)}});
    return a;
}

json equation_json(const AlgEquation& eq) {
    return json{{"dx", eq.dx},
                {"dz", eq.dz},
                {"verified_order", eq.verified_order},
                {"text", eq.poly.to_string("x", "z")},
                {"terms", bipoly_json(eq.poly, "i", "j")}};
}

json recurrence_json(const PRecurrence& rec) {
    json coeffs = json::array();
    for (const auto& c : rec.coeffs)
        coeffs.push_back(json{{"text", c.to_string("j")}, {"coefficients", cyc_poly_json(c)}});
    return json{{"order", rec.order}, {"degree", rec.degree}, {"coefficients", coeffs}};
}

std::string terms_text(const std::vector<Cyclotomic>& terms) {
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) out += ", ";
        out += terms[i].to_string();
    }
    return out;
}

// q lives in Q(zeta_order): atoms are rationals or zeta_order, so the parsed
// order always divides the requested one and the embedding is total.
Cyclotomic parse_q(const std::string& expr, unsigned long order) {
    return parse_cyclotomic_expr(expr, order).embedded(order);
}

PrefixDump load_dump_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("io_error", "cannot open '" + path + "'");
    return load_prefix(in);
}

int emit_error(const std::string& format, const std::string& code, const std::string& message,
               int exit_code) {
    if (format == "json")
        std::cout << json{{"error", {{"code", code}, {"message", message}}}}.dump(2) << "\n";
    else
        std::cerr << "error (" << code << "): " << message << "\n";
    return exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"coefficient lines of q-binomial series: prefixes, guessing, decision"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    long n = 0, k = 0, a = 2, b = 1;
    unsigned long order = 1;
    std::string q_expr;

    auto add_spec = [&](CLI::App* sub) {
        sub->add_option("n", n, "series parameter n")->required();
        sub->add_option("k", k, "series parameter k")->required();
        sub->add_option("a", a, "line slope a")->required();
        sub->add_option("b", b, "line slope b")->required();
        sub->fallthrough();
    };

    // qbinom
    auto* qbinom = app.add_subcommand("qbinom", "q-binomial [n, k] as a polynomial or value");
    long qb_n = 0, qb_k = 0;
    qbinom->add_option("n", qb_n)->required();
    qbinom->add_option("k", qb_k)->required();
    qbinom->add_option("--order", order, "cyclotomic field order for --q");
    qbinom->add_option("--q", q_expr, "evaluate at this element of Q(zeta_order)");
    qbinom->fallthrough();
    qbinom->callback([&] {
        if (q_expr.empty()) {
            const UniPoly<Int>& p = q_binomial(qb_n, qb_k);
            if (format == "json")
                std::cout << json{{"n", qb_n}, {"k", qb_k}, {"coefficients", int_poly_json(p)}}
                                 .dump(2)
                          << "\n";
            else
                std::cout << p.to_string("q") << "\n";
            return;
        }
        Cyclotomic q = parse_q(q_expr, order);
        Cyclotomic v = q_binomial_eval(qb_n, qb_k, q);
        if (format == "json")
            std::cout << json{{"n", qb_n}, {"k", qb_k}, {"q", q.to_string()}, {"value", value_json(v)}}
                             .dump(2)
                      << "\n";
        else
            std::cout << v.to_string() << "\n";
    });

    // series
    auto* series = app.add_subcommand("series", "prefix of h_q(x) = sum [n+aj, k+bj]_q x^j");
    std::size_t term_count = 0;
    std::string dump_path;
    add_spec(series);
    series->add_option("--terms", term_count, "number of coefficients")->required();
    series->add_option("--order", order, "cyclotomic field order for --q");
    series->add_option("--q", q_expr, "element of Q(zeta_order)")->required();
    series->add_option("--dump", dump_path, "also write the prefix dump to this file");
    series->callback([&] {
        Cyclotomic q = parse_q(q_expr, order);
        SeriesPrefix p = prefix({n, k, a, b}, q, term_count);
        if (!dump_path.empty()) {
            std::ofstream out(dump_path);
            if (!out) throw Error("io_error", "cannot write '" + dump_path + "'");
            dump_prefix(p, out);
        }
        if (format == "json") {
            json terms = json::array();
            for (const Cyclotomic& t : p.terms) {
                json coords = json::array();
                for (const Rational& c : t.coordinates()) coords.push_back(to_fraction_string(c));
                terms.push_back(coords);
            }
            std::cout << json{{"spec", {{"n", n}, {"k", k}, {"a", a}, {"b", b}}},
                              {"order", q.order()},
                              {"q", q.to_string()},
                              {"terms", terms}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << terms_text(p.terms) << "\n";
        }
    });

    // decide
    auto* dec = app.add_subcommand("decide", "algebraic or transcendental verdict for h_q");
    DecideConfig cfg;
    add_spec(dec);
    dec->add_option("--order", order, "cyclotomic field order for --q");
    dec->add_option("--q", q_expr, "element of Q(zeta_order)")->required();
    dec->add_option("--max-diag", cfg.max_diagonal, "escalation cap for the (t, t) search");
    dec->add_option("--verify", cfg.verify_order, "minimum prefix length per round");
    dec->add_flag("--guess-report", cfg.include_guess_report,
                  "run bounded guesses on the transcendental side");
    dec->callback([&] {
        Verdict v = decide({n, k, a, b}, parse_q(q_expr, order), cfg);
        if (format == "json") {
            json out;
            switch (v.kind) {
                case Verdict::Kind::Algebraic:
                    out = json{{"verdict", "algebraic"}, {"equation", equation_json(*v.equation)}};
                    break;
                case Verdict::Kind::Transcendental: {
                    json cert;
                    if (v.degree_growth) {
                        cert = json{{"kind", "degree_growth"},
                                    {"degree_poly", v.degree_growth->degree_poly.to_string("j")},
                                    {"leading_coefficient",
                                     v.degree_growth->leading_coefficient.get_str()},
                                    {"abs_class", to_string(v.degree_growth->abs_class)}};
                    } else {
                        cert = json{{"kind", "not_root_of_unity"},
                                    {"exponent", v.not_root_of_unity->exponent},
                                    {"abs_class", to_string(v.not_root_of_unity->abs_class)}};
                        if (v.not_root_of_unity->searched) {
                            const GuessSearchReport& r = *v.not_root_of_unity->searched;
                            cert["searched"] = json{{"dx", r.dx},
                                                    {"dz", r.dz},
                                                    {"rec_order", r.rec_order},
                                                    {"rec_degree", r.rec_degree},
                                                    {"terms_used", r.terms_used}};
                        }
                    }
                    out = json{{"verdict", "transcendental"}, {"certificate", cert}};
                    break;
                }
                case Verdict::Kind::Undecided:
                    out = json{{"verdict", "undecided"},
                               {"report", {{"max_diagonal", v.undecided->max_diagonal},
                                           {"verify_order", v.undecided->verify_order}}}};
                    break;
            }
            std::cout << out.dump(2) << "\n";
            return;
        }
        switch (v.kind) {
            case Verdict::Kind::Algebraic:
                std::cout << "verdict: algebraic\n"
                          << "equation: " << v.equation->poly.to_string("x", "z") << "\n"
                          << "verified_order: " << v.equation->verified_order << "\n";
                break;
            case Verdict::Kind::Transcendental:
                std::cout << "verdict: transcendental\n";
                if (v.degree_growth) {
                    std::cout << "certificate: degree_growth\n"
                              << "degree_poly: " << v.degree_growth->degree_poly.to_string("j")
                              << "\n"
                              << "leading_coefficient: "
                              << v.degree_growth->leading_coefficient.get_str() << "\n"
                              << "abs_class: " << to_string(v.degree_growth->abs_class) << "\n";
                } else {
                    std::cout << "certificate: not_root_of_unity\n"
                              << "exponent: " << v.not_root_of_unity->exponent << "\n"
                              << "abs_class: " << to_string(v.not_root_of_unity->abs_class)
                              << "\n";
                    if (v.not_root_of_unity->searched) {
                        const GuessSearchReport& r = *v.not_root_of_unity->searched;
                        std::cout << "searched: dx=" << r.dx << " dz=" << r.dz
                                  << " rec_order=" << r.rec_order
                                  << " rec_degree=" << r.rec_degree
                                  << " terms=" << r.terms_used << " (all empty)\n";
                    }
                }
                break;
            case Verdict::Kind::Undecided:
                std::cout << "verdict: undecided\n"
                          << "max_diagonal: " << v.undecided->max_diagonal << "\n"
                          << "verify_order: " << v.undecided->verify_order << "\n";
                break;
        }
    });

    // guess-alg
    auto* galg = app.add_subcommand("guess-alg", "fit P(x, h) = 0 from a dumped prefix");
    std::string input_path;
    int dx = 2, dz = 2;
    galg->add_option("--input", input_path, "prefix dump file")->required();
    galg->add_option("--dx", dx, "x-degree bound")->required();
    galg->add_option("--dz", dz, "z-degree bound")->required();
    galg->fallthrough();
    galg->callback([&] {
        PrefixDump d = load_dump_file(input_path);
        auto eq = guess_algebraic(d.terms, dx, dz);
        if (format == "json") {
            json out{{"found", eq.has_value()}};
            if (eq) out["equation"] = equation_json(*eq);
            std::cout << out.dump(2) << "\n";
        } else if (eq) {
            std::cout << "equation: " << eq->poly.to_string("x", "z") << "\n"
                      << "verified_order: " << eq->verified_order << "\n";
        } else {
            std::cout << "none\n";
        }
    });

    // guess-rec
    auto* grec = app.add_subcommand("guess-rec", "fit a polynomial recurrence from a dumped prefix");
    int rec_order = 1, rec_degree = 1;
    grec->add_option("--input", input_path, "prefix dump file")->required();
    grec->add_option("--rec-order", rec_order, "recurrence order bound")->required();
    grec->add_option("--rec-degree", rec_degree, "coefficient degree bound")->required();
    grec->fallthrough();
    grec->callback([&] {
        PrefixDump d = load_dump_file(input_path);
        auto rec = guess_precurrence(d.terms, rec_order, rec_degree);
        if (format == "json") {
            json out{{"found", rec.has_value()}};
            if (rec) out["recurrence"] = recurrence_json(*rec);
            std::cout << out.dump(2) << "\n";
        } else if (rec) {
            for (std::size_t i = 0; i < rec->coeffs.size(); ++i)
                std::cout << "c_" << i << "(j) = " << rec->coeffs[i].to_string("j") << "\n";
        } else {
            std::cout << "none\n";
        }
    });

    // paths
    auto* paths = app.add_subcommand("paths", "area distribution of monotone lattice paths");
    long px = 0, py = 0, cap = 20;
    paths->add_option("x", px)->required();
    paths->add_option("y", py)->required();
    paths->add_option("--cap", cap, "enumeration cap on x + y");
    paths->fallthrough();
    paths->callback([&] {
        AreaDistribution d = path_area_distribution(px, py, cap);
        if (format == "json")
            std::cout << json{{"x", d.x}, {"y", d.y}, {"coefficients", int_poly_json(d.distribution)}}
                             .dump(2)
                      << "\n";
        else
            std::cout << d.distribution.to_string("q") << "\n";
    });

    // vandermonde
    auto* vand = app.add_subcommand("vandermonde", "factored generalized Vandermonde determinant");
    int vd = 1, vmax = 3;
    vand->add_option("d", vd)->required();
    vand->add_option("--max-d", vmax, "size cap");
    vand->fallthrough();
    vand->callback([&] {
        VandermondeFactorization f = vandermonde_det(vd, vmax);
        if (format == "json") {
            json factors = json::array();
            for (const auto& [s, m] : f.cyclotomic_multiplicities)
                factors.push_back(json{{"order", s}, {"multiplicity", m}});
            std::cout << json{{"d", vd},
                              {"constant", to_fraction_string(f.constant)},
                              {"z_power", f.z_power},
                              {"factors", factors},
                              {"determinant", rat_poly_json(f.det)}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << "det = " << f.det.to_string("z") << "\n";
            std::string fact = to_fraction_string(f.constant);
            if (f.z_power) fact += " * z^" + std::to_string(f.z_power);
            for (const auto& [s, m] : f.cyclotomic_multiplicities) {
                fact += " * Phi_" + std::to_string(s);
                if (m > 1) fact += "^" + std::to_string(m);
            }
            std::cout << "factors: " << fact << "\n";
        }
    });

    // check-ratio
    auto* ratio = app.add_subcommand("check-ratio", "exact consecutive-coefficient identity");
    long jmax = 10;
    add_spec(ratio);
    ratio->add_option("--jmax", jmax, "check j = 0..jmax");
    ratio->callback([&] {
        LineSpec spec{n, k, a, b};
        require_admissible(spec);
        bool all = true;
        for (long j = 0; j <= jmax; ++j) all = all && ratio_identity_check(spec, j);
        if (format == "json")
            std::cout << json{{"spec", {{"n", n}, {"k", k}, {"a", a}, {"b", b}}},
                              {"jmax", jmax},
                              {"ok", all}}
                             .dump(2)
                      << "\n";
        else
            std::cout << (all ? "ok" : "FAILED") << " for j <= " << jmax << "\n";
        if (!all) throw Error("inconsistency", "ratio identity failed");
    });

    // lucas-split
    auto* split = app.add_subcommand("lucas-split", "residue-class decomposition at zeta_order");
    add_spec(split);
    split->add_option("--order", order, "root-of-unity order")->required();
    split->callback([&] {
        auto comps = lucas_decomposition({n, k, a, b}, Cyclotomic::zeta(order));
        if (format == "json") {
            json arr = json::array();
            for (const auto& c : comps)
                arr.push_back(json{{"residue_class", c.residue_class},
                                   {"scalar", value_json(c.scalar)},
                                   {"shifted_n", c.shifted_n},
                                   {"shifted_k", c.shifted_k},
                                   {"stride", c.stride}});
            std::cout << json{{"spec", {{"n", n}, {"k", k}, {"a", a}, {"b", b}}},
                              {"order", order},
                              {"components", arr}}
                             .dump(2)
                      << "\n";
        } else {
            for (const auto& c : comps) {
                std::cout << "r=" << c.residue_class << ": u_{" << c.stride << "l+"
                          << c.residue_class << "} = (" << c.scalar.to_string() << ") * C("
                          << c.shifted_n << " + " << a << "l, " << c.shifted_k << " + " << b
                          << "l)\n";
            }
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        return emit_error(format, "usage", e.what(), 2);
    } catch (const SyntaxError& e) {
        return emit_error(format, e.code(), e.what(), 2);
    } catch (const Error& e) {
        return emit_error(format, e.code(), e.what(), 1);
    }
    return 0;
}
