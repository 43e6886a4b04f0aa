#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "circa/circulant.hpp"
#include "circa/conditions.hpp"
#include "circa/errors.hpp"
#include "circa/families.hpp"
#include "circa/ramanujan.hpp"
#include "circa/report.hpp"

namespace circa::cli {

namespace {

std::vector<FirstRow> read_rows(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open row file '" + path + "'");
    std::vector<FirstRow> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        try {
            rows.push_back(FirstRow::parse(line));
        } catch (const InvalidInput& e) {
            throw InvalidInput(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return rows;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    if (!f) throw InvalidInput("cannot write '" + path + "'");
    f << content;
}

std::string verdict_line(const Certificate& cert) {
    if (cert.verdict == Verdict::Singular) {
        return "SINGULAR witness d=" + std::to_string(*cert.witness_d) +
               " det=" + format_rational(cert.determinant.value_or(0));
    }
    return "NONSINGULAR (" + to_string(cert.path) + ")";
}

void print_certificate(const Certificate& cert, std::ostream& out) {
    out << verdict_line(cert) << '\n';
    if (cert.verdict == Verdict::Nonsingular && cert.determinant) {
        out << "  det = " << format_rational(*cert.determinant) << '\n';
    }
    for (const auto& [d, value] : cert.screen.values) {
        out << "  d=" << d << ": " << format_rational(value) << (value == 0 ? "  (vanishes)" : "")
            << '\n';
    }
}

void print_coeffs(std::ostream& out, const std::vector<std::int64_t>& c) {
    for (std::size_t j = 0; j < c.size(); ++j) out << (j ? " " : "") << c[j];
}

struct CheckArgs {
    std::string row;
    std::string file;
    std::string certificate;
    bool json = false;
};

int cmd_check(const CheckArgs& a, std::ostream& out) {
    if (a.row.empty() == a.file.empty()) throw InvalidInput("check needs exactly one of --row or --file");
    const std::vector<FirstRow> rows =
        a.file.empty() ? std::vector<FirstRow>{FirstRow::parse(a.row)} : read_rows(a.file);
    Json docs = Json::array();
    for (const auto& row : rows) {
        const Certificate cert = decide(row, true);
        docs.push_back(to_json(cert));
        if (a.json) continue;
        if (a.file.empty()) {
            print_certificate(cert, out);
        } else {
            out << row.to_string() << '\t' << verdict_line(cert) << '\n';
        }
    }
    const Json doc = a.file.empty() ? docs[0] : docs;
    if (a.json) out << doc.dump(2) << '\n';
    if (!a.certificate.empty()) write_file(a.certificate, doc.dump(2) + "\n");
    return kOk;
}

struct DetArgs {
    std::string row;
    std::string method = "both";
    std::string csv;
    bool eigenvalues = false;
};

int cmd_det(const DetArgs& a, std::ostream& out) {
    const FirstRow row = FirstRow::parse(a.row);
    std::optional<Rational> bareiss;
    std::optional<Rational> via_resultant;
    if (a.method != "resultant") bareiss = det_bareiss(row);
    if (a.method != "bareiss") via_resultant = det_resultant(row);
    if (bareiss && via_resultant && *bareiss != *via_resultant) {
        throw InternalInconsistency("Bareiss determinant " + format_rational(*bareiss) +
                                    " differs from resultant determinant " +
                                    format_rational(*via_resultant));
    }
    out << "det=" << format_rational(bareiss ? *bareiss : *via_resultant) << '\n';
    if (a.eigenvalues) {
        out << "approximate eigenvalues (display only):\n";
        const auto eig = approximate_eigenvalues(row);
        for (std::size_t l = 0; l < eig.size(); ++l) {
            out << "  lambda_" << l << " ~ " << std::setprecision(10) << eig[l].real()
                << (eig[l].imag() < 0 ? " - " : " + ") << std::abs(eig[l].imag()) << "i\n";
        }
    }
    if (!a.csv.empty()) {
        const std::string csv = to_csv(expand(row));
        if (a.csv == "-") {
            out << csv;
        } else {
            write_file(a.csv, csv);
        }
    }
    return kOk;
}

struct ConditionsArgs {
    std::uint64_t n = 0;
    bool templates = false;
    bool json = false;
};

int cmd_conditions(const ConditionsArgs& a, std::ostream& out) {
    if (a.n < 1) throw InvalidInput("--n must be positive");
    const auto conditions = generate_conditions(a.n);
    if (a.json) {
        out << conditions_to_json(a.n, conditions, a.templates).dump(2) << '\n';
        return kOk;
    }
    out << "n=" << a.n << ": " << conditions.size() << " divisor conditions\n";
    for (const auto& c : conditions) {
        out << "d=" << c.d << ": ";
        print_coeffs(out, c.coeffs);
        out << '\n';
    }
    if (!a.templates) return kOk;
    const auto cat = template_conditions(a.n);
    if (!cat) {
        out << "templates: none for this size\n";
        return kOk;
    }
    out << "templates (" << to_string(cat->shape) << "):\n";
    for (const auto& t : cat->conditions) {
        out << "d=" << t.d << ": " << t.identity << "\n   ";
        print_coeffs(out, t.coeffs);
        out << '\n';
    }
    const TemplateMatchReport rep = templates_match_generic(a.n);
    out << "templates match generic conditions: " << (rep.matches ? "yes" : "no") << '\n';
    for (const auto& m : rep.mismatches) out << "  mismatch: " << m << '\n';
    for (const auto& d : rep.printed_discrepancies) out << "  printed form: " << d << '\n';
    return kOk;
}

int cmd_ramanujan_table(std::uint64_t dmax, std::uint64_t nmax, std::ostream& out) {
    if (dmax < 1) throw InvalidInput("--dmax must be positive");
    out << 'd';
    for (std::uint64_t n = 0; n <= nmax; ++n) out << '\t' << n;
    out << '\n';
    for (std::uint64_t d = 1; d <= dmax; ++d) {
        out << d;
        for (std::uint64_t n = 0; n <= nmax; ++n) out << '\t' << ramanujan_sum(d, n);
        out << '\n';
    }
    return kOk;
}

struct MailletArgs {
    std::uint64_t p = 0;
    unsigned m = 0;
    std::uint64_t h = 0;
    bool decide = false;
    bool similarity = false;
    bool json = false;
};

int cmd_maillet(const MailletArgs& a, std::ostream& out) {
    const MailletSpec spec = a.h == 0 ? MailletSpec(a.p, a.m) : MailletSpec(a.p, a.m, a.h);
    const FirstRow g = build_G(spec);
    Json doc;
    doc["p"] = spec.p();
    doc["m"] = spec.m();
    doc["h"] = spec.h();
    doc["row"] = g.to_string();
    Json tags = Json::array();
    if (diamond_applies(spec.p(), spec.m())) tags.push_back("diamond");
    if (star_applies(spec.p())) tags.push_back("star");
    if (star_star_applies(spec.p(), spec.m())) tags.push_back("star-star");
    doc["tags"] = tags;
    std::optional<Certificate> cert;
    std::optional<SimilarityCheck> sim;
    if (a.decide) {
        cert = decide(g, true);
        doc["certificate"] = to_json(*cert);
    }
    if (a.similarity) {
        sim = verify_permutation_similarity(spec);
        if (!sim->ok) throw InternalInconsistency("permutation similarity check failed");
        doc["similarity"] = {{"ok", sim->ok},
                             {"permutation", sim->permutation},
                             {"det_A", sim->det_A.get_str()},
                             {"det_G", format_rational(sim->det_G)}};
    }
    if (a.json) {
        out << doc.dump(2) << '\n';
        return kOk;
    }
    out << "G_{" << spec.p() << "," << spec.m() << "," << spec.h() << "} first row: " << g.to_string()
        << '\n';
    out << "invertibility tags: " << (tags.empty() ? "none" : tags.dump()) << '\n';
    if (cert) {
        out << "decide: ";
        print_certificate(*cert, out);
    }
    if (sim) {
        out << "permutation similarity: ok (i_a = h^a mod p:";
        for (auto i : sim->permutation) out << ' ' << i;
        out << ")\n  det A = " << sim->det_A.get_str() << "\n  det G = " << format_rational(sim->det_G)
            << '\n';
    }
    return kOk;
}

struct ZeroOneArgs {
    std::uint64_t n = 0;
    std::uint64_t ones = 0;
    bool exhaustive = false;
    std::uint64_t samples = 0;
    std::uint64_t seed = ZeroOneScanOptions{}.seed;
    bool json = false;
};

int cmd_zeroone(const ZeroOneArgs& a, std::ostream& out) {
    if (a.n < 2 || !factorize(a.n).is_prime_power()) {
        throw InvalidInput("zeroone: n = " + std::to_string(a.n) + " is not a prime power");
    }
    ZeroOneScanOptions opts;
    opts.exhaustive = a.samples == 0;
    if (a.samples > 0) opts.samples = a.samples;
    opts.seed = a.seed;
    const ZeroOneReport r = zeroone_scan(a.n, a.ones, opts);
    if (a.json) {
        out << to_json(r).dump(2) << '\n';
        return kOk;
    }
    out << "n=" << r.n << " ones=" << r.ones << " mode=" << (r.exhaustive ? "exhaustive" : "sampled")
        << '\n';
    out << "tested=" << r.tested << " singular=" << r.singular << " nonsingular=" << r.nonsingular
        << " screen-certified=" << r.decided_by_screen << '\n';
    out << "count guarantee: " << (r.guaranteed.value_or(false) ? "applies" : "does not apply") << '\n';
    if (r.first_singular) {
        out << "first singular arrangement: {";
        for (std::size_t i = 0; i < r.first_singular->size(); ++i) {
            out << (i ? "," : "") << (*r.first_singular)[i];
        }
        out << "}\n";
    }
    if (!r.consistent()) throw InternalInconsistency("singular arrangement despite count guarantee");
    return kOk;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact invertibility of rational circulant matrices", "circa"};
    app.require_subcommand(1);

    CheckArgs check;
    auto* sub_check = app.add_subcommand("check", "Decide invertibility of circ{row} with a certificate");
    auto* row_opt = sub_check->add_option("--row", check.row, "Comma-separated rationals, e.g. 1,2/3,-5");
    sub_check->add_option("--file", check.file, "File with one row per line")->excludes(row_opt);
    sub_check->add_option("--certificate", check.certificate, "Write the JSON certificate here");
    sub_check->add_flag("--json", check.json, "Print JSON instead of text");

    DetArgs det;
    auto* sub_det = app.add_subcommand("det", "Exact determinant of circ{row}");
    sub_det->add_option("--row", det.row, "Comma-separated rationals")->required();
    sub_det->add_option("--method", det.method, "bareiss, resultant or both")
        ->check(CLI::IsMember({"bareiss", "resultant", "both"}));
    sub_det->add_option("--csv", det.csv, "Export the expanded matrix as CSV ('-' for stdout)");
    sub_det->add_flag("--approx-eigenvalues", det.eigenvalues, "Print floating-point eigenvalues");

    ConditionsArgs conds;
    auto* sub_cond = app.add_subcommand("conditions", "Divisor condition catalog for size n");
    sub_cond->add_option("--n", conds.n, "Matrix size")->required();
    sub_cond->add_flag("--templates", conds.templates, "Include hand-derived templates");
    sub_cond->add_flag("--json", conds.json, "Print JSON");

    std::uint64_t dmax = 0, nmax = 0;
    auto* sub_table = app.add_subcommand("ramanujan-table", "TSV of C_d(n)");
    sub_table->add_option("--dmax", dmax, "Largest d")->required();
    sub_table->add_option("--nmax", nmax, "Largest n")->required();

    MailletArgs maillet;
    auto* sub_maillet = app.add_subcommand("maillet", "Maillet-type circulant G_{p,m}");
    sub_maillet->set_help_flag("--help", "Print this help message and exit");
    sub_maillet->add_option("--p", maillet.p, "Odd prime")->required();
    sub_maillet->add_option("--m", maillet.m, "Exponent")->required();
    sub_maillet->add_option("--h", maillet.h, "Primitive element (default: smallest)");
    sub_maillet->add_flag("--decide", maillet.decide, "Run decide() on G");
    sub_maillet->add_flag("--verify-similarity", maillet.similarity, "Check P^T A P = G");
    sub_maillet->add_flag("--json", maillet.json, "Print JSON");

    std::uint64_t pmax = 0;
    unsigned mmax = 0;
    bool markdown = false, grid_json = false;
    auto* sub_t1 = app.add_subcommand("table1", "Invertibility tag grid over primes p and exponents m");
    sub_t1->add_option("--pmax", pmax, "Largest prime")->required();
    sub_t1->add_option("--mmax", mmax, "Largest exponent")->required();
    sub_t1->add_flag("--markdown", markdown, "Markdown table");
    sub_t1->add_flag("--json", grid_json, "Print JSON");

    ZeroOneArgs zo;
    auto* sub_zo = app.add_subcommand("zeroone", "Scan 0/1 circulants with a fixed number of ones");
    sub_zo->add_option("--n", zo.n, "Size (a prime power)")->required();
    sub_zo->add_option("--ones", zo.ones, "Number of ones")->required();
    auto* ex = sub_zo->add_flag("--exhaustive", zo.exhaustive, "Every rotation class (n <= 20)");
    sub_zo->add_option("--samples", zo.samples, "Random arrangements")->excludes(ex);
    sub_zo->add_option("--seed", zo.seed, "Sampling seed");
    sub_zo->add_flag("--json", zo.json, "Print JSON");

    std::uint64_t qmax = 200;
    bool pairs_json = false;
    auto* sub_pairs = app.add_subcommand("pairs", "Primes q with 4q+1 prime and r = 2^q mod p");
    sub_pairs->add_option("--qmax", qmax, "Largest q");
    sub_pairs->add_flag("--json", pairs_json, "Print JSON");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kInvalidInput;
    }

    try {
        if (sub_check->parsed()) return cmd_check(check, out);
        if (sub_det->parsed()) return cmd_det(det, out);
        if (sub_cond->parsed()) return cmd_conditions(conds, out);
        if (sub_table->parsed()) return cmd_ramanujan_table(dmax, nmax, out);
        if (sub_maillet->parsed()) return cmd_maillet(maillet, out);
        if (sub_t1->parsed()) {
            const TagGrid grid = table1(pmax, mmax);
            out << (grid_json ? to_json(grid).dump(2) + "\n" : render_grid(grid, markdown));
            return kOk;
        }
        if (sub_zo->parsed()) return cmd_zeroone(zo, out);
        if (sub_pairs->parsed()) {
            const auto pairs = quarter_prime_pairs(qmax);
            if (pairs_json) {
                out << to_json(pairs).dump(2) << '\n';
            } else {
                out << "q\tp\tr\tr_mod_4\tqualifies\n";
                for (const auto& p : pairs) {
                    out << p.q << '\t' << p.p << '\t' << p.r << '\t' << p.r % 4 << '\t'
                        << (p.qualifies ? "yes" : "no") << '\n';
                }
            }
            return kOk;
        }
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const InternalInconsistency& e) {
        err << "internal inconsistency: " << e.what() << '\n';
        return kInconsistent;
    }
    return kInvalidInput;
}

}  // namespace circa::cli
