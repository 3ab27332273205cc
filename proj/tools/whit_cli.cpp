// Command-line front end: batch evaluation of newform Whittaker values on
// the GL(n) torus, Hecke eigenvalue / Satake parameter / L-factor
// conversions, and the identity checks, with text, JSON and CSV output.
//
// Exit status: 0 on success (all requested verifications passed), 1 on a
// verification failure or internal error, 2 on a usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "whit/coset.hpp"
#include "whit/laurent.hpp"
#include "whit/rational.hpp"
#include "whit/satake.hpp"
#include "whit/series.hpp"
#include "whit/signature.hpp"
#include "whit/symfunc.hpp"
#include "whit/whittaker.hpp"
#include "whit/zeta.hpp"

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (const char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

whit::SatakeParams parse_alpha(const std::string& text, int n) {
    const auto toks = split(text, ',');
    if (static_cast<int>(toks.size()) != n)
        throw UsageError("alpha must have exactly n = " + std::to_string(n) +
                         " comma-separated rationals, got " + std::to_string(toks.size()));
    std::vector<whit::Rational> a;
    try {
        for (const auto& t : toks) a.push_back(whit::parse_rational(t));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return whit::SatakeParams(std::move(a));
}

whit::Signature parse_signature(const std::string& text, int n) {
    const auto toks = split(text, ',');
    if (static_cast<int>(toks.size()) != n - 1)
        throw UsageError("f must have exactly n-1 = " + std::to_string(n - 1) +
                         " comma-separated integers, got " + std::to_string(toks.size()));
    std::vector<int> parts;
    for (const auto& t : toks) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stoi(t, &used));
            if (used != t.size()) throw std::invalid_argument(t);
        } catch (const std::exception&) {
            throw UsageError("malformed integer in f: '" + t + "'");
        }
    }
    return whit::Signature(std::move(parts));
}

json laurent_json(const whit::Laurent& x) {
    json obj = json::object();
    for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it)
        obj[std::to_string(it->first)] = it->second.get_str();
    return obj;
}

json alpha_json(const whit::SatakeParams& a) {
    json arr = json::array();
    for (const auto& r : a.alphas()) arr.push_back(r.get_str());
    return arr;
}

json sig_json(const whit::Signature& f) {
    json arr = json::array();
    for (const int x : f.parts()) arr.push_back(x);
    return arr;
}

std::string csv_quote(const std::string& s) { return '"' + s + '"'; }

std::string num_str(double x) {
    std::ostringstream os;
    os << std::setprecision(12) << x;
    return os.str();
}

struct CommonOpts {
    int n = 0;
    std::string alpha;
    std::string format = "text";
    unsigned long q = 0;  // 0 = no numeric column

    whit::SatakeParams params() const { return parse_alpha(alpha, n); }
    void check_q() const {
        if (q == 1) throw UsageError("--q must be at least 2");
    }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_q = true) {
    cmd->add_option("--n", o.n, "rank of the group GL(n)")->required();
    cmd->add_option("--alpha", o.alpha,
                    "Satake parameters: n comma-separated rationals (a/b or a); use a "
                    "trailing 0 for positive conductor")
        ->required();
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    if (with_q)
        cmd->add_option("--q", o.q, "residue field size for an approximate numeric column");
}

// ---------------------------------------------------------------- eval ----

int run_eval(const CommonOpts& o, const std::string& f_str) {
    o.check_q();
    const whit::SatakeParams a = o.params();
    const whit::Signature f = parse_signature(f_str, o.n);
    const whit::Laurent w = whit::whittaker_value(f, a);
    if (o.format == "json") {
        json j;
        j["n"] = o.n;
        j["alpha"] = alpha_json(a);
        j["f"] = sig_json(f);
        j["value"] = laurent_json(w);
        j["value_str"] = w.str();
        if (o.q) j["numeric"] = w.eval_at(o.q);
        std::cout << j.dump(2) << "\n";
    } else if (o.format == "csv") {
        std::cout << (o.q ? "value,numeric\n" : "value\n") << w.str();
        if (o.q) std::cout << ',' << num_str(w.eval_at(o.q));
        std::cout << "\n";
    } else {
        std::cout << w.str() << "\n";
        if (o.q) std::cout << "numeric: " << num_str(w.eval_at(o.q)) << "\n";
    }
    return 0;
}

// --------------------------------------------------------------- table ----

int run_table(const CommonOpts& o, int max_weight) {
    o.check_q();
    if (max_weight < 0) throw UsageError("--max-weight must be >= 0");
    const whit::SatakeParams a = o.params();

    struct Row {
        whit::Signature f;
        whit::Rational s;
        long delta_exp;
        whit::Laurent w;
    };
    std::vector<Row> rows;
    for (const whit::Signature& f : whit::dominant_signatures(o.n, max_weight)) {
        const whit::Rational s = whit::schur(f, a);
        const long e = whit::modulus_sqrt_exponent(f);
        rows.push_back({f, s, e, whit::Laurent::v_pow(e, s)});
    }

    if (o.format == "json") {
        json j;
        j["n"] = o.n;
        j["alpha"] = alpha_json(a);
        j["max_weight"] = max_weight;
        if (o.q) j["q"] = o.q;
        json arr = json::array();
        for (const Row& r : rows) {
            json row;
            row["f"] = sig_json(r.f);
            row["schur"] = r.s.get_str();
            row["delta_exp"] = r.delta_exp;
            row["w"] = laurent_json(r.w);
            row["w_str"] = r.w.str();
            if (o.q) row["numeric"] = r.w.eval_at(o.q);
            arr.push_back(std::move(row));
        }
        j["rows"] = std::move(arr);
        std::cout << j.dump(2) << "\n";
    } else if (o.format == "csv") {
        std::cout << "f,schur,delta_exp,w" << (o.q ? ",numeric" : "") << "\n";
        for (const Row& r : rows) {
            std::cout << csv_quote(r.f.str()) << ',' << r.s.get_str() << ',' << r.delta_exp << ','
                      << r.w.str();
            if (o.q) std::cout << ',' << num_str(r.w.eval_at(o.q));
            std::cout << "\n";
        }
    } else {
        std::vector<std::vector<std::string>> cells;
        cells.push_back({"f", "schur", "delta_exp", "W"});
        if (o.q) cells.back().push_back("numeric");
        for (const Row& r : rows) {
            cells.push_back({"(" + r.f.str() + ")", r.s.get_str(), std::to_string(r.delta_exp),
                             r.w.str()});
            if (o.q) cells.back().push_back(num_str(r.w.eval_at(o.q)));
        }
        std::vector<std::size_t> width(cells[0].size(), 0);
        for (const auto& row : cells)
            for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
        for (const auto& row : cells) {
            for (std::size_t c = 0; c < row.size(); ++c)
                std::cout << std::left << std::setw(static_cast<int>(width[c]) + 2) << row[c];
            std::cout << "\n";
        }
    }
    return 0;
}

// --------------------------------------------------------------- eigen ----

int run_eigen(const CommonOpts& o) {
    o.check_q();
    const whit::SatakeParams a = o.params();
    const whit::HeckeEigenvalues ev = whit::eigen_from_satake(a);
    if (o.format == "json") {
        json j;
        j["n"] = o.n;
        j["alpha"] = alpha_json(a);
        json lam = json::array(), strs = json::array();
        for (const auto& l : ev.lambda) {
            lam.push_back(laurent_json(l));
            strs.push_back(l.str());
        }
        j["lambdas"] = std::move(lam);
        j["lambda_strs"] = std::move(strs);
        std::cout << j.dump(2) << "\n";
    } else if (o.format == "csv") {
        std::cout << "i,lambda" << (o.q ? ",numeric" : "") << "\n";
        for (std::size_t i = 0; i < ev.lambda.size(); ++i) {
            std::cout << (i + 1) << ',' << ev.lambda[i].str();
            if (o.q) std::cout << ',' << num_str(ev.lambda[i].eval_at(o.q));
            std::cout << "\n";
        }
    } else {
        for (std::size_t i = 0; i < ev.lambda.size(); ++i) {
            std::cout << "lambda_" << (i + 1) << " = " << ev.lambda[i].str();
            if (o.q) std::cout << " ~ " << num_str(ev.lambda[i].eval_at(o.q));
            std::cout << "\n";
        }
    }
    return 0;
}

// ------------------------------------------------------------- lfactor ----

int run_lfactor(const CommonOpts& o, int terms) {
    if (terms < 0) throw UsageError("--terms must be >= 0");
    const whit::SatakeParams a = o.params();
    const whit::RatPoly den = whit::lfactor_denominator(whit::eigen_from_satake(a));
    const whit::TruncSeries series = whit::series_invert(den, terms);
    if (o.format == "json") {
        json j;
        j["n"] = o.n;
        j["alpha"] = alpha_json(a);
        j["terms"] = terms;
        json d = json::array(), s = json::array();
        for (const auto& c : den) d.push_back(c.get_str());
        for (const auto& c : series.coeffs()) s.push_back(c.get_str());
        j["denominator"] = std::move(d);
        j["denominator_str"] = whit::poly_str(den);
        j["series"] = std::move(s);
        j["series_str"] = series.str();
        std::cout << j.dump(2) << "\n";
    } else if (o.format == "csv") {
        std::cout << "k,denominator,series\n";
        for (int k = 0; k <= terms; ++k) {
            const whit::Rational dk =
                k < static_cast<int>(den.size()) ? den[static_cast<std::size_t>(k)] : whit::Rational(0);
            std::cout << k << ',' << dk.get_str() << ',' << series.coeff(k).get_str() << "\n";
        }
    } else {
        std::cout << "denominator: " << whit::poly_str(den) << "\n";
        std::cout << "series: " << series.str() << "\n";
    }
    return 0;
}

// ------------------------------------------------------------ zeta-check --

int run_zeta_check(const CommonOpts& o, int terms) {
    if (terms < 1) throw UsageError("--terms must be >= 1");
    const whit::SatakeParams a = o.params();
    const whit::ZetaReport r = whit::zeta_equals_lfactor(a, terms);
    if (o.format == "json") {
        json j;
        j["n"] = o.n;
        j["alpha"] = alpha_json(a);
        j["terms"] = terms;
        j["equal"] = r.equal;
        if (!r.equal) {
            j["first_mismatch"] = r.first_mismatch;
            j["zeta_coeff"] = r.zeta_coeff.get_str();
            j["lfactor_coeff"] = r.lfactor_coeff.get_str();
        }
        std::cout << j.dump(2) << "\n";
    } else if (o.format == "csv") {
        std::cout << "equal,first_mismatch\n"
                  << (r.equal ? "true" : "false") << ',' << r.first_mismatch << "\n";
    } else if (r.equal) {
        std::cout << "OK: coefficients agree to order " << terms << "\n";
    } else {
        std::cout << "MISMATCH at X^" << r.first_mismatch << ": zeta=" << r.zeta_coeff.get_str()
                  << " lfactor=" << r.lfactor_coeff.get_str() << "\n";
    }
    return r.equal ? 0 : 1;
}

// ------------------------------------------------------- recursion-check --

int run_recursion_check(const CommonOpts& o, int max_weight) {
    if (max_weight < 1) throw UsageError("--max-weight must be >= 1");
    const whit::SatakeParams a = o.params();
    const whit::RecursionReport r = whit::verify_recursion(a, max_weight);
    if (o.format == "json") {
        json j;
        j["n"] = o.n;
        j["alpha"] = alpha_json(a);
        j["max_weight"] = max_weight;
        j["all_ok"] = r.all_ok;
        j["checks"] = r.checks.size();
        j["failures"] = r.failures;
        json failed = json::array();
        for (const auto& c : r.checks)
            if (!c.ok) failed.push_back({{"f", sig_json(c.f)}, {"i", c.i}});
        j["failed"] = std::move(failed);
        std::cout << j.dump(2) << "\n";
    } else if (o.format == "csv") {
        std::cout << "f,i,ok\n";
        for (const auto& c : r.checks)
            std::cout << csv_quote(c.f.str()) << ',' << c.i << ',' << (c.ok ? "true" : "false")
                      << "\n";
    } else if (r.all_ok) {
        std::cout << "OK: Hecke recursion holds for all " << r.checks.size()
                  << " checks up to weight " << max_weight << "\n";
    } else {
        std::cout << "FAIL: " << r.failures << " of " << r.checks.size() << " checks failed\n";
        int shown = 0;
        for (const auto& c : r.checks)
            if (!c.ok && shown++ < 20)
                std::cout << "  f=(" << c.f.str() << ") i=" << c.i << "\n";
    }
    return r.all_ok ? 0 : 1;
}

// ----------------------------------------------------------- solve-check --

int run_solve_check(const CommonOpts& o, int max_weight) {
    if (max_weight < 1) throw UsageError("--max-weight must be >= 1");
    const whit::SatakeParams a = o.params();
    const whit::WhittakerTable table = whit::solve_recursion(a, max_weight);
    struct Mismatch {
        whit::Signature f;
        whit::Laurent closed, solved;
    };
    std::vector<Mismatch> bad;
    long entries = 0;
    for (const whit::Signature& f : whit::dominant_signatures(o.n, max_weight)) {
        ++entries;
        const whit::Laurent closed = whit::whittaker_value(f, a);
        const whit::Laurent solved = table.value_at(f);
        if (closed != solved) bad.push_back({f, closed, solved});
    }
    const bool match = bad.empty();
    if (o.format == "json") {
        json j;
        j["n"] = o.n;
        j["alpha"] = alpha_json(a);
        j["max_weight"] = max_weight;
        j["match"] = match;
        j["entries"] = entries;
        json arr = json::array();
        for (const auto& mItem : bad)
            arr.push_back({{"f", sig_json(mItem.f)},
                           {"closed_form", mItem.closed.str()},
                           {"linear_solve", mItem.solved.str()}});
        j["mismatches"] = std::move(arr);
        std::cout << j.dump(2) << "\n";
    } else if (o.format == "csv") {
        std::cout << "match,entries,mismatches\n"
                  << (match ? "true" : "false") << ',' << entries << ',' << bad.size() << "\n";
    } else if (match) {
        std::cout << "OK: linear solve matches the closed form on " << entries
                  << " signatures (weight <= " << max_weight << ")\n";
    } else {
        std::cout << "FAIL: " << bad.size() << " mismatches\n";
        for (std::size_t t = 0; t < bad.size() && t < 20; ++t)
            std::cout << "  f=(" << bad[t].f.str() << ") closed=" << bad[t].closed.str()
                      << " solved=" << bad[t].solved.str() << "\n";
    }
    return match ? 0 : 1;
}

// ----------------------------------------------------------- coset-verify --

int run_coset_verify(int n, long p, int i, int m, int level, const std::string& format) {
    whit::CosetSpec spec(n, p, i, m, level);
    const whit::CosetReport r = whit::verify_coset_transversal(spec);
    const auto yn = [](bool b) { return b ? "yes" : "NO"; };
    if (format == "json") {
        json j;
        j["n"] = r.n;
        j["p"] = r.p;
        j["i"] = r.i;
        j["m"] = r.m;
        j["level"] = r.level;
        j["representatives"] = r.rep_count;
        j["expected"] = r.expected_count;
        j["km_size"] = r.km_size;
        j["subgroup_size"] = r.subgroup_size;
        j["count_ok"] = r.count_ok;
        j["distinct_ok"] = r.distinct_ok;
        j["coverage_ok"] = r.coverage_ok;
        j["index_ok"] = r.index_ok;
        j["partition_ok"] = r.partition_ok;
        j["ok"] = r.ok();
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "key,value\n"
                  << "representatives," << r.rep_count << "\n"
                  << "expected," << r.expected_count << "\n"
                  << "km_size," << r.km_size << "\n"
                  << "subgroup_size," << r.subgroup_size << "\n"
                  << "count_ok," << r.count_ok << "\n"
                  << "distinct_ok," << r.distinct_ok << "\n"
                  << "coverage_ok," << r.coverage_ok << "\n"
                  << "index_ok," << r.index_ok << "\n"
                  << "partition_ok," << r.partition_ok << "\n"
                  << "ok," << r.ok() << "\n";
    } else {
        std::cout << "representatives: " << r.rep_count << " (expected " << r.expected_count
                  << ")\n"
                  << "pairwise distinct cosets: " << yn(r.distinct_ok) << "\n"
                  << "full coverage, exactly one coset per element: " << yn(r.coverage_ok)
                  << " (|K_m mod p^" << r.level << "| = " << r.km_size << ")\n"
                  << "index [L0 : a Li] = q^i for every a: " << yn(r.index_ok) << "\n"
                  << "partition count |K_m| = reps * |subgroup|: " << yn(r.partition_ok) << " ("
                  << r.km_size << " = " << r.rep_count << " * " << r.subgroup_size << ")\n"
                  << "RESULT: " << (r.ok() ? "OK" : "FAIL") << "\n";
    }
    return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"whit: exact newform Whittaker values on the GL(n) torus over a p-adic field"};
    app.require_subcommand(1);
    int exit_code = 0;

    auto eval_opts = std::make_shared<CommonOpts>();
    auto eval_f = std::make_shared<std::string>();
    auto* eval_cmd = app.add_subcommand(
        "eval", "evaluate W at one torus point (non-dominant f gives 0)");
    add_common(eval_cmd, *eval_opts);
    eval_cmd->add_option("--f", *eval_f, "signature: n-1 comma-separated integers")->required();
    eval_cmd->callback([&exit_code, eval_opts, eval_f] { exit_code = run_eval(*eval_opts, *eval_f); });

    auto table_opts = std::make_shared<CommonOpts>();
    auto table_w = std::make_shared<int>(0);
    auto* table_cmd = app.add_subcommand(
        "table", "tabulate W over all dominant signatures up to a weight bound");
    add_common(table_cmd, *table_opts);
    table_cmd->add_option("--max-weight", *table_w, "largest signature weight")->required();
    table_cmd->callback(
        [&exit_code, table_opts, table_w] { exit_code = run_table(*table_opts, *table_w); });

    auto eigen_opts = std::make_shared<CommonOpts>();
    auto* eigen_cmd =
        app.add_subcommand("eigen", "print the Hecke eigenvalues lambda_1..lambda_{n-1}");
    add_common(eigen_cmd, *eigen_opts);
    eigen_cmd->callback([&exit_code, eigen_opts] { exit_code = run_eigen(*eigen_opts); });

    auto lf_opts = std::make_shared<CommonOpts>();
    auto lf_terms = std::make_shared<int>(10);
    auto* lf_cmd = app.add_subcommand(
        "lfactor", "print the L-factor denominator (via the eigenvalues) and its series");
    add_common(lf_cmd, *lf_opts, /*with_q=*/false);
    lf_cmd->add_option("--terms", *lf_terms, "series truncation order")->capture_default_str();
    lf_cmd->callback([&exit_code, lf_opts, lf_terms] { exit_code = run_lfactor(*lf_opts, *lf_terms); });

    auto zc_opts = std::make_shared<CommonOpts>();
    auto zc_terms = std::make_shared<int>(30);
    auto* zc_cmd = app.add_subcommand(
        "zeta-check", "verify that the zeta integral of the newform equals the L-factor");
    add_common(zc_cmd, *zc_opts, /*with_q=*/false);
    zc_cmd->add_option("--terms", *zc_terms, "comparison order")->capture_default_str();
    zc_cmd->callback(
        [&exit_code, zc_opts, zc_terms] { exit_code = run_zeta_check(*zc_opts, *zc_terms); });

    auto rc_opts = std::make_shared<CommonOpts>();
    auto rc_w = std::make_shared<int>(6);
    auto* rc_cmd = app.add_subcommand(
        "recursion-check", "verify the Hecke difference equations against the closed form");
    add_common(rc_cmd, *rc_opts, /*with_q=*/false);
    rc_cmd->add_option("--max-weight", *rc_w, "largest signature weight")->capture_default_str();
    rc_cmd->callback(
        [&exit_code, rc_opts, rc_w] { exit_code = run_recursion_check(*rc_opts, *rc_w); });

    auto sc_opts = std::make_shared<CommonOpts>();
    auto sc_w = std::make_shared<int>(6);
    auto* sc_cmd = app.add_subcommand(
        "solve-check", "solve the recursion as an exact linear system and compare");
    add_common(sc_cmd, *sc_opts, /*with_q=*/false);
    sc_cmd->add_option("--max-weight", *sc_w, "largest signature weight")->capture_default_str();
    sc_cmd->callback([&exit_code, sc_opts, sc_w] { exit_code = run_solve_check(*sc_opts, *sc_w); });

    struct CosetOpts {
        int n = 0;
        long p = 0;
        int i = 0;
        int m = 1;
        int level = -1;
        std::string format = "text";
    };
    auto cv = std::make_shared<CosetOpts>();
    auto* cv_cmd = app.add_subcommand(
        "coset-verify", "exhaustively verify the Hecke coset decomposition over Z/p^N");
    cv_cmd->add_option("--n", cv->n, "rank of the group GL(n)")->required();
    cv_cmd->add_option("--p", cv->p, "residue characteristic (prime)")->required();
    cv_cmd->add_option("--i", cv->i, "Hecke operator index, 1 <= i <= n-1")->required();
    cv_cmd->add_option("--m", cv->m, "congruence level")->capture_default_str();
    cv_cmd->add_option("--level", cv->level, "ring truncation N (default m+1)");
    cv_cmd->add_option("--format", cv->format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    cv_cmd->callback([&exit_code, cv] {
        exit_code = run_coset_verify(cv->n, cv->p, cv->i, cv->m, cv->level, cv->format);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
