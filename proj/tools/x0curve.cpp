// Command-line front end: equation, verify, series, cusps, genus.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <stdexcept>
#include <tuple>

#include <CLI11.hpp>

#include "x0curve/curvepoly.hpp"
#include "x0curve/errors.hpp"
#include "x0curve/io.hpp"
#include "x0curve/modforms.hpp"
#include "x0curve/verify.hpp"

namespace {

using namespace x0;
using nlohmann::json;

enum Exit { kPass = 0, kFail = 1, kInconclusive = 2, kUsage = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n')
            std::cout << '\n';
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f)
        throw UsageError("cannot open " + out_path + " for writing");
    f << text;
    if (!text.empty() && text.back() != '\n')
        f << '\n';
}

// "a..b" or a single integer.
std::pair<int, int> parse_range(const std::string& s)
{
    const auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            const int v = std::stoi(s);
            return {v, v};
        }
        return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
    } catch (const std::logic_error&) {
        throw UsageError("bad range '" + s + "', expected a..b");
    }
}

// ---- equation ----

struct EquationArgs {
    int n = 6;
    std::string format = "text";
    bool uv = false;
    std::string out;
    int cap = kDefaultLevelCap;
};

int cmd_equation(const EquationArgs& a)
{
    if (a.n < 6)
        throw UsageError("equation needs n >= 6");
    if (a.n > a.cap)
        throw UsageError("n = " + std::to_string(a.n) + " exceeds the level cap " +
                         std::to_string(a.cap));
    if (a.n % 2 != 0)
        std::cerr << "warning: not a defining equation (y_" << a.n << " not modular)\n";

    const BiPoly p = p_poly(a.n, a.cap);
    std::string text;
    if (a.format == "json")
        text = io::to_json(p, a.n).dump(2);
    else if (a.format == "latex")
        text = a.uv ? io::format_latex_uv(p) : io::format_latex(p);
    else
        text = io::format_text(p);
    emit(text, a.out);
    return kPass;
}

// ---- verify ----

struct VerifyArgs {
    std::optional<int> n;
    std::string range;
    std::optional<long> trunc;
    long margin = 10;
    int jobs = 1;
    long terms = 200;
    bool no_global = false;
    std::string out;
    int cap = kDefaultLevelCap;
};

struct Row {
    VerificationReport report;
    bool skipped = false;
};

std::vector<Row> verify_level(int n, const VerifyArgs& a)
{
    std::vector<Row> rows;
    for (auto& r : verify_recursion_identities(n, a.terms))
        rows.push_back({r, false});

    VerifyOptions opts;
    opts.margin = a.margin;
    opts.trunc_override = a.trunc;
    opts.cap = a.cap;
    if (n % 2 == 0 && n >= 6) {
        rows.push_back({verify_defining_equation(n, opts), false});
        rows.push_back({verify_pole_structure(n), false});
    } else {
        VerificationReport r;
        r.claim = "P_n(x_n, y_n) = 0";
        r.n = n;
        if (n % 2 != 0) {
            r.detail = newman_conditions(y_quotient(n)).describe();
        } else {
            r.detail = "no polynomial below n = 6";
        }
        rows.push_back({r, true});
    }
    return rows;
}

std::vector<Row> verify_global(long terms)
{
    std::vector<Row> rows;
    for (auto& r : verify_theta_eta(terms))
        rows.push_back({r, false});
    rows.push_back({verify_jacobi_quartic(terms), false});
    rows.push_back({verify_x0_64_quartic(terms), false});
    rows.push_back({verify_fermat_birational(), false});
    rows.push_back({verify_genus_coincidence(5), false});
    return rows;
}

std::string status_of(const Row& row)
{
    if (row.skipped)
        return row.report.n && *row.report.n % 2 != 0 ? "skipped (odd n)" : "skipped";
    return to_string(row.report.outcome);
}

int cmd_verify(const VerifyArgs& a)
{
    int lo = 0, hi = 0;
    if (a.n && !a.range.empty())
        throw UsageError("give either --n or --range, not both");
    if (a.n) {
        lo = hi = *a.n;
    } else if (!a.range.empty()) {
        std::tie(lo, hi) = parse_range(a.range);
    } else {
        throw UsageError("verify needs --n or --range");
    }
    if (lo < 5 || hi < lo)
        throw UsageError("verify range must satisfy 5 <= a <= b");
    if (hi > a.cap)
        throw UsageError("n = " + std::to_string(hi) + " exceeds the level cap " +
                         std::to_string(a.cap));
    if (a.jobs < 1)
        throw UsageError("--jobs must be positive");

    const int count = hi - lo + 1;
    std::vector<std::vector<Row>> per_n(count);
    std::vector<std::string> errors(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(a.jobs)
    for (int i = 0; i < count; ++i) {
        try {
            per_n[i] = verify_level(lo + i, a);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    }
    for (int i = 0; i < count; ++i)
        if (!errors[i].empty())
            throw std::runtime_error("n = " + std::to_string(lo + i) + ": " + errors[i]);

    std::vector<Row> rows;
    if (!a.no_global)
        rows = verify_global(a.terms);
    for (auto& v : per_n)
        rows.insert(rows.end(), v.begin(), v.end());

    bool any_fail = false, any_inconclusive = false;
    std::printf("%-4s %-48s %-16s %s\n", "n", "claim", "outcome", "window");
    for (const Row& row : rows) {
        const auto& r = row.report;
        const std::string n = r.n ? std::to_string(*r.n) : "-";
        std::string window = "-";
        if (!row.skipped)
            window = "[" + r.window_lo.get_str() + ", " + r.window_hi.get_str() + "]";
        std::printf("%-4s %-48s %-16s %s\n", n.c_str(), r.claim.c_str(), status_of(row).c_str(),
                    window.c_str());
        if (row.skipped)
            continue;
        any_fail |= r.outcome == Outcome::fail;
        any_inconclusive |= r.outcome == Outcome::inconclusive;
        if (r.outcome != Outcome::pass)
            std::printf("     %s\n", r.detail.c_str());
    }

    if (!a.out.empty()) {
        json reports = json::array();
        for (const Row& row : rows) {
            json j = io::to_json(row.report);
            if (row.skipped) {
                j["outcome"] = "skipped";
                j.erase("rigor_bound");
                j.erase("window");
            }
            reports.push_back(std::move(j));
        }
        json doc = {{"reports", reports},
                    {"summary", any_fail ? "fail" : any_inconclusive ? "inconclusive" : "pass"}};
        emit(doc.dump(2), a.out);
    }
    return any_fail ? kFail : any_inconclusive ? kInconclusive : kPass;
}

// ---- series ----

struct SeriesArgs {
    std::string which;
    int n = 6;
    long scale = 1;
    std::size_t terms = 10;
};

QExp build_series(const SeriesArgs& a, long trunc)
{
    if (a.which == "x")
        return x_series(a.n, trunc);
    if (a.which == "y")
        return y_series(a.n, trunc);
    if (a.which == "eta")
        return eta_series(a.scale, trunc);
    return theta_series(a.which.back() - '0', a.scale, trunc);
}

int cmd_series(const SeriesArgs& a)
{
    if ((a.which == "x" || a.which == "y") && a.n < 1)
        throw UsageError("--n must be positive");
    if (a.scale < 1)
        throw UsageError("--scale must be positive");
    // Widen the window until enough nonzero terms are certified.
    long trunc = 8;
    QExp f = build_series(a, trunc);
    while (f.terms().size() < a.terms && trunc < (1L << 24)) {
        trunc *= 2;
        f = build_series(a, trunc);
    }
    std::cout << io::format_series(f, a.terms) << '\n';
    return kPass;
}

// ---- cusps, genus ----

int cmd_cusps(int n, const std::string& format)
{
    if (n < 1 || n > 62)
        throw UsageError("cusps needs 1 <= n <= 62");
    const json rows = io::cusp_report(n);
    if (format == "json") {
        std::cout << rows.dump(2) << '\n';
        return kPass;
    }
    std::printf("%-12s %-4s %-8s %-10s %-10s\n", "a", "k", "width", "ord x", "ord y");
    for (const auto& r : rows) {
        const auto& o = r["orders"];
        auto plain = [&](const char* key) -> std::string {
            return o.contains(key) ? io::parse_rational(o[key].get<std::string>()).get_str() : "-";
        };
        const std::string ox = plain("x"), oy = plain("y");
        const std::string label =
            r["k"].get<int>() == n ? "1/2^" + std::to_string(n) + " (inf)"
                                   : std::to_string(r["a"].get<long>()) + "/2^" +
                                         std::to_string(r["k"].get<int>());
        std::printf("%-12s %-4d %-8ld %-10s %-10s\n", label.c_str(), r["k"].get<int>(),
                    r["width"].get<long>(), ox.c_str(), oy.c_str());
    }
    return kPass;
}

int cmd_genus(std::optional<long> N, std::optional<long> fermat)
{
    if (N.has_value() == fermat.has_value())
        throw UsageError("genus needs exactly one of N or --fermat d");
    if (fermat) {
        if (*fermat < 1)
            throw UsageError("Fermat degree must be positive");
        std::cout << genus_fermat(*fermat) << '\n';
    } else {
        if (*N < 1)
            throw UsageError("level must be positive");
        std::cout << genus_X0(*N) << '\n';
    }
    return kPass;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Defining equations of X_0(2^n) and their q-expansion checks"};
    app.require_subcommand(1);

    EquationArgs eq;
    auto* equation = app.add_subcommand("equation", "print P_n");
    equation->add_option("--n", eq.n, "level exponent (>= 6)")->required();
    equation->add_option("--format", eq.format)->check(CLI::IsMember({"text", "json", "latex"}));
    equation->add_flag("--uv", eq.uv, "LaTeX in u = (x-2)^8, v = x(x+2)^4(x^2+4)");
    equation->add_option("--out", eq.out, "write to file");
    equation->add_option("--cap", eq.cap, "largest n to build");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--n", va.n, "single level exponent");
    verify->add_option("--range", va.range, "a..b");
    verify->add_option("--trunc", va.trunc, "truncation for x_n, y_n (default: derived)");
    verify->add_option("--margin", va.margin, "positive q-powers checked");
    verify->add_option("--terms", va.terms, "window for the series identities");
    verify->add_option("--jobs", va.jobs, "levels verified concurrently");
    verify->add_flag("--no-global", va.no_global, "skip the level-independent checks");
    verify->add_option("--out", va.out, "JSON report file");
    verify->add_option("--cap", va.cap, "largest n to build");

    SeriesArgs sa;
    auto* series = app.add_subcommand("series", "print a q-expansion");
    series->add_option("which", sa.which)
        ->required()
        ->check(CLI::IsMember({"x", "y", "eta", "theta2", "theta3", "theta4"}));
    series->add_option("--n", sa.n, "level exponent for x, y");
    series->add_option("--scale", sa.scale, "tau -> scale*tau for eta, theta");
    series->add_option("--terms", sa.terms, "nonzero terms to print");

    int cusp_n = 6;
    std::string cusp_format = "text";
    auto* cusps = app.add_subcommand("cusps", "cusps of Gamma_0(2^n)");
    cusps->add_option("--n", cusp_n)->required();
    cusps->add_option("--format", cusp_format)->check(CLI::IsMember({"text", "json"}));

    std::optional<long> genus_N, genus_d;
    auto* genus = app.add_subcommand("genus", "genus of X_0(N) or of the Fermat curve");
    genus->add_option("N", genus_N);
    genus->add_option("--fermat", genus_d, "Fermat degree d");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kPass : kUsage;
    }

    try {
        if (*equation)
            return cmd_equation(eq);
        if (*verify)
            return cmd_verify(va);
        if (*series)
            return cmd_series(sa);
        if (*cusps)
            return cmd_cusps(cusp_n, cusp_format);
        if (*genus)
            return cmd_genus(genus_N, genus_d);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    }
    return kUsage;
}
