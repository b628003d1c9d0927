#include "macdonald/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "macdonald/io.hpp"

namespace macd {

double estimate_cost(const Partition& lam, int n, const FormulaChoice& choice) {
    const int size = lam.size();
    double all = std::pow(static_cast<double>(n), size);
    if (choice.family == Family::Htilde) return all;
    if (choice.method == Method::super_inv || choice.method == Method::super_quinv)
        return std::pow(2.0 * n, size);
    Partition conj = conjugate(lam);
    double c = 1;
    for (int r = 1; r <= conj.length(); ++r)
        for (int k = 0; k < conj[r]; ++k) c *= std::max(n - k, 0);
    return c;
}

double cost_cap_from_env() {
    const char* v = std::getenv("MACDONALD_COST_CAP");
    if (!v || !*v) return DEFAULT_COST_CAP;
    char* end = nullptr;
    double d = std::strtod(v, &end);
    if (end == v || *end != '\0' || !(d > 0)) throw std::invalid_argument("MACDONALD_COST_CAP must be a positive number");
    return d;
}

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Common {
    std::string partition;
    int n_vars = 0;
    std::string format = "text";
    int threads = 1;
};

void add_format(CLI::App* c, std::string& format) {
    c->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
}

Filling load_tableau(const std::string& file, const std::string& text) {
    if (!file.empty() && !text.empty()) throw UsageError("give either a tableau file or --tableau, not both");
    if (file.empty() && text.empty()) throw UsageError("a tableau is required (file argument or --tableau)");
    return parse_filling_any(file.empty() ? text : read_file(file));
}

void check_cost(const Partition& lam, int n, const FormulaChoice& ch, double cap) {
    double est = estimate_cost(lam, n, ch);
    if (est > cap) {
        std::ostringstream os;
        os << "refusing: predicted " << std::setprecision(3) << est << " enumeration nodes exceeds the cap of " << cap
           << " (set MACDONALD_COST_CAP or --cost-cap to raise it)";
        throw UsageError(os.str());
    }
}

int cmd_compute(const Common& c, const std::string& family, std::string method, const std::string& basis,
                double cap, std::ostream& out) {
    Partition lam = parse_partition(c.partition);
    if (c.n_vars < 1) throw UsageError("--nvars must be at least 1");
    Family fam = parse_family(family);
    if (method.empty())
        method = fam == Family::P ? "quinv-compact" : "quinv";
    FormulaChoice ch{fam, parse_method(method)};
    if (!is_valid(ch)) throw UsageError("method " + method + " is not available for family " + family);
    check_cost(lam, c.n_vars, ch, cap);
    const bool msym = basis == "msym";
    json doc{{"family", family_name(fam)}, {"method", method_name(ch.method)}, {"partition", lam.parts},
             {"n_vars", c.n_vars}};
    std::string body;
    if (fam == Family::Jack) {
        JackPoly p = jack(lam, c.n_vars, ch.method == Method::inv ? Side::inv : Side::quinv);
        doc["polynomial"] = jack_to_json(p, msym);
        body = jack_to_text(p, msym);
    } else {
        BuildOptions bo;
        bo.threads = c.threads;
        XPoly p = build(lam, c.n_vars, ch, bo);
        // symmetry gate on everything built
        xpoly_to_msym(p);
        doc["polynomial"] = xpoly_to_json(p, msym);
        body = xpoly_to_text(p, msym);
    }
    if (c.format == "json")
        out << doc.dump(2) << '\n';
    else
        out << family_name(fam) << '[' << lam.str() << "] " << method_name(ch.method) << " n=" << c.n_vars << '\n'
            << body;
    return 0;
}

int cmd_verify(const VerifyOptions& vo, const std::string& format, bool timing, std::ostream& out) {
    auto results = verify_suite(vo);
    bool ok = true;
    json arr = json::array();
    for (const auto& r : results) {
        ok = ok && r.pass;
        json e{{"identity", r.identity}, {"instance", r.instance}, {"pass", r.pass}};
        if (!r.detail.empty()) e["detail"] = r.detail;
        if (timing) e["millis"] = std::round(r.millis * 1000) / 1000;
        arr.push_back(e);
    }
    if (format == "json") {
        out << json{{"suite", vo.suite}, {"all_pass", ok}, {"checks", arr}}.dump(2) << '\n';
    } else {
        int failed = 0;
        for (const auto& r : results) {
            out << (r.pass ? "PASS " : "FAIL ") << r.identity << " [" << r.instance << ']';
            if (!r.detail.empty()) out << ": " << r.detail;
            if (timing) out << " (" << std::fixed << std::setprecision(1) << r.millis << " ms)" << std::defaultfloat;
            out << '\n';
            failed += r.pass ? 0 : 1;
        }
        out << results.size() - failed << '/' << results.size() << " checks passed\n";
    }
    return ok ? 0 : 1;
}

std::string border_str(const BorderWord& w) {
    std::string s;
    for (int x : w) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
}

int cmd_stats(const Filling& s, const std::string& format, std::ostream& out) {
    json doc{{"filling", filling_to_json(s)},
             {"maj", maj(s)},
             {"inv", inv(s)},
             {"coinv", coinv(s)},
             {"quinv", quinv(s)},
             {"coquinv", coquinv(s)},
             {"quinv_nonattacking", is_quinv_nonattacking(s)},
             {"inv_nonattacking", is_inv_nonattacking(s)},
             {"perm", qtrat_to_json(perm_sigma(s))},
             {"top_border", top_border(s)},
             {"bottom_border", bottom_border(s)}};
    if (format == "json") {
        out << doc.dump(2) << '\n';
        return 0;
    }
    out << filling_to_text(s) << "maj " << maj(s) << "\ninv " << inv(s) << "\ncoinv " << coinv(s) << "\nquinv "
        << quinv(s) << "\ncoquinv " << coquinv(s) << "\nperm " << perm_sigma(s).str() << "\ntop border "
        << border_str(top_border(s)) << "\nbottom border " << border_str(bottom_border(s))
        << "\nquinv-non-attacking " << (is_quinv_nonattacking(s) ? "yes" : "no") << "\ninv-non-attacking "
        << (is_inv_nonattacking(s) ? "yes" : "no") << '\n';
    return 0;
}

int cmd_ops(const std::string& op, const Filling& s, int index, const std::string& format, std::ostream& out) {
    OutcomeSet outs;
    if (op == "rho")
        outs = rho_tilde(s, index);
    else if (op == "tau")
        outs = tau_tilde(s, index);
    else if (op == "rho-flip")
        outs = {{rho(s, index), QTRat(1)}};
    else if (op == "tau-flip")
        outs = {{tau(s, index), QTRat(1)}};
    else
        throw UsageError("unknown operator " + op);
    if (format == "json") {
        out << json{{"op", op}, {"index", index}, {"input", filling_to_json(s)}, {"outcomes", outcomes_to_json(outs)}}
                   .dump(2)
            << '\n';
        return 0;
    }
    for (const auto& o : outs) out << "prob " << o.prob.str() << '\n' << filling_to_text(o.filling) << '\n';
    return 0;
}

int cmd_mlq(const Filling& s, int n, const std::string& format, std::ostream& out) {
    if (n < 1) {
        for (const auto& col : s.cols)
            for (Letter a : col) n = std::max(n, letter_value(a));
    }
    MultilineQueue m = mlq_from_tableau(s, n);
    Weighted full = wt_martin_full(m);
    Weighted tab = wt_P_quinv(s, n);
    if (format == "json") {
        out << json{{"mlq", mlq_to_json(m)},
                    {"weight_t", qtrat_to_json(wt_martin_t(m))},
                    {"weight", qtrat_to_json(full.c)},
                    {"x", full.x},
                    {"tableau_weight", qtrat_to_json(tab.c)}}
                   .dump(2)
            << '\n';
        return 0;
    }
    out << render_mlq(m) << "wt(M) at x=q=1: " << wt_martin_t(m).str() << "\nwt(M): x^" << exps_str(full.x) << ' '
        << full.c.str() << "\nwt(tableau): x^" << exps_str(tab.x) << ' ' << tab.c.str() << '\n';
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Macdonald, integral-form, modified Macdonald and Jack polynomials from tableau formulas", "macdonald"};
    app.require_subcommand(1);
    double cap = -1;
    app.add_option("--cost-cap", cap, "refuse builds predicted to visit more nodes than this");

    Common cc;
    std::string family = "P", method, basis = "msym";
    auto* compute = app.add_subcommand("compute", "build a polynomial");
    compute->add_option("--partition,-p", cc.partition, "e.g. 2,2")->required();
    compute->add_option("--nvars,-n", cc.n_vars, "number of variables")->required();
    compute->add_option("--family", family, "Htilde, P, J or Jack");
    compute->add_option("--method", method, "inv, quinv, inv-compact, quinv-compact, mlq, product, super-inv, super-quinv");
    compute->add_option("--basis", basis, "monomial or msym")->check(CLI::IsMember({"monomial", "msym"}));
    compute->add_option("--threads", cc.threads, "worker threads; 1 runs the serial enumeration");
    add_format(compute, cc.format);

    Common jc;
    std::string jack_method = "quinv", jack_basis = "msym";
    auto* jacksub = app.add_subcommand("jack", "Jack polynomial J_lambda(X; alpha)");
    jacksub->add_option("--partition,-p", jc.partition)->required();
    jacksub->add_option("--nvars,-n", jc.n_vars)->required();
    jacksub->add_option("--method", jack_method)->check(CLI::IsMember({"inv", "quinv"}));
    jacksub->add_option("--basis", jack_basis)->check(CLI::IsMember({"monomial", "msym"}));
    add_format(jacksub, jc.format);

    VerifyOptions vo;
    std::string vformat = "json";
    bool no_timing = false;
    auto* verify = app.add_subcommand("verify", "brute-force identity checks");
    verify->add_option("--suite", vo.suite)->check(CLI::IsMember({"all", "formulas", "operators"}));
    verify->add_option("--max-cells", vo.max_cells, "largest |lambda| for formula checks");
    verify->add_option("--nvars,-n", vo.n_vars);
    verify->add_option("--threads", vo.threads);
    verify->add_flag("--inject-fault", vo.inject_fault, "corrupt the quinv weights (negative control)");
    verify->add_flag("--no-timing", no_timing, "omit timings so reports compare byte for byte");
    add_format(verify, vformat);

    std::string file, text, sformat = "text";
    auto* stats = app.add_subcommand("tableau-stats", "statistics of a filling");
    stats->add_option("file", file, "filling file (row text or JSON)");
    stats->add_option("--tableau,-t", text, "filling as text, rows top first separated by '/'");
    add_format(stats, sformat);

    std::string op, ofile, otext, oformat = "text";
    int index = 0;
    auto* ops = app.add_subcommand("ops", "apply a flip operator");
    ops->add_option("op", op, "rho, tau (probabilistic) or rho-flip, tau-flip")
        ->required()
        ->check(CLI::IsMember({"rho", "tau", "rho-flip", "tau-flip"}));
    ops->add_option("file", ofile);
    ops->add_option("--tableau,-t", otext);
    ops->add_option("--index,-i", index, "column index i")->required();
    add_format(ops, oformat);

    std::string mfile, mtext, mformat = "text";
    int mn = 0;
    auto* mlq = app.add_subcommand("mlq", "multiline queue of a sorted non-attacking filling");
    mlq->add_option("file", mfile);
    mlq->add_option("--tableau,-t", mtext);
    mlq->add_option("--nvars,-n", mn, "number of columns (default: largest entry)");
    add_format(mlq, mformat);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cap <= 0) cap = cost_cap_from_env();
        if (*compute) return cmd_compute(cc, family, method, basis, cap, out);
        if (*jacksub) return cmd_compute(jc, "Jack", jack_method, jack_basis, cap, out);
        if (*verify) return cmd_verify(vo, vformat, !no_timing, out);
        if (*stats) return cmd_stats(load_tableau(file, text), sformat, out);
        if (*ops) return cmd_ops(op, load_tableau(ofile, otext), index, oformat, out);
        if (*mlq) return cmd_mlq(load_tableau(mfile, mtext), mn, mformat, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace macd
