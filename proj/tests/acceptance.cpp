// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>

#include "macdonald/cli.hpp"
#include "macdonald/io.hpp"
#include "macdonald/mlq.hpp"

using namespace macd;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
    bool pass = true;
    std::string detail;
    // keeps the first failure only
    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
    void expect(bool ok, const std::string& why) {
        if (!ok) fail(why);
    }
};

std::string inst(const Partition& lam, int n) { return "lambda=" + lam.str() + " n=" + std::to_string(n); }

QTRat ratio(const PolyQT& num, const PolyQT& den) { return QTRat(num) / QTRat(den); }

PolyQT mono(int dq, int dt) { return PolyQT::monomial(1, dq, dt); }

PolyQT den_of(std::initializer_list<std::pair<int, int>> fs) {
    PolyQT d(1);
    for (auto [a, b] : fs) d *= binom_factor(a, b);
    return d;
}

// every polynomial built below goes through the symmetry gate
bool symmetric(const XPoly& p) {
    try {
        xpoly_to_msym(p);
        return true;
    } catch (const SymmetryError&) {
        return false;
    }
}

Verdict c1_p22() {
    Verdict o;
    auto t0 = Clock::now();
    XPoly p = build(Partition{2, 2}, 4, {Family::P, Method::quinv_compact});
    auto e = xpoly_to_msym(p);
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    auto get = [&](std::vector<int> mu) { return e.count(mu) ? e.at(mu) : QTRat(0); };
    o.expect(e.size() == 3, "expected three monomial symmetric terms");
    o.expect(get({2, 2}) == QTRat(1), "coefficient of m22");
    // cross-multiplied against the expected numerators and denominators
    o.expect(get({2, 1, 1}) * QTRat(binom_factor(1, 1)) == QTRat((1 + mono(1, 0)) * binom_factor(0, 1)),
             "coefficient of m211");
    PolyQT top = 2 + mono(0, 1) + PolyQT::monomial(3, 1, 0) + mono(2, 0) + PolyQT::monomial(3, 1, 1) +
                 PolyQT::monomial(2, 2, 1);
    o.expect(get({1, 1, 1, 1}) * QTRat(binom_factor(1, 1) * binom_factor(1, 2)) ==
                 QTRat(top * binom_factor(0, 1).pow(2)),
             "coefficient of m1111");
    o.expect(secs < 1.0, "took " + std::to_string(secs) + " s");
    if (o.pass) o.detail = std::to_string(secs) + " s";
    return o;
}

Verdict c2_pentagon() {
    Verdict o;
    const int n = 4;
    int instances = 0;
    for (int size = 1; size <= 6; ++size)
        for (const Partition& lam : partitions_of(size)) {
            XPoly base = build(lam, n, {Family::P, Method::quinv_compact});
            o.expect(symmetric(base), "not symmetric " + inst(lam, n));
            for (Method m : {Method::quinv, Method::inv, Method::inv_compact, Method::mlq})
                o.expect(build(lam, n, {Family::P, m}) == base, method_name(m) + " differs at " + inst(lam, n));
            ++instances;
        }
    if (o.pass) o.detail = std::to_string(instances) + " partitions, five builders each";
    return o;
}

Verdict c3_htilde() {
    Verdict o;
    int instances = 0;
    for (int n = 1; n <= 4; ++n)
        for (int size = 1; size <= 6; ++size)
            for (const Partition& lam : partitions_of(size)) {
                XPoly h = build(lam, n, {Family::Htilde, Method::inv});
                o.expect(symmetric(h), "not symmetric " + inst(lam, n));
                for (Method m : {Method::quinv, Method::inv_compact, Method::quinv_compact})
                    o.expect(build(lam, n, {Family::Htilde, m}) == h, method_name(m) + " differs at " + inst(lam, n));
                // (x1+...+xn)^|lambda| has multinomial coefficients
                XPoly power(n);
                for (const Exps& e : [&] {
                         std::vector<Exps> all;
                         Exps cur(n, 0);
                         std::function<void(int, int)> rec = [&](int i, int left) {
                             if (i == n - 1) {
                                 cur[i] = left;
                                 all.push_back(cur);
                                 return;
                             }
                             for (int k = 0; k <= left; ++k) {
                                 cur[i] = k;
                                 rec(i + 1, left - k);
                             }
                         };
                         rec(0, size);
                         return all;
                     }()) {
                    IntZ c = 1;
                    int k = 0;
                    for (int x : e)
                        for (int j = 1; j <= x; ++j) c = c * ++k / j;
                    power.add(e, QTRat(PolyQT(c)));
                }
                bool same = h.terms().size() == power.terms().size();
                for (const auto& [e, c] : power.terms())
                    same = same && qt_specialize(h.coeff(e), 1, 1) == qt_specialize(c, 1, 1);
                o.expect(same, "q=t=1 specialization at " + inst(lam, n));
                ++instances;
            }
    if (o.pass) o.detail = std::to_string(instances) + " instances";
    return o;
}

Verdict c4_stats() {
    Verdict o;
    Filling s = parse_filling_text("3 2 / 1 3 3 1 3 / 1 1 2 1 2 4 4 3 3");
    Partition lam = s.shape;
    std::ostringstream got;
    got << "maj " << maj(s) << ", inv " << inv(s) << ", quinv " << quinv(s) << ", perm " << perm_sigma(s).str()
        << ", arm/leg/rarm " << arm(lam, {2, 2}) << '/' << leg(lam, {2, 2}) << '/' << rarm(lam, {2, 2});
    o.expect(maj(s) == 5, "maj");
    o.expect(inv(s) == 6, "inv is " + std::to_string(inv(s)) + ", expected 6");
    o.expect(quinv(s) == 14, "quinv is " + std::to_string(quinv(s)) + ", expected 14");
    o.expect(perm_sigma(s) == QTRat(t_bracket(4) * t_bracket(3) * t_bracket(3)), "perm");
    o.expect(arm(lam, {2, 2}) == 3 && leg(lam, {2, 2}) == 1 && rarm(lam, {2, 2}) == 7, "arm/leg/rarm");
    o.detail = o.pass ? got.str() : o.detail + " (" + got.str() + ")";
    return o;
}

const std::vector<Partition> kOperatorShapes = {Partition{1, 1}, Partition{2, 2},    Partition{3, 3},
                                                Partition{2, 2, 1}, Partition{2, 1, 1}, Partition{3, 3, 2}};

Verdict c5_normalization() {
    Verdict o;
    long cases = 0;
    for (const Partition& lam : kOperatorShapes)
        for (int n = 1; n <= 4; ++n) {
            for (const Filling& s : all_fillings(lam, n, Filter::quinv_na))
                for (int i : compatible_indices(lam)) {
                    QTRat sum(0);
                    for (const auto& x : rho_tilde(s, i)) sum += x.prob;
                    o.expect(sum == QTRat(1), "rho-tilde from " + filling_to_line(s) + " i=" + std::to_string(i));
                    ++cases;
                }
            for (const Filling& s : all_fillings(lam, n, Filter::inv_na))
                for (int i : compatible_indices(lam)) {
                    QTRat sum(0);
                    for (const auto& x : tau_tilde(s, i)) sum += x.prob;
                    o.expect(sum == QTRat(1), "tau-tilde from " + filling_to_line(s) + " i=" + std::to_string(i));
                    ++cases;
                }
        }
    if (o.pass) o.detail = std::to_string(cases) + " (filling, index) pairs";
    return o;
}

Verdict c6_balance() {
    Verdict o;
    const PolyQT t = mono(0, 1);
    long cases = 0;
    for (const Partition& lam : kOperatorShapes)
        for (int n = 1; n <= 4; ++n) {
            for (const Filling& s : all_fillings(lam, n, Filter::quinv_na))
                for (int i : compatible_indices(lam)) {
                    BorderWord w = top_border(s);
                    if (!(w[i - 1] < w[i])) continue;
                    QTRat ws = wt_P_quinv(s, n).c;
                    for (const auto& x : rho_tilde(s, i)) {
                        QTRat back(0);
                        for (const auto& r : rho_tilde(x.filling, i))
                            if (r.filling == s) back = r.prob;
                        o.expect(wt_P_quinv(x.filling, n).c * back == QTRat(t) * ws * x.prob,
                                 "quinv side " + filling_to_line(s) + " -> " + filling_to_line(x.filling));
                        ++cases;
                    }
                }
            for (const Filling& s : all_fillings(lam, n, Filter::inv_na))
                for (int i : compatible_indices(lam)) {
                    BorderWord w = bottom_border(s);
                    if (!(w[i - 1] > w[i])) continue;
                    QTRat ws = wt_HHL(s, n).c;
                    for (const auto& x : tau_tilde(s, i)) {
                        QTRat back(0);
                        for (const auto& r : tau_tilde(x.filling, i))
                            if (r.filling == s) back = r.prob;
                        o.expect(wt_HHL(x.filling, n).c * back == QTRat(t) * ws * x.prob,
                                 "inv side " + filling_to_line(s) + " -> " + filling_to_line(x.filling));
                        ++cases;
                    }
                }
        }
    if (o.pass) o.detail = std::to_string(cases) + " transitions";
    return o;
}

Verdict c7_rho_tilde_operator() {
    Verdict o;
    Filling s = parse_filling_text("4 1 / 4 6 / 3 6 2 1 / 3 2 5 4 7");
    const int n = 7;
    OutcomeSet out = rho_tilde(s, 1);
    if (out.size() != 3) {
        o.fail("expected three outcomes, got " + std::to_string(out.size()));
        return o;
    }
    const char* tabs[] = {"1 4 / 4 6 / 3 6 2 1 / 3 2 5 4 7", "1 4 / 6 4 / 6 3 2 1 / 3 2 5 4 7",
                          "1 4 / 6 4 / 6 3 2 1 / 2 3 5 4 7"};
    const QTRat probs[] = {
        ratio(binom_factor(0, 1), binom_factor(1, 2)),
        ratio(mono(3, 5) * binom_factor(0, 1) * binom_factor(1, 1), binom_factor(1, 2) * binom_factor(3, 5)),
        ratio(mono(0, 1) * binom_factor(1, 1) * binom_factor(3, 4), binom_factor(1, 2) * binom_factor(3, 5))};
    const PolyQT one_t = binom_factor(0, 1);
    const QTRat w = ratio(mono(5, 7) * one_t.pow(5), den_of({{1, 1}, {2, 4}, {3, 4}, {1, 3}, {1, 2}}));
    const QTRat weights[] = {
        ratio(mono(5, 6) * one_t.pow(6), den_of({{1, 1}, {2, 4}, {3, 4}, {1, 3}, {1, 2}, {1, 2}})),
        ratio(mono(8, 10) * one_t.pow(6), den_of({{2, 3}, {3, 5}, {3, 4}, {1, 3}, {1, 2}, {1, 2}})),
        ratio(mono(5, 6) * one_t.pow(5), den_of({{2, 3}, {3, 5}, {1, 3}, {1, 2}, {1, 2}}))};
    const QTRat back = ratio(mono(0, 1) * binom_factor(2, 3), binom_factor(2, 4));
    const QTRat backs[] = {QTRat(1), back, back};
    o.expect(wt_P_quinv(s, n).c == w, "weight of the input");
    for (int k = 0; k < 3; ++k) {
        std::string tag = "outcome " + std::to_string(k + 1) + ": ";
        o.expect(out[k].filling == parse_filling_text(tabs[k]), tag + "tableau " + filling_to_line(out[k].filling));
        o.expect(out[k].prob == probs[k], tag + "probability " + out[k].prob.str());
        o.expect(wt_P_quinv(out[k].filling, n).c == weights[k], tag + "weight");
        QTRat returned(0);
        for (const auto& r : rho_tilde(out[k].filling, 1))
            if (r.filling == s) returned = r.prob;
        o.expect(returned == backs[k], tag + "return probability " + returned.str());
        o.expect(w * probs[k] == QTRat(mono(0, 1)) * weights[k] * backs[k], tag + "balance");
    }
    return o;
}

Verdict c8_jack() {
    Verdict o;
    auto e = xpoly_to_msym(jack(Partition{3, 1}, 4, Side::quinv));
    o.expect(e.count({2, 1, 1}) && e.at({2, 1, 1}) == PolyAlpha::linear(10, 6), "[m211] J_31 is not 10+6a");
    std::size_t inv_terms = 0, quinv_terms = 0;
    for (int size = 1; size <= 5; ++size)
        for (const Partition& lam : partitions_of(size))
            for (int n = 1; n <= 4; ++n) {
                JackPoly a = jack(lam, n, Side::inv), b = jack(lam, n, Side::quinv);
                o.expect(a == b, "inv and quinv differ at " + inst(lam, n));
                std::size_t ti = jack_term_count(lam, n, Side::inv), tq = jack_term_count(lam, n, Side::quinv);
                o.expect(tq <= ti, "quinv sum is larger at " + inst(lam, n));
                inv_terms += ti;
                quinv_terms += tq;
            }
    if (o.pass) o.detail = "terms: inv " + std::to_string(inv_terms) + ", quinv " + std::to_string(quinv_terms);
    return o;
}

Verdict c9_mlq() {
    Verdict o;
    Filling fig = parse_filling_text("1 6 / 6 8 2 5 / 4 8 2 1 / 4 2 7 5 9");
    MultilineQueue m = mlq_from_tableau(fig, 9);
    PolyQT den = binom_factor(0, 4).pow(3) * binom_factor(0, 3).pow(2) * binom_factor(0, 2) * binom_factor(0, 1);
    o.expect(wt_martin_t(m) == ratio(mono(0, 7) * binom_factor(0, 1).pow(7), den), "nine-site queue t-weight");
    o.expect(wt_martin_full(m).c == wt_P_quinv(fig, 9).c, "nine-site queue full weight");
    long queues = 0;
    for (const Partition& lam : {Partition{2, 2}, Partition{2, 1}, Partition{3, 1}, Partition{2, 2, 1}})
        for (int n = 1; n <= 4; ++n)
            enumerate_fillings(lam, n, Filter::quinv_na_coquinv_sorted, [&](const Filling& s) {
                MultilineQueue q = mlq_from_tableau(s, n);
                o.expect(tableau_from_mlq(q) == s, "round trip " + filling_to_line(s));
                o.expect(mlq_from_tableau(tableau_from_mlq(q), n) == q, "reverse round trip " + filling_to_line(s));
                Weighted a = wt_martin_full(q), b = wt_P_quinv(s, n);
                o.expect(a.x == b.x && a.c == b.c, "weight transport " + filling_to_line(s));
                ++queues;
            });
    if (o.pass) o.detail = std::to_string(queues) + " queues";
    return o;
}

Verdict c10_oracles() {
    Verdict o;
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    for (int size = 1; size <= 5; ++size)
        for (const Partition& lam : partitions_of(size))
            for (int n = 1; n <= 4; ++n) {
                auto p = xpoly_to_msym(build(lam, n, {Family::P, Method::quinv_compact}));
                auto s = xpoly_to_msym(schur_oracle(lam, n));
                o.expect(p.size() == s.size(), "support differs at " + inst(lam, n));
                for (const auto& [mu, c] : s) {
                    QTRat pc = p.count(mu) ? p.at(mu) : QTRat(0);
                    RatQ want = qt_specialize(c, 0, 0);
                    for (int k = 0; k < 5; ++k) {
                        RatQ x;
                        do {
                            x = RatQ(num(rng), den(rng));
                            x.canonicalize();
                        } while (abs(x) == 1);  // poles of 1 - q^a t^b sit on |q t| = 1
                        o.expect(qt_specialize(pc, x, x) == want, "q=t=" + x.get_str() + " at " + inst(lam, n));
                    }
                    o.expect(qt_specialize(pc, 0, 0) == want, "q=t=0 at " + inst(lam, n));
                }
            }
    bool schur_ok = o.pass;
    // the product identity exactly as stated, then with (1-t) per column
    int literal_fail = 0, corrected_fail = 0, shapes = 0;
    std::string first_bad;
    for (int size = 1; size <= 8; ++size)
        for (const Partition& lam : partitions_of(size)) {
            PolyQT rhs = perm_lambda(lam) * PR_rarm(lam);
            if (!(PR(lam) == rhs)) {
                if (first_bad.empty()) first_bad = lam.str();
                ++literal_fail;
            }
            if (!(PR(lam) == binom_factor(0, 1).pow(lam.length()) * rhs)) ++corrected_fail;
            ++shapes;
        }
    std::ostringstream d;
    d << "Schur oracle " << (schur_ok ? "ok" : "FAILED: " + o.detail) << "; PR = perm_lambda * prod(1-q^(leg+1)t^(rarm+1)) fails on "
      << literal_fail << "/" << shapes << " partitions (first: " << first_bad << "); with an extra (1-t)^l(lambda) it fails on "
      << corrected_fail;
    o.pass = schur_ok && literal_fail == 0;
    o.detail = d.str();
    return o;
}

Verdict c11_super() {
    Verdict o;
    for (const Partition& lam : {Partition{1}, Partition{2}, Partition{1, 1}, Partition{2, 1}})
        for (int n = 1; n <= 2; ++n) {
            XPoly want = build(lam, n, {Family::P, Method::quinv_compact}).scaled(QTRat(PR(lam)));
            o.expect(build_J_super(lam, n, Side::inv) == want, "inv side at " + inst(lam, n));
            o.expect(build_J_super(lam, n, Side::quinv) == want, "quinv side at " + inst(lam, n));
        }
    return o;
}

std::string run_text(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return std::to_string(code) + "\n" + out.str() + err.str();
}

Verdict c12_properties() {
    Verdict o;
    std::mt19937 rng(7);
    long flips = 0;
    for (int size = 2; size <= 7; ++size)
        for (const Partition& lam : partitions_of(size)) {
            std::vector<int> idx = compatible_indices(lam);
            if (idx.empty()) continue;
            const int n = 3;
            for (const Filling& s : all_fillings(lam, n, Filter::all)) {
                if (size >= 6 && rng() % 8) continue;  // sample the larger shapes
                for (int i : idx) {
                    Filling a = tau(s, i), b = rho(s, i);
                    bool same = s.cols[i - 1] == s.cols[i];
                    std::string where = filling_to_line(s) + " i=" + std::to_string(i);
                    o.expect(tau(a, i) == s && rho(b, i) == s, "not an involution at " + where);
                    o.expect(maj(a) == maj(s) && maj(b) == maj(s), "maj changed at " + where);
                    if (!same)
                        o.expect(std::abs(inv(a) - inv(s)) == 1 && std::abs(quinv(b) - quinv(s)) == 1,
                                 "statistic did not move by one at " + where);
                    ++flips;
                }
            }
        }
    // orbit sums of t^(ell_lambda) over rearrangements within equal parts
    long orbits = 0;
    for (int size = 1; size <= 7; ++size)
        for (const Partition& lam : partitions_of(size))
            for (const Filling& s : all_fillings(lam, 4, Filter::quinv_na)) {
                if (rng() % 16) continue;
                BorderWord w = top_border(s);
                PolyQT sum;
                for (const BorderWord& v : sym_lambda_orbit(w, lam)) sum += mono(0, ell_lambda(v, lam));
                o.expect(sum == perm_lambda(lam), "orbit sum at " + filling_to_line(s));
                ++orbits;
            }
    // symmetry gate and byte-identical output across worker counts
    for (const char* fam : {"P", "Htilde", "J"})
        for (const char* p : {"3,2", "2,2,1", "3,1,1"}) {
            std::string serial;
            for (const char* th : {"1", "2", "4"}) {
                std::string got = run_text({"compute", "-p", p, "-n", "4", "--family", fam, "--basis", "monomial",
                                            "--format", "json", "--threads", th});
                if (serial.empty()) serial = got;
                o.expect(got.rfind("0\n", 0) == 0, std::string("compute failed for ") + fam + "[" + p + "]");
                o.expect(got == serial, std::string("output differs with ") + th + " threads for " + fam + "[" + p + "]");
            }
        }
    std::string report;
    for (const char* th : {"1", "2", "4"}) {
        std::string got = run_text({"verify", "--max-cells", "4", "--nvars", "3", "--threads", th, "--no-timing"});
        if (report.empty()) report = got;
        o.expect(got == report, std::string("verify report differs with ") + th + " threads");
    }
    if (o.pass) o.detail = std::to_string(flips) + " flips, " + std::to_string(orbits) + " orbits";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        Verdict (*run)();
    };
    const Criterion criteria[] = {
        {"P(2,2) in four variables, exact coefficients", c1_p22},
        {"five P builders agree, |lambda| <= 6, n = 4", c2_pentagon},
        {"modified Macdonald builders agree and specialize to (x1+...+xn)^|lambda|", c3_htilde},
        {"statistics of the nine-column tableau", c4_stats},
        {"operator probabilities sum to 1", c5_normalization},
        {"balance of weights and probabilities", c6_balance},
        {"rho-tilde on a five-column filling: outcomes, probabilities, weights, balance", c7_rho_tilde_operator},
        {"Jack polynomials from both statistics", c8_jack},
        {"multiline queues: nine-site weight, bijection, weight transport", c9_mlq},
        {"Schur oracle and the PR product identity", c10_oracles},
        {"super-filling sums for the integral form", c11_super},
        {"flip properties, orbit sums, symmetry, determinism", c12_properties},
    };
    int failed = 0, k = 0;
    for (const Criterion& c : criteria) {
        ++k;
        auto t0 = Clock::now();
        Verdict o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        std::cout << (o.pass ? "PASS " : "FAIL ") << k << ". " << c.name;
        if (!o.detail.empty()) std::cout << " -- " << o.detail;
        std::cout << " [" << std::fixed;
        std::cout.precision(2);
        std::cout << secs << " s]" << std::defaultfloat << std::endl;
        failed += o.pass ? 0 : 1;
    }
    std::cout << (k - failed) << '/' << k << " criteria passed" << std::endl;
    return failed ? EXIT_FAILURE : EXIT_SUCCESS;
}
