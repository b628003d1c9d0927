#include "macdonald/formulas.hpp"

#include <chrono>
#include <sstream>

#include "macdonald/mlq.hpp"

namespace macd {

bool is_valid(const FormulaChoice& c) {
    switch (c.family) {
        case Family::Htilde:
            return c.method == Method::inv || c.method == Method::quinv || c.method == Method::inv_compact ||
                   c.method == Method::quinv_compact;
        case Family::P:
            return c.method == Method::inv || c.method == Method::quinv || c.method == Method::inv_compact ||
                   c.method == Method::quinv_compact || c.method == Method::mlq;
        case Family::J:
            return c.method == Method::quinv || c.method == Method::product || c.method == Method::super_inv ||
                   c.method == Method::super_quinv;
        case Family::Jack:
            return c.method == Method::inv || c.method == Method::quinv;
    }
    return false;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::Htilde:
            return "Htilde";
        case Family::P:
            return "P";
        case Family::J:
            return "J";
        case Family::Jack:
            return "Jack";
    }
    return "?";
}

std::string method_name(Method m) {
    switch (m) {
        case Method::inv:
            return "inv";
        case Method::quinv:
            return "quinv";
        case Method::inv_compact:
            return "inv-compact";
        case Method::quinv_compact:
            return "quinv-compact";
        case Method::mlq:
            return "mlq";
        case Method::product:
            return "product";
        case Method::super_inv:
            return "super-inv";
        case Method::super_quinv:
            return "super-quinv";
    }
    return "?";
}

Family parse_family(const std::string& s) {
    for (Family f : {Family::Htilde, Family::P, Family::J, Family::Jack})
        if (family_name(f) == s) return f;
    throw std::invalid_argument("unknown family \"" + s + "\" (expected Htilde, P, J or Jack)");
}

Method parse_method(const std::string& s) {
    for (Method m : {Method::inv, Method::quinv, Method::inv_compact, Method::quinv_compact, Method::mlq,
                     Method::product, Method::super_inv, Method::super_quinv})
        if (method_name(m) == s) return m;
    throw std::invalid_argument("unknown method \"" + s + "\"");
}

PolyQT PR(const Partition& lam) {
    PolyQT r(1);
    for (const Cell& u : cells_of(lam)) r *= binom_factor(leg(lam, u), arm(lam, u) + 1);
    return r;
}

PolyQT PR_tilde(const Partition& lam) {
    PolyQT r(1);
    for (const Cell& u : cells_of(lam))
        if (u.row >= 2) r *= binom_factor(leg(lam, u) + 1, arm(lam, u) + 1);
    return r;
}

PolyQT PR_rarm(const Partition& lam) {
    PolyQT r(1);
    for (const Cell& u : cells_of(lam))
        if (u.row >= 2) r *= binom_factor(leg(lam, u) + 1, rarm(lam, u) + 1);
    return r;
}

QTRat Pi_lambda(const Partition& lam) {
    Factored f(1);
    for (const Cell& u : cells_of(lam))
        if (u.row >= 2) {
            f.mul_binomial(leg(lam, u) + 1, arm(lam, u) + 1);
            f.mul_binomial(leg(lam, u) + 1, rarm(lam, u) + 1, -1);
        }
    return f.value();
}

Exps content_exponents(const Filling& s, int n_vars) {
    Exps e(n_vars, 0);
    for (const auto& col : s.cols)
        for (Letter a : col) {
            int v = letter_value(a);
            if (v < 1 || v > n_vars)
                throw std::invalid_argument("entry " + std::to_string(v) + " exceeds the number of variables");
            ++e[v - 1];
        }
    return e;
}

namespace {

// (1-t)/(1 - q^(leg+leg_off) t^(x+x_off)) over cells above the bottom row that
// differ from the cell below; x is arm or rarm
Factored descent_factors(const Filling& s, bool use_rarm, int leg_off, int x_off) {
    const Partition& lam = s.shape;
    Partition conj = conjugate(lam);
    Factored f(1);
    for (int c = 1; c <= lam.length(); ++c)
        for (int r = 2; r <= lam[c]; ++r) {
            if (s.at(r, c) == s.at(r - 1, c)) continue;
            int lg = lam[c] - r;
            int x = use_rarm ? conj[r - 1] - c : conj[r] - c;
            f.mul_binomial(0, 1);
            f.mul_binomial(lg + leg_off, x + x_off, -1);
        }
    return f;
}

}  // namespace

Weighted wt_P_quinv(const Filling& s, int n_vars, const WeightParams& p) {
    require_quinv_nonattacking(s);
    Factored f = descent_factors(s, true, 1, p.quinv_rarm);
    f.mul_monomial(maj(s), coquinv(s));
    return {content_exponents(s, n_vars), f.value()};
}

Weighted wt_HHL(const Filling& s, int n_vars, const WeightParams& p) {
    require_inv_nonattacking(s);
    Factored f = descent_factors(s, false, p.hhl_leg, p.hhl_arm);
    f.mul_monomial(maj(s), coinv(s));
    return {content_exponents(s, n_vars), f.value()};
}

Weighted wt_J_quinv(const Filling& s, int n_vars) {
    require_quinv_nonattacking(s);
    const Partition& lam = s.shape;
    Partition conj = conjugate(lam);
    Factored f(1);
    f.mul_monomial(maj(s), coquinv(s));
    for (int c = 1; c <= lam.length(); ++c)
        for (int r = 1; r <= lam[c]; ++r) {
            if (r >= 2 && s.at(r, c) == s.at(r - 1, c))
                f.mul_binomial(lam[c] - r + 1, conj[r - 1] - c + 1);
            else
                f.mul_binomial(0, 1);
        }
    return {content_exponents(s, n_vars), f.value()};
}

namespace {

using WeightFn = std::function<Weighted(const Filling&)>;

XPoly sum_weights(const Partition& lam, int n, Filter filter, int threads, const WeightFn& fn) {
    if (threads <= 1) {
        XPolyAccumulator acc(n);
        enumerate_fillings(lam, n, filter, [&](const Filling& s) {
            Weighted w = fn(s);
            acc.add(w.x, w.c);
        });
        return acc.finish();
    }
    std::vector<XPolyAccumulator> parts(prefix_count(lam, n), XPolyAccumulator(n));
    enumerate_parallel(lam, n, filter, threads, [&](std::size_t k, const Filling& s) {
        Weighted w = fn(s);
        parts[k].add(w.x, w.c);
    });
    XPolyAccumulator total(n);
    for (const auto& p : parts) total.merge(p);
    return total.finish();
}

Weighted monomial_weight(const Filling& s, int n, int stat, const QTRat& extra) {
    return {content_exponents(s, n), extra * QTRat(PolyQT::monomial(1, maj(s), stat))};
}

}  // namespace

XPoly build(const Partition& lam, int n, const FormulaChoice& choice, const BuildOptions& opt) {
    if (!is_valid(choice))
        throw std::invalid_argument("method " + method_name(choice.method) + " is not available for family " +
                                    family_name(choice.family));
    if (n < 1) throw std::invalid_argument("n_vars must be at least 1");
    const int th = opt.threads;
    const WeightParams& wp = opt.weights;
    switch (choice.family) {
        case Family::Htilde:
            switch (choice.method) {
                case Method::inv:
                    return sum_weights(lam, n, Filter::all, th,
                                       [&](const Filling& s) { return monomial_weight(s, n, inv(s), QTRat(1)); });
                case Method::quinv:
                    return sum_weights(lam, n, Filter::all, th,
                                       [&](const Filling& s) { return monomial_weight(s, n, quinv(s), QTRat(1)); });
                case Method::inv_compact:
                    return sum_weights(lam, n, Filter::inv_sorted, th, [&](const Filling& s) {
                        return monomial_weight(s, n, inv(s), perm_sigma(s));
                    });
                case Method::quinv_compact:
                    return sum_weights(lam, n, Filter::quinv_sorted, th, [&](const Filling& s) {
                        return monomial_weight(s, n, quinv(s), perm_sigma(s));
                    });
                default:
                    break;
            }
            break;
        case Family::P:
            switch (choice.method) {
                case Method::quinv_compact:
                    return sum_weights(lam, n, Filter::quinv_na_coquinv_sorted, th,
                                       [&](const Filling& s) { return wt_P_quinv(s, n, wp); });
                case Method::quinv: {
                    XPoly p = sum_weights(lam, n, Filter::quinv_na, th,
                                          [&](const Filling& s) { return wt_P_quinv(s, n, wp); });
                    return p.scaled(QTRat(1) / QTRat(perm_lambda(lam)));
                }
                case Method::inv: {
                    XPoly p = sum_weights(lam, n, Filter::inv_na, th,
                                          [&](const Filling& s) { return wt_HHL(s, n, wp); });
                    return p.scaled(Pi_lambda(lam) / QTRat(perm_lambda(lam)));
                }
                case Method::inv_compact: {
                    XPoly p = sum_weights(lam, n, Filter::inv_na_coinv_sorted, th,
                                          [&](const Filling& s) { return wt_HHL(s, n, wp); });
                    return p.scaled(Pi_lambda(lam));
                }
                case Method::mlq:
                    return build_P_mlq(lam, n, th);
                default:
                    break;
            }
            break;
        case Family::J:
            switch (choice.method) {
                case Method::quinv:
                    return sum_weights(lam, n, Filter::quinv_na, th,
                                       [&](const Filling& s) { return wt_J_quinv(s, n); });
                case Method::product: {
                    XPoly p = build(lam, n, {Family::P, Method::quinv_compact}, opt);
                    return p.scaled(QTRat(PR(lam)));
                }
                case Method::super_inv:
                    return build_J_super(lam, n, Side::inv);
                case Method::super_quinv:
                    return build_J_super(lam, n, Side::quinv);
                default:
                    break;
            }
            break;
        case Family::Jack:
            throw std::invalid_argument("Jack polynomials have alpha coefficients; use jack()");
    }
    throw std::invalid_argument("unsupported formula choice");
}

XPoly build_J_super(const Partition& lam, int n, Side stat) {
    const int shift = n_stat(lam) + lam.size();
    XPolyAccumulator acc(n);
    Filter f = stat == Side::inv ? Filter::inv_na : Filter::quinv_na;
    enumerate_superfillings(lam, n, f, [&](const Filling& s) {
        int neg = 0;
        for (const auto& col : s.cols)
            for (Letter a : col) neg += is_barred(a) ? 1 : 0;
        int pos = lam.size() - neg;
        int e = shift - pos - (stat == Side::inv ? inv(s) : quinv(s));
        if (e < 0) throw std::logic_error("negative t exponent in super-filling sum");
        IntZ sign = neg % 2 ? -1 : 1;
        acc.add(content_exponents(s, n), QTRat(PolyQT::monomial(sign, maj(s), e)));
    });
    return acc.finish();
}

PolyAlpha jack_weight(const Filling& s, Side method) {
    const Partition& lam = s.shape;
    Partition conj = conjugate(lam);
    PolyAlpha w(1);
    for (int c = 1; c <= lam.length(); ++c)
        for (int r = 2; r <= lam[c]; ++r) {
            if (s.at(r, c) != s.at(r - 1, c)) continue;
            int lg = lam[c] - r;
            int x = method == Side::inv ? conj[r] - c : conj[r - 1] - c;
            w *= PolyAlpha::linear(x + 1, lg + 1);
        }
    return w;
}

JackPoly jack(const Partition& lam, int n, Side method) {
    JackPoly p(n);
    enumerate_fillings(lam, n, method == Side::inv ? Filter::inv_na : Filter::quinv_na,
                       [&](const Filling& s) { p.add(content_exponents(s, n), jack_weight(s, method)); });
    return p;
}

std::size_t jack_term_count(const Partition& lam, int n, Side method) {
    std::size_t k = 0;
    enumerate_fillings(lam, n, method == Side::inv ? Filter::inv_na : Filter::quinv_na,
                       [&](const Filling&) { ++k; });
    return k;
}

XPoly schur_oracle(const Partition& lam, int n) {
    XPoly out(n);
    std::vector<std::vector<int>> T;
    for (int len : lam.parts) T.emplace_back(len, 0);
    std::vector<std::pair<int, int>> order;
    for (int i = 0; i < lam.length(); ++i)
        for (int j = 0; j < lam.parts[i]; ++j) order.emplace_back(i, j);
    Exps e(n, 0);
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == order.size()) {
            out.add(e, QTRat(1));
            return;
        }
        auto [i, j] = order[k];
        int lo = 1;
        if (j > 0) lo = std::max(lo, T[i][j - 1]);
        if (i > 0) lo = std::max(lo, T[i - 1][j] + 1);
        for (int v = lo; v <= n; ++v) {
            T[i][j] = v;
            ++e[v - 1];
            self(self, k + 1);
            --e[v - 1];
        }
    };
    rec(rec, 0);
    return out;
}

// ------------------------------------------------------------ verification

namespace {

using Clock = std::chrono::steady_clock;

struct Recorder {
    std::vector<CheckResult>& out;
    template <class F>
    void run(const std::string& identity, const std::string& instance, F&& body) {
        auto t0 = Clock::now();
        std::string detail;
        bool pass = false;
        try {
            pass = body(detail);
        } catch (const std::exception& e) {
            pass = false;
            detail = std::string("exception: ") + e.what();
        }
        double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        out.push_back({identity, instance, pass, detail, ms});
    }
};

std::string first_difference(const XPoly& a, const XPoly& b) {
    for (const auto& [e, c] : a.terms())
        if (!(b.coeff(e) == c)) return "coefficient of x^" + exps_str(e) + " differs: " + c.str() + " vs " + b.coeff(e).str();
    for (const auto& [e, c] : b.terms())
        if (a.terms().find(e) == a.terms().end()) return "coefficient of x^" + exps_str(e) + " differs: 0 vs " + c.str();
    return "";
}

std::string inst(const Partition& lam, int n) { return "lambda=" + lam.str() + " n=" + std::to_string(n); }

const std::vector<Partition>& operator_shapes() {
    static const std::vector<Partition> shapes{{1, 1}, {2, 2}, {3, 3}, {2, 2, 1}, {2, 1, 1}, {3, 3, 2}};
    return shapes;
}

void formula_checks(const VerifyOptions& opt, Recorder& rec) {
    BuildOptions bo;
    bo.threads = opt.threads;
    if (opt.inject_fault) bo.weights.quinv_rarm = 2;
    const int n = opt.n_vars;
    for (int size = 1; size <= opt.max_cells; ++size)
        for (const Partition& lam : partitions_of(size)) {
            XPoly base = build(lam, n, {Family::P, Method::quinv_compact}, bo);
            for (Method m : {Method::quinv, Method::inv, Method::inv_compact, Method::mlq})
                rec.run("P quinv-compact = P " + method_name(m), inst(lam, n), [&](std::string& d) {
                    XPoly other = m == Method::mlq ? build_P_mlq(lam, n, opt.threads) : build(lam, n, {Family::P, m}, bo);
                    d = first_difference(base, other);
                    return d.empty();
                });
            rec.run("P symmetric, leading term m_lambda, dominance", inst(lam, n), [&](std::string& d) {
                auto ms = xpoly_to_msym(base);
                if (n < lam.length()) return ms.empty();
                auto it = ms.find(lam.parts);
                if (it == ms.end() || !(it->second == QTRat(1))) {
                    d = "coefficient of m_lambda is not 1";
                    return false;
                }
                for (const auto& [mu, c] : ms)
                    if (!dominates(lam, Partition(mu))) {
                        d = "m_" + Partition(mu).str() + " is not dominated by lambda";
                        return false;
                    }
                return true;
            });
            rec.run("Htilde inv = quinv = inv-compact = quinv-compact", inst(lam, n), [&](std::string& d) {
                XPoly h = build(lam, n, {Family::Htilde, Method::inv}, bo);
                for (Method m : {Method::quinv, Method::inv_compact, Method::quinv_compact}) {
                    d = first_difference(h, build(lam, n, {Family::Htilde, m}, bo));
                    if (!d.empty()) {
                        d = method_name(m) + ": " + d;
                        return false;
                    }
                }
                xpoly_to_msym(h);
                // at q=t=1 every filling counts once
                for (const auto& [e, c] : h.terms()) {
                    IntZ multinomial = 1;
                    int k = 0;
                    for (int x : e)
                        for (int j = 1; j <= x; ++j) {
                            ++k;
                            multinomial = multinomial * k / j;
                        }
                    if (c.eval(1, 1) != RatQ(multinomial)) {
                        d = "q=t=1 coefficient of x^" + exps_str(e) + " is not multinomial";
                        return false;
                    }
                }
                return true;
            });
            rec.run("J quinv = PR * P", inst(lam, n), [&](std::string& d) {
                d = first_difference(build(lam, n, {Family::J, Method::quinv}, bo), base.scaled(QTRat(PR(lam))));
                return d.empty();
            });
            if (size <= 3 && n <= 2)
                for (Side sd : {Side::inv, Side::quinv})
                    rec.run(std::string("J super-") + (sd == Side::inv ? "inv" : "quinv") + " = PR * P", inst(lam, n),
                            [&](std::string& d) {
                                d = first_difference(build_J_super(lam, n, sd), base.scaled(QTRat(PR(lam))));
                                return d.empty();
                            });
            rec.run("P at q=t and q=t=0 is the Schur polynomial", inst(lam, n), [&](std::string& d) {
                auto ms = xpoly_to_msym(base);
                auto sch = xpoly_to_msym(schur_oracle(lam, n));
                const RatQ points[] = {RatQ(1, 2), RatQ(2, 3), RatQ(3, 7), RatQ(5, 4), RatQ(-2, 5)};
                for (const auto& [mu, c] : sch) {
                    auto it = ms.find(mu);
                    QTRat pc = it == ms.end() ? QTRat(0) : it->second;
                    RatQ want = c.eval(0, 0);
                    for (const RatQ& r : points)
                        if (qt_specialize(pc, r, r) != want) {
                            d = "m_" + Partition(mu).str() + " at q=t=" + r.get_str();
                            return false;
                        }
                    if (qt_specialize(pc, 0, 0) != want) {
                        d = "m_" + Partition(mu).str() + " at q=t=0";
                        return false;
                    }
                }
                return ms.size() == sch.size();
            });
            rec.run("PR = (1-t)^l(lambda) perm_lambda prod(1-q^(leg+1) t^(rarm+1))", lam.str(), [&](std::string&) {
                PolyQT rhs = binom_factor(0, 1).pow(lam.length()) * perm_lambda(lam) * PR_rarm(lam);
                return PR(lam) == rhs;
            });
            if (size <= 5)
                rec.run("Jack inv = Jack quinv", inst(lam, n), [&](std::string& d) {
                    JackPoly a = jack(lam, n, Side::inv), b = jack(lam, n, Side::quinv);
                    xpoly_to_msym(a);
                    if (jack_term_count(lam, n, Side::quinv) > jack_term_count(lam, n, Side::inv)) {
                        d = "quinv sum has more terms";
                        return false;
                    }
                    return a == b;
                });
        }
}

void operator_checks(const VerifyOptions& opt, Recorder& rec) {
    WeightParams wp;
    if (opt.inject_fault) wp.quinv_rarm = 2;
    const int n = std::max(opt.n_vars, 1);
    for (const Partition& lam : operator_shapes()) {
        if (lam.size() > std::max(opt.max_cells, 4) + 4) continue;
        auto quinv_tabs = all_fillings(lam, n, Filter::quinv_na);
        auto inv_tabs = all_fillings(lam, n, Filter::inv_na);
        rec.run("rho-tilde probabilities sum to 1", inst(lam, n), [&](std::string& d) {
            for (const auto& s : quinv_tabs)
                for (int i : compatible_indices(lam)) {
                    QTRat sum(0);
                    for (const auto& o : rho_tilde(s, i)) {
                        if (!is_quinv_nonattacking(o.filling)) {
                            d = "attacking outcome from " + filling_to_line(s);
                            return false;
                        }
                        sum += o.prob;
                    }
                    if (!(sum == QTRat(1))) {
                        d = filling_to_line(s) + " i=" + std::to_string(i);
                        return false;
                    }
                }
            return true;
        });
        rec.run("tau-tilde probabilities sum to 1", inst(lam, n), [&](std::string& d) {
            for (const auto& s : inv_tabs)
                for (int i : compatible_indices(lam)) {
                    QTRat sum(0);
                    for (const auto& o : tau_tilde(s, i)) {
                        if (!is_inv_nonattacking(o.filling)) {
                            d = "attacking outcome from " + filling_to_line(s);
                            return false;
                        }
                        sum += o.prob;
                    }
                    if (!(sum == QTRat(1))) {
                        d = filling_to_line(s) + " i=" + std::to_string(i);
                        return false;
                    }
                }
            return true;
        });
        rec.run("quinv balance wt(s')prob(s',s) = t wt(s)prob(s,s')", inst(lam, n), [&](std::string& d) {
            for (const auto& s : quinv_tabs)
                for (int i : compatible_indices(lam)) {
                    BorderWord w = top_border(s);
                    if (!(w[i - 1] < w[i])) continue;
                    QTRat ws = wt_P_quinv(s, n, wp).c;
                    for (const auto& o : rho_tilde(s, i)) {
                        QTRat back(0);
                        for (const auto& r : rho_tilde(o.filling, i))
                            if (r.filling == s) back = r.prob;
                        if (!(wt_P_quinv(o.filling, n, wp).c * back == PolyQT::monomial(1, 0, 1) * ws * o.prob)) {
                            d = "counterexample " + filling_to_line(s) + " -> " + filling_to_line(o.filling);
                            return false;
                        }
                    }
                }
            return true;
        });
        rec.run("inv balance wt(s')prob(s',s) = t wt(s)prob(s,s')", inst(lam, n), [&](std::string& d) {
            for (const auto& s : inv_tabs)
                for (int i : compatible_indices(lam)) {
                    BorderWord w = bottom_border(s);
                    if (!(w[i - 1] > w[i])) continue;
                    QTRat ws = wt_HHL(s, n, wp).c;
                    for (const auto& o : tau_tilde(s, i)) {
                        QTRat back(0);
                        for (const auto& r : tau_tilde(o.filling, i))
                            if (r.filling == s) back = r.prob;
                        if (!(wt_HHL(o.filling, n, wp).c * back == PolyQT::monomial(1, 0, 1) * ws * o.prob)) {
                            d = "counterexample " + filling_to_line(s) + " -> " + filling_to_line(o.filling);
                            return false;
                        }
                    }
                }
            return true;
        });
        rec.run("tau, rho involutions preserving maj with stat change 1", inst(lam, n), [&](std::string& d) {
            for (const auto& s : all_fillings(lam, std::min(n, 3), Filter::all))
                for (int i : compatible_indices(lam)) {
                    Filling a = tau(s, i), b = rho(s, i);
                    bool same = s.cols[i - 1] == s.cols[i];
                    if (!(tau(a, i) == s) || !(rho(b, i) == s) || maj(a) != maj(s) || maj(b) != maj(s) ||
                        (!same && (std::abs(inv(a) - inv(s)) != 1 || std::abs(quinv(b) - quinv(s)) != 1))) {
                        d = filling_to_line(s) + " i=" + std::to_string(i);
                        return false;
                    }
                }
            return true;
        });
    }
}

}  // namespace

std::vector<CheckResult> verify_suite(const VerifyOptions& opt) {
    if (opt.suite != "all" && opt.suite != "formulas" && opt.suite != "operators")
        throw std::invalid_argument("unknown suite \"" + opt.suite + "\"");
    std::vector<CheckResult> out;
    Recorder rec{out};
    if (opt.suite != "formulas") operator_checks(opt, rec);
    if (opt.suite != "operators") formula_checks(opt, rec);
    return out;
}

}  // namespace macd
