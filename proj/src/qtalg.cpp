#include "macdonald/qtalg.hpp"

#include <mutex>
#include <numeric>
#include <sstream>

namespace macd {

namespace {

bool term_less(const PolyQT::Term& x, const PolyQT::Term& y) {
    return x.dq != y.dq ? x.dq < y.dq : x.dt < y.dt;
}

std::string monomial_str(int dq, int dt) {
    std::string s;
    if (dq > 0) s += dq == 1 ? "q" : "q^" + std::to_string(dq);
    if (dt > 0) s += dt == 1 ? "t" : "t^" + std::to_string(dt);
    return s;
}

}  // namespace

// ---------------------------------------------------------------- PolyQT

PolyQT::PolyQT(long c) {
    if (c != 0) terms_.push_back({0, 0, IntZ(c)});
}

PolyQT::PolyQT(const IntZ& c) {
    if (c != 0) terms_.push_back({0, 0, c});
}

PolyQT PolyQT::monomial(const IntZ& c, int dq, int dt) {
    if (dq < 0 || dt < 0) throw std::invalid_argument("negative exponent in PolyQT");
    PolyQT p;
    if (c != 0) p.terms_.push_back({dq, dt, c});
    return p;
}

PolyQT PolyQT::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), term_less);
    PolyQT p;
    for (auto& tm : terms) {
        if (tm.dq < 0 || tm.dt < 0) throw std::invalid_argument("negative exponent in PolyQT");
        if (!p.terms_.empty() && p.terms_.back().dq == tm.dq && p.terms_.back().dt == tm.dt)
            p.terms_.back().c += tm.c;
        else
            p.terms_.push_back(std::move(tm));
        if (p.terms_.back().c == 0) p.terms_.pop_back();
    }
    return p;
}

bool PolyQT::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].dq == 0 && terms_[0].dt == 0);
}

bool PolyQT::is_one() const {
    return terms_.size() == 1 && terms_[0].dq == 0 && terms_[0].dt == 0 && terms_[0].c == 1;
}

int PolyQT::deg_q() const {
    int d = -1;
    for (const auto& tm : terms_) d = std::max(d, tm.dq);
    return d;
}

int PolyQT::deg_t() const {
    int d = -1;
    for (const auto& tm : terms_) d = std::max(d, tm.dt);
    return d;
}

IntZ PolyQT::coeff(int dq, int dt) const {
    Term key{dq, dt, 0};
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key, term_less);
    if (it != terms_.end() && it->dq == dq && it->dt == dt) return it->c;
    return 0;
}

IntZ PolyQT::content() const {
    IntZ g = 0;
    for (const auto& tm : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), tm.c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

PolyQT PolyQT::operator-() const {
    PolyQT r = *this;
    for (auto& tm : r.terms_) tm.c = -tm.c;
    return r;
}

PolyQT& PolyQT::operator+=(const PolyQT& o) {
    if (o.terms_.empty()) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() || j != o.terms_.end()) {
        if (j == o.terms_.end() || (i != terms_.end() && term_less(*i, *j))) {
            out.push_back(std::move(*i++));
        } else if (i == terms_.end() || term_less(*j, *i)) {
            out.push_back(*j++);
        } else {
            IntZ c = i->c + j->c;
            if (c != 0) out.push_back({i->dq, i->dt, std::move(c)});
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

PolyQT& PolyQT::operator-=(const PolyQT& o) { return *this += -o; }

PolyQT operator*(const PolyQT& a, const PolyQT& b) {
    if (a.is_zero() || b.is_zero()) return PolyQT();
    if (a.terms_.size() == 1 && a.terms_[0].dq == 0 && a.terms_[0].dt == 0) return b.scaled(a.terms_[0].c);
    if (b.terms_.size() == 1 && b.terms_[0].dq == 0 && b.terms_[0].dt == 0) return a.scaled(b.terms_[0].c);
    const int nq = a.deg_q() + b.deg_q() + 1;
    const int nt = a.deg_t() + b.deg_t() + 1;
    PolyQT r;
    if (static_cast<long>(nq) * nt <= (1L << 16)) {
        std::vector<IntZ> grid(static_cast<std::size_t>(nq) * nt);
        for (const auto& x : a.terms_)
            for (const auto& y : b.terms_) {
                IntZ& cell = grid[static_cast<std::size_t>(x.dq + y.dq) * nt + (x.dt + y.dt)];
                mpz_addmul(cell.get_mpz_t(), x.c.get_mpz_t(), y.c.get_mpz_t());
            }
        for (int i = 0; i < nq; ++i)
            for (int j = 0; j < nt; ++j) {
                IntZ& cell = grid[static_cast<std::size_t>(i) * nt + j];
                if (cell != 0) r.terms_.push_back({i, j, std::move(cell)});
            }
        return r;
    }
    std::map<std::pair<int, int>, IntZ> acc;
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) acc[{x.dq + y.dq, x.dt + y.dt}] += x.c * y.c;
    for (auto& [k, c] : acc)
        if (c != 0) r.terms_.push_back({k.first, k.second, std::move(c)});
    return r;
}

PolyQT& PolyQT::operator*=(const PolyQT& o) {
    *this = *this * o;
    return *this;
}

bool operator==(const PolyQT& a, const PolyQT& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        const auto& x = a.terms_[i];
        const auto& y = b.terms_[i];
        if (x.dq != y.dq || x.dt != y.dt || x.c != y.c) return false;
    }
    return true;
}

std::strong_ordering operator<=>(const PolyQT& a, const PolyQT& b) {
    const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        const auto& x = a.terms_[i];
        const auto& y = b.terms_[i];
        if (auto c = x.dq <=> y.dq; c != 0) return c;
        if (auto c = x.dt <=> y.dt; c != 0) return c;
        int k = cmp(x.c, y.c);
        if (k != 0) return k < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return a.terms_.size() <=> b.terms_.size();
}

PolyQT PolyQT::scaled(const IntZ& k) const {
    if (k == 0) return PolyQT();
    PolyQT r = *this;
    for (auto& tm : r.terms_) tm.c *= k;
    return r;
}

PolyQT PolyQT::divexact(const IntZ& k) const {
    PolyQT r = *this;
    for (auto& tm : r.terms_) mpz_divexact(tm.c.get_mpz_t(), tm.c.get_mpz_t(), k.get_mpz_t());
    return r;
}

PolyQT PolyQT::shifted(int dq, int dt) const {
    PolyQT r = *this;
    for (auto& tm : r.terms_) {
        tm.dq += dq;
        tm.dt += dt;
        if (tm.dq < 0 || tm.dt < 0) throw std::invalid_argument("negative exponent in PolyQT");
    }
    return r;
}

PolyQT PolyQT::pow(unsigned e) const {
    PolyQT r(1), b = *this;
    while (e) {
        if (e & 1u) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

bool PolyQT::divide_exact(const PolyQT& g, PolyQT* quot) const {
    if (g.is_zero()) throw ArithmeticError("division by zero polynomial");
    if (is_zero()) {
        *quot = PolyQT();
        return true;
    }
    if (g.is_constant()) {
        const IntZ& c = g.terms_[0].c;
        for (const auto& tm : terms_)
            if (!mpz_divisible_p(tm.c.get_mpz_t(), c.get_mpz_t())) return false;
        PolyQT r = *this;
        for (auto& tm : r.terms_) mpz_divexact(tm.c.get_mpz_t(), tm.c.get_mpz_t(), c.get_mpz_t());
        *quot = std::move(r);
        return true;
    }
    if (deg_q() < g.deg_q() || deg_t() < g.deg_t()) return false;

    using Key = std::pair<int, int>;
    std::map<Key, IntZ> rem;
    for (const auto& tm : terms_) rem.emplace(Key{tm.dq, tm.dt}, tm.c);
    const Term& lg = g.leading();
    std::vector<Term> q;
    IntZ c;
    while (!rem.empty()) {
        auto it = std::prev(rem.end());
        const int dq = it->first.first - lg.dq;
        const int dt = it->first.second - lg.dt;
        if (dq < 0 || dt < 0) return false;
        if (!mpz_divisible_p(it->second.get_mpz_t(), lg.c.get_mpz_t())) return false;
        mpz_divexact(c.get_mpz_t(), it->second.get_mpz_t(), lg.c.get_mpz_t());
        for (const auto& gt : g.terms_) {
            auto& slot = rem[Key{gt.dq + dq, gt.dt + dt}];
            mpz_submul(slot.get_mpz_t(), c.get_mpz_t(), gt.c.get_mpz_t());
            if (slot == 0) rem.erase(Key{gt.dq + dq, gt.dt + dt});
        }
        q.push_back({dq, dt, c});
    }
    *quot = from_terms(std::move(q));
    return true;
}

RatQ PolyQT::eval(const RatQ& q, const RatQ& t) const {
    std::vector<RatQ> qp{RatQ(1)}, tp{RatQ(1)};
    const int mq = std::max(deg_q(), 0), mt = std::max(deg_t(), 0);
    for (int i = 1; i <= mq; ++i) qp.push_back(qp.back() * q);
    for (int i = 1; i <= mt; ++i) tp.push_back(tp.back() * t);
    RatQ s = 0;
    for (const auto& tm : terms_) s += RatQ(tm.c) * qp[tm.dq] * tp[tm.dt];
    return s;
}

std::string PolyQT::str() const {
    if (terms_.empty()) return "0";
    std::vector<const Term*> order;
    for (const auto& tm : terms_) order.push_back(&tm);
    std::sort(order.begin(), order.end(), [](const Term* x, const Term* y) {
        int dx = x->dq + x->dt, dy = y->dq + y->dt;
        return dx != dy ? dx < dy : x->dq > y->dq;
    });
    std::string s;
    bool first = true;
    for (const Term* tm : order) {
        std::string mono = monomial_str(tm->dq, tm->dt);
        IntZ a = abs(tm->c);
        if (tm->c < 0)
            s += "-";
        else if (!first)
            s += "+";
        if (mono.empty() || a != 1) s += a.get_str();
        s += mono;
        first = false;
    }
    return s;
}

// ---------------------------------------------------------- cyclotomics

namespace {

// ascending coefficients of the univariate cyclotomic polynomial
std::map<int, std::vector<IntZ>>& cyclo_cache() {
    static std::map<int, std::vector<IntZ>> cache;
    return cache;
}

const std::vector<IntZ>& cyclotomic_locked(int d) {
    auto& cache = cyclo_cache();
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    // x^d - 1 divided by Phi_e for every proper divisor e
    std::vector<IntZ> p(d + 1);
    p[0] = -1;
    p[d] = 1;
    for (int e = 1; e < d; ++e) {
        if (d % e) continue;
        const std::vector<IntZ>& phi = cyclotomic_locked(e);
        std::vector<IntZ> quo(p.size() - phi.size() + 1);
        for (int k = static_cast<int>(quo.size()) - 1; k >= 0; --k) {
            quo[k] = p[k + phi.size() - 1];
            for (std::size_t m = 0; m < phi.size(); ++m) p[k + m] -= quo[k] * phi[m];
        }
        p = std::move(quo);
    }
    return cache.emplace(d, std::move(p)).first->second;
}

const std::vector<IntZ>& cyclotomic(int d) {
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    return cyclotomic_locked(d);
}

}  // namespace

const PolyQT& cyclo_poly(const CycloKey& k) {
    static std::mutex mu;
    static std::map<CycloKey, PolyQT> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(k);
        if (it != cache.end()) return it->second;
    }
    const std::vector<IntZ>& u = cyclotomic(k.d);
    std::vector<PolyQT::Term> terms;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] != 0) terms.push_back({static_cast<int>(i) * k.a, static_cast<int>(i) * k.b, u[i]});
    PolyQT p = PolyQT::from_terms(std::move(terms));
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(k, std::move(p)).first->second;
}

std::vector<CycloKey> binomial_keys(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("binomial exponents must be nonnegative");
    if (a == 0 && b == 0) throw ArithmeticError("1 - q^0 t^0 is zero");
    const int g = std::gcd(a, b);
    std::vector<CycloKey> keys;
    for (int d = 1; d <= g; ++d)
        if (g % d == 0) keys.push_back({a / g, b / g, d});
    return keys;
}

// --------------------------------------------------------------- Factored

Factored& Factored::mul_int(const IntZ& k) {
    num_ *= k;
    return *this;
}

Factored& Factored::div_int(const IntZ& k) {
    if (k == 0) throw ArithmeticError("division by zero");
    den_ *= k;
    return *this;
}

Factored& Factored::mul_monomial(int dq, int dt) {
    dq_ += dq;
    dt_ += dt;
    return *this;
}

Factored& Factored::mul_binomial(int a, int b, int e) {
    if (e == 0) return *this;
    if (e % 2 != 0) num_ = -num_;
    for (const auto& k : binomial_keys(a, b)) {
        int& x = exps_[k];
        x += e;
        if (x == 0) exps_.erase(k);
    }
    return *this;
}

Factored& Factored::mul_t_bracket(int k, int e) {
    for (int d = 2; d <= k; ++d) {
        if (k % d) continue;
        CycloKey key{0, 1, d};
        int& x = exps_[key];
        x += e;
        if (x == 0) exps_.erase(key);
    }
    return *this;
}

Factored& Factored::operator*=(const Factored& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    dq_ += o.dq_;
    dt_ += o.dt_;
    for (const auto& [k, e] : o.exps_) {
        int& x = exps_[k];
        x += e;
        if (x == 0) exps_.erase(k);
    }
    return *this;
}

QTRat Factored::value() const {
    if (dq_ < 0 || dt_ < 0) throw ArithmeticError("negative monomial exponent in Factored");
    IntZ n = num_, d = den_;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    IntZ g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    if (g > 1) {
        n /= g;
        d /= g;
    }
    PolyQT num = PolyQT::monomial(n, dq_, dt_);
    FactorMap den;
    for (const auto& [k, e] : exps_) {
        if (e > 0)
            num *= cyclo_poly(k).pow(e);
        else
            den.emplace(k, -e);
    }
    // numerator and denominator share no irreducible factor here
    QTRat r;
    r.num_ = std::move(num);
    r.dint_ = std::move(d);
    r.fac_ = std::move(den);
    if (r.num_.is_zero()) {
        r.dint_ = 1;
        r.fac_.clear();
    }
    return r;
}

// ------------------------------------------------------------------ QTRat

namespace {

void pull_cyclotomics(PolyQT& p, FactorMap& out) {
    const int dq = p.deg_q(), dt = p.deg_t();
    for (int a = 0; a <= dq; ++a)
        for (int b = 0; b <= dt; ++b) {
            if ((a == 0 && b == 0) || std::gcd(a, b) != 1) continue;
            const int lim = std::max(a ? dq / a : 0, b ? dt / b : 0);
            for (int d = 1; d <= 2 * lim + 2; ++d) {
                CycloKey k{a, b, d};
                const PolyQT& phi = cyclo_poly(k);
                if (phi.deg_q() > p.deg_q() || phi.deg_t() > p.deg_t()) continue;
                PolyQT quo;
                while (!p.is_constant() && p.divide_exact(phi, &quo)) {
                    p = std::move(quo);
                    ++out[k];
                }
            }
        }
}

}  // namespace

QTRat::QTRat(const PolyQT& num, const PolyQT& den) : num_(num) {
    if (den.is_zero()) throw ArithmeticError("zero denominator");
    IntZ c = den.content();
    if (den.leading().c < 0) c = -c;
    PolyQT p = den.divexact(c);
    if (c < 0) {
        num_ = -num_;
        c = -c;
    }
    dint_ = c;
    pull_cyclotomics(p, fac_);
    extra_ = p;
    normalize();
}

QTRat QTRat::binomial(int a, int b) { return QTRat(binom_factor(a, b)); }

QTRat QTRat::from_parts(PolyQT num, IntZ den_int, FactorMap factors, PolyQT extra) {
    QTRat r;
    if (den_int == 0 || extra.is_zero()) throw ArithmeticError("zero denominator");
    for (auto it = factors.begin(); it != factors.end();) {
        if (it->second < 0) throw std::invalid_argument("negative denominator exponent");
        if (std::gcd(it->first.a, it->first.b) != 1 || it->first.d < 1)
            throw std::invalid_argument("malformed cyclotomic key");
        it = it->second == 0 ? factors.erase(it) : std::next(it);
    }
    if (den_int < 0) {
        den_int = -den_int;
        num = -num;
    }
    IntZ c = extra.content();
    if (extra.leading().c < 0) c = -c;
    if (c != 1) {
        extra = extra.divexact(c);
        if (c < 0) {
            c = -c;
            num = -num;
        }
        den_int *= c;
    }
    r.num_ = std::move(num);
    r.dint_ = std::move(den_int);
    r.fac_ = std::move(factors);
    r.extra_ = std::move(extra);
    r.normalize();
    return r;
}

void QTRat::normalize() {
    if (num_.is_zero()) {
        dint_ = 1;
        fac_.clear();
        extra_ = PolyQT(1);
        return;
    }
    PolyQT quo;
    for (auto it = fac_.begin(); it != fac_.end();) {
        const PolyQT& phi = cyclo_poly(it->first);
        while (it->second > 0 && num_.divide_exact(phi, &quo)) {
            num_ = std::move(quo);
            --it->second;
        }
        it = it->second == 0 ? fac_.erase(it) : std::next(it);
    }
    if (!extra_.is_one() && num_.divide_exact(extra_, &quo)) {
        num_ = std::move(quo);
        extra_ = PolyQT(1);
    }
    if (dint_ != 1) {
        IntZ g = num_.content();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), dint_.get_mpz_t());
        if (g != 1) {
            num_ = num_.divexact(g);
            dint_ /= g;
        }
    }
}

PolyQT QTRat::den() const {
    PolyQT d = extra_.scaled(dint_);
    for (const auto& [k, e] : fac_) d *= cyclo_poly(k).pow(e);
    return d;
}

QTRat QTRat::operator-() const {
    QTRat r = *this;
    r.num_ = -r.num_;
    return r;
}

QTRat& QTRat::operator+=(const QTRat& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    QTRatSum s;
    s.add(*this);
    s.add(o);
    return *this = s.value();
}

QTRat& QTRat::operator*=(const QTRat& o) {
    if (is_zero() || o.is_zero()) return *this = QTRat();
    num_ *= o.num_;
    dint_ *= o.dint_;
    for (const auto& [k, e] : o.fac_) fac_[k] += e;
    if (!o.extra_.is_one()) extra_ *= o.extra_;
    normalize();
    return *this;
}

QTRat QTRat::inverse() const {
    if (is_zero()) throw ArithmeticError("division by zero");
    return QTRat(den(), num_);
}

QTRat& QTRat::operator/=(const QTRat& o) { return *this *= o.inverse(); }

bool operator==(const QTRat& a, const QTRat& b) {
    if (a.num_ == b.num_ && a.dint_ == b.dint_ && a.fac_ == b.fac_ && a.extra_ == b.extra_) return true;
    return a.num_ * b.den() == b.num_ * a.den();
}

RatQ QTRat::eval(const RatQ& q, const RatQ& t) const {
    RatQ d = extra_.eval(q, t) * RatQ(dint_);
    for (const auto& [k, e] : fac_) {
        RatQ v = cyclo_poly(k).eval(q, t);
        for (int i = 0; i < e; ++i) d *= v;
    }
    if (d == 0) throw ArithmeticError("pole: denominator vanishes at the evaluation point");
    return num_.eval(q, t) / d;
}

std::string QTRat::str() const {
    if (is_zero()) return "0";
    if (is_polynomial()) return num_.str();

    // regroup Phi factors of the denominator into binomials 1 - m^g
    std::vector<std::string> den_parts;
    int binomials = 0;
    std::map<std::pair<int, int>, std::map<int, int>> by_dir;
    for (const auto& [k, e] : fac_) by_dir[{k.a, k.b}][k.d] = e;
    std::map<std::string, int> grouped;
    std::vector<std::string> order;
    auto push = [&](const std::string& s) {
        if (!grouped.count(s)) order.push_back(s);
        ++grouped[s];
    };
    for (auto& [dir, ds] : by_dir) {
        for (;;) {
            int best = 0;
            for (const auto& [d, e] : ds) {
                if (e <= 0) continue;
                bool ok = true;
                for (int f = 1; f <= d && ok; ++f)
                    if (d % f == 0 && (!ds.count(f) || ds[f] <= 0)) ok = false;
                if (ok) best = std::max(best, d);
            }
            if (best == 0) break;
            for (int f = 1; f <= best; ++f)
                if (best % f == 0) --ds[f];
            ++binomials;
            push("1-" + monomial_str(best * dir.first, best * dir.second));
        }
        for (const auto& [d, e] : ds)
            for (int i = 0; i < e; ++i) push(cyclo_poly({dir.first, dir.second, d}).str());
    }
    if (!extra_.is_one()) push(extra_.str());
    for (const auto& s : order) {
        int e = grouped[s];
        den_parts.push_back("(" + s + ")" + (e > 1 ? "^" + std::to_string(e) : ""));
    }
    std::string den_str;
    if (dint_ != 1) den_str = dint_.get_str();
    for (const auto& p : den_parts) den_str += p;
    if (den_parts.size() + (dint_ != 1 ? 1 : 0) > 1) den_str = "(" + den_str + ")";

    // pull a monomial and small binomials out of the numerator for display
    PolyQT n = (binomials % 2 != 0) ? -num_ : num_;
    int mq = n.terms().front().dq, mt = n.terms().front().dt;
    for (const auto& tm : n.terms()) {
        mq = std::min(mq, tm.dq);
        mt = std::min(mt, tm.dt);
    }
    n = n.shifted(-mq, -mt);
    std::string tail;
    for (int s = 1; s <= 12 && !n.is_constant(); ++s)
        for (int a = 0; a <= s && !n.is_constant(); ++a) {
            int b = s - a;
            if (a > n.deg_q() || b > n.deg_t()) continue;
            const PolyQT f = binom_factor(a, b);
            int k = 0;
            PolyQT quo;
            while (!n.is_constant() && n.divide_exact(f, &quo)) {
                n = std::move(quo);
                ++k;
            }
            if (k > 0) tail += "(1-" + monomial_str(a, b) + ")" + (k > 1 ? "^" + std::to_string(k) : std::string());
        }
    std::string mono = (mq || mt) ? monomial_str(mq, mt) : "";
    std::string num_str;
    if (tail.empty() && mono.empty()) {
        num_str = n.terms().size() > 1 ? "(" + n.str() + ")" : n.str();
    } else if (n.is_one()) {
        num_str = mono + tail;
    } else if (n == PolyQT(-1)) {
        num_str = "-" + mono + tail;
    } else if (n.terms().size() == 1 && n.terms()[0].dq == 0 && n.terms()[0].dt == 0) {
        num_str = n.str() + mono + tail;
    } else {
        num_str = "(" + n.str() + ")" + mono + tail;
    }
    return num_str + "/" + den_str;
}

QTRat qt_arith(const QTRat& a, const QTRat& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
        case ArithOp::div:
            if (b.is_zero()) throw ArithmeticError("division by zero");
            return a / b;
    }
    throw std::invalid_argument("unknown op");
}

RatQ qt_specialize(const QTRat& r, const RatQ& q0, const RatQ& t0) { return r.eval(q0, t0); }

// --------------------------------------------------------------- QTRatSum

void QTRatSum::raise_to(const FactorMap& f, const IntZ& dint, const PolyQT& extra) {
    bool changed = false;
    for (const auto& [k, e] : f) {
        int& cur = fac_[k];
        if (e > cur) {
            num_ *= cyclo_poly(k).pow(e - cur);
            cur = e;
            changed = true;
        }
    }
    if (dint != dint_) {
        IntZ l;
        mpz_lcm(l.get_mpz_t(), dint_.get_mpz_t(), dint.get_mpz_t());
        if (l != dint_) {
            num_ = num_.scaled(l / dint_);
            dint_ = l;
        }
    }
    if (!extra.is_one() && !(extra == extra_)) {
        PolyQT quo;
        if (!extra_.divide_exact(extra, &quo)) {
            num_ *= extra;
            extra_ *= extra;
        }
    }
    if (changed) cofactor_cache_.clear();
}

PolyQT QTRatSum::cofactor(const FactorMap& f) const {
    auto it = cofactor_cache_.find(f);
    if (it != cofactor_cache_.end()) return it->second;
    PolyQT c(1);
    for (const auto& [k, e] : fac_) {
        auto jt = f.find(k);
        int have = jt == f.end() ? 0 : jt->second;
        if (e > have) c *= cyclo_poly(k).pow(e - have);
    }
    if (cofactor_cache_.size() > 256) cofactor_cache_.clear();
    cofactor_cache_.emplace(f, c);
    return c;
}

void QTRatSum::add(const QTRat& x) {
    if (x.is_zero()) return;
    raise_to(x.fac_, x.dint_, x.extra_);
    PolyQT scale = cofactor(x.fac_);
    if (x.dint_ != dint_) scale = scale.scaled(dint_ / x.dint_);
    if (!(x.extra_ == extra_)) {
        PolyQT quo;
        extra_.divide_exact(x.extra_, &quo);
        scale *= quo;
    }
    num_ += x.num_ * scale;
}

void QTRatSum::add(const QTRatSum& o) {
    QTRat x;
    x.num_ = o.num_;
    x.dint_ = o.dint_;
    x.fac_ = o.fac_;
    for (auto it = x.fac_.begin(); it != x.fac_.end();) it = it->second == 0 ? x.fac_.erase(it) : std::next(it);
    x.extra_ = o.extra_;
    add(x);
}

QTRat QTRatSum::value() const {
    QTRat r;
    r.num_ = num_;
    r.dint_ = dint_;
    for (const auto& [k, e] : fac_)
        if (e > 0) r.fac_.emplace(k, e);
    r.extra_ = extra_;
    r.normalize();
    return r;
}

// ----------------------------------------------------------- small helpers

PolyQT binom_factor(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("binom_factor exponents must be nonnegative");
    if (a == 0 && b == 0) throw ArithmeticError("binom_factor(0,0) is the zero polynomial");
    return PolyQT(1) - PolyQT::monomial(1, a, b);
}

PolyQT t_bracket(int k) {
    std::vector<PolyQT::Term> terms;
    for (int i = 0; i < k; ++i) terms.push_back({0, i, 1});
    return PolyQT::from_terms(std::move(terms));
}

PolyQT t_bracket_factorial(int m) {
    if (m < 0) throw std::invalid_argument("negative factorial");
    PolyQT r(1);
    for (int k = 2; k <= m; ++k) r *= t_bracket(k);
    return r;
}

QTRat gaussian_multinomial(int m, const std::vector<int>& parts) {
    int s = 0;
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("negative multinomial part");
        s += p;
    }
    if (s != m) throw std::invalid_argument("multinomial parts do not sum to m");
    Factored f;
    for (int k = 2; k <= m; ++k) f.mul_t_bracket(k);
    for (int p : parts)
        for (int k = 2; k <= p; ++k) f.mul_t_bracket(k, -1);
    return f.value();
}

// -------------------------------------------------------------- PolyAlpha

PolyAlpha::PolyAlpha(long c) {
    if (c != 0) c_.push_back(c);
}

PolyAlpha PolyAlpha::linear(long c0, long c1) {
    PolyAlpha p;
    p.c_ = {IntZ(c0), IntZ(c1)};
    p.trim();
    return p;
}

void PolyAlpha::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyAlpha& PolyAlpha::operator+=(const PolyAlpha& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

PolyAlpha& PolyAlpha::operator*=(const PolyAlpha& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<IntZ> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    c_ = std::move(r);
    trim();
    return *this;
}

std::string PolyAlpha::str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        IntZ a = abs(c_[i]);
        if (c_[i] < 0)
            s += "-";
        else if (!s.empty())
            s += "+";
        if (i == 0 || a != 1) s += a.get_str();
        if (i >= 1) s += "α";
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
}

// ------------------------------------------------------------------ XPoly

std::string exps_str(const Exps& e) {
    std::string s = "(";
    for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
    return s + ")";
}

std::vector<Exps> distinct_permutations(const std::vector<int>& mu, int n_vars) {
    if (static_cast<int>(mu.size()) > n_vars) return {};
    Exps e(mu);
    e.resize(n_vars, 0);
    std::sort(e.begin(), e.end());
    std::vector<Exps> out;
    do out.push_back(e);
    while (std::next_permutation(e.begin(), e.end()));
    return out;
}

XPoly& xpoly_accumulate(XPoly& acc, const Exps& e, const QTRat& c) {
    acc.add(e, c);
    return acc;
}

void XPolyAccumulator::add(const Exps& e, const QTRat& c) {
    if (static_cast<int>(e.size()) != n_vars_)
        throw std::invalid_argument("exponent vector length does not match n_vars");
    sums_[e].add(c);
}

void XPolyAccumulator::merge(const XPolyAccumulator& o) {
    for (const auto& [e, s] : o.sums_) sums_[e].add(s);
}

XPoly XPolyAccumulator::finish() const {
    XPoly p(n_vars_);
    for (const auto& [e, s] : sums_) {
        QTRat v = s.value();
        if (!v.is_zero()) p.set(e, std::move(v));
    }
    return p;
}

}  // namespace macd
