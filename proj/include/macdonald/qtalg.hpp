#ifndef MACDONALD_QTALG_HPP
#define MACDONALD_QTALG_HPP

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace macd {

using IntZ = mpz_class;
using RatQ = mpq_class;

struct ArithmeticError : std::domain_error {
    using std::domain_error::domain_error;
};

// Sparse polynomial in q,t over Z. Terms are kept sorted by (dq, dt)
// ascending with no zero coefficients, so the leading term is terms().back().
class PolyQT {
public:
    struct Term {
        int dq;
        int dt;
        IntZ c;
    };

    PolyQT() = default;
    PolyQT(long c);
    explicit PolyQT(const IntZ& c);
    static PolyQT monomial(const IntZ& c, int dq, int dt);
    static PolyQT from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    int deg_q() const;
    int deg_t() const;
    const Term& leading() const { return terms_.back(); }
    IntZ coeff(int dq, int dt) const;
    IntZ content() const;

    PolyQT operator-() const;
    PolyQT& operator+=(const PolyQT& o);
    PolyQT& operator-=(const PolyQT& o);
    PolyQT& operator*=(const PolyQT& o);
    friend PolyQT operator+(PolyQT a, const PolyQT& b) { return a += b; }
    friend PolyQT operator-(PolyQT a, const PolyQT& b) { return a -= b; }
    friend PolyQT operator*(const PolyQT& a, const PolyQT& b);
    friend bool operator==(const PolyQT& a, const PolyQT& b);
    friend std::strong_ordering operator<=>(const PolyQT& a, const PolyQT& b);

    PolyQT scaled(const IntZ& k) const;
    PolyQT divexact(const IntZ& k) const;
    PolyQT shifted(int dq, int dt) const;
    PolyQT pow(unsigned e) const;
    // Exact division; returns false (leaving *quot untouched) when g does not divide.
    bool divide_exact(const PolyQT& g, PolyQT* quot) const;
    RatQ eval(const RatQ& q, const RatQ& t) const;
    std::string str() const;

private:
    std::vector<Term> terms_;
};

// Phi_d(q^a t^b) with gcd(a,b) = 1. These are the irreducible pieces of
// 1 - q^A t^B, which is all that ever shows up in a denominator here.
struct CycloKey {
    int a;
    int b;
    int d;
    auto operator<=>(const CycloKey&) const = default;
};

using FactorMap = std::map<CycloKey, int>;

const PolyQT& cyclo_poly(const CycloKey& k);
// 1 - q^a t^b = -prod Phi_d(m) over the returned keys.
std::vector<CycloKey> binomial_keys(int a, int b);

class QTRat;

// c * q^dq t^dt * prod Phi^e with signed exponents; a convenient way to
// assemble products of binomials without any polynomial division.
class Factored {
public:
    Factored() = default;
    explicit Factored(long c) : num_(c) {}
    Factored& mul_int(const IntZ& k);
    Factored& div_int(const IntZ& k);
    Factored& mul_monomial(int dq, int dt);
    // multiplies by (1 - q^a t^b)^e, e may be negative
    Factored& mul_binomial(int a, int b, int e = 1);
    Factored& mul_t_bracket(int k, int e = 1);
    Factored& operator*=(const Factored& o);
    QTRat value() const;

private:
    IntZ num_ = 1;
    IntZ den_ = 1;
    int dq_ = 0;
    int dt_ = 0;
    FactorMap exps_;
};

// Exact rational function in q,t.  den = den_int * extra * prod Phi^e with
// den_int > 0; extra is 1 unless something other than a product of
// binomials was divided by.  With extra == 1 the form is canonical.
class QTRat {
public:
    QTRat() = default;
    QTRat(long c) : num_(c) {}
    QTRat(const PolyQT& p) : num_(p) {}
    QTRat(const PolyQT& num, const PolyQT& den);

    static QTRat binomial(int a, int b);
    static QTRat from_parts(PolyQT num, IntZ den_int, FactorMap factors, PolyQT extra);

    const PolyQT& num() const { return num_; }
    PolyQT den() const;
    const IntZ& den_int() const { return dint_; }
    const FactorMap& den_factors() const { return fac_; }
    const PolyQT& den_extra() const { return extra_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return dint_ == 1 && fac_.empty() && extra_.is_one(); }

    QTRat operator-() const;
    QTRat& operator+=(const QTRat& o);
    QTRat& operator-=(const QTRat& o) { return *this += -o; }
    QTRat& operator*=(const QTRat& o);
    QTRat& operator/=(const QTRat& o);
    friend QTRat operator+(QTRat a, const QTRat& b) { return a += b; }
    friend QTRat operator-(QTRat a, const QTRat& b) { return a -= b; }
    friend QTRat operator*(QTRat a, const QTRat& b) { return a *= b; }
    friend QTRat operator/(QTRat a, const QTRat& b) { return a /= b; }
    friend bool operator==(const QTRat& a, const QTRat& b);

    QTRat inverse() const;
    RatQ eval(const RatQ& q, const RatQ& t) const;
    // factored display, e.g. (1+q)(1-t)/(1-qt)
    std::string str() const;

private:
    friend class QTRatSum;
    friend class Factored;
    void normalize();
    PolyQT num_;
    IntZ dint_ = 1;
    FactorMap fac_;
    PolyQT extra_ = PolyQT(1);
};

enum class ArithOp { add, sub, mul, div };
QTRat qt_arith(const QTRat& a, const QTRat& b, ArithOp op);
RatQ qt_specialize(const QTRat& r, const RatQ& q0, const RatQ& t0);

// Running sum over a growing common denominator; normalizes only in value().
class QTRatSum {
public:
    void add(const QTRat& x);
    void add(const QTRatSum& o);
    QTRat value() const;
    bool empty() const { return num_.is_zero(); }

private:
    void raise_to(const FactorMap& f, const IntZ& dint, const PolyQT& extra);
    PolyQT cofactor(const FactorMap& f) const;
    PolyQT num_;
    IntZ dint_ = 1;
    FactorMap fac_;
    PolyQT extra_ = PolyQT(1);
    mutable std::map<FactorMap, PolyQT> cofactor_cache_;
};

PolyQT binom_factor(int a, int b);
PolyQT t_bracket(int k);
PolyQT t_bracket_factorial(int m);
QTRat gaussian_multinomial(int m, const std::vector<int>& parts);

// Univariate polynomial in alpha.
class PolyAlpha {
public:
    PolyAlpha() = default;
    PolyAlpha(long c);
    static PolyAlpha linear(long c0, long c1);
    const std::vector<IntZ>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    PolyAlpha& operator+=(const PolyAlpha& o);
    PolyAlpha& operator*=(const PolyAlpha& o);
    friend PolyAlpha operator+(PolyAlpha a, const PolyAlpha& b) { return a += b; }
    friend PolyAlpha operator*(PolyAlpha a, const PolyAlpha& b) { return a *= b; }
    friend bool operator==(const PolyAlpha& a, const PolyAlpha& b) { return a.c_ == b.c_; }
    std::string str() const;

private:
    void trim();
    std::vector<IntZ> c_;
};

using Exps = std::vector<int>;

template <class C>
class XPolyT {
public:
    XPolyT() = default;
    explicit XPolyT(int n_vars) : n_vars_(n_vars) {
        if (n_vars < 1) throw std::invalid_argument("XPoly needs at least one variable");
    }
    int n_vars() const { return n_vars_; }
    const std::map<Exps, C>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Exps& e, const C& c) {
        check(e);
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    void set(const Exps& e, C c) {
        check(e);
        if (c.is_zero())
            terms_.erase(e);
        else
            terms_[e] = std::move(c);
    }
    C coeff(const Exps& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? C(0) : it->second;
    }
    XPolyT& operator+=(const XPolyT& o) {
        for (const auto& [e, c] : o.terms_) add(e, c);
        return *this;
    }
    XPolyT scaled(const C& k) const {
        XPolyT r(n_vars_);
        for (const auto& [e, c] : terms_) r.add(e, c * k);
        return r;
    }
    friend bool operator==(const XPolyT& a, const XPolyT& b) {
        return a.n_vars_ == b.n_vars_ && a.terms_ == b.terms_;
    }

private:
    void check(const Exps& e) const {
        if (static_cast<int>(e.size()) != n_vars_)
            throw std::invalid_argument("exponent vector length does not match n_vars");
    }
    int n_vars_ = 1;
    std::map<Exps, C> terms_;
};

using XPoly = XPolyT<QTRat>;
using JackPoly = XPolyT<PolyAlpha>;

XPoly& xpoly_accumulate(XPoly& acc, const Exps& e, const QTRat& c);

// Accumulates many terms per monomial without normalizing until finish().
class XPolyAccumulator {
public:
    explicit XPolyAccumulator(int n_vars) : n_vars_(n_vars) {}
    void add(const Exps& e, const QTRat& c);
    void merge(const XPolyAccumulator& o);
    XPoly finish() const;

private:
    int n_vars_;
    std::map<Exps, QTRatSum> sums_;
};

// Partitions ordered largest-first (lexicographically descending).
template <class C>
using MSymT = std::map<std::vector<int>, C, std::greater<std::vector<int>>>;
using MSymExpansion = MSymT<QTRat>;

struct SymmetryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string exps_str(const Exps& e);
std::vector<Exps> distinct_permutations(const std::vector<int>& mu, int n_vars);

template <class C>
MSymT<C> xpoly_to_msym(const XPolyT<C>& p) {
    MSymT<C> out;
    std::map<std::vector<int>, std::vector<const std::pair<const Exps, C>*>> groups;
    for (const auto& term : p.terms()) {
        std::vector<int> mu;
        for (int x : term.first)
            if (x > 0) mu.push_back(x);
        std::sort(mu.begin(), mu.end(), std::greater<int>());
        groups[mu].push_back(&term);
    }
    for (const auto& [mu, members] : groups) {
        const Exps& e0 = members.front()->first;
        const C& c0 = members.front()->second;
        for (const Exps& e : distinct_permutations(mu, p.n_vars())) {
            auto it = p.terms().find(e);
            if (it == p.terms().end())
                throw SymmetryError("not symmetric: " + exps_str(e0) + " present but " +
                                    exps_str(e) + " missing");
            if (!(it->second == c0))
                throw SymmetryError("not symmetric: coefficients of " + exps_str(e0) +
                                    " and " + exps_str(e) + " differ");
        }
        out.emplace(mu, c0);
    }
    return out;
}

template <class C>
XPolyT<C> msym_to_xpoly(const MSymT<C>& m, int n_vars) {
    XPolyT<C> p(n_vars);
    for (const auto& [mu, c] : m) {
        if (static_cast<int>(mu.size()) > n_vars) continue;
        for (const Exps& e : distinct_permutations(mu, n_vars)) p.add(e, c);
    }
    return p;
}

}  // namespace macd

#endif
