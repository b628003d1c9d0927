#include "macdonald/flipops.hpp"

#include <algorithm>

namespace macd {

namespace {

void require_compatible(const Partition& lam, int i) {
    if (!is_compatible(lam, i))
        throw std::invalid_argument("index " + std::to_string(i) + " is not compatible with " + lam.str() +
                                    " (columns i and i+1 must have equal height)");
}

struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

void swap_row(Filling& s, int i, int r) {
    Letter a = s.at(r, i);
    s.set(r, i, s.at(r, i + 1));
    s.set(r, i + 1, a);
}

// 2x2 window entries that cannot coincide in a non-attacking filling
void check_window(Letter a, Letter b, Letter c, Letter d) {
    if (a == b || c == d || a == d) throw InternalError("non-attacking window has coinciding entries");
}

}  // namespace

Filling t_swap_range(const Filling& s, int i, int lo, int hi) {
    require_compatible(s.shape, i);
    if (lo < 1 || hi > s.shape[i] || lo > hi)
        throw std::out_of_range("row range [" + std::to_string(lo) + "," + std::to_string(hi) +
                                "] is outside the columns");
    Filling r = s;
    for (int row = lo; row <= hi; ++row) swap_row(r, i, row);
    return r;
}

Filling apply_swap(const Filling& s, const SwapOp& op) { return t_swap_range(s, op.col, op.row_lo, op.row_hi); }

std::optional<SwapOp> tau_op(const Filling& s, int i) {
    require_compatible(s.shape, i);
    const int L = s.shape[i];
    int lo = 0;
    for (int r = 1; r <= L; ++r)
        if (s.at(r, i) != s.at(r, i + 1)) {
            lo = r;
            break;
        }
    if (lo == 0) return std::nullopt;
    for (int h = lo; h <= L; ++h) {
        Letter up_l = s.at_or_zero(h + 1, i), up_r = s.at_or_zero(h + 1, i + 1);
        if (Q(up_l, s.at(h, i), up_r) == Q(up_l, s.at(h, i + 1), up_r)) return SwapOp{i, lo, h};
    }
    throw InternalError("tau found no stopping row");
}

std::optional<SwapOp> rho_op(const Filling& s, int i) {
    require_compatible(s.shape, i);
    const int L = s.shape[i];
    int hi = 0;
    for (int r = L; r >= 1; --r)
        if (s.at(r, i) != s.at(r, i + 1)) {
            hi = r;
            break;
        }
    if (hi == 0) return std::nullopt;
    for (int h = hi; h >= 1; --h) {
        Letter lo_l = s.south(h, i), lo_r = s.south(h, i + 1);
        if (Q(s.at(h, i), lo_l, lo_r) == Q(s.at(h, i + 1), lo_l, lo_r)) return SwapOp{i, h, hi};
    }
    throw InternalError("rho found no stopping row");
}

Filling tau(const Filling& s, int i) {
    auto op = tau_op(s, i);
    return op ? apply_swap(s, *op) : s;
}

Filling rho(const Filling& s, int i) {
    auto op = rho_op(s, i);
    return op ? apply_swap(s, *op) : s;
}

PDSWord pds_of(const Perm& pi) {
    const int n = static_cast<int>(pi.size());
    Perm v = pi;
    std::vector<int> chosen;
    for (int k = n - 1; k >= 1; --k)
        for (int a = 1; a <= k; ++a)
            if (v[a - 1] > v[a]) {
                std::swap(v[a - 1], v[a]);
                chosen.push_back(a);
            }
    return PDSWord(chosen.rbegin(), chosen.rend());
}

Perm word_to_perm(const PDSWord& w, int n) {
    Perm p(n);
    for (int k = 0; k < n; ++k) p[k] = k + 1;
    for (int a : w) {
        if (a < 1 || a >= n) throw std::out_of_range("transposition index out of range");
        std::swap(p[a - 1], p[a]);
    }
    return p;
}

int perm_length(const Perm& pi) {
    int k = 0;
    for (std::size_t a = 0; a < pi.size(); ++a)
        for (std::size_t b = a + 1; b < pi.size(); ++b)
            if (pi[a] > pi[b]) ++k;
    return k;
}

namespace {

// (q^l t^A)^e (1-t) / (1 - q^l t^(A+1))
QTRat stop_prob(int l, int A, int e) {
    return Factored(1).mul_monomial(l * e, A * e).mul_binomial(0, 1).mul_binomial(l, A + 1, -1).value();
}

// t^(1-e) (1 - q^l t^A) / (1 - q^l t^(A+1))
QTRat continue_prob(int l, int A, int e) {
    return Factored(1).mul_monomial(0, 1 - e).mul_binomial(l, A).mul_binomial(l, A + 1, -1).value();
}

}  // namespace

OutcomeSet rho_tilde(const Filling& s, int i) {
    require_compatible(s.shape, i);
    require_quinv_nonattacking(s);
    const int L = s.shape[i];
    OutcomeSet out;
    Filling cur = s;
    QTRat p(1);
    for (int r = L;; --r) {
        Letter a = s.at(r, i), b = s.at(r, i + 1);
        swap_row(cur, i, r);
        if (r == 1) {
            out.push_back({cur, p});
            break;
        }
        Letter c = s.at(r - 1, i), d = s.at(r - 1, i + 1);
        check_window(a, b, c, d);
        if (a == c && b == d) continue;
        if (b == c) {
            out.push_back({cur, p});
            break;
        }
        if (b == d) continue;
        if (a == c) {
            int A = rarm(s.shape, {r, i + 1}) + 1;
            int l = L - r + 1;
            int e = Q(b, a, d);
            out.push_back({cur, p * stop_prob(l, A, e)});
            p *= continue_prob(l, A, e);
            continue;
        }
        if (Q(a, c, d) == Q(b, c, d)) {
            out.push_back({cur, p});
            break;
        }
    }
    return out;
}

OutcomeSet tau_tilde(const Filling& s, int i) {
    require_compatible(s.shape, i);
    require_inv_nonattacking(s);
    const int L = s.shape[i];
    OutcomeSet out;
    Filling cur = s;
    QTRat p(1);
    for (int r = 1;; ++r) {
        Letter a = s.at(r, i), b = s.at(r, i + 1);
        swap_row(cur, i, r);
        if (r == L) {
            out.push_back({cur, p});
            break;
        }
        Letter c = s.at(r + 1, i), d = s.at(r + 1, i + 1);
        check_window(a, b, c, d);
        if (a == c && b == d) continue;
        if (b == c) {
            out.push_back({cur, p});
            break;
        }
        if (b == d) continue;
        if (a == c) {
            int A = arm(s.shape, {r + 1, i + 1}) + 1;
            int l = L - r;
            int e = Q(a, b, d);
            out.push_back({cur, p * stop_prob(l, A, e)});
            p *= continue_prob(l, A, e);
            continue;
        }
        if (Q(c, a, d) == Q(c, b, d)) {
            out.push_back({cur, p});
            break;
        }
    }
    return out;
}

std::vector<int> chain_steps(const BorderWord& w, const Partition& lam, Side side) {
    BorderWord v = side == Side::quinv ? inc_lambda(w, lam) : dec_lambda(w, lam);
    Perm pi(w.size());
    for (auto [b, e] : lambda_blocks(lam))
        for (int j = b; j < e; ++j) {
            int pos = static_cast<int>(std::find(w.begin() + b, w.begin() + e, v[j]) - w.begin());
            pi[j] = pos + 1;
        }
    PDSWord word = pds_of(pi);
    return std::vector<int>(word.rbegin(), word.rend());
}

std::map<Filling, QTRat> chain_distribution(const Filling& sorted, const BorderWord& w, Side side) {
    const Partition& lam = sorted.shape;
    BorderWord start = side == Side::quinv ? top_border(sorted) : bottom_border(sorted);
    BorderWord want = side == Side::quinv ? inc_lambda(w, lam) : dec_lambda(w, lam);
    if (start != want) throw std::invalid_argument("starting filling is not sorted towards the requested border");
    std::map<Filling, QTRat> cur{{sorted, QTRat(1)}};
    BorderWord x = start;
    for (int i : chain_steps(w, lam, side)) {
        bool ok = side == Side::quinv ? x[i - 1] < x[i] : x[i - 1] > x[i];
        if (!ok) throw InternalError("chain step is not at an ascent/descent of the border");
        std::swap(x[i - 1], x[i]);
        std::map<Filling, QTRat> next;
        for (const auto& [f, p] : cur) {
            OutcomeSet outs = side == Side::quinv ? rho_tilde(f, i) : tau_tilde(f, i);
            for (const auto& o : outs) {
                auto it = next.find(o.filling);
                if (it == next.end())
                    next.emplace(o.filling, p * o.prob);
                else
                    it->second += p * o.prob;
            }
        }
        cur = std::move(next);
    }
    return cur;
}

QTRat chain_prob(const Filling& sorted, const Filling& target, Side side) {
    if (!(sorted.shape == target.shape)) throw std::invalid_argument("fillings have different shapes");
    BorderWord w = side == Side::quinv ? top_border(target) : bottom_border(target);
    auto dist = chain_distribution(sorted, w, side);
    auto it = dist.find(target);
    return it == dist.end() ? QTRat(0) : it->second;
}

}  // namespace macd
