#include <exception>
#include <mutex>

#include "macdonald/fillings.hpp"

namespace macd {

namespace {

struct Rules {
    bool quinv_na = false;
    bool inv_na = false;
    bool top_inc = false;
    int bot_order = 0;  // -1 decreasing, +1 increasing
    bool post = false;  // needs the whole filling
};

Rules rules_for(Filter f) {
    Rules r;
    switch (f) {
        case Filter::all:
            break;
        case Filter::inv_na:
            r.inv_na = true;
            break;
        case Filter::quinv_na:
            r.quinv_na = true;
            break;
        case Filter::inv_na_coinv_sorted:
            r.inv_na = true;
            r.bot_order = -1;
            break;
        case Filter::inv_na_coinv_sorted_increasing:
            r.inv_na = true;
            r.bot_order = 1;
            break;
        case Filter::quinv_na_coquinv_sorted:
            r.quinv_na = true;
            r.top_inc = true;
            break;
        case Filter::inv_sorted:
        case Filter::quinv_sorted:
            r.post = true;
            break;
    }
    return r;
}

class Backtracker {
public:
    Backtracker(const Partition& lam, int n, Filter f, const FillingVisitor& visit)
        : lam_(lam), n_(n), filter_(f), rules_(rules_for(f)), visit_(visit) {
        std::vector<std::vector<Letter>> cols;
        for (int p : lam.parts) cols.emplace_back(p, plain(1));
        s_ = Filling(lam, cols);
        for (int c = 1; c <= lam.length(); ++c)
            for (int r = 1; r <= lam[c]; ++r) order_.push_back({r, c});
    }

    void run_from(std::size_t k) {
        if (k == order_.size()) {
            if (!rules_.post || passes(s_, filter_)) visit_(s_);
            return;
        }
        auto [r, c] = order_[k];
        for (int v = 1; v <= n_; ++v) {
            Letter a = plain(v);
            if (!allowed(r, c, a)) continue;
            s_.set(r, c, a);
            run_from(k + 1);
        }
    }

    // Column 1 is fixed from the base-n digits of `prefix`, row 1 most
    // significant, which matches the serial visiting order.
    void run_prefix(std::size_t prefix) {
        int h = lam_[1];
        for (int r = h; r >= 1; --r) {
            s_.set(r, 1, plain(static_cast<int>(prefix % n_) + 1));
            prefix /= n_;
        }
        run_from(static_cast<std::size_t>(h));
    }

private:
    bool allowed(int r, int c, Letter a) const {
        if (c == 1) return true;
        if (rules_.quinv_na) {
            for (int i = 1; i < c; ++i) {
                if (s_.at(r, i) == a) return false;
                if (r + 1 <= lam_[i] && s_.at(r + 1, i) == a) return false;
            }
        }
        if (rules_.inv_na) {
            for (int i = 1; i < c; ++i) {
                if (s_.at(r, i) == a) return false;
                if (r >= 2 && s_.at(r - 1, i) == a) return false;
            }
        }
        if (rules_.top_inc && r == lam_[c] && lam_[c - 1] == lam_[c] && !(s_.at(r, c - 1) < a)) return false;
        if (rules_.bot_order != 0 && r == 1 && lam_[c - 1] == lam_[c]) {
            Letter left = s_.at(1, c - 1);
            if (rules_.bot_order < 0 ? !(left > a) : !(left < a)) return false;
        }
        return true;
    }

    const Partition& lam_;
    int n_;
    Filter filter_;
    Rules rules_;
    const FillingVisitor& visit_;
    Filling s_;
    std::vector<Cell> order_;
};

}  // namespace

void enumerate_fillings(const Partition& lam, int n_vars, Filter f, const FillingVisitor& visit) {
    if (n_vars < 1) throw std::invalid_argument("n_vars must be at least 1");
    if (lam.empty()) return;
    Backtracker bt(lam, n_vars, f, visit);
    bt.run_from(0);
}

std::vector<Filling> all_fillings(const Partition& lam, int n_vars, Filter f) {
    std::vector<Filling> out;
    enumerate_fillings(lam, n_vars, f, [&](const Filling& s) { out.push_back(s); });
    return out;
}

std::size_t prefix_count(const Partition& lam, int n_vars) {
    if (n_vars < 1) throw std::invalid_argument("n_vars must be at least 1");
    std::size_t k = 1;
    for (int r = 0; r < lam[1]; ++r) k *= static_cast<std::size_t>(n_vars);
    return lam.empty() ? 0 : k;
}

void enumerate_prefix(const Partition& lam, int n_vars, Filter f, std::size_t prefix, const FillingVisitor& visit) {
    if (prefix >= prefix_count(lam, n_vars)) throw std::out_of_range("prefix index out of range");
    Backtracker bt(lam, n_vars, f, visit);
    bt.run_prefix(prefix);
}

void enumerate_parallel(const Partition& lam, int n_vars, Filter f, int threads,
                        const std::function<void(std::size_t, const Filling&)>& visit) {
    const long long np = static_cast<long long>(prefix_count(lam, n_vars));
    if (threads < 1) threads = 1;
    std::exception_ptr err;
    std::mutex err_mu;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long long k = 0; k < np; ++k) {
        try {
            auto idx = static_cast<std::size_t>(k);
            enumerate_prefix(lam, n_vars, f, idx, [&](const Filling& s) { visit(idx, s); });
        } catch (...) {
            std::lock_guard<std::mutex> g(err_mu);
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
}

void enumerate_superfillings(const Partition& lam, int n_vars, Filter f, const FillingVisitor& visit) {
    int cells = lam.size();
    if (cells > 24) throw std::invalid_argument("too many cells for super-filling enumeration");
    enumerate_fillings(lam, n_vars, f, [&](const Filling& base) {
        for (unsigned long mask = 0; mask < (1ul << cells); ++mask) {
            Filling s = base;
            int bit = 0;
            for (auto& col : s.cols)
                for (Letter& a : col) {
                    if (mask >> bit & 1ul) a |= 1;
                    ++bit;
                }
            visit(s);
        }
    });
}

}  // namespace macd
