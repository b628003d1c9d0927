#include "macdonald/mlq.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace macd {

namespace {

// strictly between a and b walking right from a on Z_n
bool cyclically_between(int a, int x, int b, int n) {
    int dx = ((x - a) % n + n) % n;
    int db = ((b - a) % n + n) % n;
    return dx > 0 && dx < db;
}

}  // namespace

MultilineQueue mlq_from_tableau(const Filling& s, int n) {
    require_quinv_nonattacking(s);
    if (!is_coquinv_sorted(s)) throw std::invalid_argument("filling is not coquinv-sorted");
    const Partition& lam = s.shape;
    Partition conj = conjugate(lam);
    MultilineQueue m{lam, n, {}};
    for (int r = 1; r <= conj.length(); ++r) {
        MLQRow row;
        for (int k = 1; k <= conj[r]; ++k) {
            int site = letter_value(s.at(r, k));
            if (site < 1 || site > n) throw std::invalid_argument("entry exceeds the number of columns");
            row.columns.push_back(site);
            if (r >= 2) row.pairs.push_back(letter_value(s.at(r - 1, k)));
            row.labels.push_back(lam[k]);
        }
        m.rows.push_back(std::move(row));
    }
    return m;
}

Filling tableau_from_mlq(const MultilineQueue& m) {
    const Partition& lam = m.shape;
    Partition conj = conjugate(lam);
    if (static_cast<int>(m.rows.size()) != conj.length())
        throw InconsistentPairings("inconsistent pairings: expected " + std::to_string(conj.length()) + " rows");
    std::vector<std::vector<int>> cols(lam.length());
    // tableau column of each particle, row by row
    std::vector<int> owner;
    for (int r = 1; r <= conj.length(); ++r) {
        const MLQRow& row = m.rows[r - 1];
        const std::size_t k = row.columns.size();
        if (static_cast<int>(k) != conj[r] || row.labels.size() != k || (r >= 2 && row.pairs.size() != k) ||
            (r == 1 && !row.pairs.empty()))
            throw InconsistentPairings("inconsistent pairings: row " + std::to_string(r) + " has the wrong size");
        std::set<int> sites(row.columns.begin(), row.columns.end());
        if (sites.size() != k) throw InconsistentPairings("inconsistent pairings: two particles share a site");
        std::vector<int> next(k);
        std::vector<bool> used(r >= 2 ? m.rows[r - 2].columns.size() : 0, false);
        for (std::size_t p = 0; p < k; ++p) {
            if (row.columns[p] < 1 || row.columns[p] > m.n)
                throw InconsistentPairings("inconsistent pairings: site outside the cylinder");
            if (r == 1) {
                next[p] = static_cast<int>(p);
            } else {
                const auto& below = m.rows[r - 2].columns;
                auto it = std::find(below.begin(), below.end(), row.pairs[p]);
                if (it == below.end())
                    throw InconsistentPairings("inconsistent pairings: no particle at the partner site");
                std::size_t j = it - below.begin();
                if (used[j]) throw InconsistentPairings("inconsistent pairings: partner paired twice");
                used[j] = true;
                next[p] = owner[j];
            }
            int c = next[p];
            if (row.labels[p] != lam[c + 1])
                throw InconsistentPairings("inconsistent pairings: label does not match the queue length");
            cols[c].push_back(letter_from_int(row.columns[p]));
        }
        owner = std::move(next);
    }
    Filling s(lam, std::move(cols));
    if (!is_quinv_nonattacking(s) || !is_coquinv_sorted(s))
        throw InconsistentPairings("inconsistent pairings: not a Martin pairing order");
    return s;
}

std::vector<PairingStat> pairing_stats(const MultilineQueue& m) {
    std::vector<PairingStat> out;
    const int n = m.n;
    for (std::size_t r = 2; r <= m.rows.size(); ++r) {
        const MLQRow& row = m.rows[r - 1];
        std::set<int> unlabeled(m.rows[r - 2].columns.begin(), m.rows[r - 2].columns.end());
        for (std::size_t k = 0; k < row.columns.size(); ++k) {
            int site = row.columns[k], partner = row.pairs[k];
            if (!unlabeled.count(partner))
                throw InconsistentPairings("inconsistent pairings: partner already labeled");
            bool trivial = site == partner;
            if (!trivial && unlabeled.count(site))
                throw InconsistentPairings("inconsistent pairings: skipped a particle directly below");
            int s = 0;
            if (!trivial)
                for (int u : unlabeled)
                    if (cyclically_between(site, u, partner, n)) ++s;
            unlabeled.erase(partner);
            PairingStat ps{static_cast<int>(r), site, partner, row.labels[k], trivial ? 0 : s,
                           static_cast<int>(unlabeled.size()), !trivial && site > partner, trivial};
            out.push_back(ps);
        }
    }
    return out;
}

QTRat wt_martin_t(const MultilineQueue& m) {
    Factored f(1);
    for (const PairingStat& p : pairing_stats(m)) {
        if (p.trivial) continue;
        f.mul_monomial(0, p.s).mul_binomial(0, 1).mul_binomial(0, p.f + 1, -1);
    }
    return f.value();
}

int mlq_maj(const MultilineQueue& m) {
    int maj = 0;
    for (const PairingStat& p : pairing_stats(m))
        if (p.wraps) maj += p.label - p.row + 1;
    return maj;
}

Weighted wt_martin_full(const MultilineQueue& m) {
    Exps x(m.n, 0);
    for (const MLQRow& row : m.rows)
        for (int c : row.columns) ++x[c - 1];
    Factored f(1);
    for (const PairingStat& p : pairing_stats(m)) {
        if (p.wraps) f.mul_monomial(p.label - p.row + 1, 0);
        if (p.trivial) continue;
        f.mul_monomial(0, p.s).mul_binomial(0, 1).mul_binomial(p.label - p.row + 1, p.f + 1, -1);
    }
    return {x, f.value()};
}

void enumerate_mlq(const Partition& lam, int n, const std::function<void(const MultilineQueue&)>& visit) {
    enumerate_fillings(lam, n, Filter::quinv_na_coquinv_sorted,
                       [&](const Filling& s) { visit(mlq_from_tableau(s, n)); });
}

std::vector<MultilineQueue> all_mlq(const Partition& lam, int n) {
    std::vector<MultilineQueue> out;
    enumerate_mlq(lam, n, [&](const MultilineQueue& m) { out.push_back(m); });
    return out;
}

XPoly build_P_mlq(const Partition& lam, int n, int threads) {
    auto add = [n](XPolyAccumulator& acc, const Filling& s) {
        Weighted w = wt_martin_full(mlq_from_tableau(s, n));
        acc.add(w.x, w.c);
    };
    if (threads <= 1) {
        XPolyAccumulator acc(n);
        enumerate_fillings(lam, n, Filter::quinv_na_coquinv_sorted, [&](const Filling& s) { add(acc, s); });
        return acc.finish();
    }
    std::vector<XPolyAccumulator> parts(prefix_count(lam, n), XPolyAccumulator(n));
    enumerate_parallel(lam, n, Filter::quinv_na_coquinv_sorted, threads,
                       [&](std::size_t k, const Filling& s) { add(parts[k], s); });
    XPolyAccumulator total(n);
    for (const auto& p : parts) total.merge(p);
    return total.finish();
}

std::vector<std::vector<int>> beta(const Composition& alpha) {
    std::vector<int> idx;
    for (std::size_t i = 0; i < alpha.size(); ++i)
        if (alpha[i] > 0) idx.push_back(static_cast<int>(i) + 1);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return alpha[a - 1] > alpha[b - 1]; });
    // every reordering within runs of equal parts
    std::vector<std::vector<int>> out{{}};
    for (std::size_t b = 0; b < idx.size();) {
        std::size_t e = b;
        while (e < idx.size() && alpha[idx[e] - 1] == alpha[idx[b] - 1]) ++e;
        std::vector<int> run(idx.begin() + b, idx.begin() + e);
        std::vector<std::vector<int>> grown;
        for (const auto& w : out) {
            std::sort(run.begin(), run.end());
            do {
                auto v = w;
                v.insert(v.end(), run.begin(), run.end());
                grown.push_back(std::move(v));
            } while (std::next_permutation(run.begin(), run.end()));
        }
        out = std::move(grown);
        b = e;
    }
    std::sort(out.begin(), out.end());
    return out;
}

XPoly f_alpha(const Composition& alpha, int n_vars) {
    if (static_cast<int>(alpha.size()) != n_vars)
        throw std::invalid_argument("composition length must equal the number of variables");
    for (int a : alpha)
        if (a < 0) throw std::invalid_argument("composition has a negative part");
    Partition lam(sort_comp(alpha));
    XPolyAccumulator acc(n_vars);
    if (lam.length() == 0) {
        acc.add(Exps(n_vars, 0), QTRat(1));
        return acc.finish();
    }
    enumerate_fillings(lam, n_vars, Filter::quinv_na_coquinv_sorted, [&](const Filling& s) {
        for (int k = 1; k <= lam.length(); ++k)
            if (alpha[letter_value(s.at(1, k)) - 1] != lam[k]) return;
        Weighted w = wt_P_quinv(s, n_vars);
        acc.add(w.x, w.c);
    });
    return acc.finish();
}

std::string render_mlq(const MultilineQueue& m) {
    std::ostringstream os;
    for (std::size_t r = m.rows.size(); r >= 1; --r) {
        const MLQRow& row = m.rows[r - 1];
        std::vector<std::string> cell(m.n, ".");
        for (std::size_t k = 0; k < row.columns.size(); ++k) cell[row.columns[k] - 1] = std::to_string(row.labels[k]);
        os << "row " << r << " |";
        for (const auto& c : cell) os << ' ' << (c.size() < 2 ? " " : "") << c;
        os << " |\n";
    }
    os << "       ";
    for (int c = 1; c <= m.n; ++c) os << ' ' << (c < 10 ? " " : "") << c;
    os << '\n';
    for (const PairingStat& p : pairing_stats(m)) {
        os << "  row " << p.row << ' ' << p.site << " -> " << p.partner << " label " << p.label;
        if (p.trivial)
            os << " trivial";
        else
            os << " s=" << p.s << " f=" << p.f << (p.wraps ? " wraps" : "");
        os << '\n';
    }
    return os.str();
}

}  // namespace macd
