#include "macdonald/shapes.hpp"

#include <sstream>
#include <stdexcept>

namespace macd {

namespace {

void check_partition(const std::vector<int>& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && p[i] > p[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

}  // namespace

Partition::Partition(std::initializer_list<int> p) : parts(p) { check_partition(parts); }

Partition::Partition(std::vector<int> p) : parts(std::move(p)) { check_partition(parts); }

int Partition::size() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
}

std::string Partition::str() const {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
    return s;
}

std::string cell_str(const Cell& u) { return "(" + std::to_string(u.row) + "," + std::to_string(u.col) + ")"; }

Partition parse_partition(const std::string& s) {
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t a = tok.find_first_not_of(" \t");
        std::size_t b = tok.find_last_not_of(" \t");
        if (a == std::string::npos) throw std::invalid_argument("empty part in partition \"" + s + "\"");
        tok = tok.substr(a, b - a + 1);
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad partition \"" + s + "\"");
        }
        if (used != tok.size()) throw std::invalid_argument("bad partition \"" + s + "\"");
        parts.push_back(v);
    }
    return Partition(parts);
}

Partition conjugate(const Partition& lam) {
    std::vector<int> c;
    for (int j = 1; j <= lam[1]; ++j) {
        int k = 0;
        for (int p : lam.parts)
            if (p >= j) ++k;
        c.push_back(k);
    }
    return Partition(c);
}

int n_stat(const Partition& lam) {
    int n = 0;
    for (int c : conjugate(lam).parts) n += c * (c - 1) / 2;
    return n;
}

bool contains(const Partition& lam, const Cell& u) {
    return u.col >= 1 && u.col <= lam.length() && u.row >= 1 && u.row <= lam[u.col];
}

static void require_cell(const Partition& lam, const Cell& u) {
    if (!contains(lam, u))
        throw std::out_of_range("cell " + cell_str(u) + " is not in the diagram of " + lam.str());
}

int leg(const Partition& lam, const Cell& u) {
    require_cell(lam, u);
    return lam[u.col] - u.row;
}

int arm(const Partition& lam, const Cell& u) {
    require_cell(lam, u);
    return conjugate(lam)[u.row] - u.col;
}

int rarm(const Partition& lam, const Cell& u) {
    require_cell(lam, u);
    if (u.row < 2) throw std::out_of_range("rarm is undefined in the bottom row");
    return conjugate(lam)[u.row - 1] - u.col;
}

std::vector<int> compatible_indices(const Partition& lam) {
    std::vector<int> out;
    for (int i = 1; i < lam.length(); ++i)
        if (lam[i] == lam[i + 1]) out.push_back(i);
    return out;
}

bool is_compatible(const Partition& lam, int i) { return i >= 1 && i < lam.length() && lam[i] == lam[i + 1]; }

std::vector<int> part_multiplicities(const Partition& lam) {
    std::vector<int> m;
    for (int i = 1; i <= lam.length(); ++i) {
        if (i > 1 && lam[i] == lam[i - 1])
            ++m.back();
        else
            m.push_back(1);
    }
    return m;
}

PolyQT perm_lambda(const Partition& lam) {
    PolyQT r(1);
    for (int m : part_multiplicities(lam)) r *= t_bracket_factorial(m);
    return r;
}

Partition sort_comp(const Composition& a) {
    std::vector<int> p;
    for (int x : a) {
        if (x < 0) throw std::invalid_argument("composition parts must be nonnegative");
        if (x > 0) p.push_back(x);
    }
    std::sort(p.begin(), p.end(), std::greater<int>());
    return Partition(p);
}

Composition inc_comp(const Composition& a) {
    Composition c = a;
    std::sort(c.begin(), c.end());
    return c;
}

bool dominates(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size()) return false;
    int sl = 0, sm = 0;
    for (int k = 1; k <= std::max(lam.length(), mu.length()); ++k) {
        sl += lam[k];
        sm += mu[k];
        if (sm > sl) return false;
    }
    return true;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int maxp) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, maxp); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<Cell> cells_of(const Partition& lam) {
    std::vector<Cell> out;
    for (int r = 1; r <= lam[1]; ++r)
        for (int c = 1; c <= lam.length() && lam[c] >= r; ++c) out.push_back({r, c});
    return out;
}

}  // namespace macd
