#include "macdonald/fillings.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "macdonald/flipops.hpp"

namespace macd {

Letter letter_from_int(int v) {
    if (v == 0) throw std::invalid_argument("entries must be nonzero (negative means barred)");
    return v > 0 ? plain(v) : barred(-v);
}

int letter_to_int(Letter a) {
    if (is_sentinel(a)) throw std::invalid_argument("sentinel letter has no integer form");
    return is_barred(a) ? -letter_value(a) : letter_value(a);
}

std::string letter_str(Letter a) {
    if (a == ZERO) return "0";
    if (a == INFINITY_LETTER) return "inf";
    return std::to_string(letter_to_int(a));
}

Filling::Filling(Partition lam, std::vector<std::vector<Letter>> c) : shape(std::move(lam)), cols(std::move(c)) {
    if (static_cast<int>(cols.size()) != shape.length())
        throw std::invalid_argument("number of columns does not match the partition");
    for (int j = 1; j <= shape.length(); ++j) {
        if (static_cast<int>(cols[j - 1].size()) != shape[j])
            throw std::invalid_argument("column " + std::to_string(j) + " has " +
                                        std::to_string(cols[j - 1].size()) + " entries, expected " +
                                        std::to_string(shape[j]));
        for (Letter a : cols[j - 1])
            if (is_sentinel(a) || a < 0) throw std::invalid_argument("fillings cannot contain sentinel letters");
    }
}

Filling Filling::from_ints(const std::vector<std::vector<int>>& columns) {
    std::vector<int> heights;
    std::vector<std::vector<Letter>> cols;
    for (const auto& col : columns) {
        heights.push_back(static_cast<int>(col.size()));
        std::vector<Letter> c;
        for (int v : col) c.push_back(letter_from_int(v));
        cols.push_back(std::move(c));
    }
    return Filling(Partition(heights), std::move(cols));
}

Letter Filling::at_or_zero(int r, int c) const { return r > shape[c] ? ZERO : at(r, c); }

bool Filling::is_plain() const {
    for (const auto& col : cols)
        for (Letter a : col)
            if (is_barred(a)) return false;
    return true;
}

Filling Filling::abs() const {
    Filling r = *this;
    for (auto& col : r.cols)
        for (Letter& a : col) a &= ~1;
    return r;
}

Filling parse_filling_text(const std::string& text) {
    std::vector<std::vector<int>> rows;  // top first
    std::string normalized = text;
    std::replace(normalized.begin(), normalized.end(), '/', '\n');
    std::istringstream in(normalized);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<int> row;
        std::string tok;
        while (ls >> tok) {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad tableau entry \"" + tok + "\"");
            }
            if (used != tok.size()) throw std::invalid_argument("bad tableau entry \"" + tok + "\"");
            row.push_back(v);
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("empty tableau");
    for (std::size_t k = 1; k < rows.size(); ++k)
        if (rows[k].size() < rows[k - 1].size())
            throw std::invalid_argument("tableau rows must not get shorter going down");
    int ncols = static_cast<int>(rows.back().size());
    std::vector<std::vector<int>> columns(ncols);
    for (auto it = rows.rbegin(); it != rows.rend(); ++it)
        for (std::size_t c = 0; c < it->size(); ++c) columns[c].push_back((*it)[c]);
    return Filling::from_ints(columns);
}

static std::vector<std::string> row_strings(const Filling& s) {
    std::vector<std::string> out;
    Partition conj = conjugate(s.shape);
    for (int r = s.shape[1]; r >= 1; --r) {
        std::string line;
        for (int c = 1; c <= conj[r]; ++c) line += (c > 1 ? " " : "") + letter_str(s.at(r, c));
        out.push_back(line);
    }
    return out;
}

std::string filling_to_text(const Filling& s) {
    std::string out;
    for (const auto& row : row_strings(s)) out += row + "\n";
    return out;
}

std::string filling_to_line(const Filling& s) {
    std::string out;
    for (const auto& row : row_strings(s)) out += (out.empty() ? "" : " / ") + row;
    return out;
}

int maj(const Filling& s) {
    int m = 0;
    for (int c = 1; c <= s.shape.length(); ++c)
        for (int r = 2; r <= s.shape[c]; ++r)
            if (I(s.at(r, c), s.at(r - 1, c)) == 1) m += s.shape[c] - r + 1;
    return m;
}

std::vector<Triple> triples(const Partition& lam, TripleKind kind) {
    std::vector<Triple> out;
    for (int r = 1; r <= lam[1]; ++r)
        for (int i = 1; i <= lam.length() && lam[i] >= r; ++i)
            for (int j = i + 1; j <= lam.length() && lam[j] >= r; ++j) {
                if (kind == TripleKind::gamma)
                    out.push_back({{r, i}, {r - 1, i}, {r, j}, r == 1});
                else
                    out.push_back({{r + 1, i}, {r, i}, {r, j}, lam[i] == r});
            }
    return out;
}

std::array<Letter, 3> triple_letters(const Filling& s, const Triple& tr, TripleKind kind) {
    if (kind == TripleKind::gamma)
        return {s.at(tr.x), tr.degenerate ? INFINITY_LETTER : s.at(tr.y), s.at(tr.z)};
    return {tr.degenerate ? ZERO : s.at(tr.x), s.at(tr.y), s.at(tr.z)};
}

int inv(const Filling& s) {
    int k = 0;
    for (const Triple& tr : triples(s.shape, TripleKind::gamma)) {
        auto [a, b, c] = triple_letters(s, tr, TripleKind::gamma);
        if (Q(a, b, c) == 0) ++k;
    }
    return k;
}

int coinv(const Filling& s) { return n_stat(s.shape) - inv(s); }

int quinv(const Filling& s) {
    int k = 0;
    for (const Triple& tr : triples(s.shape, TripleKind::L)) {
        auto [a, b, c] = triple_letters(s, tr, TripleKind::L);
        if (Q(a, b, c) == 0) ++k;
    }
    return k;
}

int coquinv(const Filling& s) { return n_stat(s.shape) - quinv(s); }

// Attacks are judged on absolute values, so super fillings are handled too.
std::optional<std::pair<Cell, Cell>> find_quinv_attack(const Filling& s) {
    const Partition& lam = s.shape;
    for (int j = 2; j <= lam.length(); ++j)
        for (int r = 1; r <= lam[j]; ++r) {
            int v = letter_value(s.at(r, j));
            for (int i = 1; i < j; ++i) {
                if (letter_value(s.at(r, i)) == v) return std::make_pair(Cell{r, i}, Cell{r, j});
                if (r + 1 <= lam[i] && letter_value(s.at(r + 1, i)) == v)
                    return std::make_pair(Cell{r + 1, i}, Cell{r, j});
            }
        }
    return std::nullopt;
}

std::optional<std::pair<Cell, Cell>> find_inv_attack(const Filling& s) {
    const Partition& lam = s.shape;
    for (int j = 2; j <= lam.length(); ++j)
        for (int r = 1; r <= lam[j]; ++r) {
            int v = letter_value(s.at(r, j));
            for (int i = 1; i < j; ++i) {
                if (letter_value(s.at(r, i)) == v) return std::make_pair(Cell{r, i}, Cell{r, j});
                if (r >= 2 && letter_value(s.at(r - 1, i)) == v)
                    return std::make_pair(Cell{r - 1, i}, Cell{r, j});
            }
        }
    return std::nullopt;
}

bool is_quinv_nonattacking(const Filling& s) { return !find_quinv_attack(s); }
bool is_inv_nonattacking(const Filling& s) { return !find_inv_attack(s); }

void require_quinv_nonattacking(const Filling& s) {
    if (auto p = find_quinv_attack(s))
        throw NotNonAttacking("not quinv-non-attacking: cells " + cell_str(p->first) + "," + cell_str(p->second));
}

void require_inv_nonattacking(const Filling& s) {
    if (auto p = find_inv_attack(s))
        throw NotNonAttacking("not inv-non-attacking: cells " + cell_str(p->first) + "," + cell_str(p->second));
}

BorderWord top_border(const Filling& s) {
    BorderWord w;
    for (int c = 1; c <= s.shape.length(); ++c) w.push_back(letter_to_int(s.at(s.shape[c], c)));
    return w;
}

BorderWord bottom_border(const Filling& s) {
    BorderWord w;
    for (int c = 1; c <= s.shape.length(); ++c) w.push_back(letter_to_int(s.at(1, c)));
    return w;
}

std::vector<std::pair<int, int>> lambda_blocks(const Partition& lam) {
    std::vector<std::pair<int, int>> out;
    int b = 0;
    for (int k = 1; k <= lam.length(); ++k)
        if (k == lam.length() || lam.parts[k] != lam.parts[b]) {
            out.emplace_back(b, k);
            b = k;
        }
    return out;
}

static void check_border(const BorderWord& w, const Partition& lam) {
    if (static_cast<int>(w.size()) != lam.length())
        throw std::invalid_argument("border word length does not match the number of columns");
    for (auto [b, e] : lambda_blocks(lam))
        for (int i = b; i < e; ++i)
            for (int j = i + 1; j < e; ++j)
                if (w[i] == w[j])
                    throw std::invalid_argument("border word repeats " + std::to_string(w[i]) +
                                                " within a block of equal column heights");
}

BorderWord inc_lambda(const BorderWord& w, const Partition& lam) {
    check_border(w, lam);
    BorderWord r = w;
    for (auto [b, e] : lambda_blocks(lam)) std::sort(r.begin() + b, r.begin() + e);
    return r;
}

BorderWord dec_lambda(const BorderWord& w, const Partition& lam) {
    check_border(w, lam);
    BorderWord r = w;
    for (auto [b, e] : lambda_blocks(lam)) std::sort(r.begin() + b, r.begin() + e, std::greater<int>());
    return r;
}

int ell_lambda(const BorderWord& w, const Partition& lam) {
    check_border(w, lam);
    int k = 0;
    for (auto [b, e] : lambda_blocks(lam))
        for (int i = b; i < e; ++i)
            for (int j = i + 1; j < e; ++j)
                if (w[i] > w[j]) ++k;
    return k;
}

int ell_prime_lambda(const BorderWord& w, const Partition& lam) {
    check_border(w, lam);
    int k = 0;
    for (auto [b, e] : lambda_blocks(lam))
        for (int i = b; i < e; ++i)
            for (int j = i + 1; j < e; ++j)
                if (w[i] < w[j]) ++k;
    return k;
}

std::vector<BorderWord> sym_lambda_orbit(const BorderWord& w, const Partition& lam) {
    std::vector<BorderWord> out{inc_lambda(w, lam)};
    for (auto [b, e] : lambda_blocks(lam)) {
        std::vector<BorderWord> next;
        for (const BorderWord& u : out) {
            BorderWord v = u;
            do next.push_back(v);
            while (std::next_permutation(v.begin() + b, v.begin() + e));
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_coquinv_sorted(const Filling& s) {
    require_quinv_nonattacking(s);
    BorderWord w = top_border(s);
    return w == inc_lambda(w, s.shape);
}

bool is_coinv_sorted(const Filling& s, BotOrder order) {
    require_inv_nonattacking(s);
    BorderWord w = bottom_border(s);
    return w == (order == BotOrder::decreasing ? dec_lambda(w, s.shape) : inc_lambda(w, s.shape));
}

bool is_quinv_sorted(const Filling& s) {
    int q0 = quinv(s);
    for (int i : compatible_indices(s.shape))
        if (q0 > quinv(rho(s, i))) return false;
    return true;
}

bool is_inv_sorted(const Filling& s) {
    int i0 = inv(s);
    for (int i : compatible_indices(s.shape))
        if (i0 > inv(tau(s, i))) return false;
    return true;
}

QTRat perm_sigma(const Filling& s) {
    QTRat r(1);
    for (auto [b, e] : lambda_blocks(s.shape)) {
        std::map<std::vector<Letter>, int> mult;
        for (int c = b; c < e; ++c) ++mult[s.cols[c]];
        std::vector<int> parts;
        for (const auto& kv : mult) parts.push_back(kv.second);
        r *= gaussian_multinomial(e - b, parts);
    }
    return r;
}

bool passes(const Filling& s, Filter f) {
    switch (f) {
        case Filter::all:
            return true;
        case Filter::inv_na:
            return is_inv_nonattacking(s);
        case Filter::quinv_na:
            return is_quinv_nonattacking(s);
        case Filter::inv_na_coinv_sorted:
            return is_inv_nonattacking(s) && is_coinv_sorted(s, BotOrder::decreasing);
        case Filter::inv_na_coinv_sorted_increasing:
            return is_inv_nonattacking(s) && is_coinv_sorted(s, BotOrder::increasing);
        case Filter::quinv_na_coquinv_sorted:
            return is_quinv_nonattacking(s) && is_coquinv_sorted(s);
        case Filter::inv_sorted:
            return is_inv_sorted(s);
        case Filter::quinv_sorted:
            return is_quinv_sorted(s);
    }
    return false;
}

}  // namespace macd
