#ifndef MACDONALD_FILLINGS_HPP
#define MACDONALD_FILLINGS_HPP

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "macdonald/qtalg.hpp"
#include "macdonald/shapes.hpp"

namespace macd {

// Letters are stored as integer codes that sort in the super-alphabet order
// 0 < 1 < 1bar < 2 < 2bar < ... < infinity.
using Letter = int;
constexpr Letter ZERO = 0;
constexpr Letter INFINITY_LETTER = 1 << 30;

constexpr Letter plain(int v) { return 2 * v; }
constexpr Letter barred(int v) { return 2 * v + 1; }
constexpr bool is_sentinel(Letter a) { return a == ZERO || a == INFINITY_LETTER; }
constexpr bool is_barred(Letter a) { return (a & 1) != 0; }
constexpr int letter_value(Letter a) { return a >> 1; }
// barred letters as negative integers
Letter letter_from_int(int v);
int letter_to_int(Letter a);
std::string letter_str(Letter a);

inline int I(Letter a, Letter b) {
    if (a != b) return a > b ? 1 : 0;
    return is_barred(a) ? 1 : 0;
}

inline int Q(Letter a, Letter b, Letter c) {
    int k = (I(a, b) == 1) + (I(c, b) == 0) + (I(a, c) == 0);
    return k == 1 ? 0 : 1;
}

struct Filling {
    Partition shape;
    // cols[c-1][r-1] is the entry in row r of column c
    std::vector<std::vector<Letter>> cols;

    Filling() = default;
    Filling(Partition lam, std::vector<std::vector<Letter>> c);
    static Filling from_ints(const std::vector<std::vector<int>>& columns);

    Letter at(int r, int c) const { return cols[c - 1][r - 1]; }
    Letter at(const Cell& u) const { return at(u.row, u.col); }
    void set(int r, int c, Letter v) { cols[c - 1][r - 1] = v; }
    // INFINITY below the bottom row
    Letter south(int r, int c) const { return r == 1 ? INFINITY_LETTER : at(r - 1, c); }
    // ZERO above the top of the column
    Letter at_or_zero(int r, int c) const;
    bool is_plain() const;
    Filling abs() const;

    friend bool operator==(const Filling&, const Filling&) = default;
    friend auto operator<=>(const Filling&, const Filling&) = default;
};

// rows top first, space separated; rows may also be separated by '/'
Filling parse_filling_text(const std::string& text);
std::string filling_to_text(const Filling& s);
// one line, rows joined by " / "
std::string filling_to_line(const Filling& s);

int maj(const Filling& s);

enum class TripleKind { gamma, L };

// For a Γ-triple y is absent when degenerate; for an L-triple x is.
struct Triple {
    Cell x;
    Cell y;
    Cell z;
    bool degenerate;
};

std::vector<Triple> triples(const Partition& lam, TripleKind kind);
// entries (a,b,c) fed to Q, with sentinels substituted
std::array<Letter, 3> triple_letters(const Filling& s, const Triple& tr, TripleKind kind);

int inv(const Filling& s);
int coinv(const Filling& s);
int quinv(const Filling& s);
int coquinv(const Filling& s);

std::optional<std::pair<Cell, Cell>> find_quinv_attack(const Filling& s);
std::optional<std::pair<Cell, Cell>> find_inv_attack(const Filling& s);
bool is_quinv_nonattacking(const Filling& s);
bool is_inv_nonattacking(const Filling& s);

struct NotNonAttacking : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
// throws NotNonAttacking naming the first offending pair
void require_quinv_nonattacking(const Filling& s);
void require_inv_nonattacking(const Filling& s);

using BorderWord = std::vector<int>;

BorderWord top_border(const Filling& s);
BorderWord bottom_border(const Filling& s);
// blocks of equal column heights, as [begin, end) index ranges
std::vector<std::pair<int, int>> lambda_blocks(const Partition& lam);
BorderWord inc_lambda(const BorderWord& w, const Partition& lam);
BorderWord dec_lambda(const BorderWord& w, const Partition& lam);
int ell_lambda(const BorderWord& w, const Partition& lam);
int ell_prime_lambda(const BorderWord& w, const Partition& lam);
std::vector<BorderWord> sym_lambda_orbit(const BorderWord& w, const Partition& lam);

enum class BotOrder { decreasing, increasing };

bool is_coquinv_sorted(const Filling& s);
bool is_coinv_sorted(const Filling& s, BotOrder order = BotOrder::decreasing);
bool is_quinv_sorted(const Filling& s);
bool is_inv_sorted(const Filling& s);

QTRat perm_sigma(const Filling& s);

enum class Filter {
    all,
    inv_na,
    quinv_na,
    inv_na_coinv_sorted,
    inv_na_coinv_sorted_increasing,
    quinv_na_coquinv_sorted,
    inv_sorted,
    quinv_sorted,
};

bool passes(const Filling& s, Filter f);

using FillingVisitor = std::function<void(const Filling&)>;

// Serial reference: cells filled column by column, bottom to top.
void enumerate_fillings(const Partition& lam, int n_vars, Filter f, const FillingVisitor& visit);
std::vector<Filling> all_fillings(const Partition& lam, int n_vars, Filter f);

// Work is split on the assignment of the first column.  visit(k, s) is
// called for every filling s whose first column is prefix k; all fillings of
// one prefix are visited by the same thread in serial order.
std::size_t prefix_count(const Partition& lam, int n_vars);
void enumerate_prefix(const Partition& lam, int n_vars, Filter f, std::size_t prefix, const FillingVisitor& visit);
void enumerate_parallel(const Partition& lam, int n_vars, Filter f, int threads,
                        const std::function<void(std::size_t, const Filling&)>& visit);

// All sign patterns over plain fillings whose absolute value passes f.
void enumerate_superfillings(const Partition& lam, int n_vars, Filter f, const FillingVisitor& visit);

}  // namespace macd

#endif
