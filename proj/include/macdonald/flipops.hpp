#ifndef MACDONALD_FLIPOPS_HPP
#define MACDONALD_FLIPOPS_HPP

#include <map>
#include <vector>

#include "macdonald/fillings.hpp"

namespace macd {

struct SwapOp {
    int col;
    int row_lo;
    int row_hi;
};

// exchanges rows lo..hi of columns i and i+1
Filling t_swap_range(const Filling& s, int i, int lo, int hi);
Filling apply_swap(const Filling& s, const SwapOp& op);

// nullopt when columns i and i+1 are identical
std::optional<SwapOp> tau_op(const Filling& s, int i);
std::optional<SwapOp> rho_op(const Filling& s, int i);
Filling tau(const Filling& s, int i);
Filling rho(const Filling& s, int i);

// Permutations in one-line notation with values 1..n.
using Perm = std::vector<int>;
// Letters of a reduced word, written left to right; the product
// s_{w[0]} s_{w[1]} ... equals the permutation.
using PDSWord = std::vector<int>;

PDSWord pds_of(const Perm& pi);
Perm word_to_perm(const PDSWord& w, int n);
int perm_length(const Perm& pi);

struct Outcome {
    Filling filling;
    QTRat prob;
};
using OutcomeSet = std::vector<Outcome>;

OutcomeSet rho_tilde(const Filling& s, int i);
OutcomeSet tau_tilde(const Filling& s, int i);

enum class Side { quinv, inv };

// Indices i at which operators are applied, in order, to carry a word
// sorted blockwise (increasing for quinv, decreasing for inv) to w.
std::vector<int> chain_steps(const BorderWord& w, const Partition& lam, Side side);
// Every filling reachable from `sorted` along the chain towards border w,
// with its total probability.
std::map<Filling, QTRat> chain_distribution(const Filling& sorted, const BorderWord& w, Side side);
QTRat chain_prob(const Filling& sorted, const Filling& target, Side side);

}  // namespace macd

#endif
