#ifndef MACDONALD_MLQ_HPP
#define MACDONALD_MLQ_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "macdonald/fillings.hpp"
#include "macdonald/formulas.hpp"

namespace macd {

// One row of a multiline queue.  Particles are listed in the order they are
// paired: columns[k] is the site of particle k, pairs[k] the site of its
// partner in the row below (empty for the bottom row), labels[k] its label.
struct MLQRow {
    std::vector<int> columns;
    std::vector<int> pairs;
    std::vector<int> labels;
    friend bool operator==(const MLQRow&, const MLQRow&) = default;
};

struct MultilineQueue {
    Partition shape;
    int n = 0;
    std::vector<MLQRow> rows;  // bottom row first
    friend bool operator==(const MultilineQueue&, const MultilineQueue&) = default;
};

struct InconsistentPairings : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PairingStat {
    int row;
    int site;
    int partner;
    int label;
    int s;  // unpaired particles passed over before reaching the partner
    int f;  // unpaired particles left in the row below afterwards
    bool wraps;
    bool trivial;
};

MultilineQueue mlq_from_tableau(const Filling& s, int n);
Filling tableau_from_mlq(const MultilineQueue& m);
std::vector<PairingStat> pairing_stats(const MultilineQueue& m);
QTRat wt_martin_t(const MultilineQueue& m);
int mlq_maj(const MultilineQueue& m);
Weighted wt_martin_full(const MultilineQueue& m);

void enumerate_mlq(const Partition& lam, int n, const std::function<void(const MultilineQueue&)>& visit);
std::vector<MultilineQueue> all_mlq(const Partition& lam, int n);
XPoly build_P_mlq(const Partition& lam, int n, int threads = 1);

std::vector<std::vector<int>> beta(const Composition& alpha);
XPoly f_alpha(const Composition& alpha, int n_vars);

std::string render_mlq(const MultilineQueue& m);

}  // namespace macd

#endif
