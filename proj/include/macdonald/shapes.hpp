#ifndef MACDONALD_SHAPES_HPP
#define MACDONALD_SHAPES_HPP

#include <string>
#include <vector>

#include "macdonald/qtalg.hpp"

namespace macd {

// Parts are column heights of the diagram: column c has parts[c-1] cells.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    Partition(std::initializer_list<int> p);
    explicit Partition(std::vector<int> p);

    int length() const { return static_cast<int>(parts.size()); }
    int size() const;
    // 1-indexed; 0 past the end
    int operator[](int i) const { return i >= 1 && i <= length() ? parts[i - 1] : 0; }
    bool empty() const { return parts.empty(); }
    std::string str() const;
    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;
};

using Composition = std::vector<int>;

struct Cell {
    int row;  // 1 = bottom
    int col;  // 1 = leftmost
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::string cell_str(const Cell& u);

Partition parse_partition(const std::string& s);
Partition conjugate(const Partition& lam);
int n_stat(const Partition& lam);
bool contains(const Partition& lam, const Cell& u);
int leg(const Partition& lam, const Cell& u);
int arm(const Partition& lam, const Cell& u);
int rarm(const Partition& lam, const Cell& u);
std::vector<int> compatible_indices(const Partition& lam);
bool is_compatible(const Partition& lam, int i);
// multiplicity of each distinct part, in order of decreasing part
std::vector<int> part_multiplicities(const Partition& lam);
PolyQT perm_lambda(const Partition& lam);
Partition sort_comp(const Composition& a);
Composition inc_comp(const Composition& a);
bool dominates(const Partition& lam, const Partition& mu);
std::vector<Partition> partitions_of(int n);
// cells row by row, bottom row first, left to right
std::vector<Cell> cells_of(const Partition& lam);

}  // namespace macd

#endif
