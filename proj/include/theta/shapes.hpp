#pragma once

#include <theta/qt.hpp>

#include <compare>
#include <string>
#include <vector>

namespace theta {

// Cell of a Ferrers diagram in French notation: 1-based column and row, rows
// counted bottom to top.
struct Cell {
    int col = 1;
    int row = 1;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Integer partition (weakly decreasing positive parts; empty allowed).
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    static Partition parse(const std::string& text);  // "3,1,1"; "" is empty

    const std::vector<int>& parts() const { return parts_; }
    int size() const;                 // sum of parts
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const;            // 1-based; 0 beyond the last part
    bool empty() const { return parts_.empty(); }
    bool contains(Cell c) const;
    std::vector<Cell> cells() const;  // by row, then column
    Partition conjugate() const;
    std::string str() const;          // "3,1,1"; empty partition renders ""

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

// Composition (positive parts in arbitrary order).
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);
    static Composition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const;  // 1-based; 0 beyond the last part
    bool empty() const { return parts_.empty(); }
    Partition sorted() const;  // parts in decreasing order
    std::string str() const;

    friend auto operator<=>(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
};

struct Limbs {
    int arm = 0;
    int leg = 0;
    int coarm = 0;
    int coleg = 0;
    friend bool operator==(const Limbs&, const Limbs&) = default;
};

// Cells strictly right / above / left / below c inside mu.
// Throws std::out_of_range if c lies outside mu.
Limbs limbs(const Partition& mu, Cell c);

struct PartitionConstants {
    QTPoly B;        // sum over cells of q^coarm t^coleg
    QTPoly Pi;       // product over cells != (1,1) of (1 - q^coarm t^coleg)
    QTPoly w;        // product over cells of (q^arm - t^(leg+1)) (t^leg - q^(arm+1))
    int n_mu = 0;       // sum (i-1) mu_i
    int n_mu_conj = 0;  // same for the conjugate shape
};

// Empty shape: B = 0, Pi = w = 1, n = 0.
PartitionConstants constants(const Partition& mu);

// Standard Young tableau in French notation: rows[r] lists row r+1 (bottom to
// top), strictly increasing along rows and up columns, entries a bijection
// onto {1..n}.
struct StdYoungTableau {
    Partition shape;
    std::vector<std::vector<int>> rows;

    int size() const { return shape.size(); }
    int at(Cell c) const;  // throws std::out_of_range if outside the shape
    bool is_valid() const;
    // Entries read top row to bottom row, left to right within each row.
    std::vector<int> reading_sequence() const;

    friend bool operator==(const StdYoungTableau&, const StdYoungTableau&) = default;
};

// Row-strict composition tableau starting with 1: rows strictly increase, the
// bottom-left box holds 1; no column condition.
struct RowStrictTableau {
    Composition shape;
    std::vector<std::vector<int>> rows;

    int size() const { return shape.size(); }
    bool is_valid() const;
    std::vector<int> reading_sequence() const;

    friend bool operator==(const RowStrictTableau&, const RowStrictTableau&) = default;
};

// All SYT of shape lambda, sorted lexicographically by reading sequence.
std::vector<StdYoungTableau> syt_of(const Partition& lambda);

// Shifted leg length of entry i in T: with lambda^(i-1) the shape of the
// entries 1..i-1 and r the row where i lands, the number of rows of
// lambda^(i-1) of length lambda^(i-1)_r if that length is positive, else 1.
int shifted_leg_length(const StdYoungTableau& T, int i);

// Product of shifted_leg_length over all entries.
long total_L(const StdYoungTableau& T);

// All row-strict tableaux of shape alpha starting with 1, sorted
// lexicographically by reading sequence.
std::vector<RowStrictTableau> rst1_of(const Composition& alpha);

// Sort each column increasingly and drop the columns to the bottom; the result
// is a standard Young tableau of the sorted shape.
StdYoungTableau phi(const RowStrictTableau& C);

// Number of row-strict preimages of T under phi, by direct enumeration over
// all compositions that sort to T's shape.
long phi_fiber_size(const StdYoungTableau& T);

// All partitions of n, in lexicographically decreasing order of part lists
// (so (n) first, (1,...,1) last).
std::vector<Partition> partitions_of(int n);

// All compositions of n, in lexicographic order of part lists.
std::vector<Composition> compositions_of(int n);

// All compositions whose decreasing sort is lambda, in lexicographic order.
std::vector<Composition> compositions_sorting_to(const Partition& lambda);

}  // namespace theta
