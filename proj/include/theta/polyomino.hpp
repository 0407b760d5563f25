#pragma once

#include <theta/qt.hpp>
#include <theta/sandpile.hpp>
#include <theta/shapes.hpp>
#include <theta/trees.hpp>

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace theta {

// Cell of the ambient grid, addressed by (column, row) from the bottom-left
// corner, both starting at 0.
struct GridCell {
    int col = 0;
    int row = 0;

    friend auto operator<=>(const GridCell&, const GridCell&) = default;
};

enum class LabelColour { black, green, red };

// Splits the labels 1..greens+reds+1 into the green class, the black label
// and the red class.
class LabelPartition {
public:
    LabelPartition(std::set<int> greens, int black, std::set<int> reds);

    const std::set<int>& greens() const { return greens_; }
    int black() const { return black_; }
    const std::set<int>& reds() const { return reds_; }
    int size() const { return static_cast<int>(greens_.size() + reds_.size()) + 1; }

    friend bool operator==(const LabelPartition&, const LabelPartition&) = default;

private:
    std::set<int> greens_;
    int black_;
    std::set<int> reds_;
};

// Pair of monotone lattice paths from (0,0) to (m,n), the red one strictly
// above the green one except at the endpoints, with labelled cells. A cell is
// labelled when it contains a vertical red step (red label), a horizontal
// green step (green label), or both (the black label, always at (0,0) only).
// Labels increase strictly up each column of the grid and decrease strictly
// along each row from left to right; values are positive and may repeat.
//
// Every column holds exactly one green or black label (its column label) and
// every row exactly one red or black label (its row label).
class LabelledPolyomino {
public:
    // Paths are strings over {'N','E'} with m east and n north steps each.
    LabelledPolyomino(int m, int n, std::string red_path, std::string green_path,
                      std::map<GridCell, int> labels);

    int width() const { return m_; }
    int height() const { return n_; }
    const std::string& red_path() const { return red_; }
    const std::string& green_path() const { return green_; }
    const std::map<GridCell, int>& labels() const { return labels_; }

    LabelColour colour_at(GridCell cell) const;  // throws on unlabelled cells
    int green_height(int col) const { return green_h_.at(col); }  // row of the column label
    int red_height(int col) const { return red_h_.at(col); }  // row of the red east step
    int red_column(int row) const { return red_x_.at(row); }   // column of the row label
    int column_value(int col) const;  // green or black label value of the column
    int row_value(int row) const;     // red or black label value of the row

    bool is_standard() const;  // labels are exactly 1..m+n-1
    LabelPartition label_partition() const;  // classes by colour; needs standard labels

    friend bool operator==(const LabelledPolyomino&, const LabelledPolyomino&) = default;

private:
    int m_;
    int n_;
    std::string red_;
    std::string green_;
    std::map<GridCell, int> labels_;
    std::vector<int> green_h_;  // row of the green horizontal step per column
    std::vector<int> red_h_;    // row of the red horizontal step per column
    std::vector<int> red_x_;    // column of the red vertical step per row
};

// Number of unlabelled cells between the paths whose row label strictly
// exceeds their column label.
int area(const LabelledPolyomino& p);

// All labelled parallelogram polyominoes in an m x n box with standard
// labels, respectively with label i repeated content_i times (the content
// must distribute m+n-1 labels).
std::vector<LabelledPolyomino> enumerate_stlpp(int m, int n);
std::vector<LabelledPolyomino> enumerate_lpp(int m, int n, const Composition& content);

// Tree on the labels with the black vertex as root on level 2, green labels
// on level 1 and red labels on level 3; every label hangs off the row or
// column label it shares a line of the grid with.
RootedTieredTree zeta(const LabelledPolyomino& p);

// Inverse of zeta: rebuilds the polyomino from a tree with one level-2
// vertex (the root), placing children breadth first into fresh columns
// (green, decreasing per batch) and fresh rows (red, increasing per batch).
// Throws when the levels are not contained in {1, 2, 3}.
LabelledPolyomino zeta_inverse(const RootedTieredTree& t);

// Lattice points of the bounce path, from (0,1) to (m,n). The path runs east,
// turns north on endpoints of vertical green steps and east again on
// endpoints of horizontal red steps.
std::vector<std::pair<int, int>> bounce_path(const LabelledPolyomino& p);

// Labels projected onto the bounce path: column labels onto east steps, row
// labels onto north steps. Needs standard labels; reproduces the canonical
// toppling order of the associated sandpile.
std::vector<int> bounce_labels(const LabelledPolyomino& p);

// Graph on the labels with an edge {i, j} for i < j whenever i is green or
// black and j is red, or i is green and j is black; the black label is the
// sink. Throws when the result is disconnected (no polyomino realizes pi).
SandpileGraph g_pi(const LabelPartition& pi);

// Grain counts of the recurrent configuration matched with p: each label
// counts the cells above it (green), to its right (red), or both (black)
// whose column label is strictly smaller than their row label. Needs
// standard labels; level equals area(p).
SandpileConfig sandpile_encode(const LabelledPolyomino& p);

// Toppling order of a recurrent configuration: after the sink fires, drain
// the pending unstable green labels (each batch queued in decreasing order),
// then the pending red ones (queued increasing), and alternate. Every vertex
// topples exactly once. Throws when c is not recurrent.
std::vector<int> canonical_toppling(const LabelPartition& pi, const SandpileConfig& c);

// Inverse of sandpile_encode: replays the canonical toppling and places each
// label as it becomes unstable. Throws when c is not recurrent.
LabelledPolyomino sandpile_decode(const LabelPartition& pi, const SandpileConfig& c);

}  // namespace theta
