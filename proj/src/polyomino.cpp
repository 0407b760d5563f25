#include <theta/polyomino.hpp>

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace theta {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

// Monotone path that advances until each listed coordinate and then takes one
// transverse step, e.g. the green path from its column heights.
std::string steps_from(const std::vector<int>& at, int limit, char move, char advance) {
    std::string out;
    int pos = 0;
    for (int a : at) {
        require(a >= pos, "polyomino: malformed step placement");
        while (pos < a) {
            out += advance;
            ++pos;
        }
        out += move;
    }
    while (pos < limit) {
        out += advance;
        ++pos;
    }
    return out;
}

}  // namespace

LabelPartition::LabelPartition(std::set<int> greens, int black, std::set<int> reds)
    : greens_(std::move(greens)), black_(black), reds_(std::move(reds)) {
    std::set<int> all(greens_);
    all.insert(black_);
    all.insert(reds_.begin(), reds_.end());
    require(static_cast<int>(all.size()) == size(), "label partition: classes overlap");
    require(*all.begin() == 1 && *all.rbegin() == size(),
            "label partition: labels must be 1..size");
}

LabelledPolyomino::LabelledPolyomino(int m, int n, std::string red_path, std::string green_path,
                                     std::map<GridCell, int> labels)
    : m_(m), n_(n), red_(std::move(red_path)), green_(std::move(green_path)),
      labels_(std::move(labels)) {
    require(m_ >= 1 && n_ >= 1, "polyomino: box must be at least 1 x 1");
    auto heights = [&](const std::string& path) {
        require(static_cast<int>(path.size()) == m_ + n_, "polyomino: wrong path length");
        std::vector<int> h;
        int y = 0;
        for (char s : path) {
            if (s == 'E')
                h.push_back(y);
            else if (s == 'N')
                ++y;
            else
                throw std::invalid_argument("polyomino: paths use characters N and E");
        }
        require(static_cast<int>(h.size()) == m_ && y == n_,
                "polyomino: paths take m east and n north steps");
        return h;
    };
    green_h_ = heights(green_);
    red_h_ = heights(red_);
    require(green_h_[0] == 0, "polyomino: the green path must start east");
    require(red_h_[m_ - 1] == n_, "polyomino: the red path must end east");
    for (int x = 1; x < m_; ++x)
        require(red_h_[x - 1] > green_h_[x], "polyomino: the red path must stay strictly above");
    int x = 0;
    for (char s : red_) {
        if (s == 'E')
            ++x;
        else
            red_x_.push_back(x);
    }
    std::set<GridCell> cells;
    for (int c = 0; c < m_; ++c) cells.insert({c, green_h_[c]});
    for (int r = 0; r < n_; ++r) cells.insert({red_x_[r], r});
    require(labels_.size() == cells.size(), "polyomino: wrong number of labels");
    for (const auto& [cell, value] : labels_) {
        require(cells.count(cell) == 1, "polyomino: label on an unexpected cell");
        require(value >= 1, "polyomino: labels must be positive");
    }
    for (int c = 0; c < m_; ++c) {
        int prev = 0;
        for (int r = 0; r < n_; ++r) {
            auto it = labels_.find({c, r});
            if (it == labels_.end()) continue;
            require(prev == 0 || it->second > prev, "polyomino: column labels must increase");
            prev = it->second;
        }
    }
    for (int r = 0; r < n_; ++r) {
        int prev = 0;
        for (int c = 0; c < m_; ++c) {
            auto it = labels_.find({c, r});
            if (it == labels_.end()) continue;
            require(prev == 0 || it->second < prev, "polyomino: row labels must decrease");
            prev = it->second;
        }
    }
}

LabelColour LabelledPolyomino::colour_at(GridCell cell) const {
    if (labels_.count(cell) == 0) throw std::invalid_argument("polyomino: unlabelled cell");
    bool red = red_x_[cell.row] == cell.col;
    bool green = green_h_[cell.col] == cell.row;
    if (red && green) return LabelColour::black;
    return red ? LabelColour::red : LabelColour::green;
}

int LabelledPolyomino::column_value(int col) const {
    return labels_.at({col, green_h_.at(col)});
}

int LabelledPolyomino::row_value(int row) const { return labels_.at({red_x_.at(row), row}); }

bool LabelledPolyomino::is_standard() const {
    std::vector<int> values;
    for (const auto& [cell, value] : labels_) values.push_back(value);
    std::sort(values.begin(), values.end());
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] != static_cast<int>(i) + 1) return false;
    return true;
}

LabelPartition LabelledPolyomino::label_partition() const {
    require(is_standard(), "label partition: labels must be standard");
    std::set<int> greens, reds;
    int black = 0;
    for (const auto& [cell, value] : labels_) {
        switch (colour_at(cell)) {
            case LabelColour::black: black = value; break;
            case LabelColour::green: greens.insert(value); break;
            case LabelColour::red: reds.insert(value); break;
        }
    }
    return LabelPartition(std::move(greens), black, std::move(reds));
}

int area(const LabelledPolyomino& p) {
    int total = 0;
    for (int c = 0; c < p.width(); ++c)
        for (int r = p.green_height(c); r < p.red_height(c); ++r) {
            if (p.labels().count({c, r})) continue;
            if (p.row_value(r) > p.column_value(c)) ++total;
        }
    return total;
}

std::vector<LabelledPolyomino> enumerate_lpp(int m, int n, const Composition& content) {
    require(m >= 1 && n >= 1, "enumerate: box must be at least 1 x 1");
    require(content.size() == m + n - 1, "enumerate: content must distribute m+n-1 labels");
    std::vector<int> values;
    for (int i = 1; i <= content.length(); ++i)
        values.insert(values.end(), content.part(i), i);
    std::sort(values.begin(), values.end());

    std::vector<std::vector<int>> ghs, rhs;
    std::vector<int> cur;
    auto grow = [&](auto&& self, std::vector<std::vector<int>>& out, int lo) -> void {
        if (static_cast<int>(cur.size()) == m) {
            out.push_back(cur);
            return;
        }
        for (int v = lo; v <= n; ++v) {
            cur.push_back(v);
            self(self, out, v);
            cur.pop_back();
        }
    };
    cur = {0};
    grow(grow, ghs, 0);
    cur.clear();
    grow(grow, rhs, 0);

    std::vector<LabelledPolyomino> out;
    for (const std::vector<int>& rh : rhs) {
        if (rh[m - 1] != n) continue;
        for (const std::vector<int>& gh : ghs) {
            bool apart = true;
            for (int x = 1; x < m && apart; ++x) apart = rh[x - 1] > gh[x];
            if (!apart) continue;

            std::vector<int> rx;
            for (int r = 0; r < n; ++r) {
                int count = 0;
                for (int c = 0; c < m; ++c) count += rh[c] <= r;
                rx.push_back(count);
            }
            std::set<GridCell> cell_set;
            for (int c = 0; c < m; ++c) cell_set.insert({c, gh[c]});
            for (int r = 0; r < n; ++r) cell_set.insert({rx[r], r});
            std::vector<GridCell> cells(cell_set.begin(), cell_set.end());
            std::map<int, std::vector<std::size_t>> by_row;
            for (std::size_t i = 0; i < cells.size(); ++i) by_row[cells[i].row].push_back(i);

            std::string red = steps_from(rh, n, 'E', 'N');
            std::string green = steps_from(gh, n, 'E', 'N');
            std::vector<int> arrangement = values;
            do {
                bool ok = true;
                for (std::size_t i = 1; i < cells.size() && ok; ++i)
                    if (cells[i - 1].col == cells[i].col)
                        ok = arrangement[i - 1] < arrangement[i];
                for (const auto& [row, ids] : by_row)
                    for (std::size_t k = 1; k < ids.size() && ok; ++k)
                        ok = arrangement[ids[k - 1]] > arrangement[ids[k]];
                if (!ok) continue;
                std::map<GridCell, int> labels;
                for (std::size_t i = 0; i < cells.size(); ++i) labels[cells[i]] = arrangement[i];
                out.push_back(LabelledPolyomino(m, n, red, green, std::move(labels)));
            } while (std::next_permutation(arrangement.begin(), arrangement.end()));
        }
    }
    return out;
}

std::vector<LabelledPolyomino> enumerate_stlpp(int m, int n) {
    return enumerate_lpp(m, n, Composition(std::vector<int>(m + n - 1, 1)));
}

RootedTieredTree zeta(const LabelledPolyomino& p) {
    int m = p.width();
    int n = p.height();
    int size = m + n - 1;
    std::vector<int> levels(size), labels(size), parents(size);
    levels[0] = 2;
    labels[0] = p.column_value(0);
    parents[0] = -1;
    for (int c = 1; c < m; ++c) {
        levels[c] = 1;
        labels[c] = p.column_value(c);
        int r = p.green_height(c);
        parents[c] = r == 0 ? 0 : m - 1 + r;
    }
    for (int r = 1; r < n; ++r) {
        levels[m - 1 + r] = 3;
        labels[m - 1 + r] = p.row_value(r);
        int c = p.red_column(r);
        parents[m - 1 + r] = c == 0 ? 0 : c;
    }
    return RootedTieredTree(std::move(levels), std::move(labels), std::move(parents));
}

LabelledPolyomino zeta_inverse(const RootedTieredTree& t) {
    require(t.level(t.root()) == 2, "zeta inverse: the root must sit on level 2");
    int m = 1;
    int n = 1;
    for (int v = 0; v < t.size(); ++v) {
        require(t.level(v) >= 1 && t.level(v) <= 3, "zeta inverse: levels must lie in 1..3");
        if (t.level(v) == 1) ++m;
        if (t.level(v) == 3) ++n;
    }
    std::vector<GridCell> cell(t.size());
    cell[t.root()] = {0, 0};
    int next_col = 1;
    int next_row = 1;
    std::vector<int> queue{t.root()};
    for (std::size_t k = 0; k < queue.size(); ++k) {
        int v = queue[k];
        std::vector<int> greens, reds;
        for (int ch : t.children(v)) (t.level(ch) == 1 ? greens : reds).push_back(ch);
        std::sort(greens.begin(), greens.end(),
                  [&](int a, int b) { return t.label(a) > t.label(b); });
        std::sort(reds.begin(), reds.end(), [&](int a, int b) { return t.label(a) < t.label(b); });
        for (int ch : reds) {
            cell[ch] = {cell[v].col, next_row++};
            queue.push_back(ch);
        }
        for (int ch : greens) {
            cell[ch] = {next_col++, cell[v].row};
            queue.push_back(ch);
        }
    }
    std::vector<int> gh(m, 0), rx(n, 0);
    std::map<GridCell, int> labels;
    for (int v = 0; v < t.size(); ++v) {
        labels[cell[v]] = t.label(v);
        if (t.level(v) == 1) gh[cell[v].col] = cell[v].row;
        if (t.level(v) == 3) rx[cell[v].row] = cell[v].col;
    }
    return LabelledPolyomino(m, n, steps_from(rx, m, 'N', 'E'), steps_from(gh, n, 'E', 'N'),
                             std::move(labels));
}

std::vector<std::pair<int, int>> bounce_path(const LabelledPolyomino& p) {
    std::set<std::pair<int, int>> green_tops, red_ends;
    int x = 0, y = 0;
    for (char s : p.green_path()) {
        if (s == 'N')
            green_tops.insert({x, ++y});
        else
            ++x;
    }
    x = 0;
    y = 0;
    for (char s : p.red_path()) {
        if (s == 'E')
            red_ends.insert({++x, y});
        else
            ++y;
    }
    std::vector<std::pair<int, int>> points{{0, 1}};
    x = 0;
    y = 1;
    bool east = true;
    while (x != p.width() || y != p.height()) {
        if (east) {
            ++x;
            if (green_tops.count({x, y})) east = false;
        } else {
            ++y;
            if (red_ends.count({x, y})) east = true;
        }
        if (x > p.width() || y > p.height())
            throw std::logic_error("bounce: path left the box");
        points.push_back({x, y});
    }
    return points;
}

std::vector<int> bounce_labels(const LabelledPolyomino& p) {
    std::vector<std::pair<int, int>> points = bounce_path(p);
    std::vector<int> out;
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].second == points[i - 1].second)
            out.push_back(p.column_value(points[i - 1].first));
        else
            out.push_back(p.row_value(points[i - 1].second));
    }
    return out;
}

SandpileGraph g_pi(const LabelPartition& pi) {
    std::vector<Edge> edges;
    for (int j : pi.reds())
        for (int i = 1; i < j; ++i)
            if (pi.reds().count(i) == 0) edges.push_back({i, j});
    for (int i : pi.greens())
        if (i < pi.black()) edges.push_back({i, pi.black()});
    return SandpileGraph(Graph(pi.size(), std::move(edges)), pi.black());
}

SandpileConfig sandpile_encode(const LabelledPolyomino& p) {
    require(p.is_standard(), "sandpile encode: labels must be standard");
    int m = p.width();
    int n = p.height();
    SandpileConfig c{std::vector<int>(m + n, 0)};
    for (const auto& [cell, value] : p.labels()) {
        LabelColour colour = p.colour_at(cell);
        int count = 0;
        if (colour != LabelColour::red)
            for (int r = cell.row + 1; r < n; ++r) count += p.row_value(r) > value;
        if (colour != LabelColour::green)
            for (int x = cell.col + 1; x < m; ++x) count += p.column_value(x) < value;
        c.grains[value] = count;
    }
    return c;
}

namespace {

struct ToppleEvent {
    int vertex;
    std::vector<int> greens;  // newly unstable, queued in decreasing order
    std::vector<int> reds;    // newly unstable, queued in increasing order
};

std::vector<ToppleEvent> canonical_trace(const LabelPartition& pi, const SandpileGraph& g,
                                         SandpileConfig c) {
    if (!is_recurrent(g, c))
        throw std::invalid_argument("canonical toppling: configuration is not recurrent");
    std::vector<char> seen(g.vertex_count() + 1, 0);
    seen[g.sink()] = 1;
    std::vector<int> green_fifo, red_fifo;
    std::size_t green_head = 0, red_head = 0;
    std::vector<ToppleEvent> events;
    auto fire = [&](int v) {
        c = topple(g, c, v);
        ToppleEvent ev{v, {}, {}};
        for (int w = 1; w <= g.vertex_count(); ++w) {
            if (seen[w] || c.grains[w] < g.degree(w)) continue;
            seen[w] = 1;
            (pi.greens().count(w) ? ev.greens : ev.reds).push_back(w);
        }
        std::sort(ev.greens.rbegin(), ev.greens.rend());
        std::sort(ev.reds.begin(), ev.reds.end());
        green_fifo.insert(green_fifo.end(), ev.greens.begin(), ev.greens.end());
        red_fifo.insert(red_fifo.end(), ev.reds.begin(), ev.reds.end());
        events.push_back(std::move(ev));
    };
    fire(g.sink());
    while (green_head < green_fifo.size() || red_head < red_fifo.size()) {
        while (green_head < green_fifo.size()) fire(green_fifo[green_head++]);
        while (red_head < red_fifo.size()) fire(red_fifo[red_head++]);
    }
    if (static_cast<int>(events.size()) != g.vertex_count())
        throw std::logic_error("canonical toppling: some vertex never toppled");
    return events;
}

}  // namespace

std::vector<int> canonical_toppling(const LabelPartition& pi, const SandpileConfig& c) {
    std::vector<int> order;
    for (const ToppleEvent& ev : canonical_trace(pi, g_pi(pi), c)) order.push_back(ev.vertex);
    return order;
}

LabelledPolyomino sandpile_decode(const LabelPartition& pi, const SandpileConfig& c) {
    std::vector<ToppleEvent> events = canonical_trace(pi, g_pi(pi), c);
    int m = static_cast<int>(pi.greens().size()) + 1;
    int n = static_cast<int>(pi.reds().size()) + 1;
    std::vector<GridCell> cell(pi.size() + 1);
    cell[pi.black()] = {0, 0};
    int next_col = 1;
    int next_row = 1;
    for (const ToppleEvent& ev : events) {
        for (int j : ev.reds) cell[j] = {cell[ev.vertex].col, next_row++};
        for (int i : ev.greens) cell[i] = {next_col++, cell[ev.vertex].row};
    }
    std::map<GridCell, int> labels;
    std::vector<int> gh(m, 0), rx(n, 0);
    for (int v = 1; v <= pi.size(); ++v) labels[cell[v]] = v;
    for (int i : pi.greens()) gh[cell[i].col] = cell[i].row;
    for (int j : pi.reds()) rx[cell[j].row] = cell[j].col;
    return LabelledPolyomino(m, n, steps_from(rx, m, 'N', 'E'), steps_from(gh, n, 'E', 'N'),
                             std::move(labels));
}

}  // namespace theta
