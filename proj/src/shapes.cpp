#include <theta/shapes.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace theta {

namespace {

std::vector<int> parse_parts(const std::string& text) {
    std::vector<int> parts;
    if (text.empty()) return parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        int v = std::stoi(item, &pos);
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size()) throw std::invalid_argument("bad part: " + item);
        parts.push_back(v);
    }
    return parts;
}

std::string join_parts(const std::vector<int>& parts) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts[i]);
    }
    return out;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(const std::string& text) { return Partition(parse_parts(text)); }

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
    return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
}

bool Partition::contains(Cell c) const {
    return c.row >= 1 && c.col >= 1 && c.col <= part(c.row);
}

std::vector<Cell> Partition::cells() const {
    std::vector<Cell> out;
    for (int r = 1; r <= length(); ++r)
        for (int c = 1; c <= parts_[r - 1]; ++c) out.push_back({c, r});
    return out;
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    for (int c = 1; c <= part(1); ++c) {
        int height = 0;
        while (height < length() && parts_[height] >= c) ++height;
        conj.push_back(height);
    }
    return Partition(conj);
}

std::string Partition::str() const { return join_parts(parts_); }

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p <= 0) throw std::invalid_argument("composition parts must be positive");
}

Composition Composition::parse(const std::string& text) { return Composition(parse_parts(text)); }

int Composition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Composition::part(int i) const {
    return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
}

Partition Composition::sorted() const {
    std::vector<int> s = parts_;
    std::sort(s.rbegin(), s.rend());
    return Partition(s);
}

std::string Composition::str() const { return join_parts(parts_); }

Limbs limbs(const Partition& mu, Cell c) {
    if (!mu.contains(c)) throw std::out_of_range("cell outside partition");
    Limbs l;
    l.arm = mu.part(c.row) - c.col;
    l.coarm = c.col - 1;
    l.coleg = c.row - 1;
    for (int r = c.row + 1; r <= mu.length(); ++r)
        if (mu.part(r) >= c.col) ++l.leg;
    return l;
}

PartitionConstants constants(const Partition& mu) {
    PartitionConstants k;
    k.B = QTPoly(0);
    k.Pi = QTPoly(1);
    k.w = QTPoly(1);
    for (Cell c : mu.cells()) {
        Limbs l = limbs(mu, c);
        k.B += QTPoly::monomial(l.coarm, l.coleg);
        if (c.col != 1 || c.row != 1)
            k.Pi *= QTPoly(1) - QTPoly::monomial(l.coarm, l.coleg);
        k.w *= (QTPoly::monomial(l.arm, 0) - QTPoly::monomial(0, l.leg + 1)) *
               (QTPoly::monomial(0, l.leg) - QTPoly::monomial(l.arm + 1, 0));
    }
    for (int i = 1; i <= mu.length(); ++i) k.n_mu += (i - 1) * mu.part(i);
    Partition conj = mu.conjugate();
    for (int i = 1; i <= conj.length(); ++i) k.n_mu_conj += (i - 1) * conj.part(i);
    return k;
}

int StdYoungTableau::at(Cell c) const {
    if (!shape.contains(c)) throw std::out_of_range("cell outside tableau");
    return rows[c.row - 1][c.col - 1];
}

bool StdYoungTableau::is_valid() const {
    int n = shape.size();
    if (static_cast<int>(rows.size()) != shape.length()) return false;
    std::vector<bool> seen(n + 1, false);
    for (int r = 0; r < shape.length(); ++r) {
        if (static_cast<int>(rows[r].size()) != shape.part(r + 1)) return false;
        for (size_t c = 0; c < rows[r].size(); ++c) {
            int v = rows[r][c];
            if (v < 1 || v > n || seen[v]) return false;
            seen[v] = true;
            if (c > 0 && rows[r][c - 1] >= v) return false;
            if (r > 0 && rows[r - 1][c] >= v) return false;
        }
    }
    return true;
}

std::vector<int> StdYoungTableau::reading_sequence() const {
    std::vector<int> out;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it)
        out.insert(out.end(), it->begin(), it->end());
    return out;
}

bool RowStrictTableau::is_valid() const {
    int n = shape.size();
    if (static_cast<int>(rows.size()) != shape.length()) return false;
    std::vector<bool> seen(n + 1, false);
    for (int r = 0; r < shape.length(); ++r) {
        if (static_cast<int>(rows[r].size()) != shape.part(r + 1)) return false;
        for (size_t c = 0; c < rows[r].size(); ++c) {
            int v = rows[r][c];
            if (v < 1 || v > n || seen[v]) return false;
            seen[v] = true;
            if (c > 0 && rows[r][c - 1] >= v) return false;
        }
    }
    return n == 0 || rows[0][0] == 1;
}

std::vector<int> RowStrictTableau::reading_sequence() const {
    std::vector<int> out;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it)
        out.insert(out.end(), it->begin(), it->end());
    return out;
}

std::vector<StdYoungTableau> syt_of(const Partition& lambda) {
    int n = lambda.size();
    int len = lambda.length();
    std::vector<StdYoungTableau> out;
    std::vector<std::vector<int>> rows(len);
    std::vector<int> prefix(len, 0);
    std::function<void(int)> go = [&](int i) {
        if (i > n) {
            out.push_back({lambda, rows});
            return;
        }
        for (int r = 0; r < len; ++r) {
            if (prefix[r] >= lambda.part(r + 1)) continue;
            if (r > 0 && prefix[r - 1] <= prefix[r]) continue;
            rows[r].push_back(i);
            ++prefix[r];
            go(i + 1);
            --prefix[r];
            rows[r].pop_back();
        }
    };
    go(1);
    std::sort(out.begin(), out.end(), [](const StdYoungTableau& a, const StdYoungTableau& b) {
        return a.reading_sequence() < b.reading_sequence();
    });
    return out;
}

int shifted_leg_length(const StdYoungTableau& T, int i) {
    if (i < 1 || i > T.size()) throw std::out_of_range("tableau entry out of range");
    // Row lengths of the prefix shape holding 1..i-1, and the landing row of i.
    std::vector<int> prefix(T.shape.length(), 0);
    int landing = -1;
    for (int r = 0; r < T.shape.length(); ++r)
        for (size_t c = 0; c < T.rows[r].size(); ++c) {
            if (T.rows[r][c] < i) ++prefix[r];
            if (T.rows[r][c] == i) landing = r;
        }
    int len = prefix[landing];
    if (len == 0) return 1;
    int count = 0;
    for (int v : prefix)
        if (v == len) ++count;
    return count;
}

long total_L(const StdYoungTableau& T) {
    long prod = 1;
    for (int i = 1; i <= T.size(); ++i) prod *= shifted_leg_length(T, i);
    return prod;
}

std::vector<RowStrictTableau> rst1_of(const Composition& alpha) {
    int n = alpha.size();
    int len = alpha.length();
    std::vector<RowStrictTableau> out;
    if (n == 0) {
        out.push_back({alpha, {}});
        return out;
    }
    // Distribute {2..n} over the rows (row 1 keeps 1); sorted rows are the
    // unique strictly increasing arrangement.
    std::vector<int> pool(n - 1);
    std::iota(pool.begin(), pool.end(), 2);
    std::vector<std::vector<int>> rows(len);
    rows[0].push_back(1);
    std::function<void(int)> go = [&](int r) {
        if (r == len) {
            out.push_back({alpha, rows});
            return;
        }
        int need = alpha.part(r + 1) - static_cast<int>(rows[r].size());
        std::vector<int> avail;
        for (int v : pool)
            if (v != 0) avail.push_back(v);
        std::vector<int> pick(need);
        std::function<void(int, int)> choose = [&](int start, int k) {
            if (k == need) {
                auto saved = rows[r];
                rows[r].insert(rows[r].end(), pick.begin(), pick.end());
                std::sort(rows[r].begin(), rows[r].end());
                for (int v : pick) pool[v - 2] = 0;
                go(r + 1);
                for (int v : pick) pool[v - 2] = v;
                rows[r] = saved;
                return;
            }
            for (int s = start; s <= static_cast<int>(avail.size()) - (need - k); ++s) {
                pick[k] = avail[s];
                choose(s + 1, k + 1);
            }
        };
        choose(0, 0);
    };
    go(0);
    std::sort(out.begin(), out.end(), [](const RowStrictTableau& a, const RowStrictTableau& b) {
        return a.reading_sequence() < b.reading_sequence();
    });
    return out;
}

StdYoungTableau phi(const RowStrictTableau& C) {
    Partition lambda = C.shape.sorted();
    int width = lambda.part(1);
    std::vector<std::vector<int>> cols(width);
    for (int r = 0; r < C.shape.length(); ++r)
        for (size_t c = 0; c < C.rows[r].size(); ++c) cols[c].push_back(C.rows[r][c]);
    for (auto& col : cols) std::sort(col.begin(), col.end());
    std::vector<std::vector<int>> rows(lambda.length());
    for (int r = 0; r < lambda.length(); ++r)
        for (int c = 0; c < lambda.part(r + 1); ++c) rows[r].push_back(cols[c][r]);
    return {lambda, rows};
}

long phi_fiber_size(const StdYoungTableau& T) {
    long count = 0;
    for (const Composition& alpha : compositions_sorting_to(T.shape))
        for (const RowStrictTableau& C : rst1_of(alpha))
            if (phi(C) == T) ++count;
    return count;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> parts;
    std::function<void(int, int)> go = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.push_back(Partition(parts));
            return;
        }
        for (int k = std::min(rest, maxpart); k >= 1; --k) {
            parts.push_back(k);
            go(rest - k, k);
            parts.pop_back();
        }
    };
    go(n, n);
    return out;
}

std::vector<Composition> compositions_of(int n) {
    std::vector<Composition> out;
    std::vector<int> parts;
    std::function<void(int)> go = [&](int rest) {
        if (rest == 0) {
            out.push_back(Composition(parts));
            return;
        }
        for (int k = 1; k <= rest; ++k) {
            parts.push_back(k);
            go(rest - k);
            parts.pop_back();
        }
    };
    go(n);
    return out;
}

std::vector<Composition> compositions_sorting_to(const Partition& lambda) {
    std::vector<int> parts = lambda.parts();
    std::sort(parts.begin(), parts.end());
    std::vector<Composition> out;
    do {
        out.push_back(Composition(parts));
    } while (std::next_permutation(parts.begin(), parts.end()));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace theta
