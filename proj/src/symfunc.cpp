#include <theta/symfunc.hpp>

#include <atomic>
#include <functional>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace theta {

namespace {

std::atomic<int> g_degree_cap{8};

using Vec = std::vector<mpq_class>;
using Mat = std::vector<Vec>;  // M[i][j]: coeff of m_{parts[i]} in basis_{parts[j]}

mpz_class z_factor(const Partition& lambda) {
    std::map<int, int> mult;
    for (int p : lambda.parts()) ++mult[p];
    mpz_class z = 1;
    for (auto [k, m] : mult) {
        for (int i = 0; i < m; ++i) z *= k;
        for (int i = 2; i <= m; ++i) z *= i;
    }
    return z;
}

Partition merge_parts(const Partition& a, const Partition& b) {
    std::vector<int> parts;
    parts.reserve(a.length() + b.length());
    parts.insert(parts.end(), a.parts().begin(), a.parts().end());
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    std::sort(parts.rbegin(), parts.rend());
    return Partition(parts);
}

using PExp = std::map<Partition, mpq_class>;

// Power-sum expansion of h_n or (signed) e_n.
PExp p_expansion_row(int n, bool elementary) {
    PExp out;
    for (const Partition& lambda : partitions_of(n)) {
        mpq_class c(1, 1);
        c /= z_factor(lambda);
        if (elementary && (n - lambda.length()) % 2 == 1) c = -c;
        out[lambda] = c;
    }
    return out;
}

PExp p_product(const PExp& a, const PExp& b) {
    PExp out;
    for (const auto& [la, ca] : a)
        for (const auto& [lb, cb] : b) out[merge_parts(la, lb)] += ca * cb;
    return out;
}

PExp p_expansion_of_product(const Partition& mu, bool elementary) {
    PExp acc{{Partition(), mpq_class(1)}};
    for (int part : mu.parts()) acc = p_product(acc, p_expansion_row(part, elementary));
    return acc;
}

// Number of maps from the parts of mu onto labelled boxes with exact sums
// lambda: the monomial coefficient of p_mu.
mpz_class p_to_m_entry(const Partition& lambda, const Partition& mu) {
    std::vector<std::map<std::vector<int>, mpz_class>> memo(mu.length() + 1);
    std::function<mpz_class(const std::vector<int>&, int)> go =
        [&](const std::vector<int>& needs, int i) -> mpz_class {
        if (i == mu.length()) {
            for (int v : needs)
                if (v != 0) return 0;
            return 1;
        }
        auto& m = memo[i];
        if (auto it = m.find(needs); it != m.end()) return it->second;
        mpz_class total = 0;
        int part = mu.part(i + 1);
        // Group boxes by remaining need; equal boxes branch identically.
        std::map<int, int> groups;
        for (int v : needs) ++groups[v];
        for (auto [v, count] : groups) {
            if (v < part) continue;
            std::vector<int> next = needs;
            for (auto& x : next)
                if (x == v) {
                    x = v - part;
                    break;
                }
            std::sort(next.rbegin(), next.rend());
            total += mpz_class(count) * go(next, i + 1);
        }
        m.emplace(needs, total);
        return total;
    };
    std::vector<int> needs = lambda.parts();
    return go(needs, 0);
}

// Kostka number: chains of horizontal strips from the empty shape to lambda
// with strip sizes mu_1, mu_2, ...
mpz_class kostka(const Partition& lambda, const Partition& mu) {
    int rows = lambda.length();
    std::map<std::pair<std::vector<int>, int>, mpz_class> memo;
    std::function<mpz_class(const std::vector<int>&, int)> go =
        [&](const std::vector<int>& nu, int i) -> mpz_class {
        if (i == mu.length()) {
            for (int r = 0; r < rows; ++r)
                if (nu[r] != lambda.part(r + 1)) return 0;
            return 1;
        }
        auto key = std::make_pair(nu, i);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        mpz_class total = 0;
        int strip = mu.part(i + 1);
        // Enumerate row increments forming a horizontal strip.
        std::vector<int> inc(rows, 0);
        std::function<void(int, int)> place = [&](int r, int rest) {
            if (r == rows) {
                if (rest == 0) {
                    std::vector<int> next(rows);
                    for (int j = 0; j < rows; ++j) next[j] = nu[j] + inc[j];
                    total += go(next, i + 1);
                }
                return;
            }
            int cap = lambda.part(r + 1) - nu[r];
            // Strip condition: the new row r may not pass the old row below;
            // weakly decreasing rows then follow automatically.
            if (r > 0) cap = std::min(cap, nu[r - 1] - nu[r]);
            for (int a = 0; a <= std::min(cap, rest); ++a) {
                inc[r] = a;
                place(r + 1, rest - a);
            }
            inc[r] = 0;
        };
        place(0, strip);
        memo.emplace(key, total);
        return total;
    };
    return go(std::vector<int>(rows, 0), 0);
}

Mat invert(Mat a) {
    int n = static_cast<int>(a.size());
    Mat inv(n, Vec(n, 0));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::logic_error("singular transition matrix");
        std::swap(a[col], a[pivot]);
        std::swap(inv[col], inv[pivot]);
        mpq_class d = a[col][col];
        for (int c = 0; c < n; ++c) {
            a[col][c] /= d;
            inv[col][c] /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            mpq_class f = a[r][col];
            for (int c = 0; c < n; ++c) {
                a[r][c] -= f * a[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

struct DegreeTables {
    std::vector<Partition> parts;
    std::map<Partition, int> index;
    Mat to_m[4];    // e, h, p, s
    Mat from_m[4];  // inverses
};

int slot_of(Basis b) {
    switch (b) {
        case Basis::e: return 0;
        case Basis::h: return 1;
        case Basis::p: return 2;
        case Basis::s: return 3;
        default: throw std::invalid_argument("no transition table for this basis");
    }
}

const DegreeTables& tables(int degree) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    if (degree > g_degree_cap.load()) throw std::invalid_argument("degree above cap");
    static std::mutex mu;
    static std::map<int, std::unique_ptr<DegreeTables>> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(degree);
    if (it != cache.end()) return *it->second;

    auto t = std::make_unique<DegreeTables>();
    t->parts = partitions_of(degree);
    int n = static_cast<int>(t->parts.size());
    for (int i = 0; i < n; ++i) t->index[t->parts[i]] = i;

    Mat p2m(n, Vec(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) p2m[i][j] = p_to_m_entry(t->parts[i], t->parts[j]);

    auto via_p = [&](bool elementary) {
        Mat out(n, Vec(n, 0));
        for (int j = 0; j < n; ++j) {
            PExp exp = p_expansion_of_product(t->parts[j], elementary);
            for (const auto& [lambda, c] : exp) {
                int k = t->index.at(lambda);
                for (int i = 0; i < n; ++i) out[i][j] += c * p2m[i][k];
            }
        }
        return out;
    };
    t->to_m[slot_of(Basis::e)] = via_p(true);
    t->to_m[slot_of(Basis::h)] = via_p(false);
    t->to_m[slot_of(Basis::p)] = p2m;

    Mat s2m(n, Vec(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s2m[i][j] = kostka(t->parts[j], t->parts[i]);
    t->to_m[slot_of(Basis::s)] = s2m;

    for (int b = 0; b < 4; ++b) t->from_m[b] = invert(t->to_m[b]);

    return *cache.emplace(degree, std::move(t)).first->second;
}

std::vector<QTRatio> coeff_vector(const SymF& f, const DegreeTables& t) {
    std::vector<QTRatio> v(t.parts.size());
    for (const auto& [mu, c] : f.coeffs()) v[t.index.at(mu)] = c;
    return v;
}

SymF from_vector(const std::vector<QTRatio>& v, const DegreeTables& t, int degree, Basis basis) {
    SymF out(degree, basis);
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out.set_coeff(t.parts[i], v[i]);
    return out;
}

std::vector<QTRatio> mat_apply(const Mat& m, const std::vector<QTRatio>& v) {
    std::vector<QTRatio> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        // clear the rational matrix entries to integers over a row lcm, so the
        // accumulator sees the operands' own denominators unchanged
        mpz_class lcm = 1;
        for (size_t j = 0; j < v.size(); ++j)
            if (m[i][j] != 0 && !v[j].is_zero())
                mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m[i][j].get_den().get_mpz_t());
        RatioAcc acc;
        for (size_t j = 0; j < v.size(); ++j) {
            if (m[i][j] == 0 || v[j].is_zero()) continue;
            acc.add_scaled(mpz_class(m[i][j].get_num() * (lcm / m[i][j].get_den())), v[j]);
        }
        QTRatio total = acc.take();
        out[i] = lcm == 1 ? std::move(total)
                          : total * QTRatio::from_mpq(mpq_class(1, lcm));
    }
    return out;
}

bool classical(Basis b) {
    return b == Basis::m || b == Basis::e || b == Basis::h || b == Basis::p || b == Basis::s;
}

}  // namespace

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::m: return "m";
        case Basis::e: return "e";
        case Basis::h: return "h";
        case Basis::p: return "p";
        case Basis::s: return "s";
        case Basis::htilde: return "Ht";
        case Basis::hhat: return "hh";
    }
    return "?";
}

SymF SymF::one(Basis basis) { return single(basis, Partition()); }

SymF SymF::single(Basis basis, const Partition& mu, QTRatio c) {
    SymF f(mu.size(), basis);
    f.set_coeff(mu, c);
    return f;
}

QTRatio SymF::coeff(const Partition& mu) const {
    auto it = coeffs_.find(mu);
    return it == coeffs_.end() ? QTRatio() : it->second;
}

void SymF::set_coeff(const Partition& mu, const QTRatio& c) {
    if (mu.size() != degree_) throw std::invalid_argument("partition size differs from degree");
    if (c.is_zero())
        coeffs_.erase(mu);
    else
        coeffs_[mu] = c;
}

SymF& SymF::operator+=(const SymF& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (basis_ != o.basis_) throw std::invalid_argument("basis mismatch in sum");
    if (degree_ != o.degree_) throw std::invalid_argument("degree mismatch in sum");
    for (const auto& [mu, c] : o.coeffs_) set_coeff(mu, coeff(mu) + c);
    return *this;
}

SymF& SymF::operator-=(const SymF& o) { return *this += -o; }

SymF& SymF::operator*=(const QTRatio& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [mu, v] : coeffs_) v *= c;
    return *this;
}

SymF SymF::operator-() const {
    SymF out(degree_, basis_);
    for (const auto& [mu, c] : coeffs_) out.coeffs_[mu] = -c;
    return out;
}

bool operator==(const SymF& a, const SymF& b) {
    if (a.basis_ == b.basis_) return a.coeffs_ == b.coeffs_;
    if (a.is_zero() && b.is_zero()) return true;
    if (!classical(a.basis_) || !classical(b.basis_))
        throw std::invalid_argument("cannot compare across Macdonald bases");
    return convert(a, Basis::m).coeffs() == convert(b, Basis::m).coeffs();
}

std::string SymF::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [mu, c] = *it;
        std::string term;
        bool negated = false;
        if (c.is_one()) {
            // bare basis element
        } else if ((-c).is_one()) {
            negated = true;
        } else {
            std::string cs = c.str(true);
            bool simple = c.den().is_one() && c.num().term_count() <= 1;
            if (simple && !cs.empty() && cs[0] == '-') {
                negated = true;
                cs = cs.substr(1);
            }
            term = simple ? cs + "*" : "(" + cs + ")*";
        }
        term += basis_name(basis_) + "[" + mu.str() + "]";
        if (out.empty())
            out = (negated ? "-" : "") + term;
        else
            out += (negated ? " - " : " + ") + term;
    }
    return out;
}

SymF convert(const SymF& f, Basis to) {
    if (f.basis() == to) return f;
    if (!classical(f.basis()) || !classical(to))
        throw std::invalid_argument("Macdonald basis conversions live in the Macdonald layer");
    if (f.is_zero()) return SymF(f.degree(), to);
    const DegreeTables& t = tables(f.degree());
    std::vector<QTRatio> v = coeff_vector(f, t);
    if (f.basis() != Basis::m) v = mat_apply(t.to_m[slot_of(f.basis())], v);
    if (to != Basis::m) v = mat_apply(t.from_m[slot_of(to)], v);
    return from_vector(v, t, f.degree(), to);
}

QTRatio hall(const SymF& f, const SymF& g) {
    if (f.is_zero() || g.is_zero() || f.degree() != g.degree()) return QTRatio();
    SymF fh = convert(f, Basis::h);
    SymF gm = convert(g, Basis::m);
    RatioAcc out;
    for (const auto& [mu, c] : fh.coeffs()) out.add(c, gm.coeff(mu));
    return out.take();
}

SymF omega(const SymF& f) {
    if (f.is_zero()) return f;
    SymF fp = convert(f, Basis::p);
    SymF out(f.degree(), Basis::p);
    for (const auto& [mu, c] : fp.coeffs()) {
        bool flip = (mu.size() - mu.length()) % 2 == 1;
        out.set_coeff(mu, flip ? -c : c);
    }
    return convert(out, f.basis());
}

SymF pleth_scale(const SymF& f, const QTRatio& r) {
    if (f.is_zero()) return f;
    SymF fp = convert(f, Basis::p);
    SymF out(f.degree(), Basis::p);
    for (const auto& [mu, c] : fp.coeffs()) {
        QTRatio scaled = c;
        for (int k : mu.parts()) scaled *= r.scale_exponents(k);
        out.set_coeff(mu, scaled);
    }
    return convert(out, f.basis());
}

QTRatio star(const SymF& f, const SymF& g) { return hall(f, omega(pleth_scale(g, qt_m()))); }

SymF multiply(const SymF& f, const SymF& g) {
    int degree = f.degree() + g.degree();
    if (f.is_zero() || g.is_zero()) return SymF(degree, f.basis());
    SymF fp = convert(f, Basis::p);
    SymF gp = convert(g, Basis::p);
    std::map<Partition, RatioAcc> acc;
    for (const auto& [mu, cf] : fp.coeffs())
        for (const auto& [nu, cg] : gp.coeffs()) acc[merge_parts(mu, nu)].add(cf, cg);
    SymF out(degree, Basis::p);
    for (auto& [key, a] : acc) {
        QTRatio c = a.take();
        if (!c.is_zero()) out.set_coeff(key, c);
    }
    return convert(out, classical(f.basis()) ? f.basis() : Basis::m);
}

SymF perp(const SymF& f, const SymF& F) {
    if (f.degree() > F.degree()) throw std::invalid_argument("perp by higher degree");
    int degree = F.degree() - f.degree();
    SymF out(degree, Basis::m);
    for (const Partition& mu : partitions_of(degree)) {
        QTRatio c = hall(F, multiply(f, SymF::single(Basis::h, mu)));
        if (!c.is_zero()) out.set_coeff(mu, c);
    }
    return out;
}

int fundamental_content(const SubsetMask& mask, const Composition& content) {
    if (content.size() != mask.n) throw std::invalid_argument("content size differs from mask length");
    for (int s : mask.S)
        if (s < 1 || s >= mask.n) throw std::invalid_argument("mask position out of range");
    std::vector<int> word;
    for (int j = 1; j <= content.length(); ++j)
        word.insert(word.end(), content.part(j), j);
    for (int s : mask.S)
        if (word[s] <= word[s - 1]) return 0;
    return 1;
}

void set_degree_cap(int cap) { g_degree_cap.store(cap); }
int degree_cap() { return g_degree_cap.load(); }

}  // namespace theta
