#include <theta/checks.hpp>

#include <theta/graphs.hpp>
#include <theta/macdonald.hpp>
#include <theta/polyomino.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

namespace theta {

namespace {

using Params = std::map<std::string, std::string>;

// One verifiable instance: run() returns the canonical renderings of the two
// sides, which agree exactly when the instance holds.
struct CheckCell {
    std::string id;
    std::function<std::pair<std::string, std::string>()> run;
};

SymF e1n(int k) { return SymF::single(Basis::e, Partition(std::vector<int>(k, 1))); }
SymF elem(const Partition& mu) { return SymF::single(Basis::e, mu); }
SymF homog(const Partition& mu) { return SymF::single(Basis::h, mu); }

// Theta_{e_k}, with e_0 = 1 acting as the identity on nonconstants.
SymF theta_part(int k, const SymF& F) {
    return k == 0 ? F : theta_op(SymF::single(Basis::e, Partition({k})), F);
}

std::string pstr(const QTPoly& p) { return p.str(); }
std::string rstr(const QTRatio& r) { return r.str(); }

std::string sym_str(const SymF& f) {
    bool tagged = f.basis() == Basis::htilde || f.basis() == Basis::hhat;
    return (tagged ? f : convert(f, Basis::m)).str();
}

QTRatio pair_t1(const SymF& F, const SymF& G) { return hall(at_t1(F), G); }

QTPoly inv_enumerator(const std::vector<RootedTieredTree>& ts) {
    QTPoly out;
    for (const RootedTieredTree& t : ts) out += QTPoly::monomial(inv(t), 0);
    return out;
}

QTPoly shuffle_enumerator(const Composition& alpha) {
    QTPoly out;
    for (const std::vector<int>& u : alpha_shuffles(alpha)) out += r_poly(u);
    return out;
}

Composition ones(int n) { return Composition(std::vector<int>(n, 1)); }
Composition comp_of(const Partition& mu) { return Composition(mu.parts()); }

std::string word_str(const std::vector<int>& u) {
    std::string out;
    for (std::size_t i = 0; i < u.size(); ++i)
        out += (i ? "," : "") + std::to_string(u[i]);
    return out;
}

int sym_cap(const CheckOptions& o) { return o.max_degree.value_or(7); }

void need_degree(int needed, const CheckOptions& o) {
    if (needed > sym_cap(o))
        throw std::invalid_argument(
            "instance needs degree " + std::to_string(needed) + ", above the cap " +
            std::to_string(sym_cap(o)) + "; raise --max-degree");
}

std::vector<int> int_sweep(const std::optional<int>& given, int lo, int hi, Params& params,
                           const char* key, int min_allowed = 1) {
    if (given) {
        if (*given < min_allowed)
            throw std::invalid_argument(std::string("need ") + key + " >= " +
                                        std::to_string(min_allowed));
        params[key] = std::to_string(*given);
        return {*given};
    }
    params[key] = std::to_string(lo) + ".." + std::to_string(hi);
    std::vector<int> out(hi - lo + 1);
    std::iota(out.begin(), out.end(), lo);
    return out;
}

std::vector<Composition> composition_sweep(const CheckOptions& o, int lo, int hi,
                                           Params& params) {
    if (o.alpha) {
        if (o.alpha->empty()) throw std::invalid_argument("need a nonempty composition");
        params["alpha"] = o.alpha->str();
        return {*o.alpha};
    }
    if (o.mu) {
        if (o.mu->empty()) throw std::invalid_argument("need a nonempty shape");
        params["mu"] = o.mu->str();
        return {comp_of(*o.mu)};
    }
    params["alpha"] = "all of size " + std::to_string(lo) + ".." + std::to_string(hi);
    std::vector<Composition> out;
    for (int s = lo; s <= hi; ++s)
        for (const Composition& a : compositions_of(s)) out.push_back(a);
    return out;
}

std::vector<CheckCell> build_theta_t1(const CheckOptions& o, Params& params) {
    std::optional<int> n = o.n;
    if (o.mu) {
        if (n && *n + 1 != o.mu->size())
            throw std::invalid_argument("--mu must be a partition of n+1");
        n = o.mu->size() - 1;
        params["mu"] = o.mu->str();
    }
    std::vector<CheckCell> cells;
    for (int nv : int_sweep(n, 1, 4, params, "n")) {
        need_degree(nv + 1, o);
        std::vector<Partition> mus =
            o.mu ? std::vector<Partition>{*o.mu} : partitions_of(nv + 1);
        for (const Partition& mu : mus)
            cells.push_back({"n=" + std::to_string(nv) + " mu=" + mu.str(), [nv, mu] {
                                 QTRatio lhs = pair_t1(theta_op(e1n(nv), e1n(1)), homog(mu));
                                 QTPoly rhs = tree_enumerator(ones(nv), comp_of(mu));
                                 return std::pair{rstr(lhs), pstr(rhs)};
                             }});
    }
    return cells;
}

std::vector<CheckCell> build_hilbert(const CheckOptions& o, Params& params) {
    std::vector<Composition> shapes;
    if (o.alpha || o.mu) {
        shapes = composition_sweep(o, 0, 0, params);
    } else {
        for (int s : int_sweep(o.n, 1, 4, params, "n"))
            for (const Partition& mu : partitions_of(s)) shapes.push_back(comp_of(mu));
    }
    std::vector<CheckCell> cells;
    for (const Composition& a : shapes) {
        need_degree(a.size() + 1, o);
        cells.push_back({"mu=" + a.str(), [a] {
                             QTRatio lhs = pair_t1(theta_op(elem(a.sorted()), e1n(1)),
                                                   e1n(a.size() + 1));
                             QTPoly rhs = inv_enumerator(enumerate_strtt(a));
                             return std::pair{rstr(lhs), pstr(rhs)};
                         }});
    }
    return cells;
}

std::vector<CheckCell> build_tutte_link(const CheckOptions& o, Params& params) {
    std::vector<CheckCell> cells;
    for (int n : int_sweep(o.n, 1, 4, params, "n")) {
        need_degree(n, o);
        for (const Partition& mu : partitions_of(n))
            cells.push_back({"n=" + std::to_string(n) + " mu=" + mu.str(), [n, mu] {
                                 QTRatio lhs =
                                     pair_t1(theta_op(e1n(n - 1), e1n(1)), homog(mu));
                                 QTPoly rhs = shuffle_enumerator(comp_of(mu));
                                 return std::pair{rstr(lhs), pstr(rhs)};
                             }});
        cells.push_back({"n=" + std::to_string(n) + " a-series", [n] {
                             std::string lhs = sym_str(a_series(n));
                             std::string rhs = sym_str(at_t1(theta_op(e1n(n - 1), e1n(1))));
                             return std::pair{lhs, rhs};
                         }});
    }
    return cells;
}

std::vector<CheckCell> build_lemma_trees(const CheckOptions& o, Params& params) {
    std::vector<CheckCell> cells;
    for (const Composition& a : composition_sweep(o, 1, 4, params)) {
        need_degree(a.size() + 1, o);
        cells.push_back({"alpha=" + a.str() + " fully-tiered", [a] {
                             QTPoly lhs = shuffle_enumerator(a);
                             QTPoly rhs = tree_enumerator(ones(a.size() - 1), a);
                             return std::pair{pstr(lhs), pstr(rhs)};
                         }});
        cells.push_back({"alpha=" + a.str() + " standard", [a] {
                             std::vector<int> parts{1};
                             parts.insert(parts.end(), a.parts().begin(), a.parts().end());
                             QTPoly lhs = shuffle_enumerator(Composition(parts));
                             QTPoly rhs = inv_enumerator(enumerate_strtt(a));
                             return std::pair{pstr(lhs), pstr(rhs)};
                         }});
    }
    return cells;
}

std::vector<CheckCell> build_conjecture_theta(const CheckOptions& o, Params& params) {
    std::vector<CheckCell> cells;
    for (const Composition& a : composition_sweep(o, 1, 3, params)) {
        need_degree(a.size() + 1, o);
        for (const Partition& mu : partitions_of(a.size() + 1))
            cells.push_back(
                {"alpha=" + a.str() + " mu=" + mu.str(), [a, mu] {
                     QTRatio lhs = pair_t1(theta_op(elem(a.sorted()), e1n(1)), homog(mu));
                     QTPoly rhs = tree_enumerator(a, comp_of(mu));
                     return std::pair{rstr(lhs), pstr(rhs)};
                 }});
    }
    return cells;
}

SymF root_split_term(int n, int j) {
    SymF inner = delta(e1n(1), theta_op(e1n(n - j), e1n(1)));
    return j == 1 ? inner : theta_op(e1n(j - 1), inner);
}

std::vector<CheckCell> build_refined(const CheckOptions& o, Params& params) {
    std::vector<CheckCell> cells;
    for (int n : int_sweep(o.n, 1, 4, params, "n")) {
        need_degree(n + 1, o);
        std::vector<int> js;
        if (o.j) {
            if (*o.j < 1 || *o.j > n)
                throw std::invalid_argument("need 1 <= j <= n");
            js = {*o.j};
            params["j"] = std::to_string(*o.j);
        } else {
            js.resize(n);
            std::iota(js.begin(), js.end(), 1);
        }
        for (int j : js)
            cells.push_back(
                {"n=" + std::to_string(n) + " j=" + std::to_string(j), [n, j] {
                     QTRatio lhs = hall(at_t1(root_split_term(n, j)), e1n(n));
                     QTPoly rhs = inv_enumerator(enumerate_strtt_root(ones(n), j));
                     return std::pair{rstr(lhs), pstr(rhs)};
                 }});
        if (!o.j)
            cells.push_back({"n=" + std::to_string(n) + " split", [n] {
                                 SymF lhs = perp(e1n(1), theta_op(e1n(n), e1n(1)));
                                 SymF rhs = root_split_term(n, 1);
                                 for (int j = 2; j <= n; ++j) rhs += root_split_term(n, j);
                                 return std::pair{sym_str(lhs), sym_str(rhs)};
                             }});
    }
    return cells;
}

std::vector<CheckCell> build_symmetric_theta(const CheckOptions& o, Params& params) {
    std::vector<CheckCell> cells;
    for (const Composition& a : composition_sweep(o, 1, 3, params)) {
        need_degree(a.size(), o);
        for (const Partition& mu : partitions_of(a.size()))
            cells.push_back(
                {"alpha=" + a.str() + " mu=" + mu.str(), [a, mu] {
                     SymF estar = pleth_scale(elem(a.sorted()), qt_m().inv());
                     SymF f = at_t1(delta(e1n(1), pi_op(estar) * qt_m()));
                     QTRatio lhs = hall(f, homog(mu));
                     QTPoly rhs = inv_enumerator(enumerate_rtt0(a, comp_of(mu)));
                     return std::pair{rstr(lhs), pstr(rhs)};
                 }});
    }
    return cells;
}

std::vector<CheckCell> build_macdonald_identity(const CheckOptions& o, Params& params) {
    std::vector<CheckCell> cells;
    for (int n : int_sweep(o.n, 1, 5, params, "n")) {
        need_degree(n + 1, o);
        cells.push_back({"n=" + std::to_string(n), [n] {
                             SymF lhs = at_t1(htilde(Partition({n + 1})));
                             SymF rhs(n + 1, Basis::m);
                             for (int k = 0; k <= n; ++k) {
                                 SymF row = k == 0 ? SymF::one(Basis::m)
                                                   : at_t1(htilde(Partition({k})));
                                 SymF piece = at_t1(theta_op(e1n(n - k), e1n(1)));
                                 QTRatio c = QTRatio(QTPoly(binomial(n, k))) *
                                             QTRatio(QTPoly::var_q() - QTPoly(1)).pow(n - k);
                                 rhs += multiply(row, piece) * c;
                             }
                             return std::pair{sym_str(lhs), sym_str(rhs)};
                         }});
    }
    return cells;
}

std::string fiber_rendering(const Partition& lambda, bool direct) {
    mpz_class fact = 1;
    for (int i = 2; i < lambda.length(); ++i) fact *= i;
    std::ostringstream os;
    os << "fibers=[";
    mpz_class total = 0;
    bool first = true;
    for (const StdYoungTableau& T : syt_of(lambda)) {
        mpz_class v = direct ? mpz_class(phi_fiber_size(T)) : fact * total_L(T);
        os << (first ? "" : ",") << v;
        first = false;
        total += v;
    }
    if (direct) {
        // independent route for the total: composition shapes sorting to lambda
        total = 0;
        for (const Composition& a : compositions_sorting_to(lambda))
            total += static_cast<long>(rst1_of(a).size());
    }
    os << "] total=" << total;
    return os.str();
}

std::vector<CheckCell> build_syt_rst(const CheckOptions& o, Params& params) {
    std::vector<CheckCell> cells;
    auto expansion = [&](int n, int k) {
        need_degree(n - k + 1, o);
        std::string id = "n=" + std::to_string(n) + " k=" + std::to_string(k);
        cells.push_back({id + " syt", [n, k] {
                             std::string lhs = sym_str(theta_t1_syt(n, k));
                             std::string rhs =
                                 sym_str(at_t1(theta_op(e1n(n - k), e1n(1))));
                             return std::pair{lhs, rhs};
                         }});
        cells.push_back({id + " rst", [n, k] {
                             std::string lhs = sym_str(theta_t1_rst(n, k));
                             std::string rhs =
                                 sym_str(at_t1(theta_op(e1n(n - k), e1n(1))));
                             return std::pair{lhs, rhs};
                         }});
    };
    auto fiber = [&](const Partition& lambda) {
        cells.push_back({"lambda=" + lambda.str(), [lambda] {
                             return std::pair{fiber_rendering(lambda, true),
                                              fiber_rendering(lambda, false)};
                         }});
    };
    if (o.lambda) {
        params["lambda"] = o.lambda->str();
        fiber(*o.lambda);
        return cells;
    }
    if (o.n) {
        int k = o.k.value_or(0);
        if (k < 0 || k > *o.n) throw std::invalid_argument("need 0 <= k <= n");
        params["n"] = std::to_string(*o.n);
        params["k"] = std::to_string(k);
        expansion(*o.n, k);
        return cells;
    }
    params["n"] = "1..4";
    params["lambda"] = "all of size 1..5";
    for (int d = 1; d <= 4; ++d) expansion(d, 0);
    for (int s = 1; s <= 5; ++s)
        for (const Partition& lambda : partitions_of(s)) fiber(lambda);
    return cells;
}

std::vector<CheckCell> build_catalan(const CheckOptions& o, Params& params) {
    std::vector<CheckCell> cells;
    for (int n : int_sweep(o.n, 1, 4, params, "n")) {
        need_degree(n + 1, o);
        cells.push_back({"n=" + std::to_string(n), [n] {
                             QTRatio lhs = hall(theta_op(e1n(n), e1n(1)),
                                                elem(Partition({n + 1})));
                             QTRatio rhs = hall(nabla(elem(Partition({n}))), e1n(n));
                             return std::pair{rstr(lhs), rstr(rhs)};
                         }});
    }
    return cells;
}

std::vector<CheckCell> build_delta_split(const CheckOptions& o, Params& params) {
    std::vector<std::array<int, 3>> triples;
    if (o.m || o.n || o.j) {
        if (!(o.m && o.n && o.j))
            throw std::invalid_argument("provide all of --m, --n, --j or none");
        if (*o.m < 1 || *o.n < 1 || *o.j < 1)
            throw std::invalid_argument("need m, n, j >= 1");
        triples.push_back({*o.m, *o.n, *o.j});
        params["m"] = std::to_string(*o.m);
        params["n"] = std::to_string(*o.n);
        params["j"] = std::to_string(*o.j);
    } else {
        params["m+n+j"] = "<= 5";
        for (int m = 1; m <= 3; ++m)
            for (int n = 1; m + n <= 4; ++n)
                for (int j = 1; m + n + j <= 5; ++j) triples.push_back({m, n, j});
    }
    std::vector<CheckCell> cells;
    for (auto [m, n, j] : triples) {
        need_degree(m + n + 1, o);
        std::string id = "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                         " j=" + std::to_string(j);
        cells.push_back({id, [m, n, j] {
                             SymF lhs = perp(homog(Partition({j})),
                                             theta_part(m, theta_part(n, e1n(1))));
                             std::optional<SymF> acc;
                             auto add = [&](int a, int b, int c) {
                                 if (a < 0 || b < 0 || c < 0) return;
                                 SymF core = c == 0 ? SymF::one(Basis::m)
                                                    : nabla(elem(Partition({c})));
                                 SymF term = theta_part(a, theta_part(b, core));
                                 if (term.is_zero()) return;
                                 if (acc)
                                     *acc += term;
                                 else
                                     acc = term;
                             };
                             add(m - j, n - j, j + 1);
                             add(m - j + 1, n - j, j);
                             add(m - j, n - j + 1, j);
                             add(m - j + 1, n - j + 1, j - 1);
                             std::string rhs = acc ? sym_str(*acc) : "0";
                             return std::pair{sym_str(lhs), rhs};
                         }});
    }
    return cells;
}

std::vector<CheckCell> build_hmn(const CheckOptions& o, Params& params) {
    std::vector<std::pair<int, int>> pairs;
    if (o.m || o.n) {
        if (!(o.m && o.n)) throw std::invalid_argument("provide both --m and --n");
        if (*o.m < 2 || *o.n < 2) throw std::invalid_argument("need m, n >= 2");
        pairs.emplace_back(*o.m, *o.n);
        params["m"] = std::to_string(*o.m);
        params["n"] = std::to_string(*o.n);
    } else {
        params["m+n"] = "<= 6";
        for (int m = 2; m <= 3; ++m)
            for (int n = m; m + n <= 6; ++n) pairs.emplace_back(m, n);
    }
    std::vector<CheckCell> cells;
    for (auto [m, n] : pairs) {
        need_degree(m + n, o);
        cells.push_back(
            {"m=" + std::to_string(m) + " n=" + std::to_string(n), [m, n] {
                 Partition two({std::max(m, n), std::min(m, n)});
                 std::vector<int> parts{m - 1, n - 1, 1};
                 std::sort(parts.rbegin(), parts.rend());
                 QTRatio lhs = hall(theta_op(e1n(m + n - 1), e1n(1)), homog(two));
                 QTRatio rhs =
                     hall(theta_op(e1n(m + n - 2), e1n(1)), homog(Partition(parts)));
                 return std::pair{rstr(lhs), rstr(rhs)};
             }});
    }
    return cells;
}

std::vector<std::pair<int, int>> box_sweep(const CheckOptions& o, int max_sum,
                                           Params& params) {
    if (o.m || o.n) {
        if (!(o.m && o.n)) throw std::invalid_argument("provide both --m and --n");
        if (*o.m < 1 || *o.n < 1) throw std::invalid_argument("need m, n >= 1");
        params["m"] = std::to_string(*o.m);
        params["n"] = std::to_string(*o.n);
        return {{*o.m, *o.n}};
    }
    params["m+n"] = "<= " + std::to_string(max_sum);
    std::vector<std::pair<int, int>> out;
    for (int m = 1; m < max_sum; ++m)
        for (int n = 1; m + n <= max_sum; ++n) out.emplace_back(m, n);
    return out;
}

std::vector<CheckCell> build_polyomino(const CheckOptions& o, Params& params) {
    std::vector<CheckCell> cells;
    for (auto [m, n] : box_sweep(o, 6, params)) {
        need_degree(m + n - 1, o);
        cells.push_back(
            {"m=" + std::to_string(m) + " n=" + std::to_string(n), [m, n] {
                 QTRatio lhs = pair_t1(theta_part(m - 1, theta_part(n - 1, e1n(1))),
                                       e1n(m + n - 1));
                 QTPoly rhs;
                 for (const LabelledPolyomino& p : enumerate_stlpp(m, n))
                     rhs += QTPoly::monomial(area(p), 0);
                 return std::pair{rstr(lhs), pstr(rhs)};
             }});
    }
    return cells;
}

std::string pi_str(const LabelPartition& pi) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int v : pi.greens()) os << (std::exchange(first, false) ? "" : ",") << v;
    os << "|" << pi.black() << "|";
    first = true;
    for (int v : pi.reds()) os << (std::exchange(first, false) ? "" : ",") << v;
    os << "}";
    return os.str();
}

std::vector<LabelPartition> label_partitions(int size, int greens) {
    std::vector<LabelPartition> out;
    for (int black = 1; black <= size; ++black)
        for (int mask = 0; mask < (1 << size); ++mask) {
            if (mask & (1 << (black - 1))) continue;
            if (__builtin_popcount(static_cast<unsigned>(mask)) != greens) continue;
            std::set<int> g, r;
            for (int v = 1; v <= size; ++v) {
                if (v == black) continue;
                (mask & (1 << (v - 1)) ? g : r).insert(v);
            }
            out.push_back(LabelPartition(std::move(g), black, std::move(r)));
        }
    return out;
}

std::vector<CheckCell> build_sandpile(const CheckOptions& o, Params& params) {
    std::vector<CheckCell> cells;
    for (auto [m, n] : box_sweep(o, 6, params)) {
        need_degree(m + n - 1, o);
        std::vector<LabelledPolyomino> all = enumerate_stlpp(m, n);
        for (const LabelPartition& pi : label_partitions(m + n - 1, m - 1)) {
            std::vector<LabelledPolyomino> group;
            for (const LabelledPolyomino& p : all)
                if (p.label_partition() == pi) group.push_back(p);
            std::string id = "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                             " pi=" + pi_str(pi);
            cells.push_back({id, [pi, group = std::move(group)] {
                                 QTPoly areas;
                                 bool sound = true;
                                 std::set<std::vector<int>> seen;
                                 for (const LabelledPolyomino& p : group) {
                                     SandpileConfig c = sandpile_encode(p);
                                     areas += QTPoly::monomial(area(p), 0);
                                     sound = sound && sandpile_decode(pi, c) == p;
                                     seen.insert(c.grains);
                                 }
                                 sound = sound && seen.size() == group.size();
                                 std::size_t rec_count = 0;
                                 QTPoly levels, tutte;
                                 try {
                                     SandpileGraph g = g_pi(pi);
                                     tutte = tutte_at_one(g.graph());
                                     for (const SandpileConfig& c : recurrent_configs(g)) {
                                         ++rec_count;
                                         levels += QTPoly::monomial(level(g, c), 0);
                                         sound = sound && seen.count(c.grains) == 1;
                                     }
                                 } catch (const std::invalid_argument&) {
                                     // the label partition has no connected graph
                                 }
                                 auto render = [](std::size_t count, const std::string& en,
                                                  const std::string& flag) {
                                     return "count=" + std::to_string(count) +
                                            " q-enum=" + en + " " + flag;
                                 };
                                 std::string lhs =
                                     render(group.size(), pstr(areas),
                                            sound ? "bijection=ok" : "bijection=failed");
                                 std::string rhs = render(
                                     rec_count,
                                     levels == tutte
                                         ? pstr(levels)
                                         : pstr(levels) + " != tutte " + pstr(tutte),
                                     "bijection=ok");
                                 return std::pair{lhs, rhs};
                             }});
        }
    }
    return cells;
}

std::vector<CheckCell> build_gessel(const CheckOptions& o, Params& params) {
    std::vector<std::vector<int>> words;
    if (o.word) {
        if (o.word->empty()) throw std::invalid_argument("need a nonempty word");
        for (int v : *o.word)
            if (v < 1) throw std::invalid_argument("word letters must be positive");
        if (static_cast<int>(o.word->size()) > sym_cap(o))
            throw std::invalid_argument("word longer than the cap; raise --max-degree");
        words.push_back(*o.word);
        params["word"] = word_str(*o.word);
    } else {
        for (int n : int_sweep(o.n, 1, 4, params, "n")) {
            need_degree(n, o);
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 1);
            do words.push_back(perm);
            while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
    std::vector<CheckCell> cells;
    for (const std::vector<int>& u : words)
        cells.push_back({"word=" + word_str(u), [u] {
                             Graph g = inversion_graph(u);
                             QTPoly lhs;
                             for (const SpanningTree& t : spanning_trees(g))
                                 lhs += QTPoly::monomial(kappa_inversions(g, t), 0);
                             return std::pair{pstr(lhs), pstr(r_poly(u))};
                         }});
    return cells;
}

std::vector<std::pair<std::string, std::string>> run_cells(const std::vector<CheckCell>& cells,
                                                           int jobs) {
    std::vector<std::pair<std::string, std::string>> out(cells.size());
    auto work = [&](std::size_t i) {
        try {
            out[i] = cells[i].run();
        } catch (const std::exception& e) {
            out[i] = {std::string("error: ") + e.what(), "no error"};
        }
    };
    if (jobs <= 1 || cells.size() <= 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) work(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::size_t workers = std::min<std::size_t>(jobs, cells.size());
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < cells.size();
                 i = next.fetch_add(1))
                work(i);
        });
    for (std::thread& t : pool) t.join();
    return out;
}

}  // namespace

std::string status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::ok: return "ok";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "unknown";
}

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names{
        "theta-t1",       "hilbert",  "tutte-link", "lemma-trees",
        "conjecture-theta", "refined",  "symmetric-theta", "macdonald-identity",
        "syt-rst",        "catalan",  "delta-split", "hmn",
        "polyomino",      "sandpile", "gessel"};
    return names;
}

CheckReport run_check(const std::string& name, const CheckOptions& opt) {
    auto start = std::chrono::steady_clock::now();
    if (sym_cap(opt) < 1) throw std::invalid_argument("the degree cap must be positive");
    if (sym_cap(opt) > degree_cap()) set_degree_cap(sym_cap(opt));

    CheckReport report;
    report.name = name;
    std::vector<CheckCell> cells;
    if (name == "theta-t1")
        cells = build_theta_t1(opt, report.parameters);
    else if (name == "hilbert")
        cells = build_hilbert(opt, report.parameters);
    else if (name == "tutte-link")
        cells = build_tutte_link(opt, report.parameters);
    else if (name == "lemma-trees")
        cells = build_lemma_trees(opt, report.parameters);
    else if (name == "conjecture-theta")
        cells = build_conjecture_theta(opt, report.parameters);
    else if (name == "refined")
        cells = build_refined(opt, report.parameters);
    else if (name == "symmetric-theta")
        cells = build_symmetric_theta(opt, report.parameters);
    else if (name == "macdonald-identity")
        cells = build_macdonald_identity(opt, report.parameters);
    else if (name == "syt-rst")
        cells = build_syt_rst(opt, report.parameters);
    else if (name == "catalan")
        cells = build_catalan(opt, report.parameters);
    else if (name == "delta-split")
        cells = build_delta_split(opt, report.parameters);
    else if (name == "hmn")
        cells = build_hmn(opt, report.parameters);
    else if (name == "polyomino")
        cells = build_polyomino(opt, report.parameters);
    else if (name == "sandpile")
        cells = build_sandpile(opt, report.parameters);
    else if (name == "gessel")
        cells = build_gessel(opt, report.parameters);
    else
        throw std::invalid_argument("unknown check: " + name);

    if (cells.empty()) {
        report.status = CheckStatus::skipped;
        report.lhs = report.rhs = "no instances";
    } else {
        auto results = run_cells(cells, std::max(opt.jobs, 1));
        std::size_t bad = cells.size();
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (results[i].first != results[i].second) {
                bad = i;
                break;
            }
        if (bad < cells.size()) {
            report.status = CheckStatus::fail;
            report.lhs = cells[bad].id + ": " + results[bad].first;
            report.rhs = cells[bad].id + ": " + results[bad].second;
        } else if (cells.size() == 1) {
            report.status = CheckStatus::ok;
            report.lhs = results[0].first;
            report.rhs = results[0].second;
        } else {
            report.status = CheckStatus::ok;
            report.lhs = report.rhs =
                std::to_string(cells.size()) + " instances agree";
        }
    }
    auto stop = std::chrono::steady_clock::now();
    report.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return report;
}

}  // namespace theta
