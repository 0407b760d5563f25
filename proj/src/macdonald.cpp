#include <theta/macdonald.hpp>

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace theta {

namespace {

// Per-shape fillings data: cells in reading order (top row first, left to
// right), limb statistics, the cell below, and the attacking pairs.
struct FillingFrame {
    std::vector<int> arm, leg, south;        // south: index or -1
    std::vector<std::pair<int, int>> attack;  // reading-order index pairs i < j
};

FillingFrame make_frame(const Partition& mu) {
    FillingFrame fr;
    std::vector<Cell> order;
    for (int r = mu.length(); r >= 1; --r)
        for (int c = 1; c <= mu.part(r); ++c) order.push_back({c, r});
    int n = static_cast<int>(order.size());
    auto index_of = [&](Cell want) {
        for (int i = 0; i < n; ++i)
            if (order[i] == want) return i;
        return -1;
    };
    for (int i = 0; i < n; ++i) {
        Limbs l = limbs(mu, order[i]);
        fr.arm.push_back(l.arm);
        fr.leg.push_back(l.leg);
        fr.south.push_back(order[i].row > 1 ? index_of({order[i].col, order[i].row - 1}) : -1);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool same_row = order[i].row == order[j].row;
            bool stacked = order[i].row == order[j].row + 1 && order[i].col > order[j].col;
            if (same_row || stacked) fr.attack.emplace_back(i, j);
        }
    return fr;
}

// Sum of q^inv t^maj over arrangements of the given content word.
QTPoly fillings_weight(const FillingFrame& fr, std::vector<int> word) {
    QTPoly total;
    std::sort(word.begin(), word.end());
    do {
        int maj = 0, arms = 0, attacks = 0;
        for (size_t i = 0; i < word.size(); ++i)
            if (fr.south[i] >= 0 && word[i] > word[fr.south[i]]) {
                maj += fr.leg[i] + 1;
                arms += fr.arm[i];
            }
        for (auto [i, j] : fr.attack)
            if (word[i] > word[j]) ++attacks;
        if (attacks < arms) throw std::logic_error("negative inversion statistic");
        total += QTPoly::monomial(attacks - arms, maj);
    } while (std::next_permutation(word.begin(), word.end()));
    return total;
}

struct MacdonaldCache {
    int max_degree = 0;
    std::map<Partition, SymF> htilde_m;
    std::map<Partition, SymF> dual_m;  // omega(Htilde_mu[MX]) in the m basis
    std::map<Partition, QTRatio> w;
    std::mutex mu;
};

MacdonaldCache& cache() {
    static MacdonaldCache c;
    return c;
}

SymF build_htilde(const Partition& mu) {
    FillingFrame fr = make_frame(mu);
    int n = mu.size();
    SymF out(n, Basis::m);
    for (const Partition& lambda : partitions_of(n)) {
        std::vector<int> word;
        for (int j = 1; j <= lambda.length(); ++j)
            word.insert(word.end(), lambda.part(j), j);
        QTPoly c = fillings_weight(fr, word);
        if (!c.is_zero()) out.set_coeff(lambda, QTRatio(c));
    }
    return out;
}

const SymF& dual_of(const Partition& mu);

// Plethystic evaluation of classical f at a polynomial alphabet A: in the p
// basis, p_k maps to A(q^k, t^k).
QTRatio eval_at_alphabet(const SymF& f, const QTPoly& A) {
    SymF fp = convert(f, Basis::p);
    QTRatio out;
    for (const auto& [lambda, c] : fp.coeffs()) {
        QTRatio term = c;
        for (int k : lambda.parts()) term *= QTRatio(A.scale_exponents(k));
        out += term;
    }
    return out;
}

}  // namespace

SymF htilde(const Partition& mu) {
    if (mu.size() > degree_cap()) throw std::invalid_argument("degree above cap");
    MacdonaldCache& c = cache();
    std::scoped_lock lock(c.mu);
    auto it = c.htilde_m.find(mu);
    if (it != c.htilde_m.end()) return it->second;
    SymF h = build_htilde(mu);
    c.max_degree = std::max(c.max_degree, mu.size());
    return c.htilde_m.emplace(mu, std::move(h)).first->second;
}

namespace {

const SymF& dual_of(const Partition& mu) {
    MacdonaldCache& c = cache();
    {
        std::scoped_lock lock(c.mu);
        auto it = c.dual_m.find(mu);
        if (it != c.dual_m.end()) return it->second;
    }
    SymF h = htilde(mu);
    SymF dual = convert(omega(pleth_scale(h, qt_m())), Basis::m);
    std::scoped_lock lock(c.mu);
    return c.dual_m.emplace(mu, std::move(dual)).first->second;
}

QTRatio w_of(const Partition& mu) {
    MacdonaldCache& c = cache();
    std::scoped_lock lock(c.mu);
    auto it = c.w.find(mu);
    if (it != c.w.end()) return it->second;
    return c.w.emplace(mu, QTRatio(constants(mu).w)).first->second;
}

}  // namespace

SymF to_htilde(const SymF& f) {
    if (f.basis() == Basis::htilde) return f;
    SymF out(f.degree(), Basis::htilde);
    if (f.is_zero()) return out;
    SymF fh = convert(f, Basis::h);
    for (const Partition& nu : partitions_of(f.degree())) {
        const SymF& dual = dual_of(nu);
        QTRatio c;
        for (const auto& [lambda, a] : fh.coeffs()) c += a * dual.coeff(lambda);
        if (!c.is_zero()) out.set_coeff(nu, c / w_of(nu));
    }
    return out;
}

SymF from_htilde(const SymF& f) {
    if (f.basis() != Basis::htilde) return convert(f, Basis::m);
    SymF out(f.degree(), Basis::m);
    for (const auto& [mu, c] : f.coeffs()) out += htilde(mu) * c;
    return out;
}

namespace {

template <typename Eigen>
SymF eigen_operator(const SymF& F, Eigen&& value) {
    SymF Fh = to_htilde(F);
    SymF out(F.degree(), Basis::htilde);
    for (const auto& [mu, c] : Fh.coeffs()) {
        QTRatio scaled = c * value(mu);
        if (!scaled.is_zero()) out.set_coeff(mu, scaled);
    }
    return from_htilde(out);
}

}  // namespace

SymF nabla(const SymF& f) {
    return eigen_operator(f, [](const Partition& mu) {
        PartitionConstants k = constants(mu);
        return QTRatio(QTPoly::monomial(k.n_mu_conj, k.n_mu));
    });
}

SymF delta(const SymF& f, const SymF& F, bool primed) {
    return eigen_operator(F, [&](const Partition& mu) {
        QTPoly A = constants(mu).B;
        if (primed) A -= QTPoly(1);
        return eval_at_alphabet(f, A);
    });
}

SymF pi_op(const SymF& F, bool inverse) {
    return eigen_operator(F, [&](const Partition& mu) {
        QTRatio pi(constants(mu).Pi);
        return inverse ? pi.inv() : pi;
    });
}

SymF theta_op(const SymF& f, const SymF& F) {
    if (f.degree() >= 1 && F.degree() == 0) return SymF(f.degree(), Basis::m);
    if (f.degree() == 0) return multiply(f, F);
    SymF scaled = pleth_scale(f, qt_m().inv());
    return pi_op(multiply(scaled, pi_op(F, true)));
}

PieriPair pieri_one(const Partition& mu, const Partition& nu) {
    if (mu.size() != nu.size() + 1) throw std::invalid_argument("shapes must differ by one cell");
    int row = 0;
    for (int r = 1; r <= mu.length(); ++r) {
        if (mu.part(r) == nu.part(r)) continue;
        if (mu.part(r) != nu.part(r) + 1 || row != 0)
            throw std::invalid_argument("shapes must differ by one cell");
        row = r;
    }
    Cell added{mu.part(row), row};
    QTRatio c(1);
    for (int col = 1; col < added.col; ++col) {  // co-arm of the added cell
        Limbs l = limbs(mu, {col, row});
        c *= QTRatio(QTPoly::monomial(l.arm + 1, 0) - QTPoly::monomial(0, l.leg),
                     QTPoly::monomial(l.arm, 0) - QTPoly::monomial(0, l.leg));
    }
    for (int r = 1; r < added.row; ++r) {  // co-leg of the added cell
        Limbs l = limbs(mu, {added.col, r});
        c *= QTRatio(QTPoly::monomial(0, l.leg + 1) - QTPoly::monomial(l.arm, 0),
                     QTPoly::monomial(0, l.leg) - QTPoly::monomial(l.arm, 0));
    }
    QTRatio d = c * w_of(nu) / w_of(mu);
    return {mu, nu, c, d};
}

SymF hhat(const Partition& mu) {
    QTRatio scale(QTPoly(1), QTPoly(1) - QTPoly::var_q());
    SymF acc = SymF::one(Basis::h);
    for (int part : mu.parts()) {
        SymF factor = pleth_scale(SymF::single(Basis::h, Partition({part})), scale);
        factor *= QTRatio(q_pochhammer(part));
        acc = multiply(acc, factor);
    }
    return convert(acc, Basis::m);
}

SymF at_t1(const SymF& f) {
    SymF out(f.degree(), f.basis());
    for (const auto& [mu, c] : f.coeffs()) {
        QTRatio v = c.specialize(std::nullopt, mpq_class(1));
        if (!v.is_zero()) out.set_coeff(mu, v);
    }
    return out;
}

SymF theta_t1_syt(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
    QTRatio shift = QTRatio(QTPoly::var_q() - QTPoly(1)).pow(k - n);
    SymF out(n - k + 1, Basis::m);
    for (const Partition& mu : partitions_of(n - k + 1)) {
        long tableaux = 0;
        for (const StdYoungTableau& T : syt_of(mu)) tableaux += total_L(T);
        mpz_class fact = 1;
        for (int i = 2; i < mu.length(); ++i) fact *= i;
        QTRatio coeff = shift * QTRatio(QTPoly(fact * tableaux));
        if (mu.length() % 2 == 0) coeff = -coeff;
        out += hhat(mu) * coeff;
    }
    return out;
}

SymF theta_t1_rst(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
    QTRatio shift = QTRatio(QTPoly::var_q() - QTPoly(1)).pow(k - n);
    SymF out(n - k + 1, Basis::m);
    for (const Composition& alpha : compositions_of(n - k + 1)) {
        QTRatio coeff = shift * QTRatio(QTPoly(static_cast<long>(rst1_of(alpha).size())));
        if (alpha.length() % 2 == 0) coeff = -coeff;
        out += hhat(alpha.sorted()) * coeff;
    }
    return out;
}

bool macdonald_row_identity(int n) {
    SymF lhs = htilde(Partition({n + 1}));
    SymF rhs(n + 1, Basis::m);
    for (int k = 0; k <= n; ++k) {
        SymF theta_side = at_t1(theta_op(SymF::single(Basis::e, Partition(std::vector<int>(n - k, 1))),
                                      SymF::single(Basis::e, Partition({1}))));
        SymF row = k == 0 ? SymF::one() : htilde(Partition({k}));
        QTRatio coeff = QTRatio(QTPoly(binomial(n, k))) *
                        QTRatio(QTPoly::var_q() - QTPoly(1)).pow(n - k);
        rhs += multiply(at_t1(row), theta_side) * coeff;
    }
    return at_t1(lhs) == rhs;
}

SymF a_series(int n) {
    if (n <= 0) throw std::invalid_argument("need n >= 1");
    if (n == 1) return convert(SymF::single(Basis::e, Partition({1})), Basis::m);
    SymF acc = at_t1(htilde(Partition({n})));
    for (int k = 1; k < n; ++k) {
        QTRatio coeff = QTRatio(QTPoly(binomial(n - 1, k))) *
                        QTRatio(QTPoly::var_q() - QTPoly(1)).pow(n - 1 - k);
        acc -= multiply(at_t1(htilde(Partition({k}))), a_series(n - k)) * coeff;
    }
    return acc * QTRatio(QTPoly::var_q() - QTPoly(1)).pow(1 - n);
}

}  // namespace theta
