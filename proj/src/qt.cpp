#include "theta/qt.hpp"

#include <atomic>
#include <sstream>
#include <vector>

namespace theta {

namespace {

mpz_class z_divexact(const mpz_class& a, const mpz_class& b) {
    if (b == 0) throw std::domain_error("division by zero");
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw std::domain_error("inexact integer division");
    mpz_class r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// ---- univariate machinery over a coefficient ring ----
//
// A Uni<R> is a coefficient vector without trailing zeros; the two
// instantiations are Z (t-polynomials) and Z[t] (q-polynomials), which is all
// the bivariate gcd needs.

struct ZRing {
    using Elem = mpz_class;
    static Elem zero() { return 0; }
    static Elem one() { return 1; }
    static bool is_zero(const Elem& a) { return a == 0; }
    static Elem neg(const Elem& a) { return -a; }
    static Elem add(const Elem& a, const Elem& b) { return a + b; }
    static Elem sub(const Elem& a, const Elem& b) { return a - b; }
    static Elem mul(const Elem& a, const Elem& b) { return a * b; }
    static Elem divexact(const Elem& a, const Elem& b) { return z_divexact(a, b); }
    static Elem gcd(const Elem& a, const Elem& b) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return g;
    }
    static bool negative_lead(const Elem& a) { return a < 0; }
};

template <class R>
using Uni = std::vector<typename R::Elem>;

template <class R>
void uni_trim(Uni<R>& p) {
    while (!p.empty() && R::is_zero(p.back())) p.pop_back();
}

template <class R>
int uni_deg(const Uni<R>& p) {
    return static_cast<int>(p.size()) - 1;
}

template <class R>
const typename R::Elem& uni_lc(const Uni<R>& p) {
    return p.back();
}

template <class R>
Uni<R> uni_add(const Uni<R>& a, const Uni<R>& b) {
    Uni<R> r(std::max(a.size(), b.size()), R::zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = R::add(r[i], b[i]);
    uni_trim<R>(r);
    return r;
}

template <class R>
Uni<R> uni_sub(const Uni<R>& a, const Uni<R>& b) {
    Uni<R> r(std::max(a.size(), b.size()), R::zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = R::sub(r[i], b[i]);
    uni_trim<R>(r);
    return r;
}

template <class R>
Uni<R> uni_mul(const Uni<R>& a, const Uni<R>& b) {
    if (a.empty() || b.empty()) return {};
    Uni<R> r(a.size() + b.size() - 1, R::zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = R::add(r[i + j], R::mul(a[i], b[j]));
    uni_trim<R>(r);
    return r;
}

template <class R>
Uni<R> uni_scale(const Uni<R>& a, const typename R::Elem& c) {
    if (R::is_zero(c)) return {};
    Uni<R> r = a;
    for (auto& x : r) x = R::mul(x, c);
    uni_trim<R>(r);
    return r;
}

template <class R>
Uni<R> uni_divexact_scalar(const Uni<R>& a, const typename R::Elem& c) {
    Uni<R> r = a;
    for (auto& x : r) x = R::divexact(x, c);
    return r;
}

template <class R>
typename R::Elem elem_pow(typename R::Elem base, int e) {
    auto r = R::one();
    for (int i = 0; i < e; ++i) r = R::mul(r, base);
    return r;
}

// lc(b)^(deg a - deg b + 1) * a mod b
template <class R>
Uni<R> uni_prem(Uni<R> a, const Uni<R>& b) {
    int d = uni_deg<R>(a) - uni_deg<R>(b);
    int e = d + 1;
    while (!a.empty() && uni_deg<R>(a) >= uni_deg<R>(b)) {
        int k = uni_deg<R>(a) - uni_deg<R>(b);
        Uni<R> s(k + 1, R::zero());
        s[k] = uni_lc<R>(a);
        a = uni_sub<R>(uni_scale<R>(a, uni_lc<R>(b)), uni_mul<R>(s, b));
        --e;
    }
    if (e > 0) a = uni_scale<R>(a, elem_pow<R>(uni_lc<R>(b), e));
    return a;
}

template <class R>
typename R::Elem uni_content(const Uni<R>& a) {
    auto g = R::zero();
    for (const auto& c : a)
        if (!R::is_zero(c)) g = R::gcd(g, c);
    return g;
}

// Subresultant PRS on primitive inputs; returns the last nonzero remainder.
template <class R>
Uni<R> uni_subresultant_tail(Uni<R> a, Uni<R> b) {
    if (uni_deg<R>(a) < uni_deg<R>(b)) std::swap(a, b);
    int delta = uni_deg<R>(a) - uni_deg<R>(b);
    auto psi = R::neg(R::one());
    auto beta = (delta % 2 == 1) ? R::one() : R::neg(R::one());  // (-1)^(delta+1)
    while (true) {
        Uni<R> rem = uni_prem<R>(a, b);
        if (rem.empty()) return b;
        Uni<R> rnext = uni_divexact_scalar<R>(rem, beta);
        auto lcb = uni_lc<R>(b);
        if (delta > 0) {
            auto numer = elem_pow<R>(R::neg(lcb), delta);
            psi = (delta == 1) ? numer : R::divexact(numer, elem_pow<R>(psi, delta - 1));
        }
        int delta_next = uni_deg<R>(b) - uni_deg<R>(rnext);
        beta = R::mul(R::neg(lcb), elem_pow<R>(psi, delta_next));
        a = std::move(b);
        b = std::move(rnext);
        delta = delta_next;
    }
}

template <class R>
Uni<R> uni_gcd(Uni<R> a, Uni<R> b);

struct TRing {
    using Elem = Uni<ZRing>;
    static Elem zero() { return {}; }
    static Elem one() { return {mpz_class(1)}; }
    static bool is_zero(const Elem& a) { return a.empty(); }
    static Elem neg(const Elem& a) {
        Elem r = a;
        for (auto& x : r) x = -x;
        return r;
    }
    static Elem add(const Elem& a, const Elem& b) { return uni_add<ZRing>(a, b); }
    static Elem sub(const Elem& a, const Elem& b) { return uni_sub<ZRing>(a, b); }
    static Elem mul(const Elem& a, const Elem& b) { return uni_mul<ZRing>(a, b); }
    static Elem divexact(const Elem& a, const Elem& b);
    static Elem gcd(const Elem& a, const Elem& b) { return uni_gcd<ZRing>(a, b); }
    static bool negative_lead(const Elem& a) { return !a.empty() && a.back() < 0; }
};

// Exact univariate division, throwing if the division leaves a remainder.
template <class R>
Uni<R> uni_divexact(const Uni<R>& a, const Uni<R>& b) {
    if (b.empty()) throw std::domain_error("division by zero polynomial");
    if (a.empty()) return {};
    if (uni_deg<R>(a) < uni_deg<R>(b)) throw std::domain_error("inexact polynomial division");
    Uni<R> rem = a;
    Uni<R> quot(uni_deg<R>(a) - uni_deg<R>(b) + 1, R::zero());
    while (!rem.empty() && uni_deg<R>(rem) >= uni_deg<R>(b)) {
        int k = uni_deg<R>(rem) - uni_deg<R>(b);
        auto c = R::divexact(uni_lc<R>(rem), uni_lc<R>(b));
        quot[k] = c;
        Uni<R> s(k + 1, R::zero());
        s[k] = std::move(c);
        rem = uni_sub<R>(rem, uni_mul<R>(s, b));
    }
    if (!rem.empty()) throw std::domain_error("inexact polynomial division");
    return quot;
}

TRing::Elem TRing::divexact(const Elem& a, const Elem& b) { return uni_divexact<ZRing>(a, b); }

template <class R>
void uni_make_canonical(Uni<R>& a) {
    if (!a.empty() && R::negative_lead(uni_lc<R>(a)))
        for (auto& x : a) x = R::neg(x);
}

template <class R>
Uni<R> uni_gcd(Uni<R> a, Uni<R> b) {
    if (a.empty()) {
        uni_make_canonical<R>(b);
        return b;
    }
    if (b.empty()) {
        uni_make_canonical<R>(a);
        return a;
    }
    auto ca = uni_content<R>(a);
    auto cb = uni_content<R>(b);
    a = uni_divexact_scalar<R>(a, ca);
    b = uni_divexact_scalar<R>(b, cb);
    auto cg = R::gcd(ca, cb);
    Uni<R> g = uni_subresultant_tail<R>(std::move(a), std::move(b));
    g = uni_divexact_scalar<R>(g, uni_content<R>(g));
    g = uni_scale<R>(g, cg);
    uni_make_canonical<R>(g);
    return g;
}

using QUni = Uni<TRing>;  // polynomial in q with Z[t] coefficients

QUni to_quni(const QTPoly& p) {
    QUni r(p.is_zero() ? 0 : p.degree_q() + 1);
    for (const auto& [e, c] : p.terms()) {
        auto& tp = r[e.q];
        if (uni_deg<ZRing>(tp) < e.t) tp.resize(e.t + 1, 0);
        tp[e.t] = c;
    }
    for (auto& tp : r) uni_trim<ZRing>(tp);
    uni_trim<TRing>(r);
    return r;
}

QTPoly from_quni(const QUni& u) {
    QTPoly r;
    for (int i = 0; i < static_cast<int>(u.size()); ++i)
        for (int j = 0; j < static_cast<int>(u[i].size()); ++j)
            if (u[i][j] != 0) r += QTPoly::monomial(i, j, u[i][j]);
    return r;
}

std::atomic<bool> g_lazy{false};

}  // namespace

// ---- QTPoly ----

QTPoly::QTPoly(long c) {
    if (c != 0) terms_[{0, 0}] = c;
}

QTPoly::QTPoly(const mpz_class& c) {
    if (c != 0) terms_[{0, 0}] = c;
}

QTPoly QTPoly::var_q() { return monomial(1, 0); }
QTPoly QTPoly::var_t() { return monomial(0, 1); }

QTPoly QTPoly::monomial(int qe, int te, mpz_class coeff) {
    QTPoly p;
    if (qe < 0 || te < 0) throw std::invalid_argument("negative exponent");
    if (coeff != 0) p.terms_[{qe, te}] = std::move(coeff);
    return p;
}

bool QTPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == QTExp{0, 0} &&
           terms_.begin()->second == 1;
}

bool QTPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == QTExp{0, 0});
}

int QTPoly::total_degree() const {
    return terms_.empty() ? -1 : terms_.begin()->first.total();
}

int QTPoly::degree_q() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.q);
    return d;
}

int QTPoly::degree_t() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.t);
    return d;
}

mpz_class QTPoly::coeff(int qe, int te) const {
    auto it = terms_.find({qe, te});
    return it == terms_.end() ? mpz_class(0) : it->second;
}

const mpz_class& QTPoly::leading_coeff() const {
    if (terms_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return terms_.begin()->second;
}

void QTPoly::insert_term(QTExp e, const mpz_class& c) {
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

QTPoly& QTPoly::operator+=(const QTPoly& o) {
    for (const auto& [e, c] : o.terms_) insert_term(e, c);
    return *this;
}

QTPoly& QTPoly::operator-=(const QTPoly& o) {
    for (const auto& [e, c] : o.terms_) insert_term(e, -c);
    return *this;
}

QTPoly& QTPoly::operator*=(const QTPoly& o) {
    if (terms_.empty()) return *this;
    if (o.terms_.empty()) {
        terms_.clear();
        return *this;
    }
    // Multiplying by a single term shifts all exponents uniformly, which
    // preserves the term order, so no collision handling is needed.
    if (o.terms_.size() == 1) {
        const auto& [e, c] = *o.terms_.begin();
        if (e.q == 0 && e.t == 0) {
            if (c != 1)
                for (auto& [k, v] : terms_) v *= c;
            return *this;
        }
        TermMap r;
        for (const auto& [k, v] : terms_)
            r.emplace_hint(r.end(), QTExp{k.q + e.q, k.t + e.t}, v * c);
        terms_ = std::move(r);
        return *this;
    }
    if (terms_.size() == 1) {
        QTPoly r = o;
        r *= *this;
        terms_ = std::move(r.terms_);
        return *this;
    }
    QTPoly r;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_)
            r.insert_term({ea.q + eb.q, ea.t + eb.t}, ca * cb);
    terms_ = std::move(r.terms_);
    return *this;
}

QTPoly QTPoly::operator-() const {
    QTPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

QTPoly QTPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power of a polynomial");
    QTPoly r(1);
    for (int i = 0; i < e; ++i) r *= *this;
    return r;
}

QTPoly QTPoly::scale_exponents(int k) const {
    if (k <= 0) throw std::invalid_argument("exponent scale must be positive");
    QTPoly r;
    for (const auto& [e, c] : terms_) r.terms_[{e.q * k, e.t * k}] = c;
    return r;
}

mpq_class QTPoly::eval(const mpq_class& qv, const mpq_class& tv) const {
    mpq_class acc = 0;
    for (const auto& [e, c] : terms_) {
        mpq_class term = c;
        for (int i = 0; i < e.q; ++i) term *= qv;
        for (int i = 0; i < e.t; ++i) term *= tv;
        acc += term;
    }
    return acc;
}

QTPoly QTPoly::subst_t_scaled(const mpz_class& p, const mpz_class& r, int D) const {
    QTPoly out;
    for (const auto& [e, c] : terms_) {
        mpz_class v = c;
        for (int i = 0; i < e.t; ++i) v *= p;
        for (int i = 0; i < D - e.t; ++i) v *= r;
        out.insert_term({e.q, 0}, v);
    }
    return out;
}

QTPoly QTPoly::subst_q_scaled(const mpz_class& p, const mpz_class& r, int D) const {
    return swap_vars().subst_t_scaled(p, r, D).swap_vars();
}

QTPoly QTPoly::swap_vars() const {
    QTPoly r;
    for (const auto& [e, c] : terms_) r.terms_[{e.t, e.q}] = c;
    return r;
}

std::string QTPoly::str(bool compact, const char* vq, const char* vt) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    const char* plus = compact ? "+" : " + ";
    const char* minus = compact ? "-" : " - ";
    for (const auto& [e, c] : terms_) {
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? minus : plus);
        }
        std::string vars;
        if (e.q > 0) {
            vars += vq;
            if (e.q > 1) vars += "^" + std::to_string(e.q);
        }
        if (e.t > 0) {
            if (!vars.empty()) vars += "*";
            vars += vt;
            if (e.t > 1) vars += "^" + std::to_string(e.t);
        }
        if (vars.empty()) {
            os << a.get_str();
        } else if (a == 1) {
            os << vars;
        } else {
            os << a.get_str() << "*" << vars;
        }
    }
    return os.str();
}

namespace {

mpz_class int_content(const QTPoly& p) {
    mpz_class g = 0;
    for (const auto& [e, c] : p.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

QTExp min_exponents(const QTPoly& p) {
    QTExp m = p.terms().begin()->first;
    for (const auto& [e, c] : p.terms()) {
        m.q = std::min(m.q, e.q);
        m.t = std::min(m.t, e.t);
    }
    return m;
}

}  // namespace

QTPoly gcd(const QTPoly& a, const QTPoly& b, MajorVar major) {
    if (a.is_zero() || b.is_zero()) {
        QTPoly g = a.is_zero() ? b : a;
        if (!g.is_zero() && g.leading_coeff() < 0) g = -g;
        return g;
    }
    if (a.is_one() || b.is_one()) return QTPoly(1);
    // Against a single term only the monomial part and the integer content of
    // the other operand matter.
    if (a.term_count() == 1 || b.term_count() == 1) {
        QTExp ea = min_exponents(a), eb = min_exponents(b);
        mpz_class c;
        mpz_gcd(c.get_mpz_t(), int_content(a).get_mpz_t(), int_content(b).get_mpz_t());
        return QTPoly::monomial(std::min(ea.q, eb.q), std::min(ea.t, eb.t), c);
    }
    if (a.term_count() == b.term_count()) {
        bool same = true, mirrored = true;
        for (auto ia = a.terms().begin(), ib = b.terms().begin();
             ia != a.terms().end() && (same || mirrored); ++ia, ++ib) {
            if (!(ia->first == ib->first)) {
                same = mirrored = false;
                break;
            }
            if (mpz_cmpabs(ia->second.get_mpz_t(), ib->second.get_mpz_t()) != 0)
                same = mirrored = false;
            else if (sgn(ia->second) == sgn(ib->second))
                mirrored = false;
            else
                same = false;
        }
        if (same || mirrored) {
            QTPoly g = a;
            if (g.leading_coeff() < 0) g = -g;
            return g;
        }
    }
    QTPoly g;
    if (major == MajorVar::T)
        g = from_quni(uni_gcd<TRing>(to_quni(a.swap_vars()), to_quni(b.swap_vars()))).swap_vars();
    else
        g = from_quni(uni_gcd<TRing>(to_quni(a), to_quni(b)));
    if (!g.is_zero() && g.leading_coeff() < 0) g = -g;
    return g;
}

QTPoly divexact(const QTPoly& a, const QTPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero()) return QTPoly();
    return from_quni(uni_divexact<TRing>(to_quni(a), to_quni(b)));
}

QTPoly q_pochhammer(int n) {
    if (n < 0) throw std::invalid_argument("q_pochhammer needs n >= 0");
    QTPoly r(1);
    for (int i = 1; i <= n; ++i) r *= QTPoly(1) - QTPoly::monomial(i, 0);
    return r;
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// ---- QTRatio ----

QTRatio::QTRatio(QTPoly num, QTPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    reduce();
}

QTRatio QTRatio::from_mpq(const mpq_class& v) {
    return QTRatio(QTPoly(mpz_class(v.get_num())), QTPoly(mpz_class(v.get_den())));
}

bool QTRatio::is_one() const {
    if (!lazy()) return num_.is_one() && den_.is_one();
    return num_ == den_ && !num_.is_zero();
}

bool QTRatio::is_polynomial() const { return reduced().den().is_one(); }

QTPoly QTRatio::as_poly() const {
    QTRatio r = reduced();
    if (!r.den().is_one()) throw std::domain_error("ratio is not a polynomial: " + r.str());
    return r.num();
}

void QTRatio::normalize_sign() {
    if (!den_.is_zero() && den_.leading_coeff() < 0) {
        den_ = -den_;
        num_ = -num_;
    }
}

void QTRatio::reduce() {
    if (num_.is_zero()) {
        den_ = QTPoly(1);
        return;
    }
    QTPoly g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = divexact(num_, g);
        den_ = divexact(den_, g);
    }
    normalize_sign();
}

QTRatio QTRatio::reduced() const {
    QTRatio r = *this;
    r.reduce();
    return r;
}

// Eager-mode addition mirrors the classical reduced-fraction algorithm: with
// both operands reduced, the result needs at most two gcds, both on operands
// no larger than the denominators' common factor.
QTRatio& QTRatio::add_sub(const QTRatio& o, bool negate) {
    if (lazy()) {
        num_ = num_ * o.den_ + (negate ? -o.num_ : o.num_) * den_;
        den_ *= o.den_;
        return *this;
    }
    if (&o == this) {
        if (negate) {
            num_ = QTPoly();
            den_ = QTPoly(1);
        } else {
            num_ *= QTPoly(2);
            reduce();
        }
        return *this;
    }
    if (o.num_.is_zero()) return *this;
    if (num_.is_zero()) {
        num_ = negate ? -o.num_ : o.num_;
        den_ = o.den_;
        return *this;
    }
    if (o.den_.is_one()) {
        QTPoly rhs = negate ? -o.num_ : o.num_;
        if (!den_.is_one()) rhs *= den_;
        num_ += rhs;
        if (num_.is_zero()) den_ = QTPoly(1);
        return *this;
    }
    if (den_ == o.den_) {
        if (negate)
            num_ -= o.num_;
        else
            num_ += o.num_;
        reduce();
        return *this;
    }
    if (den_.is_one()) {
        num_ *= o.den_;
        if (negate)
            num_ -= o.num_;
        else
            num_ += o.num_;
        den_ = o.den_;
        return *this;
    }
    QTPoly d1 = gcd(den_, o.den_);
    if (d1.is_one()) {
        QTPoly cross = o.num_ * den_;
        num_ *= o.den_;
        if (negate)
            num_ -= cross;
        else
            num_ += cross;
        den_ *= o.den_;
        return *this;
    }
    QTPoly t = num_ * divexact(o.den_, d1);
    QTPoly s = o.num_ * divexact(den_, d1);
    if (negate)
        t -= s;
    else
        t += s;
    if (t.is_zero()) {
        num_ = QTPoly();
        den_ = QTPoly(1);
        return *this;
    }
    QTPoly d2 = gcd(t, d1);
    num_ = d2.is_one() ? std::move(t) : divexact(t, d2);
    den_ = divexact(den_, d1) * (d2.is_one() ? o.den_ : divexact(o.den_, d2));
    normalize_sign();
    return *this;
}

QTRatio& QTRatio::operator+=(const QTRatio& o) { return add_sub(o, false); }

QTRatio& QTRatio::operator-=(const QTRatio& o) { return add_sub(o, true); }

QTRatio& QTRatio::operator*=(const QTRatio& o) {
    if (lazy()) {
        num_ *= o.num_;
        den_ *= o.den_;
        return *this;
    }
    if (num_.is_zero()) return *this;
    if (o.num_.is_zero()) {
        num_ = QTPoly();
        den_ = QTPoly(1);
        return *this;
    }
    // inputs are reduced, so cross-cancellation yields a reduced result; skip
    // the gcds entirely against unit denominators
    QTPoly g1 = o.den_.is_one() ? QTPoly(1) : gcd(num_, o.den_);
    QTPoly g2 = den_.is_one() ? QTPoly(1) : gcd(o.num_, den_);
    QTPoly new_num = g1.is_one() ? num_ : divexact(num_, g1);
    new_num *= g2.is_one() ? o.num_ : divexact(o.num_, g2);
    QTPoly new_den = g2.is_one() ? den_ : divexact(den_, g2);
    new_den *= g1.is_one() ? o.den_ : divexact(o.den_, g1);
    num_ = std::move(new_num);
    den_ = std::move(new_den);
    normalize_sign();
    return *this;
}

QTRatio& QTRatio::operator/=(const QTRatio& o) { return *this *= o.inv(); }

QTRatio QTRatio::operator-() const {
    QTRatio r = *this;
    r.num_ = -r.num_;
    return r;
}

QTRatio QTRatio::inv() const {
    if (num_.is_zero()) throw std::domain_error("division by zero ratio");
    QTRatio r;
    r.num_ = den_;
    r.den_ = num_;
    r.normalize_sign();
    return r;
}

QTRatio QTRatio::pow(int e) const {
    if (e < 0) return inv().pow(-e);
    QTRatio r(1);
    for (int i = 0; i < e; ++i) r *= *this;
    return r;
}

QTRatio QTRatio::scale_exponents(int k) const {
    QTRatio r;
    r.num_ = num_.scale_exponents(k);
    r.den_ = den_.scale_exponents(k);
    return r;
}

bool operator==(const QTRatio& a, const QTRatio& b) {
    if (!QTRatio::lazy()) return a.num_ == b.num_ && a.den_ == b.den_;
    return a.num_ * b.den_ == b.num_ * a.den_;
}

QTRatio QTRatio::specialize(const std::optional<mpq_class>& qv,
                            const std::optional<mpq_class>& tv) const {
    QTRatio r = reduced();
    if (qv && tv) {
        mpq_class d = r.den_.eval(*qv, *tv);
        if (d == 0) throw PoleError("pole at the requested (q,t) point");
        mpq_class v = r.num_.eval(*qv, *tv) / d;
        return from_mpq(v);
    }
    if (tv) {
        mpq_class v = *tv;
        v.canonicalize();
        int D = std::max(r.num_.degree_t(), r.den_.degree_t());
        if (D < 0) D = 0;
        QTPoly n2 = r.num_.subst_t_scaled(v.get_num(), v.get_den(), D);
        QTPoly d2 = r.den_.subst_t_scaled(v.get_num(), v.get_den(), D);
        if (d2.is_zero()) throw PoleError("pole at t = " + v.get_str());
        return QTRatio(std::move(n2), std::move(d2));
    }
    if (qv) {
        mpq_class v = *qv;
        v.canonicalize();
        int D = std::max(r.num_.degree_q(), r.den_.degree_q());
        if (D < 0) D = 0;
        QTPoly n2 = r.num_.subst_q_scaled(v.get_num(), v.get_den(), D);
        QTPoly d2 = r.den_.subst_q_scaled(v.get_num(), v.get_den(), D);
        if (d2.is_zero()) throw PoleError("pole at q = " + v.get_str());
        return QTRatio(std::move(n2), std::move(d2));
    }
    return r;
}

mpq_class QTRatio::eval(const mpq_class& qv, const mpq_class& tv) const {
    mpq_class d = den_.eval(qv, tv);
    if (d == 0) {
        QTRatio r = reduced();
        d = r.den_.eval(qv, tv);
        if (d == 0) throw PoleError("pole at the requested (q,t) point");
        return r.num_.eval(qv, tv) / d;
    }
    return num_.eval(qv, tv) / d;
}

std::string QTRatio::str(bool compact) const {
    QTRatio r = lazy() ? reduced() : *this;
    if (r.den_.is_one()) return r.num_.str(compact);
    auto wrap = [&](const QTPoly& p) {
        std::string s = p.str(compact);
        return p.term_count() > 1 ? "(" + s + ")" : s;
    };
    return wrap(r.num_) + (compact ? "/" : " / ") + wrap(r.den_);
}

void QTRatio::set_lazy(bool on) { g_lazy.store(on); }
bool QTRatio::lazy() { return g_lazy.load(); }

QTRatio qt_m() {
    QTPoly one(1);
    return QTRatio((one - QTPoly::var_q()) * (one - QTPoly::var_t()));
}

// ---- RatioAcc ----

void RatioAcc::accumulate(QTPoly num, const QTPoly& den) {
    if (num.is_zero()) return;
    if (num_.is_zero()) {
        num_ = std::move(num);
        den_ = den;
        return;
    }
    if (den_ == den) {
        num_ += num;
        return;
    }
    if (den.is_one()) {
        num_ += num * den_;
        return;
    }
    if (den_.is_one()) {
        num_ *= den;
        num_ += num;
        den_ = den;
        return;
    }
    QTPoly g = gcd(den_, den);
    if (g.is_one()) {
        num_ *= den;
        num_ += num * den_;
        den_ *= den;
        return;
    }
    QTPoly extra = divexact(den, g);
    num_ *= extra;
    num_ += num * divexact(den_, g);
    den_ *= extra;
}

void RatioAcc::add(const QTRatio& r) { accumulate(r.num(), r.den()); }

void RatioAcc::add(const QTRatio& a, const QTRatio& b) {
    if (a.is_zero() || b.is_zero()) return;
    accumulate(a.num() * b.num(), a.den() * b.den());
}

void RatioAcc::add_scaled(const mpz_class& z, const QTRatio& r) {
    if (z == 0 || r.is_zero()) return;
    accumulate(r.num() * QTPoly(z), r.den());
}

QTRatio RatioAcc::take() {
    QTRatio out = num_.is_zero() ? QTRatio() : QTRatio(std::move(num_), std::move(den_));
    num_ = QTPoly();
    den_ = QTPoly(1);
    return out;
}

}  // namespace theta
