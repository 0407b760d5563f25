#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace theta {

// Raised when a specialization hits a non-removable pole.
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

struct QTExp {
    int q = 0;
    int t = 0;

    int total() const { return q + t; }
    friend bool operator==(const QTExp&, const QTExp&) = default;
};

// Graded-lex order with q before t, descending, so that map iteration starts
// at the leading term and matches the canonical rendering order.
struct QTExpGrlexDesc {
    bool operator()(const QTExp& a, const QTExp& b) const {
        if (a.total() != b.total()) return a.total() > b.total();
        return a.q > b.q;
    }
};

enum class MajorVar { Q, T };

// Polynomial in Z[q,t] with arbitrary-precision integer coefficients.
class QTPoly {
  public:
    using TermMap = std::map<QTExp, mpz_class, QTExpGrlexDesc>;

    QTPoly() = default;
    QTPoly(long c);
    explicit QTPoly(const mpz_class& c);

    static QTPoly var_q();
    static QTPoly var_t();
    static QTPoly monomial(int qe, int te, mpz_class coeff = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    int total_degree() const;  // -1 for the zero polynomial
    int degree_q() const;
    int degree_t() const;
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    mpz_class coeff(int qe, int te) const;
    const mpz_class& leading_coeff() const;  // grlex leading term

    QTPoly& operator+=(const QTPoly& o);
    QTPoly& operator-=(const QTPoly& o);
    QTPoly& operator*=(const QTPoly& o);
    QTPoly operator-() const;
    friend QTPoly operator+(QTPoly a, const QTPoly& b) { return a += b; }
    friend QTPoly operator-(QTPoly a, const QTPoly& b) { return a -= b; }
    friend QTPoly operator*(QTPoly a, const QTPoly& b) { return a *= b; }
    friend bool operator==(const QTPoly&, const QTPoly&) = default;

    QTPoly pow(int e) const;
    // Substitutes q -> q^k, t -> t^k (used for plethystic p_k scalings).
    QTPoly scale_exponents(int k) const;
    mpq_class eval(const mpq_class& qv, const mpq_class& tv) const;
    // Sum of c_{ij} p^j r^{D-j} q^i, the denominator-cleared substitution
    // t -> p/r with scale r^D; the symmetric version substitutes q.
    QTPoly subst_t_scaled(const mpz_class& p, const mpz_class& r, int D) const;
    QTPoly subst_q_scaled(const mpz_class& p, const mpz_class& r, int D) const;
    QTPoly swap_vars() const;

    std::string str(bool compact = false, const char* vq = "q", const char* vt = "t") const;

  private:
    void insert_term(QTExp e, const mpz_class& c);
    TermMap terms_;

    friend QTPoly gcd(const QTPoly&, const QTPoly&, MajorVar);
    friend QTPoly divexact(const QTPoly&, const QTPoly&);
};

// GCD via subresultant pseudo-remainder sequences on the major variable with
// content extraction over the other one; result has positive grlex leading
// coefficient. Both majors compute the same result (up to that normalization),
// which the tests use as a dual-route check.
QTPoly gcd(const QTPoly& a, const QTPoly& b, MajorVar major = MajorVar::Q);
QTPoly divexact(const QTPoly& a, const QTPoly& b);  // throws std::domain_error if inexact
QTPoly q_pochhammer(int n);                         // (q;q)_n
mpz_class binomial(unsigned long n, unsigned long k);

// Ratio of two QTPoly in canonical reduced form: gcd(num, den) = 1 and den has
// positive grlex leading coefficient. With lazy mode on, arithmetic postpones
// reduction until comparison, rendering or specialization.
class QTRatio {
  public:
    QTRatio() : num_(), den_(1) {}
    QTRatio(long c) : num_(c), den_(1) {}
    QTRatio(QTPoly p) : num_(std::move(p)), den_(1) {}
    QTRatio(QTPoly num, QTPoly den);
    static QTRatio from_mpq(const mpq_class& v);

    const QTPoly& num() const { return num_; }
    const QTPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_polynomial() const;  // reduces if lazy; true iff den == 1
    // Throws std::domain_error unless the reduced form has denominator 1.
    QTPoly as_poly() const;

    QTRatio& operator+=(const QTRatio& o);
    QTRatio& operator-=(const QTRatio& o);
    QTRatio& operator*=(const QTRatio& o);
    QTRatio& operator/=(const QTRatio& o);
    QTRatio operator-() const;
    friend QTRatio operator+(QTRatio a, const QTRatio& b) { return a += b; }
    friend QTRatio operator-(QTRatio a, const QTRatio& b) { return a -= b; }
    friend QTRatio operator*(QTRatio a, const QTRatio& b) { return a *= b; }
    friend QTRatio operator/(QTRatio a, const QTRatio& b) { return a /= b; }
    friend bool operator==(const QTRatio& a, const QTRatio& b);

    QTRatio inv() const;
    QTRatio pow(int e) const;  // negative e inverts
    QTRatio scale_exponents(int k) const;
    QTRatio reduced() const;
    void reduce();

    // Partial or total evaluation; reduces first, so only genuine poles throw.
    QTRatio specialize(const std::optional<mpq_class>& qv,
                       const std::optional<mpq_class>& tv) const;
    mpq_class eval(const mpq_class& qv, const mpq_class& tv) const;

    std::string str(bool compact = false) const;

    static void set_lazy(bool on);
    static bool lazy();

  private:
    void normalize_sign();
    QTRatio& add_sub(const QTRatio& o, bool negate);
    QTPoly num_, den_;
};

QTRatio qt_m();  // (1-q)(1-t) as a ratio, the plethystic constant M

// Sums ratios over a running common denominator: one gcd per distinct
// denominator and a single reduction in take(). Much cheaper than repeated
// operator+= inside accumulation loops, where every step would re-reduce.
class RatioAcc {
  public:
    void add(const QTRatio& r);
    void add(const QTRatio& a, const QTRatio& b);            // += a*b
    void add_scaled(const mpz_class& z, const QTRatio& r);   // += z*r
    QTRatio take();  // reduced total; resets the accumulator

  private:
    void accumulate(QTPoly num, const QTPoly& den);
    QTPoly num_;
    QTPoly den_ = QTPoly(1);
};

}  // namespace theta
