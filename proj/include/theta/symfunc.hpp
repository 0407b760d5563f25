#pragma once

#include <theta/qt.hpp>
#include <theta/shapes.hpp>

#include <map>
#include <set>
#include <string>

namespace theta {

enum class Basis { m, e, h, p, s, htilde, hhat };

std::string basis_name(Basis b);  // "m", "e", "h", "p", "s", "Ht", "hh"

// Homogeneous symmetric function over QTRatio, stored as coefficients on a
// single basis. Conversions between the classical bases {m,e,h,p,s} live
// here; the Macdonald bases are tags whose conversions live elsewhere.
class SymF {
public:
    SymF() = default;  // zero of degree 0 in the m basis
    SymF(int degree, Basis basis) : degree_(degree), basis_(basis) {}

    static SymF one(Basis basis = Basis::m);  // degree-0 constant 1
    static SymF single(Basis basis, const Partition& mu, QTRatio c = QTRatio(1));

    int degree() const { return degree_; }
    Basis basis() const { return basis_; }
    const std::map<Partition, QTRatio>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    QTRatio coeff(const Partition& mu) const;
    void set_coeff(const Partition& mu, const QTRatio& c);

    SymF& operator+=(const SymF& o);
    SymF& operator-=(const SymF& o);
    SymF& operator*=(const QTRatio& c);
    SymF operator-() const;
    friend SymF operator+(SymF a, const SymF& b) { return a += b; }
    friend SymF operator-(SymF a, const SymF& b) { return a -= b; }
    friend SymF operator*(SymF a, const QTRatio& c) { return a *= c; }
    friend SymF operator*(const QTRatio& c, SymF a) { return a *= c; }

    // Abstract equality: same-basis operands compare coefficient maps;
    // classical bases compare through the m basis.
    friend bool operator==(const SymF& a, const SymF& b);

    // "m[2] + (q+1)*m[1,1]", terms sorted by partition in reverse
    // lexicographic order; zero renders "0".
    std::string str() const;

private:
    int degree_ = 0;
    Basis basis_ = Basis::m;
    std::map<Partition, QTRatio> coeffs_;
};

// Change of basis within {m,e,h,p,s}; identity when already there.
SymF convert(const SymF& f, Basis to);

// Hall scalar product (Schur orthonormality); 0 across unequal degrees.
QTRatio hall(const SymF& f, const SymF& g);

// Involution omega: on the p basis, p_k picks up a factor -(-1)^k.
SymF omega(const SymF& f);

// Alphabet scaling: in the p basis, p_k is multiplied by r(q^k, t^k).
SymF pleth_scale(const SymF& f, const QTRatio& r);

// Star scalar product <f[X], omega g[MX]> with M = (1-q)(1-t).
QTRatio star(const SymF& f, const SymF& g);

// Ring product, computed in the p basis; result carries f's basis.
SymF multiply(const SymF& f, const SymF& g);

// Hall-adjoint of multiplication by f: <perp(f,F), g> = <F, f*g>.
SymF perp(const SymF& f, const SymF& F);

// S subset of {1..n-1}, the descent mask of a fundamental quasi-symmetric
// function on n letters.
struct SubsetMask {
    int n = 0;
    std::set<int> S;
};

// Coefficient of the monomial with the given content in the fundamental
// quasi-symmetric function of the mask: 1 if the unique weakly increasing
// word with that content rises strictly at every position of S, else 0.
int fundamental_content(const SubsetMask& mask, const Composition& content);

// Largest degree for which basis tables may be built (default 8).
void set_degree_cap(int cap);
int degree_cap();

}  // namespace theta
