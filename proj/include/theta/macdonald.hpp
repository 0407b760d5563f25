#pragma once

#include <theta/symfunc.hpp>

namespace theta {

// Modified Macdonald polynomial, expanded in the monomial basis. Built from
// the fillings statistics (inv, maj); results are cached per shape up to the
// symmetric-function degree cap.
SymF htilde(const Partition& mu);

// Expansion of a classical-basis function in the Htilde basis, via the star
// scalar product against the cached duals, and the inverse expansion.
SymF to_htilde(const SymF& f);
SymF from_htilde(const SymF& f);

// nabla: eigenoperator with eigenvalue q^n(mu') t^n(mu) on Htilde_mu.
SymF nabla(const SymF& f);

// Delta_f (primed=false) or Delta'_f (primed=true): eigenvalue f[B_mu] or
// f[B_mu - 1] on Htilde_mu.
SymF delta(const SymF& f, const SymF& F, bool primed = false);

// Pi (or its inverse): eigenvalue Pi_mu on Htilde_mu, with Pi_empty = 1.
SymF pi_op(const SymF& F, bool inverse = false);

// Theta operator: 0 if deg f >= 1 and deg F = 0; f*F if both are constants;
// otherwise Pi(f[X/M] * Pi^inv F).
SymF theta_op(const SymF& f, const SymF& F);

struct PieriPair {
    Partition mu, nu;
    QTRatio c;  // coefficient of Htilde_nu in h_1-perp Htilde_mu
    QTRatio d;  // coefficient of Htilde_mu in e_1[X/M] * Htilde_nu
};

// One-box Pieri coefficients via the product over the co-arm and co-leg of
// mu/nu, with d determined by w_nu c = w_mu d. Throws std::invalid_argument
// unless nu is mu minus a single cell.
PieriPair pieri_one(const Partition& mu, const Partition& nu);

// Product over the parts of (q;q)_k h_k[X/(1-q)]; equals Htilde_mu at t=1.
SymF hhat(const Partition& mu);

// Coefficient-wise specialization t -> 1.
SymF at_t1(const SymF& f);

// Expansion of Theta_{e_1^(n-k)} e_1 at t=1 as a sum over partitions of
// n-k+1 weighted by total shifted leg lengths of standard tableaux.
SymF theta_t1_syt(int n, int k);

// The same expansion as a sum over compositions weighted by row-strict
// tableau counts.
SymF theta_t1_rst(int n, int k);

// Checks Htilde_(n+1) against the binomial expansion over Htilde_(k) times
// the t=1 Theta power series terms.
bool macdonald_row_identity(int n);

// The series coefficients defined by inverting
// Htilde_(n) = sum_k binom(n-1,k) (q-1)^(n-1-k) Htilde_(k) A_(n-k).
SymF a_series(int n);

}  // namespace theta
