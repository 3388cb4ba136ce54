#pragma once

#include <string>
#include <vector>

#include "denum/cyclotomic.hpp"
#include "denum/partition.hpp"
#include "denum/polynomial.hpp"
#include "denum/rational.hpp"

namespace denum {

// Split of the component list for period q: alphas are the components q
// divides (frequency alpha = alphas.size(), always >= 1), betas the rest.
struct WaveContext {
    long q;
    Components alphas;
    Components betas;
    CycloField field;
};

// One periodic wave: residue_polys[l mod q] evaluated at lbar = l + shift
// gives the wave's value at integer l. Each degree <= alpha - 1.
struct Wave {
    long q;
    std::vector<Polynomial> residue_polys;
    Rational shift;  // sum(d_i)/2
};

// Sum of one wave per divisor of any component; evaluates to the denumerant.
struct QuasiPolynomial {
    Components components;
    std::vector<Wave> waves;
    long period;  // lcm of the wave periods
};

struct DedekindSumSpec {
    long l;
    Components betas;  // every gcd(beta_j, q) = 1
    long q;            // >= 2
};

struct ReciprocityReport {
    bool consistent;       // one sign works across the whole range
    int sign;              // the measured epsilon; 0 if indeterminate (all zeros)
    long first_violation;  // smallest offending l when !consistent, else -1
};

// Order-preserving (alpha-group, beta-group) split; q must divide at least
// one component.
WaveContext split_components(const Components& c, long q);

// Xi_n at rho = zeta^rho_exponent (gcd(rho_exponent, q) = 1), q >= 2:
//   u_j = rho^(-beta_j) / (1 - rho^(-beta_j))
//   Xi_1 = sum_j beta_j (1 + 2 u_j)
//   Xi_n = 2^n sum_j beta_j^n sum_{k=1}^{n} (k-1)! stirling2(n,k) u_j^k   (n >= 2)
CycloElem xi(unsigned long n, const WaveContext& ctx, long rho_exponent);

// taubar_{2n} from log prod_i (a_i t/2)/sinh(a_i t/2) =
// -(taubar_2/2) t^2 + (taubar_4/4) t^4 - ...; exact series log.
Rational tau_bar(unsigned long two_n, const Components& alphas);

// kappa_n = Xi_n / (2^n (n-1)!)  plus  (-1)^(n/2) taubar_n for even n.
CycloElem kappa(unsigned long n, const WaveContext& ctx, long rho_exponent);

// Theta_0..Theta_{count-1} from
// exp(-kappa_1 t + kappa_2 t^2/2 - ...) = sum_r (-1)^r Theta_r t^r.
std::vector<CycloElem> theta_sequence(const std::vector<CycloElem>& kappas, unsigned long count);

// W_q as per-residue polynomials in lbar: coefficient of lbar^(a-1-k) is
// galois_sum(zeta^r Theta_k / prod_j (1 - zeta^(-beta_j)))
//   * (-1)^k / (prod alphas * (a-1-k)!).
Wave wave(long q, const Components& c);

// Independent path: co_{-1} extraction from the Laurent expansion of
// 1 / (prod 2 sinh(a_i t/2) * prod (e^(b_j t/2) - zeta^(-b_j) e^(-b_j t/2)))
// over Q(zeta_q), Galois-summed per lbar-coefficient.
Polynomial wave_series_oracle(long q, const Components& c, long residue);

QuasiPolynomial quasipolynomial(const Components& c);

Rational evaluate(const Wave& w, long l);
Rational evaluate(const QuasiPolynomial& qp, long l);

// s_l(beta; q) = (1/q) sum_{m=1}^{q-1} zeta^(m l) / prod_j (1 - zeta^(m beta_j))
Rational fourier_dedekind(const DedekindSumSpec& spec);

// Measures the sign in D(-l - sum d) = epsilon * D(l) over l in [lo, hi].
ReciprocityReport reciprocity_check(const QuasiPolynomial& qp, long lo, long hi);

// {"components": [...], "shift": "p/q", "waves": [{"q": n, "residues": [[...]]}]}
std::string quasipolynomial_to_json(const QuasiPolynomial& qp);
QuasiPolynomial quasipolynomial_from_json(const std::string& text);

std::string wave_to_json(const Wave& w);

}  // namespace denum
