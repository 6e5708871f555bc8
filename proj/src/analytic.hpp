#ifndef HECKECV_ANALYTIC_HPP
#define HECKECV_ANALYTIC_HPP

// High-precision evaluation layer: eta and theta series at CM points, the
// weight-1 Eisenstein value, the normalized theta quotients n, the numeric
// root number, and the two independent routes to L(psi_D, 1).

#include "prec.hpp"
#include "quadfield.hpp"

#include <vector>

namespace hecke {

// tau as a Complex at working precision
Complex cm_tau(const CMPoint& z, const Prec& pr);

// Dedekind eta, exp(2 pi i tau / 24) * prod (1 - q^n), via the pentagonal
// series with an explicit tail bound folded into the error budget.
Complex eta(const Complex& tau, const Prec& pr);

// theta(0, tau * Q_B) = sum_{(m,n)} q^(a m^2 + b m n + c n^2)
Complex theta_form(const QuadForm& q, const Complex& tau, const Prec& pr);

// L(eps, 1) = 2 pi h(D) / (w sqrt(|D|)), exact rational multiple of
// pi/sqrt(|D|)
struct DirichletL1 {
    Rat coeff;  // 2 h / w
    Int absD;
    Real value(const Prec& pr) const;
};
DirichletL1 dirichlet_L1(const Int& absD);

// E_1(tau, 0) = 2 L(eps,1) + (4 pi / sqrt(|D|)) sum sigma_eps(n) q^n
Complex eisenstein_value(const Int& absD, const Complex& tau, const Prec& pr);

// normalized theta quotient with integer recognition
struct NValue {
    Complex raw;
    Int rounded;
    double residual;
};

// Omega = (2 pi / (w sqrt(|D|))) * eta(z_Dbar) * eta(z_OK)
Complex omega_period(const HeckeCharCtx& ctx, const Prec& pr);

// n_{[A],[B],Dbar}: theta(0, z_{A Dbar} Q_B) / (eta(z_Dbar) eta(z_OK) psi(Abar));
// throws if the residual exceeds the integer-recognition gate
NValue n_value(const QuadIdeal& A, const QuadForm& B, const HeckeCharCtx& ctx, const Prec& pr);

// w_psi = f_psi(i/sqrt(|N||D|)) / conj(...), |w_psi| = 1
Complex root_number_numeric(const HeckeCharCtx& ctx, const Prec& pr);

// L(psi_D, 1) as Omega * sum_B n (the construction identity)
Complex l_value_formula(const HeckeCharCtx& ctx, const Prec& pr);

// independent smoothed-sum route through the functional equation
Complex l_value_oracle(const HeckeCharCtx& ctx, const Prec& pr);

// |(w sqrt(|D|)/4pi) E_1(tau,0) - sum_B Theta_B(tau)| at tau
double theta_decomp_residual(const Int& absD, const Complex& tau, const Prec& pr);

// Theta_B(z_{pbar A Dbar}) = psi_Dbar(mu_bar) Theta_B(z_{A Dbar}) for a
// principal prime pbar = <mu> of norm p; returns the identity residual
double theta_action_residual(const HeckeCharCtx& ctx, const QuadIdeal& A, const QuadForm& B,
                             const Int& p, const Prec& pr);

}  // namespace hecke

#endif
