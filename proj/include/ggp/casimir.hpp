#pragma once

#include "ggp/poly.hpp"

#include <optional>

namespace ggp {

// Variable layout for rank parameter n: indices 0..n are lambda_0..lambda_n
// and n+1..2n are lambda'_1..lambda'_n.
int casimir_nvars(int n);
std::vector<std::string> casimir_var_names(int n);
ExactPoly lam(int n, int i);       // lambda_i, 0 <= i <= n
ExactPoly lam_prime(int n, int j); // lambda'_j, 1 <= j <= n

// Casimir eigenvalue polynomials and the closed-form Harish-Chandra image
// of the degree-zero invariant.
ExactPoly sym_A(int n);   // sum lambda_i^2 - |rho_{gl_{n+1}}|^2
ExactPoly sym_B(int n);   // sum lambda'_j^2 - |rho_{gl_n}|^2
ExactPoly sym_a(int n);   // sum lambda_i - sum lambda'_j
ExactPoly chi_E0_poly(int n); // (A - a^2 - (n+1)a + sum lambda_i - B) / 2

// Which reading of the b-recurrence to use at the k=2 step: the displayed
// coefficient 2*B_0^{(1)} = 4 on chi(E0), or the coefficient 2 suggested by
// the worked example.
enum class RecurrenceMode { displayed, example };

struct BRecurrence {
    ExactPoly b;
    std::vector<ExactPoly> B; // B_0 .. B_{k-1}
};

// b^{(k)} and B_l^{(k)} per the recurrence; tilde variants drop A.  For
// k >= 3 the Harish-Chandra images chi(E^(l)), l >= 1 must be supplied.
BRecurrence b_recurrence(int n, int k, bool tilde, RecurrenceMode mode = RecurrenceMode::displayed,
                         const std::vector<ExactPoly>& user_chi = {});

// The polynomial g_{i,sign} with (T (x) pr) pr_{i,sign}(u (x) f_0)
// = g_{i,sign}(lambda, lambda') T u.  The plus case assembles the tilde
// recurrence against e_k(1 + 2 lambda_j); the minus case uses the dual
// standard representation, whose recurrence flips the sign of a and
// replaces chi(E0) by chi(E0) + n*a - sum lambda'_j, assembled against
// e_k(2 lambda_j - 1).
ExactPoly g_polynomial(int n, int i, int sign, RecurrenceMode mode = RecurrenceMode::displayed);

struct FactorCheckResult {
    bool success = false;
    Rat c;            // the constant multiple
    int shift = 0;    // +1 for +1/2, -1 for -1/2
    ExactPoly residual; // zero on success; the obstruction otherwise
};

// Find c and the half-shift s with g_{i,sign} = c * prod_j (lambda_i -
// lambda'_j + s/2); exact polynomial subtraction, never fuzzy.
FactorCheckResult factor_check(int n, int i, int sign, RecurrenceMode mode = RecurrenceMode::displayed);

// g_{i,-} must vanish under lambda_i = lambda'_1 + 1/2 (and g_{i,+} under
// lambda_i = lambda'_1 - 1/2).
bool vanishing_check(int n, int i, int sign, RecurrenceMode mode = RecurrenceMode::displayed);

// k-th elementary symmetric polynomial of the given polynomials.
ExactPoly elementary_symmetric(int nvars, int k, const std::vector<ExactPoly>& xs);

} // namespace ggp
