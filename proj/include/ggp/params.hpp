#pragma once

#include "ggp/halfint.hpp"

#include <utility>

namespace ggp {

// Sign string with p pluses and q minuses, indexing the family (Weyl
// chamber relative to the compact positive system) a discrete series
// representation of U(p,q) belongs to.
struct Decoration {
    std::string signs; // characters '+' and '-'

    Decoration() = default;
    explicit Decoration(std::string s);

    int p() const;
    int q() const;
    int size() const { return static_cast<int>(signs.size()); }

    friend bool operator==(const Decoration& a, const Decoration& b) { return a.signs == b.signs; }
    friend bool operator<(const Decoration& a, const Decoration& b) { return a.signs < b.signs; }
};

// Minimal-length coset representative for W_K \ W_G, one-line notation:
// perm[a-1] = w(a), the coordinate index placed at position a.
struct KostantPerm {
    std::vector<int> perm;
    int p = 0;
    int q = 0;

    int w(int a) const { return perm[a - 1]; }
    int winv(int i) const; // position of index i

    // w^{-1} increasing on {1..p} and on {p+1..p+q}
    bool is_kostant() const;
    // number of inversions; for w in W^k this equals #Delta^+(w)
    int length() const;
};

// Harish-Chandra parameter of a discrete series of U(p,q): the p-block
// occupies entries 1..p and the q-block entries p+1..p+q, each strictly
// decreasing, all p+q entries distinct, and 2*lambda_i = p+q+1 (mod 2).
struct HCParam {
    int p = 0;
    int q = 0;
    HalfIntVec lambda;

    int n() const { return p + q; }
    HalfInt at(int i) const { return lambda[i - 1]; } // 1-based
    HalfIntVec p_block() const { return {lambda.begin(), lambda.begin() + p}; }
    HalfIntVec q_block() const { return {lambda.begin() + p, lambda.end()}; }

    // Throws std::invalid_argument naming the violated inequality.
    void validate() const;

    friend bool operator==(const HCParam& a, const HCParam& b) {
        return a.p == b.p && a.q == b.q && a.lambda == b.lambda;
    }
    friend bool operator<(const HCParam& a, const HCParam& b) { return a.lambda < b.lambda; }
};

// Everything derivable from one Harish-Chandra parameter.
struct DiscreteSeriesData {
    HCParam lambda;
    HalfIntVec lambda_plus; // strictly decreasing reference parameter
    KostantPerm w;
    Decoration delta;
    HalfIntVec mu;             // Blattner parameter  lambda + w rho_g - 2 rho_c
    HalfIntVec capital_lambda; // coherent highest weight  lambda - rho_g
    int degree = 0;            // q(delta) = pq - l(w)
    std::vector<std::pair<int, int>> phi_nc; // (i,j) with 1 <= i <= p < j <= p+q
    HalfIntVec t_delta;                      // sum over phi_nc of e_i - e_j
};

std::vector<Decoration> enumerate_decorations(int p, int q);

KostantPerm deco_to_w(const Decoration& delta);
Decoration w_to_deco(const KostantPerm& w);

// rho for gl_{p+q}: ((p+q-1)/2, ..., (1-p-q)/2)
HalfIntVec rho_g(int p, int q);
// rho for k = gl_p + gl_q: ((p-1)/2,...,(1-p)/2; (q-1)/2,...,(1-q)/2)
HalfIntVec rho_c(int p, int q);
// rho(delta) = w rho_g, with (w nu)_i = nu_{w^{-1}(i)}
HalfIntVec rho_delta(const Decoration& delta);

std::vector<std::pair<int, int>> phi_nc_plus(const Decoration& delta);
int degree(const Decoration& delta);
HalfIntVec t_delta(const Decoration& delta);

// (w nu)_i = nu_{w^{-1}(i)}
HalfIntVec apply_perm(const KostantPerm& w, const HalfIntVec& nu);

DiscreteSeriesData classify_param(const HCParam& lambda);

// lambda from (lambda_plus, delta): place the sorted values back into the
// chamber C(delta).
HCParam assemble_param(const HalfIntVec& lambda_plus, const Decoration& delta);

// lambda^vee = -sigma_0 lambda (sigma_0 reverses each block), delta^vee the
// reversed sign string.
HCParam dual_param(const HCParam& lambda);
DiscreteSeriesData dual(const DiscreteSeriesData& data);

// Textual grammar: comma-separated exact rationals, ";" between blocks.
// "15,5,0;20,10"  or  "11/2,1/2;15/2,7/2".  A parameter with q = 0 has no ";".
HCParam parse_param(const std::string& text);
std::string format_param(const HCParam& lambda);

} // namespace ggp
