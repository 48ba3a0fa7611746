#pragma once

#include "ggp/params.hpp"

#include <cstdint>
#include <map>

namespace ggp {

// Highest weight of an irreducible finite-dimensional U(m)-representation:
// weakly decreasing, uniform parity (integral or uniformly half-integral).
struct DominantWeight {
    HalfIntVec entries;

    DominantWeight() = default;
    explicit DominantWeight(HalfIntVec e);
    int rank() const { return static_cast<int>(entries.size()); }

    friend bool operator==(const DominantWeight& a, const DominantWeight& b) { return a.entries == b.entries; }
    friend bool operator<(const DominantWeight& a, const DominantWeight& b) { return a.entries < b.entries; }
};

// Highest weight for K = U(p) x U(q).
struct KWeight {
    DominantWeight part_p;
    DominantWeight part_q;

    friend bool operator==(const KWeight& a, const KWeight& b) {
        return a.part_p == b.part_p && a.part_q == b.part_q;
    }
    friend bool operator<(const KWeight& a, const KWeight& b) {
        if (a.part_p == b.part_p)
            return a.part_q < b.part_q;
        return a.part_p < b.part_p;
    }
};

KWeight kweight_from_vec(const HalfIntVec& v, int p, int q);
HalfIntVec kweight_to_vec(const KWeight& w);
// dual of F^{U(p)}(a) x F^{U(q)}(b): negate and reverse each part
KWeight kweight_dual(const KWeight& w);
std::string kweight_str(const KWeight& w);

// Desk-scale guards; exceeding them is a hard error, never a truncation.
inline constexpr int kMaxGLRank = 6;
inline constexpr int kMaxTensorRank = 4;

// Weyl branching U(m) -> U(m-1): 1 iff mu_1 >= nu_1 >= mu_2 >= ... >= nu_{m-1} >= mu_m.
int restrict_mult_Um(const DominantWeight& mu, const DominantWeight& nu);

// K = U(p) x U(q) -> K' = U(p-1) x U(q): p-parts interlace, q-parts equal.
int restrict_mult_K(const KWeight& mu, const KWeight& nu);

// Weight multiset of F^{U(m)}(mu) via Gelfand-Tsetlin patterns (integral mu).
std::map<std::vector<std::int64_t>, std::int64_t> gl_character(const std::vector<std::int64_t>& mu);

// Multiplicity of F^K(alpha) in F^{GL_{p+q}}(nu)|_{GL_p x GL_q}, by
// character brute force (GT weight multiset, then highest-weight peeling).
std::int64_t gl_restrict_mult(const DominantWeight& nu, const KWeight& alpha, int p, int q);
// Full decomposition, deterministic order.
std::vector<std::pair<KWeight, std::int64_t>> gl_restrict_decompose(const DominantWeight& nu, int p, int q);

// Littlewood-Richardson multiplicity [c : a (x) b] for U(m), by character
// brute force.
std::int64_t tensor_mult_Um(const DominantWeight& a, const DominantWeight& b, const DominantWeight& c);
std::vector<std::pair<DominantWeight, std::int64_t>> tensor_decompose_Um(const DominantWeight& a,
                                                                         const DominantWeight& b);
std::int64_t tensor_mult_K(const KWeight& a, const KWeight& b, const KWeight& c);

// prod_{i<j} (mu_i - mu_j + j - i) / (j - i), exact.
std::int64_t weyl_dim(const DominantWeight& mu);
std::int64_t weyl_dim_K(const KWeight& mu);

// All decorations of degree j with their t(delta) as K-weights; the summed
// Weyl dimensions give binom(pq, j).
std::vector<std::pair<Decoration, KWeight>> wedge_p_plus_decomposition(int p, int q, int j);

// [F^K(s + (wp nu^(p); wq nu^(q))) : F^K(s) (x) F^G(nu)|_K] == 1, computed
// by summing gl_restrict_mult(nu, tau) * tensor_mult_K(s, tau, target).
// wp, wq are permutations of {0..p-1} and {0..q-1} applied to the blocks.
bool prv_check(const KWeight& s, const DominantWeight& nu, const std::vector<int>& wp,
               const std::vector<int>& wq, int p, int q);

// dim Hom_K(W_pi^vee, V) == 1, with V given by its constituent multiset.
bool change_of_coeff_precondition(const KWeight& w_pi, const std::vector<KWeight>& constituents);

} // namespace ggp
