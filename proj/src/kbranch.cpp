#include "ggp/kbranch.hpp"

#include <algorithm>
#include <numeric>

namespace ggp {

namespace {

using Weight = std::vector<std::int64_t>;
using Character = std::map<Weight, std::int64_t>;

void check_weakly_decreasing(const HalfIntVec& e, const char* what) {
    for (std::size_t i = 1; i < e.size(); ++i)
        if (e[i - 1] < e[i])
            throw std::invalid_argument(std::string(what) + " is not weakly decreasing");
}

// Uniform shift making all entries integral; returns doubled shift applied.
std::pair<std::vector<std::int64_t>, std::int64_t> normalize_integral(const HalfIntVec& e) {
    std::int64_t shift2 = 0;
    if (!e.empty() && (((e[0].twice % 2) + 2) % 2) != 0)
        shift2 = 1; // add 1/2
    std::vector<std::int64_t> out(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        if ((((e[i].twice + shift2) % 2) + 2) % 2 != 0)
            throw std::invalid_argument("weight entries do not share one parity");
        out[i] = (e[i].twice + shift2) / 2;
    }
    return {out, shift2};
}

} // namespace

DominantWeight::DominantWeight(HalfIntVec e) : entries(std::move(e)) {
    check_weakly_decreasing(entries, "dominant weight");
    if (!uniform_parity(entries))
        throw std::invalid_argument("dominant weight entries do not share one parity");
}

KWeight kweight_from_vec(const HalfIntVec& v, int p, int q) {
    if (static_cast<int>(v.size()) != p + q)
        throw std::invalid_argument("K-weight length != p+q");
    KWeight w;
    w.part_p = DominantWeight(HalfIntVec(v.begin(), v.begin() + p));
    w.part_q = DominantWeight(HalfIntVec(v.begin() + p, v.end()));
    return w;
}

HalfIntVec kweight_to_vec(const KWeight& w) {
    HalfIntVec out = w.part_p.entries;
    out.insert(out.end(), w.part_q.entries.begin(), w.part_q.entries.end());
    return out;
}

KWeight kweight_dual(const KWeight& w) {
    auto dual_part = [](const DominantWeight& d) {
        HalfIntVec e;
        for (auto it = d.entries.rbegin(); it != d.entries.rend(); ++it)
            e.push_back(-*it);
        return DominantWeight(e);
    };
    return {dual_part(w.part_p), dual_part(w.part_q)};
}

std::string kweight_str(const KWeight& w) {
    return "(" + to_string(w.part_p.entries) + ";" + to_string(w.part_q.entries) + ")";
}

int restrict_mult_Um(const DominantWeight& mu, const DominantWeight& nu) {
    if (nu.rank() != mu.rank() - 1)
        throw std::invalid_argument("ranks must differ by one");
    for (int i = 0; i < nu.rank(); ++i)
        if (!(mu.entries[i] >= nu.entries[i] && nu.entries[i] >= mu.entries[i + 1]))
            return 0;
    return 1;
}

int restrict_mult_K(const KWeight& mu, const KWeight& nu) {
    if (nu.part_p.rank() != mu.part_p.rank() - 1 || nu.part_q.rank() != mu.part_q.rank())
        throw std::invalid_argument("K-weight shapes incompatible with U(p,q) -> U(p-1,q)");
    if (!(nu.part_q == mu.part_q))
        return 0;
    return restrict_mult_Um(mu.part_p, nu.part_p);
}

std::map<Weight, std::int64_t> gl_character(const Weight& mu) {
    for (std::size_t i = 1; i < mu.size(); ++i)
        if (mu[i - 1] < mu[i])
            throw std::invalid_argument("gl_character needs a dominant weight");
    // enumerate patterns, recording all row sums; convert to weights
    Character weights;
    std::size_t m = mu.size();
    // rows[r] = row of length m - r; recursion over rows collecting sums
    std::vector<std::int64_t> sums; // sums[r] = sum of row of length m-r
    std::vector<Weight> rows;
    rows.push_back(mu);
    sums.push_back(std::accumulate(mu.begin(), mu.end(), std::int64_t(0)));
    auto rec = [&](auto&& self) -> void {
        const Weight& top = rows.back();
        if (top.size() == 1) {
            Weight w(m);
            // sums[r] is the sum of the row of length m - r; the weight is
            // w_1 = sums[m-1], w_j = sums[m-j] - sums[m-j+1]
            w[0] = sums[m - 1];
            for (std::size_t j = 2; j <= m; ++j)
                w[j - 1] = sums[m - j] - sums[m - j + 1];
            weights[w] += 1;
            return;
        }
        std::size_t len = top.size() - 1;
        Weight next(len);
        auto inner = [&](auto&& self2, std::size_t idx) -> void {
            if (idx == len) {
                rows.push_back(next);
                sums.push_back(std::accumulate(next.begin(), next.end(), std::int64_t(0)));
                self(self);
                rows.pop_back();
                sums.pop_back();
                return;
            }
            for (std::int64_t v = top[idx + 1]; v <= top[idx]; ++v) {
                if (idx > 0 && next[idx - 1] < v)
                    continue;
                next[idx] = v;
                self2(self2, idx + 1);
            }
        };
        inner(inner, 0);
    };
    rec(rec);
    return weights;
}

namespace {

// character of F^{U(p)}(a) x F^{U(q)}(b) as a joint weight multiset
Character k_character(const Weight& a, const Weight& b) {
    Character ca = gl_character(a), cb = gl_character(b), out;
    for (const auto& [wa, ma] : ca)
        for (const auto& [wb, mb] : cb) {
            Weight w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out[w] += ma * mb;
        }
    return out;
}

bool block_dominant(const Weight& w, int p) {
    for (int i = 1; i < p; ++i)
        if (w[i - 1] < w[i])
            return false;
    for (std::size_t i = p + 1; i < w.size(); ++i)
        if (w[i - 1] < w[i])
            return false;
    return true;
}

// Decompose a virtual K-character (non-negative multiset) by repeatedly
// peeling the lexicographically largest weight, which is block-dominant.
std::vector<std::pair<Weight, std::int64_t>> peel_K(Character weights, int p) {
    std::vector<std::pair<Weight, std::int64_t>> out;
    while (!weights.empty()) {
        auto it = std::prev(weights.end()); // lexicographically largest
        Weight hw = it->first;
        std::int64_t mult = it->second;
        if (mult < 0 || !block_dominant(hw, p))
            throw std::logic_error("character peeling produced a non-dominant leading weight");
        Weight a(hw.begin(), hw.begin() + p), b(hw.begin() + p, hw.end());
        Character comp = k_character(a, b);
        for (const auto& [w, m] : comp) {
            auto jt = weights.find(w);
            if (jt == weights.end() || jt->second < mult * m)
                throw std::logic_error("character peeling went negative");
            jt->second -= mult * m;
            if (jt->second == 0)
                weights.erase(jt);
        }
        out.emplace_back(hw, mult);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<std::pair<KWeight, std::int64_t>> gl_restrict_decompose(const DominantWeight& nu, int p, int q) {
    if (p + q != nu.rank())
        throw std::invalid_argument("p+q must equal the rank of nu");
    if (nu.rank() > kMaxGLRank)
        throw std::invalid_argument("rank bound exceeded for gl_restrict (max " + std::to_string(kMaxGLRank) + ")");
    auto [ni, shift2] = normalize_integral(nu.entries);
    auto parts = peel_K(gl_character(ni), p);
    std::vector<std::pair<KWeight, std::int64_t>> out;
    for (const auto& [w, m] : parts) {
        HalfIntVec v(w.size());
        for (std::size_t i = 0; i < w.size(); ++i)
            v[i] = HalfInt(2 * w[i] - shift2); // undo the uniform shift
        out.emplace_back(kweight_from_vec(v, p, q), m);
    }
    return out;
}

std::int64_t gl_restrict_mult(const DominantWeight& nu, const KWeight& alpha, int p, int q) {
    for (const auto& [w, m] : gl_restrict_decompose(nu, p, q))
        if (w == alpha)
            return m;
    return 0;
}

std::vector<std::pair<DominantWeight, std::int64_t>> tensor_decompose_Um(const DominantWeight& a,
                                                                         const DominantWeight& b) {
    if (a.rank() != b.rank())
        throw std::invalid_argument("tensor factors must have equal rank");
    if (a.rank() > kMaxTensorRank)
        throw std::invalid_argument("rank bound exceeded for tensor (max " + std::to_string(kMaxTensorRank) + ")");
    auto [ai, sa] = normalize_integral(a.entries);
    auto [bi, sb] = normalize_integral(b.entries);
    Character ca = gl_character(ai), cb = gl_character(bi), prod;
    for (const auto& [wa, ma] : ca)
        for (const auto& [wb, mb] : cb) {
            Weight w(wa.size());
            for (std::size_t i = 0; i < w.size(); ++i)
                w[i] = wa[i] + wb[i];
            prod[w] += ma * mb;
        }
    auto parts = peel_K(std::move(prod), a.rank()); // single block: p = rank
    std::vector<std::pair<DominantWeight, std::int64_t>> out;
    for (const auto& [w, m] : parts) {
        HalfIntVec v(w.size());
        for (std::size_t i = 0; i < w.size(); ++i)
            v[i] = HalfInt(2 * w[i] - sa - sb);
        out.emplace_back(DominantWeight(v), m);
    }
    return out;
}

std::int64_t tensor_mult_Um(const DominantWeight& a, const DominantWeight& b, const DominantWeight& c) {
    for (const auto& [w, m] : tensor_decompose_Um(a, b))
        if (w == c)
            return m;
    return 0;
}

std::int64_t tensor_mult_K(const KWeight& a, const KWeight& b, const KWeight& c) {
    std::int64_t mp = tensor_mult_Um(a.part_p, b.part_p, c.part_p);
    if (mp == 0)
        return 0;
    return mp * tensor_mult_Um(a.part_q, b.part_q, c.part_q);
}

std::int64_t weyl_dim(const DominantWeight& mu) {
    int m = mu.rank();
    __int128 num = 1, den = 1;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            num *= (mu.entries[i].twice - mu.entries[j].twice) / 2 + (j - i);
            den *= (j - i);
        }
    if (den == 0 || num % den != 0)
        throw std::logic_error("Weyl dimension is not integral");
    return static_cast<std::int64_t>(num / den);
}

std::int64_t weyl_dim_K(const KWeight& mu) { return weyl_dim(mu.part_p) * weyl_dim(mu.part_q); }

std::vector<std::pair<Decoration, KWeight>> wedge_p_plus_decomposition(int p, int q, int j) {
    if (j < 0 || j > p * q)
        throw std::invalid_argument("degree j out of range [0, pq]");
    std::vector<std::pair<Decoration, KWeight>> out;
    for (const auto& d : enumerate_decorations(p, q))
        if (degree(d) == j)
            out.emplace_back(d, kweight_from_vec(t_delta(d), p, q));
    return out;
}

bool prv_check(const KWeight& s, const DominantWeight& nu, const std::vector<int>& wp,
               const std::vector<int>& wq, int p, int q) {
    if (static_cast<int>(wp.size()) != p || static_cast<int>(wq.size()) != q)
        throw std::invalid_argument("block permutations must have sizes p and q");
    if (nu.rank() != p + q)
        throw std::invalid_argument("nu must have rank p+q");
    HalfIntVec target = kweight_to_vec(s);
    for (int i = 0; i < p; ++i)
        target[i] += nu.entries[wp[i]];
    for (int j2 = 0; j2 < q; ++j2)
        target[p + j2] += nu.entries[p + wq[j2]];
    KWeight tgt = kweight_from_vec(target, p, q); // throws if not dominant
    std::int64_t total = 0;
    for (const auto& [tau, m] : gl_restrict_decompose(nu, p, q))
        total += m * tensor_mult_K(s, tau, tgt);
    return total == 1;
}

bool change_of_coeff_precondition(const KWeight& w_pi, const std::vector<KWeight>& constituents) {
    KWeight dual = kweight_dual(w_pi);
    std::int64_t count = 0;
    for (const auto& c : constituents)
        if (c == dual)
            ++count;
    return count == 1;
}

} // namespace ggp
