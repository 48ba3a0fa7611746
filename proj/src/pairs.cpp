#include "ggp/pairs.hpp"
#include "ggp/kbranch.hpp"

#include <algorithm>

namespace ggp {

namespace {

bool nc_sets_equal(const Decoration& d, const Decoration& dp) {
    return phi_nc_plus(d) == phi_nc_plus(dp);
}

KWeight coherent_kweight(const DiscreteSeriesData& d) {
    return kweight_from_vec(d.capital_lambda, d.lambda.p, d.lambda.q);
}

KWeight blattner_kweight(const DiscreteSeriesData& d) {
    return kweight_from_vec(d.mu, d.lambda.p, d.lambda.q);
}

void check_shapes(const HCParam& lambda, const HCParam& lambda_prime) {
    if (lambda_prime.p != lambda.p - 1 || lambda_prime.q != lambda.q)
        throw std::invalid_argument("lambda' must be a parameter for U(p-1,q)");
}

} // namespace

bool hom_nonzero(const HCParam& lambda, const HCParam& lambda_prime) {
    return is_ggp(build_signature(lambda, lambda_prime));
}

int mult_W(const HCParam& lambda, const HCParam& lambda_prime) {
    check_shapes(lambda, lambda_prime);
    auto d = classify_param(lambda);
    auto dp = classify_param(lambda_prime);
    if (hom_nonzero(lambda, lambda_prime) && nc_sets_equal(d.delta, dp.delta)) {
        // closed form under the lemma hypotheses: the q-blocks differ by 1/2
        for (int j = 0; j < lambda.q; ++j)
            if (lambda_prime.lambda[lambda_prime.p + j] != lambda.lambda[lambda.p + j] + HalfInt(1))
                return 0;
        return 1;
    }
    return restrict_mult_K(coherent_kweight(d), coherent_kweight(dp));
}

int mult_mu(const HCParam& lambda, const HCParam& lambda_prime) {
    check_shapes(lambda, lambda_prime);
    auto d = classify_param(lambda);
    auto dp = classify_param(lambda_prime);
    if (hom_nonzero(lambda, lambda_prime) && nc_sets_equal(d.delta, dp.delta)) {
        if (mult_W(lambda, lambda_prime) == 0)
            return 0;
        // additionally lambda'_i >= lambda_{i+1} + a_{i+1} - a_i on the p-block
        const HalfIntVec& a = d.t_delta;
        for (int i = 1; i <= lambda.p - 1; ++i) {
            HalfInt rhs = lambda.lambda[i] + a[i] - a[i - 1];
            if (!(lambda_prime.lambda[i - 1] >= rhs))
                return 0;
        }
        return 1;
    }
    return restrict_mult_K(blattner_kweight(d), blattner_kweight(dp));
}

PairReport classify_pair(const HCParam& lambda, const HCParam& lambda_prime) {
    check_shapes(lambda, lambda_prime);
    PairReport r;
    r.signature = build_signature(lambda, lambda_prime);
    r.hom_nonzero = is_ggp(r.signature);
    auto residue = reduce(r.signature);
    r.coherent = r.hom_nonzero && residue.size() == 1 && residue[0] == Sym::P;
    r.mult_W = mult_W(lambda, lambda_prime);
    r.mult_mu = mult_mu(lambda, lambda_prime);
    r.elementary = r.coherent && r.mult_mu == 1;
    r.degree_G = degree(r.signature.deco());
    r.degree_Gprime = degree(r.signature.deco_prime());
    if (r.coherent)
        r.distance = distance_to_elementary(lambda, lambda_prime);
    return r;
}

HCParam elementary_from_G(const HCParam& lambda) {
    auto d = classify_param(lambda);
    if (d.delta.signs.back() != '+')
        throw std::invalid_argument("decoration " + d.delta.signs + " does not end with '+'");
    // regularity at every +- boundary of the reference parameter
    int n = lambda.n();
    for (int a = 1; a < n; ++a) {
        if (d.w.w(a) <= lambda.p && d.w.w(a + 1) > lambda.p) {
            if (d.lambda_plus[a - 1] - d.lambda_plus[a] < HalfInt::from_int(2))
                throw std::invalid_argument(
                    "regularity violation: lambda_" + std::to_string(d.w.w(a)) + " - lambda_" +
                    std::to_string(d.w.w(a + 1)) + " = " +
                    (d.lambda_plus[a - 1] - d.lambda_plus[a]).str() + " < 2");
        }
    }
    HCParam out;
    out.p = lambda.p - 1;
    out.q = lambda.q;
    for (int i = 0; i < lambda.p - 1; ++i)
        out.lambda.push_back(lambda.lambda[i] - HalfInt(1));
    for (int j = 0; j < lambda.q; ++j)
        out.lambda.push_back(lambda.lambda[lambda.p + j] + HalfInt(1));
    out.validate();
    return out;
}

HCParam elementary_from_Gprime(const HCParam& lambda_prime, HalfInt lambda_p) {
    lambda_prime.validate();
    int p = lambda_prime.p + 1, q = lambda_prime.q;
    if ((((lambda_p.twice - (p + q + 1)) % 2) + 2) % 2 != 0)
        throw std::invalid_argument("lambda_p = " + lambda_p.str() + " is not on the Z + (p+q+1)/2 grid");
    HalfInt bound = lambda_prime.lambda[0] + HalfInt(1);
    bool have = false;
    for (int i = 0; i < lambda_prime.p; ++i) {
        HalfInt v = lambda_prime.lambda[i] + HalfInt(1);
        if (!have || v < bound)
            bound = v;
        have = true;
    }
    for (int j = 0; j < lambda_prime.q; ++j) {
        HalfInt v = lambda_prime.lambda[lambda_prime.p + j] - HalfInt(1);
        if (!have || v < bound)
            bound = v;
        have = true;
    }
    if (!(lambda_p < bound))
        throw std::invalid_argument("lambda_p = " + lambda_p.str() + " is not strictly below the bound " +
                                    bound.str());
    HCParam out;
    out.p = p;
    out.q = q;
    for (int i = 0; i < lambda_prime.p; ++i)
        out.lambda.push_back(lambda_prime.lambda[i] + HalfInt(1));
    out.lambda.push_back(lambda_p);
    for (int j = 0; j < lambda_prime.q; ++j)
        out.lambda.push_back(lambda_prime.lambda[lambda_prime.p + j] - HalfInt(1));
    out.validate();
    return out;
}

namespace {

std::vector<HCParam> support_members(const HCParam& lambda, HalfInt box) {
    int p = lambda.p, q = lambda.q;
    int n = p + q - 1;
    // lambda' grid: Z + (p+q)/2, |value| <= box
    std::vector<HalfInt> grid;
    HalfInt v = -box;
    if ((((v.twice - (p + q)) % 2) + 2) % 2 != 0)
        v = v + HalfInt(1);
    for (; v <= box; v = v + HalfInt::from_int(1))
        grid.push_back(v);
    std::vector<HCParam> out;
    // choose strictly decreasing p-block and q-block with disjoint values
    std::vector<int> pb(p - 1), qb(q);
    auto rec_q = [&](auto&& self, int j, int prev, const std::vector<int>& pbv) -> void {
        if (j == q) {
            HCParam cand;
            cand.p = p - 1;
            cand.q = q;
            for (int i : pbv)
                cand.lambda.push_back(grid[i]);
            for (int i : qb)
                cand.lambda.push_back(grid[i]);
            bool regular = true;
            for (int i : pbv)
                for (int k : qb)
                    if (i == k)
                        regular = false;
            if (regular && hom_nonzero(lambda, cand))
                out.push_back(cand);
            return;
        }
        for (int i = prev - 1; i >= 0; --i) {
            qb[j] = i;
            self(self, j + 1, i, pbv);
        }
    };
    auto rec_p = [&](auto&& self, int i, int prev) -> void {
        if (i == p - 1) {
            rec_q(rec_q, 0, static_cast<int>(grid.size()), pb);
            return;
        }
        for (int g = prev - 1; g >= 0; --g) {
            pb[i] = g;
            self(self, i + 1, g);
        }
    };
    // blocks are stored descending: index order high to low value
    // regenerate grid descending for convenience
    std::reverse(grid.begin(), grid.end());
    rec_p(rec_p, 0, static_cast<int>(grid.size()));
    (void)n;
    return out;
}

} // namespace

std::vector<SupportGroup> support_enumerate(const HCParam& lambda, HalfInt box) {
    lambda.validate();
    if (!(box > HalfInt(0)))
        throw std::invalid_argument("box must be positive");
    auto members = support_members(lambda, box);
    auto wider = support_members(lambda, box + HalfInt::from_int(2));
    std::map<Decoration, SupportGroup> groups;
    for (const auto& m : members) {
        Decoration dp = classify_param(m).delta;
        auto& g = groups[dp];
        g.delta_prime = dp;
        g.members.push_back(m);
    }
    std::map<Decoration, int> wide_count;
    for (const auto& m : wider)
        ++wide_count[classify_param(m).delta];
    std::vector<SupportGroup> out;
    for (auto& [dp, g] : groups) {
        std::sort(g.members.begin(), g.members.end(),
                  [](const HCParam& a, const HCParam& b) { return b.lambda < a.lambda; });
        g.truncated = wide_count[dp] > static_cast<int>(g.members.size());
        out.push_back(std::move(g));
    }
    return out;
}

HalfInt distance_to_elementary(const HCParam& lambda, const HCParam& lambda_prime) {
    auto pat = build_signature(lambda, lambda_prime);
    {
        auto residue = reduce(pat);
        if (!is_ggp(pat) || residue.size() != 1 || residue[0] != Sym::P)
            throw std::invalid_argument("pair is not coherent");
    }
    int p = lambda.p, q = lambda.q;
    // q-block of any elementary partner is forced by the W-multiplicity
    HalfIntVec sigma_q(q);
    for (int j = 0; j < q; ++j)
        sigma_q[j] = lambda_prime.lambda[lambda_prime.p + j] - HalfInt(1);

    // fixed values of the non-P pattern slots, in pattern order
    int m = pat.size();
    std::vector<std::optional<HalfInt>> fixed(m);
    {
        int im = 0, iop = 0, iom = 0;
        for (int a = 0; a < m; ++a)
            switch (pat.syms[a]) {
            case Sym::P: break;
            case Sym::M: fixed[a] = sigma_q[im++]; break;
            case Sym::OP: fixed[a] = lambda_prime.lambda[iop++]; break;
            case Sym::OM: fixed[a] = lambda_prime.lambda[lambda_prime.p + iom++]; break;
            }
    }
    HalfInt lo_cap = lambda.lambda[0];
    for (const auto& x : lambda.lambda)
        lo_cap = std::min(lo_cap, x);
    for (const auto& x : lambda_prime.lambda)
        lo_cap = std::min(lo_cap, x);
    lo_cap = lo_cap - HalfInt::from_int(p + 2);

    HalfIntVec sigma_p(p);
    std::optional<HalfInt> best;
    HalfInt partial(0);
    auto rec = [&](auto&& self, int a, int ip, HalfInt upper, bool has_upper) -> void {
        if (a == m) {
            HCParam sigma;
            sigma.p = p;
            sigma.q = q;
            sigma.lambda = sigma_p;
            sigma.lambda.insert(sigma.lambda.end(), sigma_q.begin(), sigma_q.end());
            sigma.validate();
            if (mult_mu(sigma, lambda_prime) == 1) {
                HalfInt total = partial;
                for (int j = 0; j < q; ++j)
                    total += (sigma_q[j] - lambda.lambda[p + j]).abs();
                if (!best || total < *best)
                    best = total;
            }
            return;
        }
        if (pat.syms[a] != Sym::P) {
            if (has_upper && !(*fixed[a] < upper))
                return; // chosen sigma values broke the pattern order
            self(self, a + 1, ip, *fixed[a], true);
            return;
        }
        // candidate values on lambda's grid, strictly below `upper`
        HalfInt start = has_upper ? upper - HalfInt(1) : lambda.lambda[ip] + HalfInt::from_int(p + 2);
        // align to the lambda grid
        if ((((start.twice - (p + q + 1)) % 2) + 2) % 2 != 0)
            start = start - HalfInt(1);
        for (HalfInt v = start; v >= lo_cap; v = v - HalfInt::from_int(1)) {
            HalfInt cost = (v - lambda.lambda[ip]).abs();
            if (best && partial + cost >= *best && v < lambda.lambda[ip])
                break; // moving further down only increases the cost
            if (best && partial + cost >= *best)
                continue;
            sigma_p[ip] = v;
            partial += cost;
            self(self, a + 1, ip + 1, v, true);
            partial -= cost;
        }
    };
    rec(rec, 0, 0, HalfInt(0), false);
    if (!best)
        throw std::logic_error("no elementary partner found for a coherent pair");
    return *best;
}

} // namespace ggp
