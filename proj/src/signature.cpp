#include "ggp/signature.hpp"

#include <algorithm>
#include <functional>

namespace ggp {

namespace {

bool is_lambda_side(Sym s) { return s == Sym::P || s == Sym::M; }

const char* sym_utf8(Sym s) {
    switch (s) {
    case Sym::P: return "+";
    case Sym::M: return "−";
    case Sym::OP: return "⊕";
    case Sym::OM: return "⊖";
    }
    return "?";
}

const char* sym_ascii(Sym s) {
    switch (s) {
    case Sym::P: return "+";
    case Sym::M: return "-";
    case Sym::OP: return "O+";
    case Sym::OM: return "O-";
    }
    return "?";
}

// Blattner parameter of the parameter built from a pattern realization.
HalfIntVec blattner_of(const HCParam& lam, const Decoration& deco) {
    HalfIntVec rc = rho_c(lam.p, lam.q);
    return lam.lambda + rho_delta(deco) - rc - rc;
}

HalfIntVec coherent_of(const HCParam& lam) { return lam.lambda - rho_g(lam.p, lam.q); }

// [F^K(u) : F^{K'}(u')] for K = U(p) x U(q), K' = U(p-1) x U(q):
// p-parts interlace weakly, q-parts coincide.
bool k_restriction_nonzero(const HalfIntVec& u, const HalfIntVec& uprime, int p, int q) {
    for (int j = 0; j < q; ++j)
        if (u[p + j] != uprime[p - 1 + j])
            return false;
    for (int i = 0; i + 1 < p; ++i)
        if (!(u[i] >= uprime[i] && uprime[i] >= u[i + 1]))
            return false;
    return true;
}

// Assign the positions of a pattern strictly descending values consistent
// with both parity grids, gaps indexed by `gaps` (cross gaps are odd
// multiples of 1/2, same-side gaps are integers).
std::pair<HCParam, HCParam> realize(const InterleavingPattern& pat, const std::vector<HalfInt>& values) {
    HCParam lam, lamp;
    lam.p = pat.p;
    lam.q = pat.q;
    lamp.p = pat.p - 1;
    lamp.q = pat.q;
    lam.lambda.resize(pat.p + pat.q);
    lamp.lambda.resize(pat.p + pat.q - 1);
    int ip = 0, im = 0, iop = 0, iom = 0;
    for (int a = 0; a < pat.size(); ++a) {
        switch (pat.syms[a]) {
        case Sym::P: lam.lambda[ip++] = values[a]; break;
        case Sym::M: lam.lambda[pat.p + im++] = values[a]; break;
        case Sym::OP: lamp.lambda[iop++] = values[a]; break;
        case Sym::OM: lamp.lambda[pat.p - 1 + iom++] = values[a]; break;
        }
    }
    return {lam, lamp};
}

using WitnessTest = std::function<bool(const HCParam&, const HCParam&)>;

std::optional<std::pair<HCParam, HCParam>>
search_witness(const InterleavingPattern& pat, int gmax, const WitnessTest& test) {
    int m = pat.size();
    if (m == 0 || gmax < 1)
        return std::nullopt;
    // bottom entry anchors its parity grid
    HalfInt base = is_lambda_side(pat.syms[m - 1]) ? HalfInt::half(pat.p + pat.q + 1)
                                                   : HalfInt::half(pat.p + pat.q);
    // per-gap alphabet in doubled units: cross 1,3,5,..; same 2,4,6,..
    std::vector<int> step(m - 1), choice(m - 1, 0);
    for (int a = 0; a < m - 1; ++a)
        step[a] = (is_lambda_side(pat.syms[a]) != is_lambda_side(pat.syms[a + 1])) ? 1 : 2;
    std::vector<HalfInt> values(m);
    while (true) {
        // gap at slot a: cross-side (2*choice+1)/2, same-side choice+1
        values[m - 1] = base;
        for (int a = m - 2; a >= 0; --a) {
            int doubled_gap = (step[a] == 1) ? (2 * choice[a] + 1) : (2 * (choice[a] + 1));
            values[a] = values[a + 1] + HalfInt(doubled_gap);
        }
        auto [lam, lamp] = realize(pat, values);
        if (test(lam, lamp))
            return std::make_pair(lam, lamp);
        int a = 0;
        for (; a < m - 1; ++a) {
            if (++choice[a] < gmax)
                break;
            choice[a] = 0;
        }
        if (a == m - 1)
            return std::nullopt;
    }
}

} // namespace

Decoration InterleavingPattern::deco() const {
    std::string s;
    for (Sym x : syms)
        if (x == Sym::P)
            s.push_back('+');
        else if (x == Sym::M)
            s.push_back('-');
    return Decoration(s);
}

Decoration InterleavingPattern::deco_prime() const {
    std::string s;
    for (Sym x : syms)
        if (x == Sym::OP)
            s.push_back('+');
        else if (x == Sym::OM)
            s.push_back('-');
    return Decoration(s);
}

std::string pattern_text(const std::vector<Sym>& syms, bool ascii) {
    std::string out;
    for (Sym s : syms)
        out += ascii ? sym_ascii(s) : sym_utf8(s);
    return out;
}

std::string pattern_text(const InterleavingPattern& pat, bool ascii) { return pattern_text(pat.syms, ascii); }

InterleavingPattern parse_pattern(const std::string& text) {
    InterleavingPattern pat;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text.compare(i, 1, "+") == 0) {
            pat.syms.push_back(Sym::P);
            i += 1;
        } else if (text.compare(i, 1, "-") == 0) {
            pat.syms.push_back(Sym::M);
            i += 1;
        } else if (text.compare(i, 2, "O+") == 0) {
            pat.syms.push_back(Sym::OP);
            i += 2;
        } else if (text.compare(i, 2, "O-") == 0) {
            pat.syms.push_back(Sym::OM);
            i += 2;
        } else if (text.compare(i, 3, "−") == 0) {
            pat.syms.push_back(Sym::M);
            i += 3;
        } else if (text.compare(i, 3, "⊕") == 0) {
            pat.syms.push_back(Sym::OP);
            i += 3;
        } else if (text.compare(i, 3, "⊖") == 0) {
            pat.syms.push_back(Sym::OM);
            i += 3;
        } else if (text[i] == ' ') {
            i += 1;
        } else {
            throw std::invalid_argument("unrecognized pattern symbol at '" + text.substr(i) + "'");
        }
    }
    pat.p = static_cast<int>(std::count(pat.syms.begin(), pat.syms.end(), Sym::P));
    pat.q = static_cast<int>(std::count(pat.syms.begin(), pat.syms.end(), Sym::M));
    int op = static_cast<int>(std::count(pat.syms.begin(), pat.syms.end(), Sym::OP));
    int om = static_cast<int>(std::count(pat.syms.begin(), pat.syms.end(), Sym::OM));
    if (op != pat.p - 1 || om != pat.q)
        throw std::invalid_argument("pattern symbol counts are not (p, q, p-1, q)");
    return pat;
}

InterleavingPattern build_signature(const HCParam& lambda, const HCParam& lambda_prime) {
    lambda.validate();
    lambda_prime.validate();
    if (lambda_prime.p != lambda.p - 1 || lambda_prime.q != lambda.q)
        throw std::invalid_argument("lambda' must be a parameter for U(p-1,q)");
    struct Entry {
        HalfInt v;
        Sym s;
    };
    std::vector<Entry> entries;
    for (int i = 0; i < lambda.p; ++i)
        entries.push_back({lambda.lambda[i], Sym::P});
    for (int j = 0; j < lambda.q; ++j)
        entries.push_back({lambda.lambda[lambda.p + j], Sym::M});
    for (int i = 0; i < lambda_prime.p; ++i)
        entries.push_back({lambda_prime.lambda[i], Sym::OP});
    for (int j = 0; j < lambda_prime.q; ++j)
        entries.push_back({lambda_prime.lambda[lambda_prime.p + j], Sym::OM});
    std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.v > b.v; });
    InterleavingPattern pat;
    pat.p = lambda.p;
    pat.q = lambda.q;
    for (const auto& e : entries)
        pat.syms.push_back(e.s);
    return pat;
}

bool is_ggp(const InterleavingPattern& pat) {
    auto allowed = [](Sym a, Sym b) {
        switch (a) {
        case Sym::P: return b == Sym::OP || b == Sym::M;
        case Sym::M: return b == Sym::OM || b == Sym::P;
        case Sym::OP: return b == Sym::P || b == Sym::OM;
        case Sym::OM: return b == Sym::M || b == Sym::OP;
        }
        return false;
    };
    for (int a = 0; a + 1 < pat.size(); ++a)
        if (!allowed(pat.syms[a], pat.syms[a + 1]))
            return false;
    return true;
}

std::vector<Sym> reduce(const InterleavingPattern& pat) {
    std::vector<Sym> s = pat.syms;
    bool changed = true;
    while (changed && s.size() >= 2) {
        changed = false;
        if ((s[0] == Sym::P && s[1] == Sym::OP) || (s[0] == Sym::OM && s[1] == Sym::M)) {
            s.erase(s.begin(), s.begin() + 2);
            changed = true;
            continue;
        }
        auto n = s.size();
        if (s[n - 2] == Sym::OP && s[n - 1] == Sym::P) {
            s.resize(n - 2);
            changed = true;
        }
    }
    return s;
}

std::vector<Sym> reduce_weak(const InterleavingPattern& pat) {
    std::vector<Sym> s = pat.syms;
    while (s.size() >= 2 && ((s[0] == Sym::P && s[1] == Sym::OP) || (s[0] == Sym::OM && s[1] == Sym::M)))
        s.erase(s.begin(), s.begin() + 2);
    return s;
}

std::optional<std::pair<HCParam, HCParam>> find_mu_witness(const InterleavingPattern& pat, int gmax) {
    Decoration d = pat.deco(), dp = pat.deco_prime();
    return search_witness(pat, gmax, [&](const HCParam& lam, const HCParam& lamp) {
        return k_restriction_nonzero(blattner_of(lam, d), blattner_of(lamp, dp), pat.p, pat.q);
    });
}

std::optional<std::pair<HCParam, HCParam>> find_W_witness(const InterleavingPattern& pat, int gmax) {
    return search_witness(pat, gmax, [&](const HCParam& lam, const HCParam& lamp) {
        return k_restriction_nonzero(coherent_of(lam), coherent_of(lamp), pat.p, pat.q);
    });
}

ConditionFlags condition_flags(const InterleavingPattern& pat,
                               const std::optional<std::pair<HCParam, HCParam>>& witness, int gmax) {
    ConditionFlags f;
    f.ggp = is_ggp(pat);
    f.mu_search_gmax = gmax;

    Decoration d = pat.deco(), dp = pat.deco_prime();
    f.cond_q = degree(d) == degree(dp);

    // (delta+): delta equals delta' with every circled sign filled and one
    // '+' appended at the right
    f.cond_delta_plus = d.signs == dp.signs + "+";

    // (nc): same noncompact root sets.  The G'-side roots use the ambient
    // coordinates, where the q-blocks of G and G' coincide, so the sets
    // match exactly when the (plus ordinal, minus ordinal) pairs do.
    {
        auto ordinals = [](const Decoration& deco) {
            auto pairs = phi_nc_plus(deco);
            for (auto& [i, j] : pairs)
                j -= deco.p();
            return pairs;
        };
        f.cond_nc = ordinals(d) == ordinals(dp);
    }

    // (-ominus-): positional inequalities on the pattern
    {
        std::vector<int> posP, posM, posOP, posOM;
        for (int a = 0; a < pat.size(); ++a)
            switch (pat.syms[a]) {
            case Sym::P: posP.push_back(a); break;
            case Sym::M: posM.push_back(a); break;
            case Sym::OP: posOP.push_back(a); break;
            case Sym::OM: posOM.push_back(a); break;
            }
        bool ok = true;
        for (std::size_t i = 0; i < posOP.size() && ok; ++i)
            ok = posP[i] < posOP[i] && i + 1 < posP.size() && posOP[i] < posP[i + 1];
        for (std::size_t j = 0; j < posOM.size() && ok; ++j) {
            if (j > 0 && !(posM[j - 1] < posOM[j]))
                ok = false;
            if (!(posOM[j] < posM[j]))
                ok = false;
        }
        f.cond_minus_ominus_minus = ok;
    }

    f.reduction_residue = reduce(pat);
    f.cond_W = f.reduction_residue.size() == 1 && f.reduction_residue[0] == Sym::P;
    f.coherent = f.ggp && f.cond_W;

    if (witness) {
        f.cond_mu = k_restriction_nonzero(blattner_of(witness->first, d), blattner_of(witness->second, dp),
                                          pat.p, pat.q);
    } else {
        f.cond_mu = find_mu_witness(pat, gmax).has_value();
    }
    return f;
}

std::pair<InterleavingPattern, std::pair<HCParam, HCParam>>
expand(const InterleavingPattern& pat, ExpandRule rule, const std::pair<HCParam, HCParam>& witness) {
    const HCParam& lam = witness.first;
    const HCParam& lamp = witness.second;
    lam.validate();
    lamp.validate();
    {
        auto sig = build_signature(lam, lamp);
        if (!(sig == pat))
            throw std::invalid_argument("witness does not realize the pattern");
    }
    HalfInt half(1);
    auto shift_down = [&](const HalfIntVec& v) {
        HalfIntVec out(v.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            out[i] = v[i] - half;
        return out;
    };
    HalfInt maxv = lam.lambda[0], minv = lam.lambda[0];
    for (const auto& x : lam.lambda) {
        maxv = std::max(maxv, x);
        minv = std::min(minv, x);
    }
    for (const auto& x : lamp.lambda) {
        maxv = std::max(maxv, x);
        minv = std::min(minv, x);
    }

    InterleavingPattern out_pat;
    HCParam nl, nlp;
    switch (rule) {
    case ExpandRule::prepend_plus_oplus: {
        // lambda~ = (l0, lambda - 1/2),  lambda~' = (l0', lambda' - 1/2)
        nl.p = lam.p + 1;
        nl.q = lam.q;
        nlp.p = lamp.p + 1;
        nlp.q = lamp.q;
        HalfIntVec sl = shift_down(lam.lambda), slp = shift_down(lamp.lambda);
        // smallest new primed top strictly above every shifted entry, then
        // the new lambda top one half step above it
        HalfInt top_shifted = maxv - half;
        HalfInt l0p = top_shifted + half; // lands on the opposite grid of the larger shifted side
        // ensure correct parity for the U(p,q) parameter: Z + (p+q+1)/2
        if ((((l0p.twice - (nlp.p + nlp.q + 1)) % 2) + 2) % 2 != 0)
            l0p = l0p + half;
        while (!(l0p > top_shifted))
            l0p = l0p + HalfInt::from_int(1);
        HalfInt l0 = l0p + half;
        nl.lambda.push_back(l0);
        nl.lambda.insert(nl.lambda.end(), sl.begin(), sl.begin() + lam.p);
        nl.lambda.insert(nl.lambda.end(), sl.begin() + lam.p, sl.end());
        nlp.lambda.push_back(l0p);
        nlp.lambda.insert(nlp.lambda.end(), slp.begin(), slp.begin() + lamp.p);
        nlp.lambda.insert(nlp.lambda.end(), slp.begin() + lamp.p, slp.end());
        out_pat.syms = {Sym::P, Sym::OP};
        out_pat.syms.insert(out_pat.syms.end(), pat.syms.begin(), pat.syms.end());
        break;
    }
    case ExpandRule::prepend_ominus_minus: {
        // lambda~ = (lambda^(p) - 1/2; l0, lambda^(q) - 1/2), l0 = l0' - 1/2
        nl.p = lam.p;
        nl.q = lam.q + 1;
        nlp.p = lamp.p;
        nlp.q = lamp.q + 1;
        HalfIntVec sl = shift_down(lam.lambda), slp = shift_down(lamp.lambda);
        HalfInt top_shifted = maxv - half;
        HalfInt l0 = top_shifted + half;
        if ((((l0.twice - (nl.p + nl.q + 1)) % 2) + 2) % 2 != 0)
            l0 = l0 + half;
        while (!(l0 > top_shifted))
            l0 = l0 + HalfInt::from_int(1);
        HalfInt l0p = l0 + half;
        nl.lambda.assign(sl.begin(), sl.begin() + lam.p);
        nl.lambda.push_back(l0);
        nl.lambda.insert(nl.lambda.end(), sl.begin() + lam.p, sl.end());
        nlp.lambda.assign(slp.begin(), slp.begin() + lamp.p);
        nlp.lambda.push_back(l0p);
        nlp.lambda.insert(nlp.lambda.end(), slp.begin() + lamp.p, slp.end());
        out_pat.syms = {Sym::OM, Sym::M};
        out_pat.syms.insert(out_pat.syms.end(), pat.syms.begin(), pat.syms.end());
        break;
    }
    case ExpandRule::append_oplus_plus: {
        // lambda~ = (lambda^(p) - 1/2, l0; lambda^(q) - 1/2), bottom pair l0' > l0
        nl.p = lam.p + 1;
        nl.q = lam.q;
        nlp.p = lamp.p + 1;
        nlp.q = lamp.q;
        HalfIntVec sl = shift_down(lam.lambda), slp = shift_down(lamp.lambda);
        HalfInt bottom_shifted = minv - half;
        HalfInt l0p = bottom_shifted - half;
        if ((((l0p.twice - (nlp.p + nlp.q + 1)) % 2) + 2) % 2 != 0)
            l0p = l0p - half;
        while (!(l0p < bottom_shifted))
            l0p = l0p - HalfInt::from_int(1);
        HalfInt l0 = l0p - half;
        nl.lambda.assign(sl.begin(), sl.begin() + lam.p);
        nl.lambda.push_back(l0);
        nl.lambda.insert(nl.lambda.end(), sl.begin() + lam.p, sl.end());
        nlp.lambda.assign(slp.begin(), slp.begin() + lamp.p);
        nlp.lambda.push_back(l0p);
        nlp.lambda.insert(nlp.lambda.end(), slp.begin() + lamp.p, slp.end());
        out_pat.syms = pat.syms;
        out_pat.syms.push_back(Sym::OP);
        out_pat.syms.push_back(Sym::P);
        break;
    }
    }
    out_pat.p = nl.p;
    out_pat.q = nl.q;
    nl.validate();
    nlp.validate();
    auto rebuilt = build_signature(nl, nlp);
    if (!(rebuilt == out_pat))
        throw std::logic_error("expanded witness fails to realize the expanded pattern: got " +
                               pattern_text(rebuilt, true));
    return {out_pat, {nl, nlp}};
}

std::vector<std::pair<InterleavingPattern, ConditionFlags>> enumerate_patterns(int p, int q, int gmax) {
    if (p < 1 || q < 0)
        throw std::invalid_argument("need p >= 1, q >= 0");
    std::vector<std::pair<InterleavingPattern, ConditionFlags>> out;
    std::vector<Sym> cur;
    int n = 2 * (p + q) - 1;
    auto allowed = [](Sym a, Sym b) {
        switch (a) {
        case Sym::P: return b == Sym::OP || b == Sym::M;
        case Sym::M: return b == Sym::OM || b == Sym::P;
        case Sym::OP: return b == Sym::P || b == Sym::OM;
        case Sym::OM: return b == Sym::M || b == Sym::OP;
        }
        return false;
    };
    auto rec = [&](auto&& self, int cp, int cm, int cop, int com) -> void {
        if (static_cast<int>(cur.size()) == n) {
            InterleavingPattern pat;
            pat.syms = cur;
            pat.p = p;
            pat.q = q;
            out.emplace_back(pat, condition_flags(pat, std::nullopt, gmax));
            return;
        }
        const Sym order[4] = {Sym::P, Sym::M, Sym::OP, Sym::OM};
        const int limit[4] = {p, q, p - 1, q};
        int have[4] = {cp, cm, cop, com};
        for (int k = 0; k < 4; ++k) {
            Sym s = order[k];
            if (have[k] >= limit[k])
                continue;
            if (!cur.empty() && !allowed(cur.back(), s))
                continue;
            cur.push_back(s);
            self(self, cp + (s == Sym::P), cm + (s == Sym::M), cop + (s == Sym::OP), com + (s == Sym::OM));
            cur.pop_back();
        }
    };
    rec(rec, 0, 0, 0, 0);
    return out;
}

} // namespace ggp
