#pragma once

#include "ggp/params.hpp"

#include <optional>

namespace ggp {

// Symbols of an interleaving pattern: + and - mark entries of lambda,
// circled variants mark entries of lambda'.
enum class Sym : unsigned char { P, M, OP, OM };

struct InterleavingPattern {
    std::vector<Sym> syms;
    int p = 0; // of the G-side decoration
    int q = 0;

    int size() const { return static_cast<int>(syms.size()); }
    Decoration deco() const;       // the P/M subword
    Decoration deco_prime() const; // the OP/OM subword, as '+'/'-'

    friend bool operator==(const InterleavingPattern& a, const InterleavingPattern& b) {
        return a.syms == b.syms;
    }
    friend bool operator<(const InterleavingPattern& a, const InterleavingPattern& b) {
        return a.syms < b.syms;
    }
};

struct ConditionFlags {
    bool ggp = false;
    bool cond_q = false;
    bool cond_delta_plus = false;
    bool cond_nc = false;
    bool cond_mu = false;
    bool cond_W = false;
    bool cond_minus_ominus_minus = false;
    bool coherent = false;
    std::vector<Sym> reduction_residue;
    // gap bound used by the witness search deciding cond_mu; a "No" is only
    // as strong as this bound
    int mu_search_gmax = 0;
};

// Unicode by default; ASCII uses "O+" and "O-" for the circled symbols.
std::string pattern_text(const std::vector<Sym>& syms, bool ascii = false);
std::string pattern_text(const InterleavingPattern& pat, bool ascii = false);
// Accepts both alphabets.
InterleavingPattern parse_pattern(const std::string& text);

// Merge the entries of lambda (p,q) and lambda_prime (p-1,q) in strictly
// descending order and tag them.  Parities guarantee no ties.
InterleavingPattern build_signature(const HCParam& lambda, const HCParam& lambda_prime);

bool is_ggp(const InterleavingPattern& pat);

// End-anchored fixpoint: remove a leading "+OP" or "OM-", or a trailing
// "OP+", until none applies.
std::vector<Sym> reduce(const InterleavingPattern& pat);
// Weak variant: leading deletions only.
std::vector<Sym> reduce_weak(const InterleavingPattern& pat);

// Witness search used for pattern-level condition (mu): realizations of the
// pattern with consecutive gaps at most gmax.
inline constexpr int kDefaultMuGapBound = 3;

std::optional<std::pair<HCParam, HCParam>>
find_mu_witness(const InterleavingPattern& pat, int gmax = kDefaultMuGapBound);
// Same search deciding condition (W) on coherent parameters (used as an
// independent cross-check of the reduction criterion).
std::optional<std::pair<HCParam, HCParam>>
find_W_witness(const InterleavingPattern& pat, int gmax = kDefaultMuGapBound);

ConditionFlags condition_flags(const InterleavingPattern& pat,
                               const std::optional<std::pair<HCParam, HCParam>>& witness = std::nullopt,
                               int gmax = kDefaultMuGapBound);

enum class ExpandRule { prepend_plus_oplus, prepend_ominus_minus, append_oplus_plus };

// Expand a pattern by one of the three rules, transforming the witness pair
// by the matching parameter shift; the two new entries are chosen as the
// smallest admissible values.  Throws when no admissible value exists.
std::pair<InterleavingPattern, std::pair<HCParam, HCParam>>
expand(const InterleavingPattern& pat, ExpandRule rule, const std::pair<HCParam, HCParam>& witness);

// All GGP patterns for (U(p,q), U(p-1,q)) in lexicographic order over the
// symbol alphabet P < M < OP < OM, with their flags.
std::vector<std::pair<InterleavingPattern, ConditionFlags>>
enumerate_patterns(int p, int q, int gmax = kDefaultMuGapBound);

} // namespace ggp
