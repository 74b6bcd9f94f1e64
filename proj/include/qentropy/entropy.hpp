#pragma once

#include <string>

#include "qentropy/distribution.hpp"
#include "qentropy/q_algebra.hpp"

namespace qentropy {

enum class EntropyFamily {
    Shannon,
    Nath,
    Corrected,
    JizbaKorbel,
    AczelDaroczy,
    Tsallis,
    GClass,
};

/// CLI spelling, e.g. "jizba-korbel".
std::string family_name(EntropyFamily family);
EntropyFamily family_from_name(const std::string& name);

/// Shannon entropy in bits; 0 log2 0 := 0.
double shannon(const Distribution& p);

/// Nath entropy tau/(q-1) log2(sum p_k^q); equals (-tau) times Renyi order q.
double nath(const Distribution& p, const EntropyParams& params);

/// The h-image of Nath: (1/(1-q))((sum p_k^q)^{-tau} - 1) for q != 1.
double corrected(const Distribution& p, const EntropyParams& params);

/// h-image of the Aczel-Daroczy entropy.
double jizba_korbel(const Distribution& p, double q);

/// Escort-weighted average surprisal -sum p_k^{(q)} log2 p_k, in bits.
double aczel_daroczy(const Distribution& p, double q);

/// (1 - sum p_k^q)/(q - 1); the tau = -1 case of corrected().
double tsallis(const Distribution& p, double q);

/// Two-parameter (q, lambda) family; equals jizba_korbel at lambda = 0.
double g_class(const Distribution& p, double q, double lambda);

/// Per-event information content h(-log2 p); oplus_q-additive over products.
double info_content(double p, double q);

/// Dispatch on the family tag.
double evaluate(EntropyFamily family, const Distribution& p, const EntropyParams& params);

/// Composition law on independent products: oplus_q for the deformed families,
/// ordinary addition for the additive ones (Shannon, Nath, AczelDaroczy).
double compose(EntropyFamily family, double a, double b, const EntropyParams& params);

} // namespace qentropy
