#ifndef PLETH_PLETHYSM_HPP
#define PLETH_PLETHYSM_HPP

#include <map>
#include <vector>

#include "pleth/hcseq.hpp"
#include "pleth/partition.hpp"
#include "pleth/symfunc.hpp"

namespace pleth {

// A chain s_{mu^1} o s_{mu^2} o ... o s_{mu^k}, outermost first. The result
// degree is the product of the entry weights.
struct PlethysmExpression {
    std::vector<Partition> chain;

    explicit PlethysmExpression(std::vector<Partition> c);
    unsigned degree() const;
};

// p_n o g: every index partition of g scaled entrywise by n.
PSeries p_compose(unsigned n, const PSeries& g);

// Plethysm engine. Inner functions are converted to the p-basis once and
// cached per chain suffix, since suffixes repeat across sweeps. plethysm()
// itself is a pure function; the engine object only carries caches.
class PlethysmEngine {
  public:
    explicit PlethysmEngine(const CharacterTable& chars) : chars_(chars) {}

    const CharacterTable& characters() const { return chars_; }

    // f o g by the homomorphism axioms; g must be homogeneous of positive
    // degree (composition with constants is rejected).
    PSeries plethysm(const PSeries& f, const PSeries& g) const;

    // Right-to-left fold of the chain. Suffix results are cached.
    PSeries iterated(const PlethysmExpression& expr);

    // Brute-force reference: iterated(), then projection restricted to the
    // hook+column targets (n-2*beta-gamma, 2^beta, 1^gamma).
    HCSequence hc_coefficients(const PlethysmExpression& expr, unsigned gamma,
                               unsigned threads = 1);

    // Full hook+column part (all gamma) of the iterated plethysm.
    SchurExpansion hc_part(const PlethysmExpression& expr, unsigned threads = 1);

    // Restricted projection of an arbitrary homogeneous PSeries.
    HCSequence hc_row(const PSeries& f, unsigned gamma, unsigned threads = 1) const;
    SchurExpansion hc_projection(const PSeries& f, unsigned threads = 1) const;

    // Largest intermediate support size seen by the most recent iterated().
    std::size_t peak_terms() const { return peak_terms_; }

  private:
    const CharacterTable& chars_;
    std::map<std::vector<Partition>, PSeries> suffix_cache_;
    std::size_t peak_terms_ = 0;
};

}  // namespace pleth

#endif
