#ifndef PLETH_FLIP_HPP
#define PLETH_FLIP_HPP

#include <optional>
#include <vector>

#include "pleth/hcseq.hpp"
#include "pleth/partition.hpp"
#include "pleth/symfunc.hpp"

namespace pleth {

struct FlipResult {
    Partition image;
    unsigned delta = 0;

    bool operator==(const FlipResult&) const = default;
};

// The r-flip (r+2*delta+gamma, 2^beta, 1^gamma) -> (r+2*beta+gamma, 2^delta,
// 1^gamma). Absent when lam is not hook+column, lam_1 - r - gamma is odd or
// negative, or the image is not a valid partition. r in {0,1} requires
// extended = true (throws otherwise); r >= 2 is the standard involution.
std::optional<FlipResult> flip(unsigned r, const Partition& lam, bool extended = false);

// Same map realized as a tiled transposition: row 1 tiled as one (1 x r)
// brick, delta (1 x 2) bricks and gamma (1 x 1) bricks, every other row one
// brick; collapse to the tableau of brick widths, transpose, re-expand.
// Only defined for r >= 2 (the offset brick has no width-<2 reading).
std::optional<FlipResult> flip_via_tiling(unsigned r, const Partition& lam);

struct FlipSymmetry {
    bool symmetric = false;
    std::optional<Partition> witness;  // first offending support partition
};

// True iff every hook+column mu in supp(f) has flip(r, mu) defined and
// [mu] f = [flip(r, mu)] f. Non-hook+column support members are ignored.
FlipSymmetry is_flip_symmetric(const SchurExpansion& f, unsigned r, bool extended = false);

struct OffsetReport {
    std::vector<unsigned> standard_offsets;  // r >= 2
    std::vector<unsigned> extended_offsets;  // r in {0, 1}
};

// All offsets r in [0, max lam_1 over the hook+column support] for which f
// is flip-symmetric; r < 2 results are reported separately as extended-mode
// offsets. Requires nonzero hook+column support.
OffsetReport find_offsets(const SchurExpansion& f, unsigned threads = 1);

// Sigma(f, gamma) read off a Schur expansion.
HCSequence hc_sequence(const SchurExpansion& f, unsigned gamma);

}  // namespace pleth

#endif
