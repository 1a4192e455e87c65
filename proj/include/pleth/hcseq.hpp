#ifndef PLETH_HCSEQ_HPP
#define PLETH_HCSEQ_HPP

#include <optional>
#include <string>
#include <vector>

#include "pleth/partition.hpp"
#include "pleth/rational.hpp"

namespace pleth {

// The shape (n-2*beta-gamma, 2^beta, 1^gamma) when it is a valid partition.
std::optional<Partition> hc_shape(unsigned n, unsigned beta, unsigned gamma);

// Ascending list of beta for which hc_shape(n, beta, gamma) exists.
std::vector<unsigned> valid_betas(unsigned n, unsigned gamma);

// Sigma(f, gamma): entries[beta] = [s_{(n-2*beta-gamma, 2^beta, 1^gamma)}] f,
// indexed over exactly the valid beta.
struct HCSequence {
    unsigned degree = 0;
    unsigned gamma = 0;
    std::vector<BigInt> entries;

    bool operator==(const HCSequence&) const = default;

    // {"degree": n, "gamma": g, "entries": [...]}
    std::string to_json() const;
    // "n,gamma,b0,b1,..."
    std::string to_csv_row() const;
};

}  // namespace pleth

#endif
