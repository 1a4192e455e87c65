#include "pleth/hcseq.hpp"

#include <sstream>

namespace pleth {

std::optional<Partition> hc_shape(unsigned n, unsigned beta, unsigned gamma) {
    const unsigned tail = 2 * beta + gamma;
    if (tail > n) return std::nullopt;
    const unsigned alpha = n - tail;
    if (alpha >= 2 || (alpha == 1 && beta == 0))
        return HookColumnShape(alpha, beta, gamma).reconstruct();
    return std::nullopt;
}

std::vector<unsigned> valid_betas(unsigned n, unsigned gamma) {
    std::vector<unsigned> out;
    for (unsigned beta = 0; 2 * beta + gamma <= n; ++beta)
        if (hc_shape(n, beta, gamma)) out.push_back(beta);
    return out;
}

std::string HCSequence::to_json() const {
    std::ostringstream out;
    out << "{\"degree\":" << degree << ",\"gamma\":" << gamma << ",\"entries\":[";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) out << ',';
        out << entries[i].get_str();
    }
    out << "]}";
    return out.str();
}

std::string HCSequence::to_csv_row() const {
    std::ostringstream out;
    out << degree << ',' << gamma;
    for (const auto& e : entries) out << ',' << e.get_str();
    return out.str();
}

}  // namespace pleth
