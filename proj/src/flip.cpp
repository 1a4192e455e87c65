#include "pleth/flip.hpp"

#include <algorithm>
#include <stdexcept>

#include "pleth/util.hpp"

namespace pleth {

std::optional<FlipResult> flip(unsigned r, const Partition& lam, bool extended) {
    if (r < 2 && !extended)
        throw std::invalid_argument("flip: offsets 0 and 1 require extended mode");
    const auto hc = hook_column_decompose(lam);
    if (!hc) return std::nullopt;
    const long t = static_cast<long>(hc->alpha) - static_cast<long>(r) -
                   static_cast<long>(hc->gamma);
    if (t < 0 || t % 2 != 0) return std::nullopt;
    const unsigned delta = static_cast<unsigned>(t / 2);
    const unsigned first = r + 2 * hc->beta + hc->gamma;
    if (!(first >= 2 || (first == 1 && delta == 0))) return std::nullopt;
    return FlipResult{HookColumnShape(first, delta, hc->gamma).reconstruct(), delta};
}

std::optional<FlipResult> flip_via_tiling(unsigned r, const Partition& lam) {
    if (r < 2) return std::nullopt;  // no tiling with an offset brick of width < 2
    const auto hc = hook_column_decompose(lam);
    if (!hc) return std::nullopt;
    const long t = static_cast<long>(hc->alpha) - static_cast<long>(r) -
                   static_cast<long>(hc->gamma);
    if (t < 0 || t % 2 != 0) return std::nullopt;
    const unsigned delta = static_cast<unsigned>(t / 2);

    // Brick widths, row by row.
    std::vector<std::vector<unsigned>> rows;
    std::vector<unsigned> first_row{r};
    first_row.insert(first_row.end(), delta, 2u);
    first_row.insert(first_row.end(), hc->gamma, 1u);
    rows.push_back(std::move(first_row));
    for (unsigned i = 0; i < hc->beta; ++i) rows.push_back({2u});
    for (unsigned i = 0; i < hc->gamma; ++i) rows.push_back({1u});

    // Collapse to the tableau of widths; its shape must be a partition.
    for (std::size_t i = 0; i + 1 < rows.size(); ++i)
        if (rows[i].size() < rows[i + 1].size()) return std::nullopt;

    // Transpose the filling and re-expand each row to its total width.
    const std::size_t cols = rows.front().size();
    std::vector<unsigned> widths;
    widths.reserve(cols);
    for (std::size_t j = 0; j < cols; ++j) {
        unsigned w = 0;
        for (const auto& row : rows)
            if (j < row.size()) w += row[j];
        widths.push_back(w);
    }
    if (!std::is_sorted(widths.rbegin(), widths.rend())) return std::nullopt;
    Partition image = Partition::unchecked(std::move(widths));
    return FlipResult{std::move(image), delta};
}

FlipSymmetry is_flip_symmetric(const SchurExpansion& f, unsigned r, bool extended) {
    for (const auto& [mu, c] : f.terms()) {
        if (!is_hook_column(mu)) continue;
        const auto image = flip(r, mu, extended);
        if (!image || f.coeff(image->image) != c) return {false, mu};
    }
    return {true, std::nullopt};
}

OffsetReport find_offsets(const SchurExpansion& f, unsigned threads) {
    unsigned rmax = 0;
    bool any = false;
    for (const auto& [mu, c] : f.terms())
        if (is_hook_column(mu)) {
            any = true;
            rmax = std::max(rmax, mu.first());
        }
    if (!any) throw std::invalid_argument("find_offsets: empty hook+column support");

    std::vector<char> good(rmax + 1, 0);
    parallel_for(rmax + 1, threads, [&](std::size_t r) {
        good[r] = is_flip_symmetric(f, static_cast<unsigned>(r), /*extended=*/true).symmetric;
    });
    OffsetReport report;
    for (unsigned r = 0; r <= rmax; ++r)
        if (good[r]) (r >= 2 ? report.standard_offsets : report.extended_offsets).push_back(r);
    return report;
}

HCSequence hc_sequence(const SchurExpansion& f, unsigned gamma) {
    HCSequence seq;
    seq.degree = f.degree();
    seq.gamma = gamma;
    for (unsigned beta : valid_betas(f.degree(), gamma))
        seq.entries.push_back(f.coeff(*hc_shape(f.degree(), beta, gamma)));
    return seq;
}

}  // namespace pleth
