#include "pleth/plethysm.hpp"

#include <algorithm>
#include <stdexcept>

namespace pleth {

PlethysmExpression::PlethysmExpression(std::vector<Partition> c) : chain(std::move(c)) {
    if (chain.empty()) throw std::invalid_argument("PlethysmExpression: empty chain");
}

unsigned PlethysmExpression::degree() const {
    unsigned d = 1;
    for (const auto& mu : chain) d *= mu.weight();
    return d;
}

PSeries p_compose(unsigned n, const PSeries& g) {
    if (n == 0) throw std::invalid_argument("p_compose: n must be positive");
    PSeries out(n * g.degree());
    for (const auto& [mu, c] : g.terms()) {
        std::vector<unsigned> scaled(mu.parts());
        for (auto& part : scaled) part *= n;
        out.add(Partition::unchecked(std::move(scaled)), c);
    }
    return out;
}

PSeries PlethysmEngine::plethysm(const PSeries& f, const PSeries& g) const {
    if (g.degree() == 0)
        throw std::invalid_argument("plethysm: inner function of degree 0 rejected");
    PSeries out(f.degree() * g.degree());

    std::map<unsigned, PSeries> composed;  // p_n o g per part value
    auto composed_for = [&](unsigned n) -> const PSeries& {
        auto it = composed.find(n);
        if (it == composed.end()) it = composed.emplace(n, p_compose(n, g)).first;
        return it->second;
    };

    for (const auto& [mu, c] : f.terms()) {
        PSeries prod = PSeries::unit();
        for (unsigned part : mu.parts()) prod = p_multiply(prod, composed_for(part));
        prod.scale(c);
        out += prod;
    }
    return out;
}

PSeries PlethysmEngine::iterated(const PlethysmExpression& expr) {
    peak_terms_ = 0;
    auto suffix_from = [&](std::size_t len) {
        return std::vector<Partition>(expr.chain.end() - static_cast<std::ptrdiff_t>(len),
                                      expr.chain.end());
    };
    // Resume from the longest cached suffix.
    std::size_t have = 0;
    PSeries current;
    for (std::size_t len = expr.chain.size(); len >= 1 && have == 0; --len) {
        auto it = suffix_cache_.find(suffix_from(len));
        if (it != suffix_cache_.end()) {
            current = it->second;
            have = len;
        }
    }
    if (have == 0) {
        current = schur_to_p(expr.chain.back(), chars_);
        have = 1;
        suffix_cache_.emplace(suffix_from(1), current);
    }
    peak_terms_ = std::max(peak_terms_, current.term_count());
    while (have < expr.chain.size()) {
        const Partition& outer = expr.chain[expr.chain.size() - have - 1];
        current = plethysm(schur_to_p(outer, chars_), current);
        ++have;
        peak_terms_ = std::max(peak_terms_, current.term_count());
        suffix_cache_.emplace(suffix_from(have), current);
    }
    return current;
}

HCSequence PlethysmEngine::hc_coefficients(const PlethysmExpression& expr, unsigned gamma,
                                           unsigned threads) {
    return hc_row(iterated(expr), gamma, threads);
}

SchurExpansion PlethysmEngine::hc_part(const PlethysmExpression& expr, unsigned threads) {
    return hc_projection(iterated(expr), threads);
}

HCSequence PlethysmEngine::hc_row(const PSeries& f, unsigned gamma, unsigned threads) const {
    const unsigned n = f.degree();
    std::vector<Partition> targets;
    for (unsigned beta : valid_betas(n, gamma)) targets.push_back(*hc_shape(n, beta, gamma));
    const SchurExpansion projected = project_onto(f, targets, chars_, threads);
    HCSequence seq;
    seq.degree = n;
    seq.gamma = gamma;
    seq.entries.reserve(targets.size());
    for (const auto& t : targets) seq.entries.push_back(projected.coeff(t));
    return seq;
}

SchurExpansion PlethysmEngine::hc_projection(const PSeries& f, unsigned threads) const {
    const unsigned n = f.degree();
    std::vector<Partition> targets;
    for (unsigned gamma = 0; gamma <= n; ++gamma)
        for (unsigned beta : valid_betas(n, gamma)) targets.push_back(*hc_shape(n, beta, gamma));
    return project_onto(f, targets, chars_, threads);
}

}  // namespace pleth
