#include "pleth/closed_forms.hpp"

#include <algorithm>
#include <stdexcept>

#include "pleth/hcseq.hpp"

namespace pleth {

namespace {

// Appends (first, 2^beta, 1^rest) if rest >= 0 and the shape is valid.
void push_shape(std::vector<std::pair<Partition, BigInt>>& terms, unsigned degree,
                unsigned first, unsigned beta, BigInt coeff) {
    if (coeff == 0) return;
    const unsigned used = first + 2 * beta;
    if (used > degree) return;
    const unsigned rest = degree - used;
    if (!(first >= 2 || (first == 1 && beta == 0))) return;
    terms.emplace_back(HookColumnShape(first, beta, rest).reconstruct(), std::move(coeff));
}

void sort_dec_lex(std::vector<std::pair<Partition, BigInt>>& terms) {
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return DecLex{}(a.first, b.first); });
}

}  // namespace

SchurExpansion HCFormulaOutput::to_expansion() const {
    SchurExpansion out(degree);
    for (const auto& [lam, c] : terms) out.add(lam, c);
    return out;
}

HCFormulaOutput langley_remmel(unsigned a, unsigned b) {
    if (a < 2 || b < 2) throw std::invalid_argument("langley_remmel: requires a, b >= 2");
    HCFormulaOutput out;
    out.degree = a * b;
    out.provenance = "langley_remmel";
    for (unsigned k = 0; k < b; ++k)
        push_shape(out.terms, out.degree, a * b - 2 * k, k, 1);
    sort_dec_lex(out.terms);
    return out;
}

HCFormulaOutput thm_s2_sb_sa(unsigned a, unsigned b) {
    if (a < 2 || b < 2) throw std::invalid_argument("thm_s2_sb_sa: requires a, b >= 2");
    HCFormulaOutput out;
    out.degree = 2 * a * b;
    out.provenance = "thm_s2_sb_sa";
    for (unsigned k = 0; k <= 2 * b - 1; ++k) {
        const unsigned coeff = std::min(k + 1, 2 * b - k);
        push_shape(out.terms, out.degree, 2 * a * b - 2 * k, k, coeff);
    }
    for (unsigned k = 1; k + 3 <= 2 * b; ++k) {  // k <= 2b - 3
        const unsigned coeff = std::min((k + 1) / 2, (2 * b - 1 - k) / 2);
        push_shape(out.terms, out.degree, 2 * a * b - 2 * k - 1, k, coeff);
    }
    sort_dec_lex(out.terms);
    return out;
}

HCFormulaOutput thm_sc_s2_sa(unsigned a, unsigned c) {
    if (a < 2 || c < 2) throw std::invalid_argument("thm_sc_s2_sa: requires a, c >= 2");
    HCFormulaOutput out;
    out.degree = 2 * a * c;
    out.provenance = "thm_sc_s2_sa";
    auto ramp = [](unsigned long k) { return (k * k + k + 2) / 2; };
    for (unsigned k = 0; k <= 2 * c - 1; ++k) {
        const unsigned long coeff = std::min(ramp(k), ramp(2 * c - 1 - k));
        push_shape(out.terms, out.degree, 2 * a * c - 2 * k, k, BigInt(coeff));
    }
    auto quarter = [](unsigned long k) { return ((k + 1) * (k + 1)) / 4; };
    for (unsigned k = 1; k + 3 <= 2 * c; ++k) {  // k <= 2c - 3
        const unsigned long coeff = std::min(quarter(k), quarter(2 * c - 2 - k));
        push_shape(out.terms, out.degree, 2 * a * c - 2 * k - 1, k, BigInt(coeff));
    }
    sort_dec_lex(out.terms);
    return out;
}

std::vector<std::pair<Partition, int>> p2_hookcolumn(const HookColumnShape& lam) {
    if (lam.alpha < 2) throw std::invalid_argument("p2_hookcolumn: requires alpha >= 2");
    const unsigned n = lam.weight();
    const unsigned m2 = lam.beta, m1 = lam.gamma;
    const int pre = (m1 % 2 == 0) ? +1 : -1;

    std::vector<std::pair<Partition, int>> terms;
    auto push = [&](unsigned first, unsigned beta, int sign) {
        const unsigned used = first + 2 * beta;
        if (used > 2 * n) return;
        const unsigned rest = 2 * n - used;
        if (!(first >= 2 || (first == 1 && beta == 0))) return;
        terms.emplace_back(HookColumnShape(first, beta, rest).reconstruct(), pre * sign);
    };

    for (unsigned beta = 2 * m2; 2 * lam.alpha + 2 * beta <= 2 * n; ++beta)
        push(2 * lam.alpha, beta, (beta % 2 == 0) ? +1 : -1);
    push(2 * lam.alpha - 1, 2 * m2, -1);
    for (unsigned beta = 2 * m2 + 1; 2 * lam.alpha - 2 + 2 * beta <= 2 * n; ++beta)
        push(2 * lam.alpha - 2, beta, (beta % 2 == 0) ? -1 : +1);

    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return DecLex{}(a.first, b.first); });
    return terms;
}

HCFormulaOutput hc_product(const HookColumnShape& mu, const HookColumnShape& nu) {
    if (mu.alpha < 2 || nu.alpha < 2)
        throw std::invalid_argument("hc_product: requires first parts >= 2");
    const unsigned degree = mu.weight() + nu.weight();
    const unsigned alpha = mu.alpha + nu.alpha;
    const unsigned m2 = mu.beta + nu.beta;
    const unsigned m1 = std::min(mu.gamma, nu.gamma);

    HCFormulaOutput out;
    out.degree = degree;
    out.provenance = "hc_product";
    for (unsigned beta = m2; beta <= m2 + m1; ++beta)
        push_shape(out.terms, degree, alpha, beta, 1);
    for (unsigned beta = m2; beta <= m2 + m1 + 1; ++beta) {
        const unsigned weight = (beta == m2 || beta == m2 + m1 + 1) ? 1 : 2;
        push_shape(out.terms, degree, alpha - 1, beta, weight);
    }
    for (unsigned beta = m2 + 1; beta <= m2 + m1 + 1; ++beta)
        push_shape(out.terms, degree, alpha - 2, beta, 1);
    sort_dec_lex(out.terms);
    return out;
}

long offset_for(unsigned a, unsigned b, unsigned c) {
    return static_cast<long>(a) * b * c - 2 * (static_cast<long>(b) * c - 1);
}

std::vector<BigInt> oeis(const std::string& id, unsigned count) {
    if (count < 1) throw std::invalid_argument("oeis: count must be positive");
    std::vector<BigInt> out;
    out.reserve(count);
    if (id == "A000124") {
        for (unsigned long n = 0; n < count; ++n) out.emplace_back((n * n + n + 2) / 2);
    } else if (id == "A002620") {
        for (unsigned long n = 0; n < count; ++n) out.emplace_back(((n + 1) * (n + 1)) / 4);
    } else if (id == "A000098") {
        std::vector<BigInt> c(count, BigInt(0));
        c[0] = 1;
        for (unsigned i = 1; i <= 3; ++i)
            for (int rep = 0; rep < 2; ++rep)
                for (unsigned j = i; j < count; ++j) c[j] += c[j - i];
        out = std::move(c);
    } else if (id == "A058696") {
        for (unsigned n = 0; n < count; ++n) out.push_back(partition_count(2 * n));
    } else {
        throw std::invalid_argument("oeis: unknown id " + id);
    }
    return out;
}

}  // namespace pleth
