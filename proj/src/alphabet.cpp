#include "pleth/alphabet.hpp"

#include <algorithm>
#include <stdexcept>

#include "pleth/util.hpp"

namespace pleth {

namespace {
const BigRational kZero(0);
}

BivariatePoly::BivariatePoly(unsigned deg_x, unsigned deg_y)
    : dx_(deg_x), dy_(deg_y), c_(std::size_t(deg_x + 1) * (deg_y + 1)) {}

BivariatePoly BivariatePoly::one() {
    BivariatePoly p(0, 0);
    p.set(0, 0, BigRational(1));
    return p;
}

const BigRational& BivariatePoly::coeff(unsigned i, unsigned j) const {
    if (i > dx_ || j > dy_) return kZero;
    return c_[at(i, j)];
}

void BivariatePoly::set(unsigned i, unsigned j, BigRational v) {
    if (i > dx_ || j > dy_) throw std::out_of_range("BivariatePoly::set");
    c_[at(i, j)] = std::move(v);
}

void BivariatePoly::add(unsigned i, unsigned j, const BigRational& v) {
    if (i > dx_ || j > dy_) throw std::out_of_range("BivariatePoly::add");
    c_[at(i, j)] += v;
}

void BivariatePoly::add_scaled(const BivariatePoly& other, const BigRational& scale) {
    if (other.dx_ > dx_ || other.dy_ > dy_) {
        BivariatePoly grown(std::max(dx_, other.dx_), std::max(dy_, other.dy_));
        for (unsigned i = 0; i <= dx_; ++i)
            for (unsigned j = 0; j <= dy_; ++j) grown.c_[grown.at(i, j)] = std::move(c_[at(i, j)]);
        *this = std::move(grown);
    }
    if (scale == 0) return;
    for (unsigned i = 0; i <= other.dx_; ++i)
        for (unsigned j = 0; j <= other.dy_; ++j) {
            const BigRational& v = other.c_[other.at(i, j)];
            if (v != 0) c_[at(i, j)] += v * scale;
        }
}

void BivariatePoly::scale(const BigRational& s) {
    for (auto& v : c_) v *= s;
}

bool BivariatePoly::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const BigRational& v) { return v == 0; });
}

bool BivariatePoly::is_integral() const {
    return std::all_of(c_.begin(), c_.end(), [](const BigRational& v) { return is_integer(v); });
}

void BivariatePoly::trim() {
    unsigned mx = 0, my = 0;
    for (unsigned i = 0; i <= dx_; ++i)
        for (unsigned j = 0; j <= dy_; ++j)
            if (c_[at(i, j)] != 0) {
                mx = std::max(mx, i);
                my = std::max(my, j);
            }
    if (mx == dx_ && my == dy_) return;
    BivariatePoly shrunk(mx, my);
    for (unsigned i = 0; i <= mx; ++i)
        for (unsigned j = 0; j <= my; ++j) shrunk.c_[shrunk.at(i, j)] = std::move(c_[at(i, j)]);
    *this = std::move(shrunk);
}

bool BivariatePoly::operator==(const BivariatePoly& other) const {
    const unsigned mx = std::max(dx_, other.dx_), my = std::max(dy_, other.dy_);
    for (unsigned i = 0; i <= mx; ++i)
        for (unsigned j = 0; j <= my; ++j)
            if (coeff(i, j) != other.coeff(i, j)) return false;
    return true;
}

BivariatePoly BivariatePoly::divide_exact_1mx() const {
    // P = (1-x) Q  <=>  q_i = p_i + q_{i-1}; the last carry is the remainder.
    if (dx_ == 0) {
        for (unsigned j = 0; j <= dy_; ++j)
            if (coeff(0, j) != 0)
                throw std::runtime_error("divide_exact_1mx: nonzero remainder");
        return BivariatePoly(0, dy_);
    }
    BivariatePoly q(dx_ - 1, dy_);
    for (unsigned j = 0; j <= dy_; ++j) {
        BigRational carry(0);
        for (unsigned i = 0; i < dx_; ++i) {
            carry += coeff(i, j);
            q.c_[q.at(i, j)] = carry;
        }
        if (carry + coeff(dx_, j) != 0)
            throw std::runtime_error("divide_exact_1mx: nonzero remainder");
    }
    return q;
}

BivariatePoly BivariatePoly::divide_exact_1my() const {
    if (dy_ == 0) {
        for (unsigned i = 0; i <= dx_; ++i)
            if (coeff(i, 0) != 0)
                throw std::runtime_error("divide_exact_1my: nonzero remainder");
        return BivariatePoly(dx_, 0);
    }
    BivariatePoly q(dx_, dy_ - 1);
    for (unsigned i = 0; i <= dx_; ++i) {
        BigRational carry(0);
        for (unsigned j = 0; j < dy_; ++j) {
            carry += coeff(i, j);
            q.c_[q.at(i, j)] = carry;
        }
        if (carry + coeff(i, dy_) != 0)
            throw std::runtime_error("divide_exact_1my: nonzero remainder");
    }
    return q;
}

const SignedAlphabet& alphabet_1mxmy() {
    static const SignedAlphabet a{{+1, 0, 0}, {-1, 1, 0}, {-1, 0, 1}};
    return a;
}

const SignedAlphabet& alphabet_1mxmy_pxy() {
    static const SignedAlphabet a{{+1, 0, 0}, {-1, 1, 0}, {-1, 0, 1}, {+1, 1, 1}};
    return a;
}

BivariatePoly eval_p_on(const Partition& lam, const SignedAlphabet& alphabet) {
    BivariatePoly result = BivariatePoly::one();
    for (unsigned part : lam.parts()) {
        unsigned fx = 0, fy = 0;
        for (const auto& t : alphabet) {
            fx = std::max(fx, part * t.xe);
            fy = std::max(fy, part * t.ye);
        }
        BivariatePoly next(result.deg_x() + fx, result.deg_y() + fy);
        for (unsigned i = 0; i <= result.deg_x(); ++i)
            for (unsigned j = 0; j <= result.deg_y(); ++j) {
                const BigRational& v = result.coeff(i, j);
                if (v == 0) continue;
                for (const auto& t : alphabet) {
                    const BigRational signed_v = (t.sign >= 0) ? v : -v;
                    next.add(i + part * t.xe, j + part * t.ye, signed_v);
                }
            }
        result = std::move(next);
    }
    return result;
}

BivariatePoly eval_on(const PSeries& f, const SignedAlphabet& alphabet, unsigned threads) {
    std::vector<const Partition*> index;
    std::vector<const BigRational*> coeffs;
    index.reserve(f.term_count());
    for (const auto& [mu, c] : f.terms()) {
        index.push_back(&mu);
        coeffs.push_back(&c);
    }

    const unsigned workers = std::max(1u, std::min<unsigned>(threads, 16));
    const std::size_t chunks = std::min<std::size_t>(index.size(), workers * 4u);
    std::vector<BivariatePoly> partial(std::max<std::size_t>(chunks, 1));
    if (!index.empty()) {
        parallel_for(chunks, threads, [&](std::size_t chunk) {
            const std::size_t lo = chunk * index.size() / chunks;
            const std::size_t hi = (chunk + 1) * index.size() / chunks;
            BivariatePoly acc;
            for (std::size_t t = lo; t < hi; ++t)
                acc.add_scaled(eval_p_on(*index[t], alphabet), *coeffs[t]);
            partial[chunk] = std::move(acc);
        });
    }
    BivariatePoly total;
    for (auto& part : partial) total.add_scaled(part, BigRational(1));
    if (!total.is_integral())
        throw std::runtime_error("eval_on: non-integral evaluation (upstream bug)");
    total.trim();
    return total;
}

HCCoefficients hc_extract(const BivariatePoly& P, unsigned n) {
    const BivariatePoly Q = P.divide_exact_1mx().divide_exact_1my();
    HCCoefficients out;
    for (unsigned gamma = 0; gamma <= n; ++gamma)
        for (unsigned beta : valid_betas(n, gamma)) {
            const unsigned a = beta + gamma, b = beta;
            BigRational v = Q.coeff(a, b);
            if (b > 0) v -= Q.coeff(a + 1, b - 1);
            if ((a + b) % 2 == 1) v = -v;
            if (v != 0)
                out.emplace(std::make_pair(beta, gamma), integer_part(v, "hc_extract"));
        }
    return out;
}

HCSequence hc_row_from(const HCCoefficients& coeffs, unsigned n, unsigned gamma) {
    HCSequence seq;
    seq.degree = n;
    seq.gamma = gamma;
    for (unsigned beta : valid_betas(n, gamma)) {
        auto it = coeffs.find({beta, gamma});
        seq.entries.push_back(it == coeffs.end() ? BigInt(0) : it->second);
    }
    return seq;
}

SchurExpansion hc_expansion_from(const HCCoefficients& coeffs, unsigned n) {
    SchurExpansion out(n);
    for (const auto& [key, value] : coeffs)
        out.add(*hc_shape(n, key.first, key.second), value);
    return out;
}

BivariatePoly hc_eval_closed_1mxmy(const HookColumnShape& shape) {
    if (shape.alpha < 2)
        throw std::invalid_argument("hc_eval_closed_1mxmy: requires alpha >= 2");
    const unsigned beta = shape.beta, gamma = shape.gamma;
    // (xy)^beta * (1-x)(1-y) * sum_{i+j=gamma} x^i y^j, up to sign (-1)^gamma.
    BivariatePoly p(beta + gamma + 1, beta + gamma + 1);
    const int sign = (gamma % 2 == 0) ? 1 : -1;
    for (unsigned i = 0; i <= gamma; ++i) {
        const unsigned j = gamma - i;
        for (unsigned dx = 0; dx <= 1; ++dx)
            for (unsigned dy = 0; dy <= 1; ++dy) {
                const int s = ((dx + dy) % 2 == 0) ? sign : -sign;
                p.add(beta + i + dx, beta + j + dy, BigRational(s));
            }
    }
    return p;
}

BivariatePoly row_eval_closed_1mx1my(unsigned n) {
    if (n < 1) throw std::invalid_argument("row_eval_closed_1mx1my: requires n >= 1");
    // (1-x)(1-y) * (1 + xy + ... + (xy)^{n-1})
    BivariatePoly p(n, n);
    for (unsigned k = 0; k < n; ++k)
        for (unsigned dx = 0; dx <= 1; ++dx)
            for (unsigned dy = 0; dy <= 1; ++dy)
                p.add(k + dx, k + dy, BigRational(((dx + dy) % 2 == 0) ? 1 : -1));
    return p;
}

BigInt chi_k_symbol(unsigned k, const Partition& lam) {
    const unsigned c = lam.weight();
    if (k > c) return 0;
    if (2 * k > c) return chi_k_symbol(c - k, lam);

    std::map<unsigned, unsigned> mult_lam;
    for (unsigned part : lam.parts()) ++mult_lam[part];

    BigInt total = 0;
    for (const Partition& mu : partitions_of(k)) {
        std::map<unsigned, unsigned> mult_mu;
        for (unsigned part : mu.parts()) ++mult_mu[part];
        BigInt prod = 1;
        for (const auto& [value, m] : mult_mu) {
            auto it = mult_lam.find(value);
            const unsigned avail = (it == mult_lam.end()) ? 0 : it->second;
            if (avail < m) {
                prod = 0;
                break;
            }
            BigInt binom;
            mpz_bin_uiui(binom.get_mpz_t(), avail, m);
            prod *= binom;
        }
        total += prod;
    }
    return total;
}

}  // namespace pleth
