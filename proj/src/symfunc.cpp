#include "pleth/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "pleth/util.hpp"

namespace pleth {

namespace {

void append_key(std::string& key, const std::vector<unsigned>& parts, std::size_t from = 0) {
    for (std::size_t i = from; i < parts.size(); ++i) {
        if (parts[i] > 0xfe) throw std::invalid_argument("character: part too large");
        key.push_back(static_cast<char>(parts[i]));
    }
}

}  // namespace

BigInt CharacterTable::character(const Partition& lam, const Partition& mu) const {
    if (lam.weight() != mu.weight())
        throw std::invalid_argument("character: |lam| = " + std::to_string(lam.weight()) +
                                    " but |mu| = " + std::to_string(mu.weight()));
    return recurse(lam.parts(), mu.parts(), 0);
}

std::size_t CharacterTable::cache_size() const {
    std::shared_lock lock(mutex_);
    return memo_.size();
}

BigInt CharacterTable::recurse(const std::vector<unsigned>& shape, const std::vector<unsigned>& mu,
                               std::size_t idx) const {
    if (idx == mu.size()) return shape.empty() ? 1 : 0;

    std::string key;
    key.reserve(shape.size() + mu.size() - idx + 1);
    append_key(key, shape);
    key.push_back('\xff');
    append_key(key, mu, idx);
    {
        std::shared_lock lock(mutex_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }

    // Beta-set of the shape; removing a border strip of size k moves one
    // entry down by k, the crossing count gives the strip height.
    const unsigned k = mu[idx];
    const std::size_t len = shape.size();
    std::vector<long> betas(len);
    for (std::size_t i = 0; i < len; ++i)
        betas[i] = static_cast<long>(shape[i]) + static_cast<long>(len - 1 - i);

    BigInt total = 0;
    for (std::size_t i = 0; i < len; ++i) {
        const long nb = betas[i] - static_cast<long>(k);
        if (nb < 0) continue;
        bool occupied = false;
        int height = 0;
        for (std::size_t j = 0; j < len; ++j) {
            if (j == i) continue;
            if (betas[j] == nb) { occupied = true; break; }
            if (nb < betas[j] && betas[j] < betas[i]) ++height;
        }
        if (occupied) continue;

        std::vector<long> nbetas = betas;
        nbetas[i] = nb;
        std::sort(nbetas.begin(), nbetas.end(), std::greater<long>());
        std::vector<unsigned> nshape;
        nshape.reserve(len);
        for (std::size_t j = 0; j < len; ++j) {
            const long part = nbetas[j] - static_cast<long>(len - 1 - j);
            if (part > 0) nshape.push_back(static_cast<unsigned>(part));
        }
        const BigInt sub = recurse(nshape, mu, idx + 1);
        if (height % 2 == 0)
            total += sub;
        else
            total -= sub;
    }

    {
        std::unique_lock lock(mutex_);
        memo_.emplace(std::move(key), total);
    }
    return total;
}

PSeries PSeries::unit() {
    PSeries one(0);
    one.add(Partition{}, BigRational(1));
    return one;
}

BigRational PSeries::coeff(const Partition& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? BigRational(0) : it->second;
}

void PSeries::add(const Partition& mu, const BigRational& c) {
    if (c == 0) return;
    if (mu.weight() != degree_)
        throw std::invalid_argument("PSeries::add: weight " + std::to_string(mu.weight()) +
                                    " != degree " + std::to_string(degree_));
    auto [it, inserted] = terms_.emplace(mu, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

PSeries& PSeries::operator+=(const PSeries& other) {
    if (degree_ != other.degree_ && !other.terms_.empty())
        throw std::invalid_argument("PSeries::+=: degree mismatch");
    for (const auto& [mu, c] : other.terms_) add(mu, c);
    return *this;
}

PSeries& PSeries::operator-=(const PSeries& other) {
    if (degree_ != other.degree_ && !other.terms_.empty())
        throw std::invalid_argument("PSeries::-=: degree mismatch");
    for (const auto& [mu, c] : other.terms_) add(mu, -c);
    return *this;
}

void PSeries::scale(const BigRational& c) {
    if (c == 0) {
        terms_.clear();
        return;
    }
    for (auto& [mu, coeff] : terms_) coeff *= c;
}

PSeries p_multiply(const PSeries& f, const PSeries& g) {
    PSeries out(f.degree() + g.degree());
    for (const auto& [mu, c] : f.terms())
        for (const auto& [nu, d] : g.terms()) out.add(partition_union(mu, nu), c * d);
    return out;
}

PSeries omega(const PSeries& f) {
    PSeries out(f.degree());
    for (const auto& [mu, c] : f.terms()) {
        const bool negate = (mu.weight() - mu.length()) % 2 == 1;
        out.add(mu, negate ? -c : c);
    }
    return out;
}

BigInt SchurExpansion::coeff(const Partition& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void SchurExpansion::add(const Partition& mu, const BigInt& c) {
    if (c == 0) return;
    if (mu.weight() != degree_)
        throw std::invalid_argument("SchurExpansion::add: weight mismatch");
    auto [it, inserted] = terms_.emplace(mu, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SchurExpansion SchurExpansion::hook_column_part() const {
    SchurExpansion out(degree_);
    for (const auto& [mu, c] : terms_)
        if (is_hook_column(mu)) out.add(mu, c);
    return out;
}

std::string SchurExpansion::to_json() const {
    std::ostringstream out;
    out << "{\"degree\":" << degree_;
    for (const auto& [mu, c] : terms_) out << ",\"" << to_string(mu) << "\":" << c.get_str();
    out << "}";
    return out.str();
}

PSeries schur_to_p(const Partition& lam, const CharacterTable& chars) {
    PSeries out(lam.weight());
    for (const Partition& mu : partitions_of(lam.weight())) {
        const BigInt chi = chars.character(lam, mu);
        if (chi != 0) out.add(mu, make_rational(chi, z_of(mu)));
    }
    return out;
}

PSeries schur_expansion_to_p(const SchurExpansion& f, const CharacterTable& chars) {
    PSeries out(f.degree());
    for (const auto& [lam, c] : f.terms()) {
        PSeries term = schur_to_p(lam, chars);
        term.scale(BigRational(c));
        out += term;
    }
    return out;
}

SchurExpansion project_onto(const PSeries& f, const std::vector<Partition>& targets,
                            const CharacterTable& chars, unsigned threads) {
    std::vector<BigInt> results(targets.size());
    parallel_for(targets.size(), threads, [&](std::size_t i) {
        BigRational acc(0);
        for (const auto& [mu, c] : f.terms()) {
            const BigInt chi = chars.character(targets[i], mu);
            if (chi != 0) acc += c * chi;
        }
        results[i] = integer_part(acc, "p_to_schur");
    });
    SchurExpansion out(f.degree());
    for (std::size_t i = 0; i < targets.size(); ++i) out.add(targets[i], results[i]);
    return out;
}

SchurExpansion p_to_schur(const PSeries& f, const CharacterTable& chars,
                          const std::function<bool(const Partition&)>& restrict_to,
                          unsigned threads) {
    std::vector<Partition> targets;
    for (const Partition& lam : partitions_of(f.degree()))
        if (!restrict_to || restrict_to(lam)) targets.push_back(lam);
    return project_onto(f, targets, chars, threads);
}

SchurExpansion schur_product(const SchurExpansion& a, const SchurExpansion& b,
                             const CharacterTable& chars, unsigned threads) {
    const PSeries product = p_multiply(schur_expansion_to_p(a, chars),
                                       schur_expansion_to_p(b, chars));
    return p_to_schur(product, chars, nullptr, threads);
}

}  // namespace pleth
