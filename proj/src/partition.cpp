#include "pleth/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pleth {

namespace {

unsigned checked_weight(const std::vector<unsigned>& parts) {
    unsigned w = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] == 0) throw std::invalid_argument("Partition: zero part");
        if (i + 1 < parts.size() && parts[i] < parts[i + 1])
            throw std::invalid_argument("Partition: parts not weakly decreasing");
        w += parts[i];
    }
    return w;
}

}  // namespace

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    weight_ = checked_weight(parts_);
}

Partition::Partition(std::initializer_list<unsigned> parts)
    : Partition(std::vector<unsigned>(parts)) {}

Partition Partition::unchecked(std::vector<unsigned> parts) {
    Partition p;
    p.parts_ = std::move(parts);
    p.weight_ = std::accumulate(p.parts_.begin(), p.parts_.end(), 0u);
    return p;
}

HookColumnShape::HookColumnShape(unsigned a, unsigned b, unsigned g)
    : alpha(a), beta(b), gamma(g) {
    if (!(alpha >= 2 || (alpha == 1 && beta == 0)))
        throw std::invalid_argument("HookColumnShape: (alpha, 2^beta, 1^gamma) is not a partition");
}

Partition HookColumnShape::reconstruct() const {
    std::vector<unsigned> parts;
    parts.reserve(1 + beta + gamma);
    parts.push_back(alpha);
    parts.insert(parts.end(), beta, 2u);
    parts.insert(parts.end(), gamma, 1u);
    return Partition::unchecked(std::move(parts));
}

Partition conjugate(const Partition& lam) {
    if (lam.empty()) return {};
    std::vector<unsigned> cols(lam.first(), 0u);
    for (unsigned p : lam.parts())
        for (unsigned c = 0; c < p; ++c) ++cols[c];
    return Partition::unchecked(std::move(cols));
}

std::optional<HookColumnShape> hook_column_decompose(const Partition& lam) {
    if (lam.empty()) return std::nullopt;
    const auto& p = lam.parts();
    unsigned beta = 0, gamma = 0;
    for (std::size_t i = 1; i < p.size(); ++i) {
        if (p[i] > 2) return std::nullopt;
        (p[i] == 2 ? beta : gamma)++;
    }
    HookColumnShape shape;
    shape.alpha = p[0];
    shape.beta = beta;
    shape.gamma = gamma;
    return shape;
}

bool is_hook_column(const Partition& lam) {
    return hook_column_decompose(lam).has_value();
}

BigInt z_of(const Partition& lam) {
    BigInt z = 1;
    const auto& p = lam.parts();
    std::size_t i = 0;
    while (i < p.size()) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        const auto mult = static_cast<unsigned long>(j - i);
        BigInt power, fact;
        mpz_ui_pow_ui(power.get_mpz_t(), p[i], mult);
        mpz_fac_ui(fact.get_mpz_t(), mult);
        z *= power * fact;
        i = j;
    }
    return z;
}

std::optional<int> two_sign(const Partition& lam) {
    if (lam.weight() % 2 != 0) return std::nullopt;
    std::vector<unsigned> rows(lam.parts());
    int vertical = 0;
    while (!rows.empty()) {
        bool removed = false;
        for (std::size_t i = 0; i < rows.size() && !removed; ++i) {
            const unsigned below = (i + 1 < rows.size()) ? rows[i + 1] : 0u;
            if (rows[i] >= 2 && rows[i] - 2 >= below) {
                rows[i] -= 2;  // horizontal domino at the end of row i
                removed = true;
            } else if (i + 1 < rows.size() && rows[i] == rows[i + 1]) {
                const unsigned next = (i + 2 < rows.size()) ? rows[i + 2] : 0u;
                if (rows[i + 1] - 1 >= next) {
                    --rows[i];  // vertical domino spanning rows i, i+1
                    --rows[i + 1];
                    ++vertical;
                    removed = true;
                }
            }
        }
        while (!rows.empty() && rows.back() == 0) rows.pop_back();
        if (!removed) return std::nullopt;  // stuck at a nonempty 2-core
    }
    return (vertical % 2 == 0) ? +1 : -1;
}

Partition partition_sum(const Partition& lam, const Partition& mu) {
    std::vector<unsigned> out(std::max(lam.length(), mu.length()), 0u);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = lam.part(i) + mu.part(i);
    return Partition::unchecked(std::move(out));
}

Partition partition_union(const Partition& lam, const Partition& mu) {
    std::vector<unsigned> out;
    out.reserve(lam.length() + mu.length());
    std::merge(lam.parts().begin(), lam.parts().end(), mu.parts().begin(), mu.parts().end(),
               std::back_inserter(out), std::greater<unsigned>());
    return Partition::unchecked(std::move(out));
}

BigInt partition_count(unsigned n) {
    static std::vector<BigInt> cache{BigInt(1)};
    if (n < cache.size()) return cache[n];
    for (unsigned m = static_cast<unsigned>(cache.size()); m <= n; ++m) {
        BigInt total = 0;
        for (unsigned k = 1;; ++k) {
            const unsigned g1 = k * (3 * k - 1) / 2;
            const unsigned g2 = k * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            const int sign = (k % 2 == 1) ? +1 : -1;
            if (g1 <= m) total += sign * cache[m - g1];
            if (g2 <= m) total += sign * cache[m - g2];
        }
        cache.push_back(total);
    }
    return cache[n];
}

std::string to_string(const Partition& lam) {
    std::string out = "[";
    for (std::size_t i = 0; i < lam.length(); ++i) {
        if (i) out += ',';
        out += std::to_string(lam.parts()[i]);
    }
    out += ']';
    return out;
}

Partition parse_partition(std::string_view text) {
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && text[pos] == ' ') ++pos; };
    auto expect = [&](char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw std::invalid_argument("parse_partition: expected '" + std::string(1, c) +
                                        "' at offset " + std::to_string(pos));
        ++pos;
    };
    auto number = [&]() -> unsigned {
        skip_ws();
        if (pos >= text.size() || !isdigit(static_cast<unsigned char>(text[pos])))
            throw std::invalid_argument("parse_partition: expected digit at offset " +
                                        std::to_string(pos));
        unsigned long v = 0;
        while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + static_cast<unsigned long>(text[pos] - '0');
            if (v > 1000000) throw std::invalid_argument("parse_partition: part too large");
            ++pos;
        }
        return static_cast<unsigned>(v);
    };

    expect('[');
    std::vector<unsigned> parts;
    skip_ws();
    if (pos < text.size() && text[pos] == ']') {
        ++pos;
    } else {
        while (true) {
            unsigned base = number();
            unsigned exponent = 1;
            skip_ws();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                exponent = number();
            }
            parts.insert(parts.end(), exponent, base);
            skip_ws();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            expect(']');
            break;
        }
    }
    skip_ws();
    if (pos != text.size())
        throw std::invalid_argument("parse_partition: trailing input at offset " +
                                    std::to_string(pos));
    return Partition(std::move(parts));  // validates weak decrease
}

PartitionRange::iterator::iterator(unsigned n) : done_(false) {
    current_ = (n == 0) ? Partition{} : Partition{std::vector<unsigned>{n}};
}

PartitionRange::iterator& PartitionRange::iterator::operator++() {
    const auto& cur = current_.parts();
    // Find the last part > 1; everything after it is a tail of 1s.
    std::size_t i = cur.size();
    while (i > 0 && cur[i - 1] == 1) --i;
    if (i == 0) {  // all parts are 1 (or empty): enumeration finished
        done_ = true;
        current_ = Partition{};
        return *this;
    }
    std::vector<unsigned> next(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(i) - 1);
    unsigned remaining = 0;
    for (std::size_t j = i - 1; j < cur.size(); ++j) remaining += cur[j];
    const unsigned d = cur[i - 1] - 1;
    // Distribute `remaining` into parts of size at most d, greedily.
    unsigned left = remaining;
    while (left > 0) {
        const unsigned take = std::min(left, d);
        next.push_back(take);
        left -= take;
    }
    current_ = Partition::unchecked(std::move(next));
    return *this;
}

std::vector<Partition> partitions_with_max_part(unsigned n, unsigned max_part) {
    std::vector<Partition> out;
    std::vector<unsigned> stack;
    auto rec = [&](auto&& self, unsigned rest, unsigned cap) -> void {
        if (rest == 0) {
            out.push_back(Partition::unchecked(stack));
            return;
        }
        for (unsigned k = std::min(rest, cap); k >= 1; --k) {
            stack.push_back(k);
            self(self, rest - k, k);
            stack.pop_back();
        }
    };
    rec(rec, n, std::min(n, max_part));
    return out;
}

}  // namespace pleth
