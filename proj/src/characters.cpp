#include "bredon/characters.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

namespace bredon {

namespace detail {

std::vector<std::uint32_t> mask_rref(const std::vector<std::uint32_t>& rows) {
    // (pivot bit, row) pairs with pivot bits pairwise distinct and each
    // pivot cleared from every other row.
    std::vector<std::pair<unsigned, std::uint32_t>> basis;
    for (std::uint32_t v : rows) {
        for (const auto& [p, row] : basis) {
            if ((v >> p) & 1u) v ^= row;
        }
        if (!v) continue;
        const unsigned p = static_cast<unsigned>(std::countr_zero(v));
        for (auto& [q, row] : basis) {
            if ((row >> p) & 1u) row ^= v;
        }
        basis.emplace_back(p, v);
    }
    std::sort(basis.begin(), basis.end());
    std::vector<std::uint32_t> out;
    out.reserve(basis.size());
    for (const auto& [p, row] : basis) out.push_back(row);
    return out;
}

std::uint32_t mask_rank(const std::vector<std::uint32_t>& rows) {
    return static_cast<std::uint32_t>(mask_rref(rows).size());
}

}  // namespace detail

void require_rank(std::uint32_t rank, std::uint32_t cap) {
    if (rank == 0) throw InvalidInput("rank must be positive");
    if (rank > cap) {
        throw ResourceLimit("rank " + std::to_string(rank) + " exceeds cap " + std::to_string(cap));
    }
}

void require_character(Character c, std::uint32_t rank) {
    if (c.mask == 0) throw InvalidInput("the trivial character is not materialized");
    if (rank >= 32 || c.mask >= (std::uint32_t{1} << rank)) {
        throw InvalidInput("character mask " + std::to_string(c.mask) + " out of range for rank " +
                           std::to_string(rank));
    }
}

std::vector<Character> all_characters(std::uint32_t rank) {
    require_rank(rank, kMaxRankCount);
    std::vector<Character> out;
    out.reserve((std::size_t{1} << rank) - 1);
    for (std::uint32_t m = 1; m < (std::uint32_t{1} << rank); ++m) out.push_back(Character{m});
    return out;
}

CharMultiset make_multiset(std::vector<Character> chars) {
    std::sort(chars.begin(), chars.end());
    CharMultiset out;
    for (Character c : chars) {
        if (!out.empty() && out.back().first == c) {
            ++out.back().second;
        } else {
            out.emplace_back(c, 1);
        }
    }
    return out;
}

std::uint32_t multiset_total(const CharMultiset& w) {
    std::uint32_t n = 0;
    for (const auto& [c, mult] : w) n += mult;
    return n;
}

std::uint32_t multiset_count(const CharMultiset& w, Character c) {
    for (const auto& [k, mult] : w) {
        if (k == c) return mult;
    }
    return 0;
}

CharMultiset multiset_add(const CharMultiset& a, const CharMultiset& b) {
    CharMultiset out;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return out;
}

std::optional<CharMultiset> multiset_sub(const CharMultiset& w, const CharMultiset& u) {
    CharMultiset out;
    std::size_t i = 0;
    for (const auto& [c, mult] : w) {
        std::uint32_t take = 0;
        if (i < u.size() && u[i].first == c) take = u[i++].second;
        if (take > mult) return std::nullopt;
        if (mult > take) out.emplace_back(c, mult - take);
    }
    if (i < u.size()) return std::nullopt;
    return out;
}

std::vector<Character> multiset_support(const CharMultiset& w) {
    std::vector<Character> out;
    out.reserve(w.size());
    for (const auto& [c, mult] : w) out.push_back(c);
    return out;
}

Subgroup::Subgroup(std::uint32_t ambient_rank, const std::vector<std::uint32_t>& generator_masks)
    : ambient_(ambient_rank) {
    require_rank(ambient_rank, kMaxRankCount);
    for (std::uint32_t g : generator_masks) {
        if (g >= (std::uint32_t{1} << ambient_rank)) {
            throw InvalidInput("subgroup generator " + std::to_string(g) +
                               " out of range for rank " + std::to_string(ambient_rank));
        }
    }
    gens_ = detail::mask_rref(generator_masks);
}

Subgroup Subgroup::trivial(std::uint32_t ambient_rank) { return Subgroup(ambient_rank, {}); }

Subgroup Subgroup::full(std::uint32_t ambient_rank) {
    std::vector<std::uint32_t> basis;
    for (std::uint32_t i = 0; i < ambient_rank; ++i) basis.push_back(std::uint32_t{1} << i);
    return Subgroup(ambient_rank, basis);
}

bool restricts_trivially(Character lambda, const Subgroup& b) {
    require_character(lambda, b.ambient_rank());
    for (std::uint32_t g : b.generators()) {
        if (std::popcount(lambda.mask & g) & 1) return false;
    }
    return true;
}

QuotientMap::QuotientMap(std::uint32_t rank, Character lambda) : rank_(rank), lambda_(lambda) {
    require_rank(rank, kMaxRankCount);
    require_character(lambda, rank);
    pivot_ = static_cast<unsigned>(std::countr_zero(lambda.mask));
}

std::uint32_t QuotientMap::apply(std::uint32_t mu_mask) const {
    if (mu_mask == 0 || mu_mask == lambda_.mask) return 0;
    if ((mu_mask >> pivot_) & 1u) mu_mask ^= lambda_.mask;
    const std::uint32_t low = mu_mask & ((std::uint32_t{1} << pivot_) - 1);
    const std::uint32_t high = (mu_mask >> (pivot_ + 1)) << pivot_;
    return low | high;
}

Character QuotientMap::map(Character mu) const {
    require_character(mu, rank_);
    const std::uint32_t image = apply(mu.mask);
    if (image == 0) throw InvalidInput("character restricts trivially to the kernel");
    return Character{image};
}

Subgroup kernel_subgroup(std::uint32_t rank, Character lambda) {
    require_character(lambda, rank);
    gf2::BitMatrix m(rank);
    gf2::BitVector row(rank);
    for (std::uint32_t i = 0; i < rank; ++i) {
        if ((lambda.mask >> i) & 1u) row.set(i);
    }
    m.append_row(std::move(row));
    const gf2::BitMatrix basis = gf2::kernel_basis(m);
    std::vector<std::uint32_t> gens;
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        std::uint32_t g = 0;
        for (std::uint32_t b = 0; b < rank; ++b) {
            if (basis.row(i).test(b)) g |= std::uint32_t{1} << b;
        }
        gens.push_back(g);
    }
    return Subgroup(rank, gens);
}

Character character_with_kernel(const Subgroup& b) {
    const std::uint32_t r = b.ambient_rank();
    if (b.rank() + 1 != r) throw InvalidInput("subgroup does not have index 2");
    Character found{0};
    for (Character c : all_characters(r)) {
        if (restricts_trivially(c, b)) {
            if (found.mask != 0) throw InvalidInput("subgroup does not have index 2");
            found = c;
        }
    }
    if (found.mask == 0) throw InvalidInput("no character annihilates the subgroup");
    return found;
}

std::vector<Subgroup> all_subgroups(std::uint32_t rank) {
    require_rank(rank, 6);
    const std::uint32_t n = std::uint32_t{1} << rank;
    // A subgroup is a XOR-closed set of elements containing 0; element sets
    // fit in a 64-bit word for rank <= 6.
    std::set<std::uint64_t> known;
    std::vector<std::uint64_t> queue;
    known.insert(1);  // the trivial subgroup {0}
    queue.push_back(1);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const std::uint64_t s = queue[qi];
        for (std::uint32_t v = 1; v < n; ++v) {
            if ((s >> v) & 1u) continue;
            std::uint64_t t = s;
            for (std::uint32_t w = 0; w < n; ++w) {
                if ((s >> w) & 1u) t |= std::uint64_t{1} << (w ^ v);
            }
            if (known.insert(t).second) queue.push_back(t);
        }
    }
    std::vector<std::pair<std::pair<std::uint32_t, std::uint64_t>, Subgroup>> tagged;
    for (std::uint64_t s : known) {
        std::vector<std::uint32_t> elems;
        for (std::uint32_t v = 1; v < n; ++v) {
            if ((s >> v) & 1u) elems.push_back(v);
        }
        Subgroup b(rank, elems);
        tagged.emplace_back(std::make_pair(b.rank(), s), std::move(b));
    }
    std::sort(tagged.begin(), tagged.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Subgroup> out;
    out.reserve(tagged.size());
    for (auto& [key, b] : tagged) out.push_back(std::move(b));
    return out;
}

}  // namespace bredon
