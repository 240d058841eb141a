#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bredon/gf2.hpp"

namespace bredon {

// Rank caps: full enumeration is allowed up to 12, counting-only work up
// to 16.
inline constexpr std::uint32_t kMaxRankEnumerate = 12;
inline constexpr std::uint32_t kMaxRankCount = 16;

/// Nontrivial character of C^r, identified with its nonzero mask in
/// GF(2)^r. Bit i corresponds to the projection onto the (i+1)st factor,
/// so mask 3 at rank 2 is the product of both projections.
struct Character {
    std::uint32_t mask = 0;
    friend constexpr auto operator<=>(const Character&, const Character&) = default;
};

constexpr Character operator^(Character a, Character b) { return Character{a.mask ^ b.mask}; }

/// Multiset of characters: (character, multiplicity) pairs, sorted by mask,
/// multiplicities >= 1.
using CharMultiset = std::vector<std::pair<Character, std::uint32_t>>;

void require_rank(std::uint32_t rank, std::uint32_t cap);
void require_character(Character c, std::uint32_t rank);

/// The 2^r - 1 nontrivial characters in ascending mask order.
std::vector<Character> all_characters(std::uint32_t rank);

CharMultiset make_multiset(std::vector<Character> chars);
std::uint32_t multiset_total(const CharMultiset& w);
std::uint32_t multiset_count(const CharMultiset& w, Character c);
CharMultiset multiset_add(const CharMultiset& a, const CharMultiset& b);
/// w - u componentwise, or nullopt when u is not <= w.
std::optional<CharMultiset> multiset_sub(const CharMultiset& w, const CharMultiset& u);
/// Characters appearing in w, ascending.
std::vector<Character> multiset_support(const CharMultiset& w);

/// Subgroup of C^r. Generators are canonicalized to the reduced row-echelon
/// basis of their span on construction, so subgroup equality is structural.
class Subgroup {
public:
    Subgroup(std::uint32_t ambient_rank, const std::vector<std::uint32_t>& generator_masks);
    static Subgroup trivial(std::uint32_t ambient_rank);
    static Subgroup full(std::uint32_t ambient_rank);

    std::uint32_t ambient_rank() const { return ambient_; }
    std::uint32_t rank() const { return static_cast<std::uint32_t>(gens_.size()); }
    const std::vector<std::uint32_t>& generators() const { return gens_; }
    friend bool operator==(const Subgroup&, const Subgroup&) = default;

private:
    std::uint32_t ambient_;
    std::vector<std::uint32_t> gens_;
};

/// True iff lambda pairs to zero with every generator of b.
bool restricts_trivially(Character lambda, const Subgroup& b);

/// Identifies characters of K = ker(lambda) with (r-1)-bit masks. Pivot is
/// the lowest set bit p of lambda: a character mu gets bit p cleared by
/// adding lambda when needed, then bit p is deleted. apply() is 2-to-1 on
/// characters outside {0, lambda}, with fibers {mu, mu^lambda}; members of
/// {0, lambda} map to 0, the trivial K-character.
class QuotientMap {
public:
    QuotientMap(std::uint32_t rank, Character lambda);
    std::uint32_t rank() const { return rank_; }
    std::uint32_t quotient_rank() const { return rank_ - 1; }
    Character lambda() const { return lambda_; }
    std::uint32_t apply(std::uint32_t mu_mask) const;
    /// apply() for mu outside {0, lambda}; the image is a nontrivial
    /// K-character.
    Character map(Character mu) const;

private:
    std::uint32_t rank_;
    Character lambda_;
    unsigned pivot_;
};

/// ker(lambda) as an index-2 subgroup of C^r.
Subgroup kernel_subgroup(std::uint32_t rank, Character lambda);
/// The unique character whose kernel is the index-2 subgroup b.
Character character_with_kernel(const Subgroup& b);
/// Every subgroup of C^r (rank <= 6), ordered by (rank, element set).
std::vector<Subgroup> all_subgroups(std::uint32_t rank);

namespace detail {
/// Reduced row-echelon form of a list of masks, pivots at the lowest set
/// bit, rows sorted by pivot.
std::vector<std::uint32_t> mask_rref(const std::vector<std::uint32_t>& rows);
std::uint32_t mask_rank(const std::vector<std::uint32_t>& rows);
}  // namespace detail

}  // namespace bredon
