#pragma once

#include <compare>
#include <string>
#include <vector>

#include "json.hpp"

#include "hyp/lattice.hpp"

namespace hyp {

// Descending sequence of tuples, each a son of its predecessor.
struct Chain {
    std::vector<Hypertuple> tuples;
    int length() const { return static_cast<int>(tuples.size()); }
    auto operator<=>(const Chain&) const = default;
};

enum class SpecialKind { C1, C2, C3 };
enum class RidingKind { RC1, RC2, RC3 };

std::string to_string(SpecialKind k);
std::string to_string(RidingKind k);

// Maximal chain of unique sons ending at the zero tuple.  Forms:
//   C1: (1,...,1) down to zero, length r+1; present when r >= 2 except for
//       r = 2 with a1-a2 = 1.
//   C2: (a1-a2, 0, ..., 0) down to zero, length a1-a2+1 (a2 := 0 for r = 1);
//       present when r = 1 or a1-a2 > 1.
//   C3: unique-son descent from (a1-a3, a2-a3, 0, ..., 0), length 2(a1-a3)
//       (a3 := 0 for r = 2); present when a1-a2 = 1 and r >= 2.
struct SpecialChain {
    SpecialKind kind;
    Chain chain;
    auto operator<=>(const SpecialChain&) const = default;
};

// A maximal chain alongside a special chain: an optional leading segment of
// elements with a unique son, then a nonempty segment of elements each
// having exactly two sons with one on the ridden chain, ending at the exit
// element whose single son lies on the ridden chain.
struct RidingChain {
    RidingKind kind;  // matches the ridden chain: C1 -> RC1, C2 -> RC2, C3 -> RC3
    Chain chain;
    SpecialKind attached_to;
    auto operator<=>(const RidingChain&) const = default;
};

// Closed forms per the existence case split; returns 1 or 2 chains, sorted
// by kind.
std::vector<SpecialChain> special_chains(const Hyperlattice& L);

// Independent detector: grow maximal unique-son chains from their start
// nodes and keep the ones reaching zero.  Serves as the oracle for
// special_chains; classification is by head shape alone.
std::vector<SpecialChain> special_chains_brute_force(const Hyperlattice& L);

// Detection from the definition: locate every exit element, grow the
// two-son segment upward maximally (branching where several fathers
// qualify), then attach every maximal unique-son leading segment on top.
// Empty for r = 1 and for r = 2 with a1-a2 = 1.  Sorted by kind, then by
// tuples descending.
std::vector<RidingChain> riding_chains(const Hyperlattice& L);

// True iff consecutive elements are in the son relation.  Throws
// validation_error if some tuple is not a node of L.
bool validate_chain(const Hyperlattice& L, const Chain& c);

// "(3,2,1) - (2,2,1)": tuples joined by " - ".
std::string to_string(const Chain& c);

nlohmann::json to_json(const std::vector<SpecialChain>& chains);
nlohmann::json to_json(const std::vector<RidingChain>& chains);

}  // namespace hyp
