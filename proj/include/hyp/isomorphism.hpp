#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hyp/lattice.hpp"

namespace hyp {

enum class IsoRule { EQUAL, PAIR_52_421, PAIR_CHAIN, NOT_ISOMORPHIC };

std::string to_string(IsoRule rule);

struct IsoVerdict {
    bool isomorphic;
    IsoRule rule;
    int chain_l;  // the l of PAIR_CHAIN {(l,l-1),(2l-1)}; 0 otherwise
};

// (dim_ok, card_ok): equal dimension, equal cardinality.
std::pair<bool, bool> necessary_conditions(const SegreChar& a, const SegreChar& b);

// The classification: V(a) and V(b) are isomorphic iff a = b, or
// {a,b} = {(5,2),(4,2,1)}, or {a,b} = {(l,l-1),(2l-1)} for some l >= 2.
IsoVerdict decide_iso(const SegreChar& a, const SegreChar& b);

// Backtracking search for an order isomorphism, returned as node index in A
// -> node index in B.  Quick rejection and candidate pruning come from joint
// iterative refinement of (weight, son/father degree) invariants; assignments
// are checked to preserve covers in both directions.  Throws resource_error
// when either lattice exceeds max_nodes.
std::optional<std::vector<int>> brute_force_iso(const Hyperlattice& A,
                                                const Hyperlattice& B,
                                                long long max_nodes = 20'000);

// Every order isomorphism A -> B, up to `limit` of them (limit 0 = all).
// Deterministic order.  Used to count automorphisms.
std::vector<std::vector<int>> find_isomorphisms(const Hyperlattice& A,
                                                const Hyperlattice& B,
                                                int limit = 0,
                                                long long max_nodes = 20'000);

// True iff f is a bijection preserving covers in both directions and
// meet/join (exhaustively over all pairs when |A| <= 2000, sampled above).
bool verify_witness(const Hyperlattice& A, const Hyperlattice& B,
                    const std::vector<int>& f);

// Oracle witness when decide_iso says isomorphic (always verified before
// return); nothing otherwise.
std::optional<std::vector<int>> build_witness(const SegreChar& a, const SegreChar& b,
                                              long long max_nodes = 20'000);

struct PairRecord {
    SegreChar alpha, beta;
    bool theorem_verdict;   // decide_iso
    bool oracle_verdict;    // brute_force_iso found a witness
    bool agree;
    bool witness_found;
    double elapsed_ms;
    // Witness sanity, true whenever no witness exists: every mapped pair
    // keeps its weight; images of unique sons are unique sons of the images;
    // images of the maximal unique-son chains ending at zero are exactly
    // their counterparts of equal length.
    bool witness_checks_ok;
};

struct VerifyReport {
    int n_max;
    std::vector<PairRecord> records;   // ordered by dimension, then alpha, then beta
    std::vector<std::string> skipped;  // pairs abandoned on a resource bound, flagged

    int disagreement_count() const;
    bool all_agree() const { return disagreement_count() == 0 && skipped.empty(); }
};

// Compares decide_iso against the oracle for every unordered pair (equal
// pairs included) of reduced characteristics with equal dimension <= n_max.
VerifyReport verify_range(int n_max, long long max_nodes = 20'000);

// Array of {alpha, beta, theorem_verdict, oracle_verdict, agree,
// witness_found, elapsed_ms} records.
nlohmann::json to_json(const VerifyReport& report);

// Human-readable table plus totals.
std::string summary(const VerifyReport& report);

}  // namespace hyp
