#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hyp/lattice.hpp"

namespace hyp {

enum class CongruenceKind { SIM2, SIM3 };

std::string to_string(CongruenceKind k);

// SIM2 identifies tuples agreeing from position 2 on; requires r >= 2 and
// a1-a2 > 1.  SIM3 identifies tuples agreeing from position 3 on; requires
// r >= 3 and a1-a2 = 1.  Both are compatible with meet and join.
class Congruence {
public:
    // Throws validation_error when the kind's precondition fails for alpha.
    static Congruence make(CongruenceKind kind, const SegreChar& alpha);

    CongruenceKind kind() const { return kind_; }
    const SegreChar& alpha() const { return alpha_; }

private:
    Congruence(CongruenceKind kind, SegreChar alpha)
        : kind_(kind), alpha_(std::move(alpha)) {}
    CongruenceKind kind_;
    SegreChar alpha_;
};

// Throws validation_error unless both tuples are members of V(alpha).
bool congruent(const Congruence& c, const Hypertuple& u, const Hypertuple& v);

// The congruence classes with their cover relation.  Classes are ordered by
// their smallest node index (so the class of the top comes first); inside a
// class, node indices ascend, which lists the class's tuples from its
// maximal element down to the representative (the entrywise-minimal one).
struct FactorLattice {
    CongruenceKind kind;
    std::vector<std::vector<int>> classes;       // node indices per class
    std::vector<int> class_of;                   // node index -> class index
    std::vector<std::pair<int, int>> covers;     // [parent class, son class], sorted

    int representative(int cls) const { return classes[static_cast<size_t>(cls)].back(); }
    int class_count() const { return static_cast<int>(classes.size()); }
};

FactorLattice factor(const Hyperlattice& L, const Congruence& c);

// {"alpha": [...], "classes": [[node indices], ...], "covers": [[p,s], ...]}
// mirroring the lattice schema with classes in place of nodes.
nlohmann::json to_json(const Hyperlattice& L, const FactorLattice& F);

// The truncation map [u] -> (u2,...,ur) (SIM2) or (u3,...,ur) (SIM3) from
// classes to the lattice of the truncated parameter, with its verification.
struct QuotientIsoReport {
    SegreChar tail;                 // the truncated parameter
    Hyperlattice tail_lattice;      // V(tail)
    std::vector<int> class_to_tail; // class index -> node index in tail_lattice
    int class_count;                // enumerated
    int class_size;                 // enumerated common size
    long long formula_class_count;  // (a2-a3+1)...(ar+1) resp. (a3-a4+1)...(ar+1)
    int formula_class_size;         // a1-a2+1 resp. 2(a1-a3)
    bool counts_match_formulas;     // reported, not enforced
};

// Builds the truncation map and verifies it is a lattice isomorphism
// (bijective, preserves meet and join over every class pair).  Throws
// std::logic_error if verification fails — that would be an implementation
// bug, never an expected outcome.  Formula mismatches are reported in the
// result instead, with the enumerated values authoritative.
QuotientIsoReport quotient_iso(const Hyperlattice& L, const Congruence& c);

}  // namespace hyp
