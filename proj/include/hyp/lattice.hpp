#pragma once

#include <map>
#include <optional>
#include <vector>

#include "json.hpp"

#include "hyp/hypertuple.hpp"
#include "hyp/segre.hpp"

namespace hyp {

// Membership in V(alpha): both monotonicity conditions.
// Throws validation_error when |u| != r.
bool contains(const SegreChar& alpha, const Hypertuple& u);

// Entrywise min / max; V(alpha) is closed under both.
// Throws validation_error when the sizes differ.
Hypertuple meet(const Hypertuple& u, const Hypertuple& v);
Hypertuple join(const Hypertuple& u, const Hypertuple& v);

// (a1-a2+1)(a2-a3+1)...(a_{r-1}-a_r+1)(ar+1)
long long cardinality(const SegreChar& alpha);

// The covers of u, characterized by decrementable position:
//   position 1:          u1 > u2                      (for r = 1: u1 > 0)
//   position 1 < i < r:  ui > u_{i+1}  and  a_{i-1}-u_{i-1} > a_i-u_i
//   position r:          ur != 0       and  a_{r-1}-u_{r-1} > a_r-u_r
// Results ordered by decremented position, first to last.  Throws
// validation_error unless u is a member.
std::vector<Hypertuple> sons(const SegreChar& alpha, const Hypertuple& u);

// {w : u in sons(w)}, found by testing every single-entry increment for
// membership.  Throws validation_error unless u is a member.
std::vector<Hypertuple> fathers(const SegreChar& alpha, const Hypertuple& u);

// With k = max{i : u1 = ... = ui} and q = max{i : ui > 0}: u has exactly
// one son iff a_k-u_k = ... = a_q-u_q, and that son decrements position k.
// Throws validation_error on the zero tuple or a non-member.
std::optional<Hypertuple> unique_son(const SegreChar& alpha, const Hypertuple& u);

// (a1-u1, ..., ar-ur): conditions (1) and (2) swap roles, so the image is a
// member; the map is an order-reversing involution.
Hypertuple dual(const SegreChar& alpha, const Hypertuple& u);

// The whole of V(alpha), materialized: nodes in lexicographic-descending
// order (top = alpha first, zero tuple last) with cover lists both ways.
class Hyperlattice {
public:
    // Throws resource_error when cardinality(alpha) exceeds max_nodes.
    static Hyperlattice enumerate(const SegreChar& alpha,
                                  long long max_nodes = 1'000'000);

    const SegreChar& alpha() const { return alpha_; }
    const std::vector<Hypertuple>& nodes() const { return nodes_; }
    const Hypertuple& node(int i) const { return nodes_[static_cast<size_t>(i)]; }
    int node_count() const { return static_cast<int>(nodes_.size()); }

    // Position of u in nodes(); throws validation_error for non-members.
    int index_of(const Hypertuple& u) const;
    bool has_node(const Hypertuple& u) const;

    const std::vector<int>& sons_of(int node) const { return sons_[static_cast<size_t>(node)]; }
    const std::vector<int>& fathers_of(int node) const { return fathers_[static_cast<size_t>(node)]; }

    int top() const { return 0; }
    int bottom() const { return node_count() - 1; }

    // {"alpha": [...], "nodes": [[...], ...], "covers": [[parent, son], ...]}
    // with nodes in enumeration order and covers sorted ascending.
    nlohmann::json to_json() const;

private:
    explicit Hyperlattice(SegreChar alpha) : alpha_(std::move(alpha)) {}

    SegreChar alpha_;
    std::vector<Hypertuple> nodes_;
    std::map<Hypertuple, int> index_;
    std::vector<std::vector<int>> sons_;
    std::vector<std::vector<int>> fathers_;
};

}  // namespace hyp
