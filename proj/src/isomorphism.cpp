#include "hyp/isomorphism.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "hyp/chains.hpp"
#include "hyp/errors.hpp"

namespace hyp {

std::string to_string(IsoRule rule) {
    switch (rule) {
        case IsoRule::EQUAL: return "EQUAL";
        case IsoRule::PAIR_52_421: return "PAIR_52_421";
        case IsoRule::PAIR_CHAIN: return "PAIR_CHAIN";
        case IsoRule::NOT_ISOMORPHIC: return "NOT_ISOMORPHIC";
    }
    return "";
}

std::pair<bool, bool> necessary_conditions(const SegreChar& a, const SegreChar& b) {
    return {dimension(a) == dimension(b), cardinality(a) == cardinality(b)};
}

namespace {

bool is_pair(const SegreChar& a, const SegreChar& b,
             const std::vector<int>& x, const std::vector<int>& y) {
    return (a.parts() == x && b.parts() == y) || (a.parts() == y && b.parts() == x);
}

// {(l,l-1), (2l-1)} for some l >= 2; returns l or 0.
int chain_pair_l(const SegreChar& a, const SegreChar& b) {
    const SegreChar* two = nullptr;
    const SegreChar* one = nullptr;
    if (a.r() == 2 && b.r() == 1) { two = &a; one = &b; }
    if (b.r() == 2 && a.r() == 1) { two = &b; one = &a; }
    if (!two) return 0;
    const int l = two->part(0);
    if (l >= 2 && two->part(1) == l - 1 && one->part(0) == 2 * l - 1) return l;
    return 0;
}

}  // namespace

IsoVerdict decide_iso(const SegreChar& a, const SegreChar& b) {
    if (a == b) return {true, IsoRule::EQUAL, 0};
    if (is_pair(a, b, {5, 2}, {4, 2, 1})) return {true, IsoRule::PAIR_52_421, 0};
    if (const int l = chain_pair_l(a, b)) return {true, IsoRule::PAIR_CHAIN, l};
    return {false, IsoRule::NOT_ISOMORPHIC, 0};
}

namespace {

// Joint iterative refinement: nodes of both lattices start from their weight
// and are repeatedly relabeled by (label, sorted son labels, sorted father
// labels) through a table shared per round.  Returns the stable labels, or
// nothing when the label multisets separate the lattices.
struct Refinement {
    std::vector<int> a_labels, b_labels;
};

std::optional<Refinement> refine(const Hyperlattice& A, const Hyperlattice& B) {
    const int na = A.node_count();
    const int nb = B.node_count();
    std::vector<int> la(static_cast<size_t>(na)), lb(static_cast<size_t>(nb));
    for (int i = 0; i < na; ++i) la[static_cast<size_t>(i)] = weight(A.node(i));
    for (int i = 0; i < nb; ++i) lb[static_cast<size_t>(i)] = weight(B.node(i));
    auto multisets_equal = [&] {
        std::vector<int> ma = la, mb = lb;
        std::sort(ma.begin(), ma.end());
        std::sort(mb.begin(), mb.end());
        return ma == mb;
    };
    if (!multisets_equal()) return std::nullopt;

    int classes = 0;
    while (true) {
        using Signature = std::tuple<int, std::vector<int>, std::vector<int>>;
        std::map<Signature, int> table;
        auto relabel = [&table](const Hyperlattice& L, const std::vector<int>& labels,
                                int node) {
            std::vector<int> down, up;
            for (int s : L.sons_of(node)) down.push_back(labels[static_cast<size_t>(s)]);
            for (int f : L.fathers_of(node)) up.push_back(labels[static_cast<size_t>(f)]);
            std::sort(down.begin(), down.end());
            std::sort(up.begin(), up.end());
            Signature sig{labels[static_cast<size_t>(node)], std::move(down), std::move(up)};
            auto [it, inserted] = table.emplace(std::move(sig), static_cast<int>(table.size()));
            return it->second;
        };
        std::vector<int> na_next(static_cast<size_t>(na)), nb_next(static_cast<size_t>(nb));
        for (int i = 0; i < na; ++i) na_next[static_cast<size_t>(i)] = relabel(A, la, i);
        for (int i = 0; i < nb; ++i) nb_next[static_cast<size_t>(i)] = relabel(B, lb, i);
        la = std::move(na_next);
        lb = std::move(nb_next);
        if (!multisets_equal()) return std::nullopt;
        const int new_classes = static_cast<int>(table.size());
        if (new_classes == classes) break;
        classes = new_classes;
    }
    return Refinement{std::move(la), std::move(lb)};
}

// Backtracking enumeration of order isomorphisms.  Candidates come from the
// refinement classes; assignments must keep covers aligned in both
// directions against everything already assigned.
struct IsoSearch {
    const Hyperlattice& A;
    const Hyperlattice& B;
    std::vector<std::vector<int>> candidates;  // A node -> B nodes of equal label
    std::vector<int> order;                    // assignment order over A nodes
    std::vector<int> f;                        // A node -> B node or -1
    std::vector<char> used;                    // B node assigned
    std::vector<std::vector<int>>& results;
    int limit;                                 // stop after this many (0 = all)

    bool consistent(int a, int b) const {
        for (int s : A.sons_of(a)) {
            const int fb = f[static_cast<size_t>(s)];
            if (fb < 0) continue;
            const auto& bs = B.sons_of(b);
            if (std::find(bs.begin(), bs.end(), fb) == bs.end()) return false;
        }
        for (int p : A.fathers_of(a)) {
            const int fb = f[static_cast<size_t>(p)];
            if (fb < 0) continue;
            const auto& bf = B.fathers_of(b);
            if (std::find(bf.begin(), bf.end(), fb) == bf.end()) return false;
        }
        return true;
    }

    bool search(size_t depth) {
        if (depth == order.size()) {
            results.push_back(f);
            return limit > 0 && static_cast<int>(results.size()) >= limit;
        }
        const int a = order[depth];
        for (int b : candidates[static_cast<size_t>(a)]) {
            if (used[static_cast<size_t>(b)]) continue;
            if (!consistent(a, b)) continue;
            f[static_cast<size_t>(a)] = b;
            used[static_cast<size_t>(b)] = 1;
            if (search(depth + 1)) return true;
            f[static_cast<size_t>(a)] = -1;
            used[static_cast<size_t>(b)] = 0;
        }
        return false;
    }
};

std::vector<std::vector<int>> enumerate_isomorphisms(const Hyperlattice& A,
                                                     const Hyperlattice& B,
                                                     int limit,
                                                     long long max_nodes) {
    if (A.node_count() > max_nodes || B.node_count() > max_nodes) {
        throw resource_error("isomorphism search bound exceeded: " +
                             std::to_string(A.node_count()) + " / " +
                             std::to_string(B.node_count()) + " nodes, bound " +
                             std::to_string(max_nodes));
    }
    std::vector<std::vector<int>> results;
    if (A.node_count() != B.node_count()) return results;

    auto refinement = refine(A, B);
    if (!refinement) return results;

    const int n = A.node_count();
    std::vector<std::vector<int>> by_label_b;
    {
        std::map<int, std::vector<int>> groups;
        for (int i = 0; i < n; ++i) groups[refinement->b_labels[static_cast<size_t>(i)]].push_back(i);
        int max_label = 0;
        for (auto& [label, members] : groups) max_label = std::max(max_label, label);
        by_label_b.resize(static_cast<size_t>(max_label) + 1);
        for (auto& [label, members] : groups) by_label_b[static_cast<size_t>(label)] = std::move(members);
    }
    IsoSearch search{A, B, {}, {}, {}, {}, results, limit};
    search.candidates.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const int label = refinement->a_labels[static_cast<size_t>(i)];
        if (label >= static_cast<int>(by_label_b.size())) return results;
        search.candidates[static_cast<size_t>(i)] = by_label_b[static_cast<size_t>(label)];
        if (search.candidates[static_cast<size_t>(i)].empty()) return results;
    }
    search.order.resize(static_cast<size_t>(n));
    std::iota(search.order.begin(), search.order.end(), 0);
    // Top weight first, then the tightest candidate class: fail fast.
    std::sort(search.order.begin(), search.order.end(), [&](int x, int y) {
        const int wx = weight(A.node(x));
        const int wy = weight(A.node(y));
        if (wx != wy) return wx > wy;
        const size_t cx = search.candidates[static_cast<size_t>(x)].size();
        const size_t cy = search.candidates[static_cast<size_t>(y)].size();
        if (cx != cy) return cx < cy;
        return x < y;
    });
    search.f.assign(static_cast<size_t>(n), -1);
    search.used.assign(static_cast<size_t>(n), 0);
    search.search(0);
    return results;
}

}  // namespace

std::optional<std::vector<int>> brute_force_iso(const Hyperlattice& A,
                                                const Hyperlattice& B,
                                                long long max_nodes) {
    auto found = enumerate_isomorphisms(A, B, 1, max_nodes);
    if (found.empty()) return std::nullopt;
    return std::move(found.front());
}

std::vector<std::vector<int>> find_isomorphisms(const Hyperlattice& A,
                                                const Hyperlattice& B,
                                                int limit,
                                                long long max_nodes) {
    return enumerate_isomorphisms(A, B, limit, max_nodes);
}

bool verify_witness(const Hyperlattice& A, const Hyperlattice& B,
                    const std::vector<int>& f) {
    const int n = A.node_count();
    if (B.node_count() != n || static_cast<int>(f.size()) != n) return false;
    std::vector<char> used(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        const int b = f[static_cast<size_t>(i)];
        if (b < 0 || b >= n || used[static_cast<size_t>(b)]) return false;
        used[static_cast<size_t>(b)] = 1;
    }
    // Covers in both directions.
    for (int i = 0; i < n; ++i) {
        const auto& as = A.sons_of(i);
        std::set<int> mapped;
        for (int s : as) mapped.insert(f[static_cast<size_t>(s)]);
        const auto& bs = B.sons_of(f[static_cast<size_t>(i)]);
        if (mapped != std::set<int>(bs.begin(), bs.end())) return false;
    }
    // Meet/join preservation: exhaustive up to 2000 nodes, a deterministic
    // stride sample above that.
    auto check_pair = [&](int i, int j) {
        const Hypertuple& ui = A.node(i);
        const Hypertuple& uj = A.node(j);
        const Hypertuple& vi = B.node(f[static_cast<size_t>(i)]);
        const Hypertuple& vj = B.node(f[static_cast<size_t>(j)]);
        return f[static_cast<size_t>(A.index_of(meet(ui, uj)))] == B.index_of(meet(vi, vj)) &&
               f[static_cast<size_t>(A.index_of(join(ui, uj)))] == B.index_of(join(vi, vj));
    };
    if (n <= 2000) {
        for (int i = 0; i < n; ++i) {
            for (int j = i; j < n; ++j) {
                if (!check_pair(i, j)) return false;
            }
        }
    } else {
        const int stride = n / 1000 + 1;
        for (int i = 0; i < n; i += 1) {
            for (int j = i % stride; j < n; j += stride) {
                if (!check_pair(i, j)) return false;
            }
        }
    }
    return true;
}

std::optional<std::vector<int>> build_witness(const SegreChar& a, const SegreChar& b,
                                              long long max_nodes) {
    if (!decide_iso(a, b).isomorphic) return std::nullopt;
    Hyperlattice A = Hyperlattice::enumerate(a, max_nodes);
    Hyperlattice B = Hyperlattice::enumerate(b, max_nodes);
    auto witness = brute_force_iso(A, B, max_nodes);
    if (witness && !verify_witness(A, B, *witness)) {
        throw std::logic_error("oracle produced a witness that failed verification");
    }
    return witness;
}

namespace {

// Witness sanity beyond raw cover preservation: weights are kept, unique
// sons map to unique sons, and the maximal unique-son chains ending at zero
// map onto their counterparts with equal lengths.
bool witness_invariants_hold(const Hyperlattice& A, const Hyperlattice& B,
                             const std::vector<int>& f) {
    const int n = A.node_count();
    for (int i = 0; i < n; ++i) {
        if (weight(A.node(i)) != weight(B.node(f[static_cast<size_t>(i)]))) return false;
    }
    for (int i = 0; i < n; ++i) {
        if (A.sons_of(i).size() != 1) continue;
        const auto& bs = B.sons_of(f[static_cast<size_t>(i)]);
        if (bs.size() != 1) return false;
        if (f[static_cast<size_t>(A.sons_of(i)[0])] != bs[0]) return false;
    }
    std::set<std::vector<int>> b_chains;
    std::map<std::vector<int>, int> b_lengths;
    for (const SpecialChain& sc : special_chains_brute_force(B)) {
        std::vector<int> idx;
        for (const Hypertuple& t : sc.chain.tuples) idx.push_back(B.index_of(t));
        std::vector<int> key = idx;
        std::sort(key.begin(), key.end());
        b_chains.insert(key);
        b_lengths[key] = sc.chain.length();
    }
    for (const SpecialChain& sc : special_chains_brute_force(A)) {
        std::vector<int> image;
        for (const Hypertuple& t : sc.chain.tuples) {
            image.push_back(f[static_cast<size_t>(A.index_of(t))]);
        }
        std::sort(image.begin(), image.end());
        auto it = b_lengths.find(image);
        if (it == b_lengths.end() || it->second != sc.chain.length()) return false;
    }
    return true;
}

}  // namespace

int VerifyReport::disagreement_count() const {
    int count = 0;
    for (const PairRecord& rec : records) {
        if (!rec.agree || !rec.witness_checks_ok) ++count;
    }
    return count;
}

VerifyReport verify_range(int n_max, long long max_nodes) {
    VerifyReport report;
    report.n_max = n_max;

    std::map<int, std::vector<SegreChar>> by_dim;
    for (const SegreChar& alpha : enumerate_reduced(n_max)) {
        by_dim[alpha.n()].push_back(alpha);
    }
    std::map<SegreChar, Hyperlattice> cache;
    auto lattice_of = [&](const SegreChar& alpha) -> const Hyperlattice& {
        auto it = cache.find(alpha);
        if (it == cache.end()) {
            it = cache.emplace(alpha, Hyperlattice::enumerate(alpha, max_nodes)).first;
        }
        return it->second;
    };

    for (const auto& [dim, group] : by_dim) {
        for (size_t i = 0; i < group.size(); ++i) {
            for (size_t j = i; j < group.size(); ++j) {
                const SegreChar& a = group[i];
                const SegreChar& b = group[j];
                const auto start = std::chrono::steady_clock::now();
                try {
                    const Hyperlattice& A = lattice_of(a);
                    const Hyperlattice& B = lattice_of(b);
                    const bool theorem = decide_iso(a, b).isomorphic;
                    auto witness = brute_force_iso(A, B, max_nodes);
                    const bool oracle = witness.has_value();
                    bool checks = true;
                    if (witness) {
                        checks = verify_witness(A, B, *witness) &&
                                 witness_invariants_hold(A, B, *witness);
                    }
                    const auto elapsed =
                        std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
                    report.records.push_back(PairRecord{a, b, theorem, oracle,
                                                        theorem == oracle, oracle,
                                                        elapsed, checks});
                } catch (const resource_error& e) {
                    report.skipped.push_back("V(" + to_string(a) + ") vs V(" +
                                             to_string(b) + "): " + e.what());
                }
            }
        }
    }
    return report;
}

nlohmann::json to_json(const VerifyReport& report) {
    auto arr = nlohmann::json::array();
    for (const PairRecord& rec : report.records) {
        arr.push_back({{"alpha", rec.alpha.parts()},
                       {"beta", rec.beta.parts()},
                       {"theorem_verdict", rec.theorem_verdict},
                       {"oracle_verdict", rec.oracle_verdict},
                       {"agree", rec.agree},
                       {"witness_found", rec.witness_found},
                       {"elapsed_ms", rec.elapsed_ms}});
    }
    return arr;
}

std::string summary(const VerifyReport& report) {
    std::ostringstream out;
    out << "verification sweep, dimensions up to " << report.n_max << "\n";
    int nontrivial = 0;
    for (const PairRecord& rec : report.records) {
        if (rec.oracle_verdict && !(rec.alpha == rec.beta)) ++nontrivial;
    }
    out << "pairs compared: " << report.records.size()
        << ", disagreements: " << report.disagreement_count()
        << ", nontrivial isomorphic pairs: " << nontrivial << "\n";
    for (const PairRecord& rec : report.records) {
        if (!rec.oracle_verdict && rec.agree && rec.witness_checks_ok) continue;
        out << "  V(" << to_string(rec.alpha) << ") ~ V(" << to_string(rec.beta)
            << "): theorem=" << (rec.theorem_verdict ? "iso" : "non")
            << " oracle=" << (rec.oracle_verdict ? "iso" : "non")
            << (rec.agree ? "" : "  DISAGREEMENT")
            << (rec.witness_checks_ok ? "" : "  WITNESS-CHECK-FAILED") << "\n";
    }
    for (const std::string& s : report.skipped) {
        out << "  skipped: " << s << "\n";
    }
    return out.str();
}

}  // namespace hyp
