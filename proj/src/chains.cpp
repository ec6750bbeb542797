#include "hyp/chains.hpp"

#include <algorithm>
#include <set>

#include "hyp/errors.hpp"

namespace hyp {

std::string to_string(SpecialKind k) {
    switch (k) {
        case SpecialKind::C1: return "C1";
        case SpecialKind::C2: return "C2";
        case SpecialKind::C3: return "C3";
    }
    return "";
}

std::string to_string(RidingKind k) {
    switch (k) {
        case RidingKind::RC1: return "RC1";
        case RidingKind::RC2: return "RC2";
        case RidingKind::RC3: return "RC3";
    }
    return "";
}

namespace {

// Follow unique sons from head down as far as they exist.
Chain descend_by_unique_sons(const SegreChar& alpha, Hypertuple head) {
    Chain c;
    c.tuples.push_back(std::move(head));
    while (true) {
        const Hypertuple& last = c.tuples.back();
        if (std::all_of(last.begin(), last.end(), [](int x) { return x == 0; })) break;
        auto next = unique_son(alpha, last);
        if (!next) break;
        c.tuples.push_back(std::move(*next));
    }
    return c;
}

}  // namespace

std::vector<SpecialChain> special_chains(const Hyperlattice& L) {
    const SegreChar& alpha = L.alpha();
    const int r = alpha.r();
    const int a1 = alpha.part(0);
    const int a2 = r >= 2 ? alpha.part(1) : 0;
    const int a3 = r >= 3 ? alpha.part(2) : 0;
    std::vector<SpecialChain> out;

    if (r == 1) {
        // The lattice is itself a chain; by convention its single special
        // chain is of the C2 shape with a2 = 0.
        Chain c;
        for (int k = a1; k >= 0; --k) c.tuples.push_back({k});
        out.push_back({SpecialKind::C2, std::move(c)});
        return out;
    }
    if (r == 2 && a1 - a2 == 1) {
        // The lattice is a single chain from the top; only C3 exists.
        out.push_back({SpecialKind::C3, descend_by_unique_sons(alpha, alpha.parts())});
        return out;
    }

    Chain c1;
    for (int ones = r; ones >= 0; --ones) {
        Hypertuple t(static_cast<size_t>(r), 0);
        std::fill(t.begin(), t.begin() + ones, 1);
        c1.tuples.push_back(std::move(t));
    }
    out.push_back({SpecialKind::C1, std::move(c1)});

    if (a1 - a2 > 1) {
        Chain c2;
        for (int k = a1 - a2; k >= 0; --k) {
            Hypertuple t(static_cast<size_t>(r), 0);
            t[0] = k;
            c2.tuples.push_back(std::move(t));
        }
        out.push_back({SpecialKind::C2, std::move(c2)});
    } else {
        Hypertuple head(static_cast<size_t>(r), 0);
        head[0] = a1 - a3;
        head[1] = a2 - a3;
        out.push_back({SpecialKind::C3, descend_by_unique_sons(alpha, head)});
    }
    return out;
}

std::vector<SpecialChain> special_chains_brute_force(const Hyperlattice& L) {
    const SegreChar& alpha = L.alpha();
    const int r = alpha.r();
    const Hypertuple zero(static_cast<size_t>(r), 0);

    // Starts: nodes with a unique son that are not themselves the unique son
    // of some father.
    std::vector<SpecialChain> out;
    for (int i = 0; i < L.node_count(); ++i) {
        const Hypertuple& u = L.node(i);
        if (L.sons_of(i).size() != 1) continue;
        bool is_continuation = false;
        for (int f : L.fathers_of(i)) {
            if (L.sons_of(f).size() == 1) {
                is_continuation = true;
                break;
            }
        }
        if (is_continuation) continue;
        Chain c;
        c.tuples.push_back(u);
        int cur = i;
        while (L.sons_of(cur).size() == 1) {
            cur = L.sons_of(cur)[0];
            c.tuples.push_back(L.node(cur));
        }
        if (c.tuples.back() != zero) continue;

        // Classify by head shape alone, independently of the closed forms.
        const Hypertuple& head = c.tuples.front();
        SpecialKind kind;
        if (r == 1) {
            kind = SpecialKind::C2;
        } else if (std::all_of(head.begin(), head.end(), [](int x) { return x == 1; })) {
            kind = SpecialKind::C1;
        } else if (head[1] == 0) {
            kind = SpecialKind::C2;
        } else {
            kind = SpecialKind::C3;
        }
        out.push_back({kind, std::move(c)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct RidingSearch {
    const Hyperlattice& L;
    const std::vector<char>& on_chain;  // node index -> lies on the ridden chain
    std::vector<Chain>& found;

    // True when e sits off the chain and its single son lies on it.
    bool is_exit(int e) const {
        return !on_chain[static_cast<size_t>(e)] && L.sons_of(e).size() == 1 &&
               on_chain[static_cast<size_t>(L.sons_of(e)[0])];
    }

    // Fathers of v, off the chain, whose two sons are v and a chain element.
    std::vector<int> two_son_preds(int v) const {
        std::vector<int> out;
        for (int w : L.fathers_of(v)) {
            if (on_chain[static_cast<size_t>(w)]) continue;
            const auto& s = L.sons_of(w);
            if (s.size() != 2) continue;
            const int other = s[0] == v ? s[1] : (s[1] == v ? s[0] : -1);
            if (other >= 0 && on_chain[static_cast<size_t>(other)]) out.push_back(w);
        }
        return out;
    }

    // Fathers of v, off the chain, with v as their single son.
    std::vector<int> unique_son_preds(int v) const {
        std::vector<int> out;
        for (int w : L.fathers_of(v)) {
            if (on_chain[static_cast<size_t>(w)]) continue;
            const auto& s = L.sons_of(w);
            if (s.size() == 1 && s[0] == v) out.push_back(w);
        }
        return out;
    }

    // Extend the leading unique-son segment maximally (branching on every
    // qualifying father), then record the complete chain.
    void grow_leading(std::vector<int>& path) {
        const auto preds = unique_son_preds(path.front());
        if (preds.empty()) {
            Chain c;
            for (int i : path) c.tuples.push_back(L.node(i));
            found.push_back(std::move(c));
            return;
        }
        for (int p : preds) {
            path.insert(path.begin(), p);
            grow_leading(path);
            path.erase(path.begin());
        }
    }

    // Grow the two-son segment upward maximally first; the leading segment
    // may only attach at its top.  Requires at least one two-son element.
    void grow_two_son(std::vector<int>& path) {
        const auto preds = two_son_preds(path.front());
        if (preds.empty()) {
            if (path.size() >= 2) grow_leading(path);
            return;
        }
        for (int p : preds) {
            path.insert(path.begin(), p);
            grow_two_son(path);
            path.erase(path.begin());
        }
    }
};

}  // namespace

std::vector<RidingChain> riding_chains(const Hyperlattice& L) {
    std::vector<RidingChain> out;
    if (L.alpha().r() == 1) return out;  // nothing distinct from the chain itself

    for (const SpecialChain& sc : special_chains(L)) {
        std::vector<char> on_chain(static_cast<size_t>(L.node_count()), 0);
        for (const Hypertuple& t : sc.chain.tuples) {
            on_chain[static_cast<size_t>(L.index_of(t))] = 1;
        }
        std::vector<Chain> found;
        RidingSearch search{L, on_chain, found};
        for (int e = 0; e < L.node_count(); ++e) {
            if (!search.is_exit(e)) continue;
            std::vector<int> path{e};
            search.grow_two_son(path);
        }
        RidingKind kind = RidingKind::RC1;
        if (sc.kind == SpecialKind::C2) kind = RidingKind::RC2;
        if (sc.kind == SpecialKind::C3) kind = RidingKind::RC3;
        for (Chain& c : found) {
            out.push_back({kind, std::move(c), sc.kind});
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool validate_chain(const Hyperlattice& L, const Chain& c) {
    std::vector<int> idx;
    for (const Hypertuple& t : c.tuples) idx.push_back(L.index_of(t));
    for (size_t i = 0; i + 1 < idx.size(); ++i) {
        const auto& s = L.sons_of(idx[i]);
        if (std::find(s.begin(), s.end(), idx[i + 1]) == s.end()) return false;
    }
    return true;
}

std::string to_string(const Chain& c) {
    std::string out;
    for (size_t i = 0; i < c.tuples.size(); ++i) {
        if (i) out += " - ";
        out += to_string(c.tuples[i]);
    }
    return out;
}

nlohmann::json to_json(const std::vector<SpecialChain>& chains) {
    auto arr = nlohmann::json::array();
    for (const SpecialChain& sc : chains) {
        arr.push_back({{"kind", to_string(sc.kind)}, {"tuples", sc.chain.tuples}});
    }
    return arr;
}

nlohmann::json to_json(const std::vector<RidingChain>& chains) {
    auto arr = nlohmann::json::array();
    for (const RidingChain& rc : chains) {
        arr.push_back({{"kind", to_string(rc.kind)},
                       {"attached_to", to_string(rc.attached_to)},
                       {"tuples", rc.chain.tuples}});
    }
    return arr;
}

}  // namespace hyp
