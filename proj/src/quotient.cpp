#include "hyp/quotient.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "hyp/errors.hpp"

namespace hyp {

std::string to_string(CongruenceKind k) {
    return k == CongruenceKind::SIM2 ? "SIM2" : "SIM3";
}

Congruence Congruence::make(CongruenceKind kind, const SegreChar& alpha) {
    const int r = alpha.r();
    if (kind == CongruenceKind::SIM2) {
        if (r < 2 || alpha.part(0) - alpha.part(1) <= 1) {
            throw validation_error("SIM2 requires r >= 2 and a1-a2 > 1; got V(" +
                                   to_string(alpha) + ")");
        }
    } else {
        if (r < 3 || alpha.part(0) - alpha.part(1) != 1) {
            throw validation_error("SIM3 requires r >= 3 and a1-a2 = 1; got V(" +
                                   to_string(alpha) + ")");
        }
    }
    return Congruence(kind, alpha);
}

bool congruent(const Congruence& c, const Hypertuple& u, const Hypertuple& v) {
    if (!contains(c.alpha(), u) || !contains(c.alpha(), v)) {
        throw validation_error("congruent: tuples must be elements of V(" +
                               to_string(c.alpha()) + ")");
    }
    const size_t from = c.kind() == CongruenceKind::SIM2 ? 1 : 2;
    for (size_t i = from; i < u.size(); ++i) {
        if (u[i] != v[i]) return false;
    }
    return true;
}

FactorLattice factor(const Hyperlattice& L, const Congruence& c) {
    if (!(c.alpha() == L.alpha())) {
        throw validation_error("congruence parameter does not match the lattice");
    }
    const size_t from = c.kind() == CongruenceKind::SIM2 ? 1 : 2;

    // Group nodes by their identified tail; enumeration order makes the
    // first node of each class its maximal element.
    std::map<Hypertuple, std::vector<int>> by_tail;
    for (int i = 0; i < L.node_count(); ++i) {
        const Hypertuple& u = L.node(i);
        by_tail[Hypertuple(u.begin() + static_cast<long>(from), u.end())].push_back(i);
    }
    FactorLattice F;
    F.kind = c.kind();
    F.classes.reserve(by_tail.size());
    for (auto& [tail, members] : by_tail) {
        std::sort(members.begin(), members.end());
        F.classes.push_back(std::move(members));
    }
    std::sort(F.classes.begin(), F.classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    F.class_of.assign(static_cast<size_t>(L.node_count()), -1);
    for (size_t cls = 0; cls < F.classes.size(); ++cls) {
        for (int i : F.classes[cls]) F.class_of[static_cast<size_t>(i)] = static_cast<int>(cls);
    }

    // Class covers: project node covers and drop the in-class ones; the
    // result is the factor order's cover relation because every class is a
    // chain spanning consecutive weights.
    std::set<std::pair<int, int>> covers;
    for (int i = 0; i < L.node_count(); ++i) {
        for (int s : L.sons_of(i)) {
            const int a = F.class_of[static_cast<size_t>(i)];
            const int b = F.class_of[static_cast<size_t>(s)];
            if (a != b) covers.insert({a, b});
        }
    }
    F.covers.assign(covers.begin(), covers.end());
    return F;
}

nlohmann::json to_json(const Hyperlattice& L, const FactorLattice& F) {
    nlohmann::json j;
    j["alpha"] = L.alpha().parts();
    j["classes"] = F.classes;
    auto arr = nlohmann::json::array();
    for (const auto& [p, s] : F.covers) arr.push_back({p, s});
    j["covers"] = std::move(arr);
    return j;
}

QuotientIsoReport quotient_iso(const Hyperlattice& L, const Congruence& c) {
    FactorLattice F = factor(L, c);
    const SegreChar& alpha = L.alpha();
    const size_t from = c.kind() == CongruenceKind::SIM2 ? 1 : 2;

    std::vector<int> tail_parts(alpha.parts().begin() + static_cast<long>(from),
                                alpha.parts().end());
    SegreChar tail = SegreChar::from_parts(tail_parts);
    Hyperlattice tail_lattice = Hyperlattice::enumerate(tail);

    // Truncate each class representative (its entrywise-minimal element).
    std::vector<int> class_to_tail;
    class_to_tail.reserve(F.classes.size());
    for (int cls = 0; cls < F.class_count(); ++cls) {
        const Hypertuple& rep = L.node(F.representative(cls));
        Hypertuple t(rep.begin() + static_cast<long>(from), rep.end());
        class_to_tail.push_back(tail_lattice.index_of(t));
    }

    // Bijectivity.
    bool bijective = F.class_count() == tail_lattice.node_count();
    {
        std::set<int> image(class_to_tail.begin(), class_to_tail.end());
        bijective = bijective && static_cast<int>(image.size()) == F.class_count();
    }

    // Meet/join preservation over every class pair, computed through
    // representatives on both sides.
    bool preserves = bijective;
    for (int a = 0; preserves && a < F.class_count(); ++a) {
        for (int b = a; preserves && b < F.class_count(); ++b) {
            const Hypertuple& ra = L.node(F.representative(a));
            const Hypertuple& rb = L.node(F.representative(b));
            const int meet_cls = F.class_of[static_cast<size_t>(L.index_of(meet(ra, rb)))];
            const int join_cls = F.class_of[static_cast<size_t>(L.index_of(join(ra, rb)))];
            const Hypertuple& ta = tail_lattice.node(class_to_tail[static_cast<size_t>(a)]);
            const Hypertuple& tb = tail_lattice.node(class_to_tail[static_cast<size_t>(b)]);
            preserves = preserves &&
                class_to_tail[static_cast<size_t>(meet_cls)] == tail_lattice.index_of(meet(ta, tb)) &&
                class_to_tail[static_cast<size_t>(join_cls)] == tail_lattice.index_of(join(ta, tb));
        }
    }
    // The projected class covers must map exactly onto the tail lattice's
    // covers (a consequence of the above, re-checked to validate F.covers).
    bool covers_ok = bijective;
    if (covers_ok) {
        std::set<std::pair<int, int>> mapped;
        for (const auto& [p, s] : F.covers) {
            mapped.insert({class_to_tail[static_cast<size_t>(p)],
                           class_to_tail[static_cast<size_t>(s)]});
        }
        std::set<std::pair<int, int>> tail_covers;
        for (int i = 0; i < tail_lattice.node_count(); ++i) {
            for (int s : tail_lattice.sons_of(i)) tail_covers.insert({i, s});
        }
        covers_ok = mapped == tail_covers;
    }
    if (!bijective || !preserves || !covers_ok) {
        throw std::logic_error("quotient truncation failed verification on V(" +
                               to_string(alpha) + ") / " + to_string(c.kind()));
    }

    // Enumerated class statistics, with the closed-form values alongside;
    // the enumerated ones are authoritative.
    const int class_count = F.class_count();
    int class_size = static_cast<int>(F.classes.front().size());
    bool uniform = true;
    for (const auto& cls : F.classes) {
        uniform = uniform && static_cast<int>(cls.size()) == class_size;
    }
    long long formula_count = cardinality(tail);
    int formula_size =
        c.kind() == CongruenceKind::SIM2
            ? alpha.part(0) - alpha.part(1) + 1
            : 2 * (alpha.part(0) - alpha.part(2));
    bool match = uniform && class_count == formula_count && class_size == formula_size;

    return QuotientIsoReport{std::move(tail),
                             std::move(tail_lattice),
                             std::move(class_to_tail),
                             class_count,
                             class_size,
                             formula_count,
                             formula_size,
                             match};
}

}  // namespace hyp
