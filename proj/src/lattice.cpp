#include "hyp/lattice.hpp"

#include <algorithm>

#include "hyp/errors.hpp"

namespace hyp {

namespace {

void require_member(const SegreChar& alpha, const Hypertuple& u, const char* op) {
    if (!contains(alpha, u)) {
        throw validation_error(std::string(op) + ": " + to_string(u) +
                               " is not an element of V(" + to_string(alpha) + ")");
    }
}

}  // namespace

bool contains(const SegreChar& alpha, const Hypertuple& u) {
    const int r = alpha.r();
    if (static_cast<int>(u.size()) != r) {
        throw validation_error("tuple length " + std::to_string(u.size()) +
                               " does not match r = " + std::to_string(r));
    }
    for (int i = 0; i + 1 < r; ++i) {
        if (u[i] < u[i + 1]) return false;
        if (alpha.part(i) - u[i] < alpha.part(i + 1) - u[i + 1]) return false;
    }
    return u[r - 1] >= 0 && alpha.part(r - 1) - u[r - 1] >= 0;
}

Hypertuple meet(const Hypertuple& u, const Hypertuple& v) {
    if (u.size() != v.size()) {
        throw validation_error("meet of tuples with different lengths");
    }
    Hypertuple out(u.size());
    for (size_t i = 0; i < u.size(); ++i) out[i] = std::min(u[i], v[i]);
    return out;
}

Hypertuple join(const Hypertuple& u, const Hypertuple& v) {
    if (u.size() != v.size()) {
        throw validation_error("join of tuples with different lengths");
    }
    Hypertuple out(u.size());
    for (size_t i = 0; i < u.size(); ++i) out[i] = std::max(u[i], v[i]);
    return out;
}

long long cardinality(const SegreChar& alpha) {
    const int r = alpha.r();
    long long prod = 1;
    for (int i = 0; i + 1 < r; ++i) {
        prod *= alpha.part(i) - alpha.part(i + 1) + 1;
    }
    prod *= alpha.part(r - 1) + 1;
    return prod;
}

std::vector<Hypertuple> sons(const SegreChar& alpha, const Hypertuple& u) {
    require_member(alpha, u, "sons");
    const int r = alpha.r();
    std::vector<Hypertuple> out;
    auto decremented = [&](int j) {
        Hypertuple v = u;
        --v[static_cast<size_t>(j)];
        return v;
    };
    if (r == 1) {
        if (u[0] > 0) out.push_back(decremented(0));
        return out;
    }
    if (u[0] > u[1]) out.push_back(decremented(0));
    for (int i = 1; i + 1 < r; ++i) {
        if (u[i] > u[i + 1] && alpha.part(i - 1) - u[i - 1] > alpha.part(i) - u[i]) {
            out.push_back(decremented(i));
        }
    }
    if (u[r - 1] != 0 && alpha.part(r - 2) - u[r - 2] > alpha.part(r - 1) - u[r - 1]) {
        out.push_back(decremented(r - 1));
    }
    return out;
}

std::vector<Hypertuple> fathers(const SegreChar& alpha, const Hypertuple& u) {
    require_member(alpha, u, "fathers");
    std::vector<Hypertuple> out;
    for (size_t j = 0; j < u.size(); ++j) {
        Hypertuple v = u;
        ++v[j];
        if (contains(alpha, v)) out.push_back(std::move(v));
    }
    return out;
}

std::optional<Hypertuple> unique_son(const SegreChar& alpha, const Hypertuple& u) {
    require_member(alpha, u, "unique_son");
    const int r = alpha.r();
    if (std::all_of(u.begin(), u.end(), [](int x) { return x == 0; })) {
        throw validation_error("unique_son is undefined on the zero tuple");
    }
    int k = 1;
    while (k < r && u[static_cast<size_t>(k)] == u[0]) ++k;  // k = length of the equal prefix
    int q = r;
    while (u[static_cast<size_t>(q - 1)] == 0) --q;          // q = last positive position
    for (int i = k - 1; i < q; ++i) {
        if (alpha.part(i) - u[static_cast<size_t>(i)] !=
            alpha.part(k - 1) - u[static_cast<size_t>(k - 1)]) {
            return std::nullopt;
        }
    }
    Hypertuple v = u;
    --v[static_cast<size_t>(k - 1)];
    return v;
}

Hypertuple dual(const SegreChar& alpha, const Hypertuple& u) {
    require_member(alpha, u, "dual");
    Hypertuple out(u.size());
    for (size_t i = 0; i < u.size(); ++i) out[i] = alpha.part(static_cast<int>(i)) - u[i];
    return out;
}

namespace {

void generate(const SegreChar& alpha, Hypertuple& prefix,
              std::vector<Hypertuple>& out) {
    const int r = alpha.r();
    const int i = static_cast<int>(prefix.size());
    if (i == r) {
        out.push_back(prefix);
        return;
    }
    int hi, lo;
    if (i == 0) {
        hi = alpha.part(0);
        lo = 0;
    } else {
        // Condition (1) caps the entry at its predecessor; condition (2)
        // floors it so the coheight stays weakly decreasing.
        const int prev = prefix.back();
        hi = std::min(prev, alpha.part(i));
        lo = std::max(0, alpha.part(i) - (alpha.part(i - 1) - prev));
    }
    for (int v = hi; v >= lo; --v) {
        prefix.push_back(v);
        generate(alpha, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

Hyperlattice Hyperlattice::enumerate(const SegreChar& alpha, long long max_nodes) {
    const long long card = cardinality(alpha);
    if (card > max_nodes) {
        throw resource_error("V(" + to_string(alpha) + ") has " +
                             std::to_string(card) +
                             " nodes, above the bound of " +
                             std::to_string(max_nodes));
    }
    Hyperlattice L(alpha);
    Hypertuple prefix;
    prefix.reserve(static_cast<size_t>(alpha.r()));
    L.nodes_.reserve(static_cast<size_t>(card));
    generate(alpha, prefix, L.nodes_);
    for (int i = 0; i < L.node_count(); ++i) {
        L.index_.emplace(L.nodes_[static_cast<size_t>(i)], i);
    }
    L.sons_.resize(L.nodes_.size());
    L.fathers_.resize(L.nodes_.size());
    for (int i = 0; i < L.node_count(); ++i) {
        for (const Hypertuple& s : sons(alpha, L.nodes_[static_cast<size_t>(i)])) {
            const int j = L.index_.at(s);
            L.sons_[static_cast<size_t>(i)].push_back(j);
            L.fathers_[static_cast<size_t>(j)].push_back(i);
        }
    }
    for (auto& v : L.sons_) std::sort(v.begin(), v.end());
    for (auto& v : L.fathers_) std::sort(v.begin(), v.end());
    return L;
}

int Hyperlattice::index_of(const Hypertuple& u) const {
    auto it = index_.find(u);
    if (it == index_.end()) {
        throw validation_error(to_string(u) + " is not a node of V(" +
                               to_string(alpha_) + ")");
    }
    return it->second;
}

bool Hyperlattice::has_node(const Hypertuple& u) const {
    return index_.find(u) != index_.end();
}

nlohmann::json Hyperlattice::to_json() const {
    nlohmann::json j;
    j["alpha"] = alpha_.parts();
    j["nodes"] = nodes_;
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < node_count(); ++i) {
        for (int s : sons_of(i)) covers.emplace_back(i, s);
    }
    std::sort(covers.begin(), covers.end());
    auto arr = nlohmann::json::array();
    for (const auto& [p, s] : covers) arr.push_back({p, s});
    j["covers"] = std::move(arr);
    return j;
}

}  // namespace hyp
