#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "hyp/chains.hpp"
#include "hyp/errors.hpp"
#include "hyp/isomorphism.hpp"
#include "hyp/lattice.hpp"
#include "hyp/segre.hpp"
#include "oracles.hpp"

using hyp::Hyperlattice;
using hyp::Hypertuple;
using hyp::IsoRule;
using hyp::SegreChar;
using hyp::SpecialKind;
using testutil::lat;
using testutil::segre;

namespace {

// The image of a special chain under f, as tuples of the codomain.
std::vector<Hypertuple> chain_image(const Hyperlattice& A, const Hyperlattice& B,
                                    const std::vector<int>& f,
                                    const std::vector<Hypertuple>& tuples) {
    std::vector<Hypertuple> out;
    for (const Hypertuple& u : tuples) {
        out.push_back(B.node(f[static_cast<size_t>(A.index_of(u))]));
    }
    return out;
}

bool is_identity(const std::vector<int>& f) {
    for (size_t i = 0; i < f.size(); ++i) {
        if (f[i] != static_cast<int>(i)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("necessary_conditions report dimension and cardinality equality") {
    auto [dim_ok, card_ok] = hyp::necessary_conditions(segre({5, 2}), segre({7}));
    CHECK(dim_ok);
    CHECK_FALSE(card_ok);  // 12 nodes vs 8

    std::tie(dim_ok, card_ok) = hyp::necessary_conditions(segre({5, 2}), segre({4, 2, 1}));
    CHECK(dim_ok);
    CHECK(card_ok);

    std::tie(dim_ok, card_ok) = hyp::necessary_conditions(segre({5, 3, 1}), segre({5, 2, 1}));
    CHECK_FALSE(dim_ok);
    CHECK_FALSE(card_ok);
}

TEST_CASE("decide_iso classifies equal parameters") {
    for (const SegreChar& a : hyp::enumerate_reduced(10)) {
        auto v = hyp::decide_iso(a, a);
        CHECK(v.isomorphic);
        CHECK(v.rule == IsoRule::EQUAL);
    }
}

TEST_CASE("decide_iso knows the exceptional pair") {
    auto v = hyp::decide_iso(segre({5, 2}), segre({4, 2, 1}));
    CHECK(v.isomorphic);
    CHECK(v.rule == IsoRule::PAIR_52_421);
    v = hyp::decide_iso(segre({4, 2, 1}), segre({5, 2}));
    CHECK(v.isomorphic);
    CHECK(v.rule == IsoRule::PAIR_52_421);
}

TEST_CASE("decide_iso knows the chain pairs") {
    auto v = hyp::decide_iso(segre({2, 1}), segre({3}));
    CHECK(v.isomorphic);
    CHECK(v.rule == IsoRule::PAIR_CHAIN);
    CHECK(v.chain_l == 2);

    v = hyp::decide_iso(segre({5}), segre({3, 2}));
    CHECK(v.isomorphic);
    CHECK(v.rule == IsoRule::PAIR_CHAIN);
    CHECK(v.chain_l == 3);

    v = hyp::decide_iso(segre({7}), segre({4, 3}));
    CHECK(v.chain_l == 4);

    // (l, l-1) only pairs with the chain of the same dimension.
    v = hyp::decide_iso(segre({4, 3}), segre({5, 2}));
    CHECK_FALSE(v.isomorphic);
    CHECK(v.rule == IsoRule::NOT_ISOMORPHIC);
    CHECK(v.chain_l == 0);
}

TEST_CASE("decide_iso rejects everything else and is symmetric") {
    CHECK_FALSE(hyp::decide_iso(segre({5, 3, 1}), segre({5, 2, 1})).isomorphic);
    CHECK_FALSE(hyp::decide_iso(segre({5, 2}), segre({7})).isomorphic);
    CHECK_FALSE(hyp::decide_iso(segre({6, 1}), segre({5, 2})).isomorphic);
    for (const SegreChar& a : hyp::enumerate_reduced(9)) {
        for (const SegreChar& b : hyp::enumerate_reduced(9)) {
            auto ab = hyp::decide_iso(a, b);
            auto ba = hyp::decide_iso(b, a);
            CHECK(ab.isomorphic == ba.isomorphic);
            CHECK(ab.rule == ba.rule);
        }
    }
}

TEST_CASE("the search oracle finds a witness exactly for isomorphic pairs") {
    auto w = hyp::brute_force_iso(lat({5, 2}), lat({4, 2, 1}));
    REQUIRE(w.has_value());
    CHECK(hyp::verify_witness(lat({5, 2}), lat({4, 2, 1}), *w));

    // Equal node count, different shape: V(6,1) and V(5,2) both have 12 nodes.
    CHECK(hyp::cardinality(segre({6, 1})) == hyp::cardinality(segre({5, 2})));
    CHECK_FALSE(hyp::brute_force_iso(lat({6, 1}), lat({5, 2})).has_value());

    // A chain against a non-chain of equal node count.
    CHECK(hyp::cardinality(segre({4, 1})) == hyp::cardinality(segre({7})));
    CHECK_FALSE(hyp::brute_force_iso(lat({4, 1}), lat({7})).has_value());
}

TEST_CASE("the search oracle respects its node budget") {
    CHECK_THROWS_AS(hyp::brute_force_iso(lat({5, 2}), lat({4, 2, 1}), 4),
                    hyp::resource_error);
}

TEST_CASE("verify_witness rejects corrupted maps") {
    Hyperlattice A = lat({5, 2});
    Hyperlattice B = lat({4, 2, 1});
    auto w = hyp::brute_force_iso(A, B);
    REQUIRE(w.has_value());
    auto bad = *w;
    std::swap(bad[1], bad[2]);
    CHECK_FALSE(hyp::verify_witness(A, B, bad));
    bad = *w;
    bad[0] = bad[1];  // not a bijection
    CHECK_FALSE(hyp::verify_witness(A, B, bad));
}

TEST_CASE("build_witness produces a verified witness exactly for isomorphic pairs") {
    auto w = hyp::build_witness(segre({5, 2}), segre({4, 2, 1}));
    REQUIRE(w.has_value());
    CHECK(hyp::verify_witness(lat({5, 2}), lat({4, 2, 1}), *w));
    CHECK_FALSE(hyp::build_witness(segre({5, 2}), segre({6, 1})).has_value());
    CHECK_FALSE(hyp::build_witness(segre({5, 3, 1}), segre({5, 2, 1})).has_value());
}

TEST_CASE("a chain lattice maps onto its chain partner index by index") {
    // V(5) and V(3,2) are both chains of six elements, so the only order
    // isomorphism pairs the i-th largest with the i-th largest.
    auto w = hyp::build_witness(segre({5}), segre({3, 2}));
    REQUIRE(w.has_value());
    CHECK(is_identity(*w));
    auto isos = hyp::find_isomorphisms(lat({5}), lat({3, 2}));
    CHECK(isos.size() == 1);
}

TEST_CASE("find_isomorphisms enumerates every map and honors its limit") {
    Hyperlattice A = lat({5, 2});
    Hyperlattice B = lat({4, 2, 1});
    auto all = hyp::find_isomorphisms(A, B, 0);
    CHECK(all.size() == 1);
    for (const auto& f : all) CHECK(hyp::verify_witness(A, B, f));

    Hyperlattice L = lat({4, 3, 2});
    CHECK(hyp::find_isomorphisms(L, L, 0).size() == 4);
    CHECK(hyp::find_isomorphisms(L, L, 1).size() == 1);
    CHECK(hyp::find_isomorphisms(L, L, 3).size() == 3);
}

TEST_CASE("automorphism counts of the small three-part lattices") {
    // Verified by hand: the map fixing everything, plus independent swaps of
    // the incomparable pairs that share covers in both directions.
    CHECK(hyp::find_isomorphisms(lat({5, 2, 1}), lat({5, 2, 1})).size() == 2);
    CHECK(hyp::find_isomorphisms(lat({3, 2, 1}), lat({3, 2, 1})).size() == 2);
    CHECK(hyp::find_isomorphisms(lat({4, 3, 2}), lat({4, 3, 2})).size() == 4);
    CHECK(hyp::find_isomorphisms(lat({5, 4, 3}), lat({5, 4, 3})).size() == 8);
}

TEST_CASE("every automorphism fixes or swaps the special chains") {
    for (const auto& parts : {std::vector<int>{5, 2, 1}, {3, 2, 1}, {4, 3, 2}, {5, 4, 3}}) {
        Hyperlattice L = lat(parts);
        auto specials = hyp::special_chains(L);
        auto autos = hyp::find_isomorphisms(L, L);
        bool identity_seen = false;
        std::set<std::vector<Hypertuple>> first_chain_images;
        for (const auto& f : autos) {
            identity_seen = identity_seen || is_identity(f);
            for (const auto& sc : specials) {
                auto image = chain_image(L, L, f, sc.chain.tuples);
                // The image is again a maximal unique-son chain ending at
                // zero, of the same length.
                bool found = false;
                for (const auto& other : specials) {
                    found = found || other.chain.tuples == image;
                }
                CHECK(found);
                if (sc.kind == specials.front().kind) first_chain_images.insert(image);
            }
        }
        CHECK(identity_seen);
        // Both possible images of the first chain occur across the group
        // exactly when a non-identity automorphism moves it.
        CHECK(first_chain_images.count(specials.front().chain.tuples) == 1);
    }
}

TEST_CASE("the non-identity automorphism of V(5,2,1) swaps the two special chains") {
    Hyperlattice L = lat({5, 2, 1});
    auto specials = hyp::special_chains(L);
    REQUIRE(specials.size() == 2);
    REQUIRE(specials[0].kind == SpecialKind::C1);
    REQUIRE(specials[1].kind == SpecialKind::C2);
    auto autos = hyp::find_isomorphisms(L, L);
    REQUIRE(autos.size() == 2);
    int non_identity = 0;
    for (const auto& f : autos) {
        if (is_identity(f)) continue;
        ++non_identity;
        CHECK(chain_image(L, L, f, specials[0].chain.tuples) == specials[1].chain.tuples);
        CHECK(chain_image(L, L, f, specials[1].chain.tuples) == specials[0].chain.tuples);
    }
    CHECK(non_identity == 1);
}

TEST_CASE("verify_range agrees everywhere and reports the nontrivial pairs") {
    auto report = hyp::verify_range(10);
    CHECK(report.n_max == 10);
    CHECK(report.disagreement_count() == 0);
    CHECK(report.all_agree());
    CHECK(report.skipped.empty());
    CHECK(report.records.size() == 151);

    std::set<std::pair<std::vector<int>, std::vector<int>>> nontrivial;
    for (const auto& rec : report.records) {
        CHECK(rec.agree);
        CHECK(rec.theorem_verdict == rec.oracle_verdict);
        CHECK(rec.witness_found == rec.oracle_verdict);
        CHECK(rec.witness_checks_ok);
        CHECK(rec.elapsed_ms >= 0.0);
        if (rec.theorem_verdict && rec.alpha != rec.beta) {
            nontrivial.emplace(rec.alpha.parts(), rec.beta.parts());
        }
    }
    std::set<std::pair<std::vector<int>, std::vector<int>>> want = {
        {{3}, {2, 1}}, {{5}, {3, 2}}, {{7}, {4, 3}}, {{9}, {5, 4}}, {{5, 2}, {4, 2, 1}},
    };
    CHECK(nontrivial == want);
}

TEST_CASE("verify reports serialize with the documented record keys") {
    auto report = hyp::verify_range(6);
    nlohmann::json j = hyp::to_json(report);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == report.records.size());
    const std::set<std::string> want = {
        "alpha", "beta", "theorem_verdict", "oracle_verdict",
        "agree", "witness_found", "elapsed_ms",
    };
    for (const auto& rec : j) {
        std::set<std::string> keys;
        for (auto it = rec.begin(); it != rec.end(); ++it) keys.insert(it.key());
        CHECK(keys == want);
    }
}

TEST_CASE("the verify summary leads with the totals") {
    auto report = hyp::verify_range(6);
    std::string text = hyp::summary(report);
    CHECK(text.find("verification sweep, dimensions up to 6") != std::string::npos);
    CHECK(text.find("pairs compared: 24, disagreements: 0, nontrivial isomorphic pairs: 2")
          != std::string::npos);
    CHECK(text.find("V(3) ~ V(2,1): theorem=iso oracle=iso") != std::string::npos);
}
