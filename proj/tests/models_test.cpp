#include <gtest/gtest.h>

#include <set>
#include <string>
#include <vector>

#include "inconlog/extensions.hpp"
#include "inconlog/models.hpp"
#include "inconlog/theory_io.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace inconlog;

namespace {

ReliabilityTheory fixture(const std::string& name) { return load_theory(std::string(FIXTURE_DIR) + "/" + name); }

std::set<Interpretation> as_set(const std::vector<Interpretation>& ms) { return {ms.begin(), ms.end()}; }

oracle::Family as_family(const ExtensionSet& r) {
    oracle::Family out;
    for (const auto& d : r) out.insert(oracle::from_bits(d));
    return out;
}

// M satisfies alpha and beta, N satisfies beta and gamma, gamma below alpha.
ReliabilityTheory abc() {
    return ReliabilityTheory({{"alpha", Formula::atom("x")}, {"beta", Formula::atom("y")}, {"gamma", Formula::atom("z")}},
                             {{"gamma", "alpha"}});
}

} // namespace

TEST(PremOf, Examples) {
    auto t1 = fixture("example1.rt");
    EXPECT_EQ(t1.format(prem_of(Interpretation{"phi", "psi", "alpha"}, t1)), "{p1,p2,p4}");
    ReliabilityTheory atoms({{"x", Formula::atom("a")}, {"y", Formula::atom("b")}}, {});
    EXPECT_TRUE(prem_of(Interpretation{}, atoms).none());
    EXPECT_EQ(prem_of(Interpretation{"a", "b"}, atoms), atoms.all());
}

TEST(Prefers, LossCompensatedByMoreReliablePremise) {
    auto t = abc();
    Interpretation m{"x", "y"}, n{"y", "z"};
    EXPECT_TRUE(prefers(t, n, m));
    EXPECT_FALSE(prefers(t, m, n));
    auto w = preference_witness(t, n, m);
    ASSERT_TRUE(w.has_value());
    ASSERT_EQ(w->pairing.size(), 1u);
    EXPECT_EQ(t.id(w->pairing[0].first), "gamma");
    EXPECT_EQ(t.id(w->pairing[0].second), "alpha");
    EXPECT_FALSE(preference_witness(t, m, n).has_value());
}

TEST(Prefers, EqualPremSetsAreIncomparable) {
    auto t = abc();
    Interpretation m{"x"}, n{"x", "w"};
    EXPECT_FALSE(prefers(t, m, n));
    EXPECT_FALSE(prefers(t, n, m));
}

TEST(Prefers, StrictSubsetIsDominated) {
    auto t = abc();
    EXPECT_TRUE(prefers(t, Interpretation{"x"}, Interpretation{"x", "y"}));
}

TEST(Prefers, IrreflexiveAndTransitive) {
    gen::Rng rng(51);
    for (int k = 0; k < 40; ++k) {
        auto t = gen::theory(rng, 5, 3);
        auto ms = all_interpretations(t.atoms());
        for (const auto& a : ms) {
            EXPECT_FALSE(prefers(t, a, a));
            for (const auto& b : ms)
                for (const auto& c : ms)
                    if (prefers(t, a, b) && prefers(t, b, c)) {
                        EXPECT_TRUE(prefers(t, a, c));
                    }
        }
    }
}

TEST(PreferredModels, Example1IsModelsOfTheExtension) {
    auto t = fixture("example1.rt");
    EXPECT_EQ(as_set(preferred_models(t)), oracle::models_of_family(t, {{0, 1, 3}}, t.atoms()));
    EXPECT_EQ(as_set(preferred_models(t)), (std::set<Interpretation>{{"alpha", "phi", "psi"}}));
}

TEST(PreferredModels, EmptyTheoryKeepsEverything) {
    ReliabilityTheory empty;
    EXPECT_EQ(preferred_models(empty).size(), 1u);
    EXPECT_EQ(preferred_models(empty, {}, {"a", "b"}).size(), 4u);
}

TEST(PreferredModels, Example3IsUnionOverR) {
    auto t = fixture("example3.rt");
    EXPECT_EQ(as_set(preferred_models(t)), oracle::models_of_family(t, as_family(all_extensions(t)), t.atoms()));
    EXPECT_EQ(as_set(preferred_models(t)), (std::set<Interpretation>{{"a"}, {"b"}, {}}));
}

TEST(PreferredModels, MatchBruteForceAndUnionOverR) {
    gen::Rng rng(52);
    for (int k = 0; k < 150; ++k) {
        auto t = gen::theory(rng, 5, 4);
        auto ours = as_set(preferred_models(t));
        EXPECT_EQ(ours, oracle::preferred_models(t, t.atoms()));
        EXPECT_EQ(ours, oracle::models_of_family(t, oracle::extensions(t), t.atoms()));
    }
}

TEST(PreferredModels, EveryOtherInterpretationIsDominatedByAPreferredOne) {
    gen::Rng rng(53);
    for (int k = 0; k < 60; ++k) {
        auto t = gen::theory(rng, 5, 3);
        auto best = preferred_models(t);
        auto best_set = as_set(best);
        for (const auto& m : all_interpretations(t.atoms())) {
            if (best_set.count(m)) continue;
            EXPECT_TRUE(std::any_of(best.begin(), best.end(), [&](const auto& n) { return prefers(t, m, n); }));
        }
    }
}

TEST(Revise, PromotesAlphaAboveEverything) {
    auto t = fixture("expansion.rt");
    auto r = revise(t, parse_formula("alpha"));
    ASSERT_EQ(r.size(), 5u);
    EXPECT_EQ(r.id(4), "__revision_1");
    for (std::size_t i = 0; i < 4; ++i) EXPECT_TRUE(r.less(i, 4));
    EXPECT_TRUE(skeptical_entails(r, parse_formula("alpha")));
    EXPECT_FALSE(skeptical_entails(t, parse_formula("alpha")));
}

TEST(Revise, ExistingPremiseIsReplacedAndItsPairsDropped) {
    auto t = fixture("example1.rt");
    auto r = revise(t, parse_formula("!psi"));
    EXPECT_FALSE(r.find("p3").has_value());
    EXPECT_EQ(r.ids(r.all()), (std::vector<std::string>{"__revision_1", "p1", "p2", "p4"}));
    EXPECT_EQ(r.closed_order(), (std::set<OrderPair>{{"p1", "__revision_1"}, {"p2", "__revision_1"},
                                                     {"p4", "__revision_1"}}));
}

TEST(Revise, EmptyTheoryAndIdempotence) {
    auto r = revise(ReliabilityTheory{}, parse_formula("a"));
    ASSERT_EQ(r.size(), 1u);
    EXPECT_EQ(r.formula(0), parse_formula("a"));
    auto t = fixture("example3.rt");
    auto once = revise(t, parse_formula("a -> b"));
    EXPECT_EQ(revise(once, parse_formula("a -> b")), once);
}

TEST(Revise, FreshIdAvoidsCollisions) {
    ReliabilityTheory t({{"__revision_1", Formula::atom("x")}}, {});
    EXPECT_EQ(revise(t, Formula::atom("y")).id(1), "__revision_2");
}

TEST(Revise, PreferredModelsAreTheBestAlphaModels) {
    gen::Rng rng(54);
    auto atoms = gen::atom_names(3);
    for (int k = 0; k < 100; ++k) {
        auto t = gen::theory(rng, 4, 3);
        Formula alpha = gen::formula(rng, atoms, 2);
        if (!is_consistent(std::vector{alpha})) continue;
        if (std::any_of(t.premises().begin(), t.premises().end(), [&](const Premise& p) { return p.formula == alpha; }))
            continue;
        auto universe = t.atoms();
        alpha.collect_atoms(universe);
        auto revised = as_set(preferred_models(revise(t, alpha), {}, universe));
        EXPECT_EQ(revised, as_set(preferred_models_satisfying(t, alpha, {}, universe)));
        EXPECT_EQ(revised, oracle::preferred_models(t, universe, &alpha));
    }
}

TEST(Conditional, Examples) {
    ReliabilityTheory rule({{"r", parse_formula("phi -> psi")}}, {});
    EXPECT_TRUE(conditional(rule, parse_formula("phi"), parse_formula("psi")));
    EXPECT_TRUE(conditional(fixture("example3.rt"), parse_formula("a & !b"), parse_formula("a & !b")));
    EXPECT_FALSE(conditional(ReliabilityTheory{}, parse_formula("a"), parse_formula("b")));
    EXPECT_TRUE(conditional(ReliabilityTheory{}, parse_formula("a & !a"), parse_formula("b")));
}

TEST(Conditional, ExpansionNeedsRevision) {
    auto t = fixture("expansion.rt");
    // Plain addition of alpha as one more incomparable premise.
    auto premises = t.premises();
    premises.push_back({"added", parse_formula("alpha")});
    ReliabilityTheory expanded(premises, t.order());
    EXPECT_FALSE(skeptical_entails(expanded, parse_formula("alpha")));
    EXPECT_TRUE(conditional(t, parse_formula("alpha"), parse_formula("alpha")));
}
