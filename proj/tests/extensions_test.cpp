#include <gtest/gtest.h>

#include <set>
#include <string>
#include <vector>

#include "inconlog/arguments.hpp"
#include "inconlog/error.hpp"
#include "inconlog/extensions.hpp"
#include "inconlog/theory_io.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace inconlog;

namespace {

ReliabilityTheory fixture(const std::string& name) { return load_theory(std::string(FIXTURE_DIR) + "/" + name); }

std::set<std::string> formatted(const ReliabilityTheory& t, const ExtensionSet& r) {
    std::set<std::string> out;
    for (const auto& d : r) out.insert(t.format(d));
    return out;
}

oracle::Family as_family(const ExtensionSet& r) {
    oracle::Family out;
    for (const auto& d : r) out.insert(oracle::from_bits(d));
    return out;
}

} // namespace

TEST(MostReliableSet, WorkedExamples) {
    auto t1 = fixture("example1.rt");
    for (const auto& o : linear_extensions(t1)) EXPECT_EQ(t1.format(most_reliable_set(t1, o)), "{p1,p2,p4}");
    auto t2 = fixture("example2.rt");
    EXPECT_EQ(t2.format(most_reliable_set(t2, linear_extensions(t2).front())), "{p1,p3}");
    ReliabilityTheory consistent({{"x", parse_formula("a")}, {"y", parse_formula("b")}}, {});
    EXPECT_EQ(most_reliable_set(consistent, linear_extensions(consistent).front()), consistent.all());
}

TEST(AllExtensions, WorkedExamples) {
    EXPECT_EQ(formatted(fixture("example1.rt"), all_extensions(fixture("example1.rt"))),
              (std::set<std::string>{"{p1,p2,p4}"}));
    EXPECT_EQ(formatted(fixture("example2.rt"), all_extensions(fixture("example2.rt"))),
              (std::set<std::string>{"{p1,p3}"}));
    auto t3 = fixture("example3.rt");
    EXPECT_EQ(formatted(t3, all_extensions(t3)), (std::set<std::string>{"{a,nb}", "{b,na}", "{na,nb}"}));
    EXPECT_EQ(all_extensions(fixture("bizet.rt")).size(), 2u);
}

TEST(AllExtensions, BizetDropsEitherNationality) {
    auto t = fixture("bizet.rt");
    EXPECT_EQ(formatted(t, all_extensions(t)),
              (std::set<std::string>{"{b1,b3,hyp,single}", "{b2,b3,hyp,single}"}));
}

TEST(AllExtensions, DakotaDropsTheTypeReport) {
    auto t = fixture("dakota.rt");
    EXPECT_EQ(formatted(t, all_extensions(t)), (std::set<std::string>{"{physics,speed}"}));
}

TEST(AllExtensions, MatchGreedyOverPermutations) {
    gen::Rng rng(41);
    for (int k = 0; k < 300; ++k) {
        auto t = gen::theory(rng, 6, 3);
        EXPECT_EQ(as_family(all_extensions(t)), oracle::extensions(t));
    }
}

TEST(AllExtensions, EqualTheArgumentRoute) {
    gen::Rng rng(42);
    for (int k = 0; k < 200; ++k) {
        auto t = gen::theory(rng, 6, 3);
        auto muses = minimal_unsat_subsets(t);
        ExtensionSet via_arguments;
        for (const auto& o : linear_extensions(t))
            via_arguments.insert(believed_premises(t, undermining_args_linear(muses, o), o).delta);
        EXPECT_EQ(all_extensions(t), via_arguments);
    }
}

TEST(AllExtensions, MembersAreMaximalConsistent) {
    gen::Rng rng(43);
    for (int k = 0; k < 150; ++k) {
        auto t = gen::theory(rng, 6, 3);
        for (const auto& d : all_extensions(t)) {
            auto fs = oracle::pick(t, oracle::from_bits(d));
            EXPECT_TRUE(oracle::satisfiable(fs));
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (d.test(i)) continue;
                auto more = fs;
                more.push_back(t.formula(i));
                EXPECT_FALSE(oracle::satisfiable(more));
            }
        }
    }
}

TEST(AllExtensions, ConsistentTheoryHasItselfAsOnlyMember) {
    ReliabilityTheory t({{"x", parse_formula("a")}, {"y", parse_formula("a -> b")}, {"z", parse_formula("c")}}, {});
    auto r = all_extensions(t);
    ASSERT_EQ(r.size(), 1u);
    EXPECT_EQ(*r.begin(), t.all());
    for (const char* g : {"b", "c", "!b", "a & c", "d"}) {
        Formula goal = parse_formula(g);
        bool classical = entails(t.formulas(), goal);
        EXPECT_EQ(skeptical_entails(t, goal), classical) << g;
        EXPECT_EQ(credulous_entails(t, goal), classical) << g;
    }
}

TEST(AllExtensions, UnsatisfiablePremiseNeverEnters) {
    ReliabilityTheory t({{"bad", parse_formula("!(p | !p)")}, {"ok", parse_formula("q")}}, {});
    EXPECT_EQ(formatted(t, all_extensions(t)), (std::set<std::string>{"{ok}"}));
    EXPECT_FALSE(credulous_entails(t, parse_formula("p")));
}

TEST(AllExtensions, StateCapIsEnforced) {
    std::vector<Premise> ps;
    for (int i = 0; i < 8; ++i) ps.push_back({"x" + std::to_string(i), Formula::atom("a" + std::to_string(i))});
    ReliabilityTheory wide(std::move(ps), {});
    Limits limits;
    limits.max_extensions = 50;
    EXPECT_THROW(all_extensions(wide, limits), CapExceeded);
    EXPECT_EQ(all_extensions(wide).size(), 1u);
}

TEST(AllExtensions, RoomFixtureIsTractable) {
    auto t = fixture("room.rt");
    auto r = all_extensions(t);
    ASSERT_EQ(r.size(), 1u);
    for (const auto& d : r) {
        EXPECT_FALSE(d.test(t.index_of("f16")));
        EXPECT_FALSE(d.test(t.index_of("f19")));
        EXPECT_EQ(d.count(), t.size() - 2);
    }
}

TEST(Skeptical, Examples) {
    auto t1 = fixture("example1.rt");
    EXPECT_TRUE(skeptical_entails(t1, parse_formula("psi")));
    auto t3 = fixture("example3.rt");
    EXPECT_FALSE(skeptical_entails(t3, parse_formula("a")));
    EXPECT_TRUE(skeptical_entails(t3, parse_formula("z | !z")));
    EXPECT_TRUE(skeptical_entails(t3, parse_formula("!a | !b")));
}

TEST(Credulous, Examples) {
    EXPECT_TRUE(credulous_entails(fixture("example3.rt"), parse_formula("a")));
    EXPECT_FALSE(credulous_entails(fixture("example1.rt"), parse_formula("!psi")));
}

TEST(Entailment, MatchBruteForce) {
    gen::Rng rng(44);
    auto atoms = gen::atom_names(3);
    for (int k = 0; k < 200; ++k) {
        auto t = gen::theory(rng, 5, 3);
        Formula goal = gen::formula(rng, atoms, 2);
        auto fam = oracle::extensions(t);
        bool all = true, some = false;
        for (const auto& d : fam) {
            bool e = oracle::entails(oracle::pick(t, d), goal);
            all = all && e;
            some = some || e;
        }
        EXPECT_EQ(skeptical_entails(t, goal), all);
        EXPECT_EQ(credulous_entails(t, goal), some);
    }
}
