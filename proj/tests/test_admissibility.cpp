#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "demazure/admissibility.hpp"

using namespace demazure;

namespace {

std::size_t idx(const RootSystem& rs, Coords c) { return *rs.index_of(Root{std::move(c)}); }

SplitTuple split(std::initializer_list<FiniteWeight> parts) { return SplitTuple{parts}; }

// Every weight with |coords| <= bound.
template <class F>
void for_each_weight(int rank, int lo, int hi, F&& f) {
    Coords c(rank, lo);
    while (true) {
        f(FiniteWeight(c));
        int i = 0;
        while (i < rank && c[i] == hi) c[i++] = lo;
        if (i == rank) return;
        ++c[i];
    }
}

}  // namespace

TEST(Preadmissible, Examples) {
    RootSystem a2(Family::A, 2);
    EXPECT_TRUE(is_preadmissible(a2, {1, -2}, split({{0, -1}, {1, -1}})).ok);

    RootSystem a1(Family::A, 1);
    auto bad = is_preadmissible(a1, {0}, split({{1}, {-1}}));
    EXPECT_FALSE(bad.ok);
    EXPECT_FALSE(bad.witnesses.empty());

    RootSystem c2(Family::C, 2);
    EXPECT_TRUE(is_preadmissible(c2, {3, -2}, split({{3, -2}, {0, 0}, {0, 0}})).ok);
}

TEST(Preadmissible, SumMismatchRejected) {
    RootSystem a2(Family::A, 2);
    EXPECT_THROW(is_preadmissible(a2, {1, -2}, split({{0, -1}, {1, 0}})), SplitError);
}

TEST(Profile, C2Example) {
    RootSystem c2(Family::C, 2);
    auto pr = root_profile(c2, split({{1, 1}, {1, 0}}), idx(c2, {1, 1}), Sign::Minus);
    EXPECT_EQ(pr.x, 3);
    EXPECT_EQ(pr.t, 2);
    EXPECT_EQ(pr.p, (std::vector<int>{1, 0, 1}));
    EXPECT_EQ(pr.m(1), 1);
    EXPECT_EQ(pr.m(2), 3);
}

TEST(Profile, EqualPartsAndZeroResidue) {
    RootSystem c2(Family::C, 2);
    auto pr = root_profile(c2, split({{1, 0}, {1, 0}, {1, 0}}), idx(c2, {1, 0}), Sign::Minus);
    EXPECT_EQ(pr.t, 0);
    EXPECT_EQ(pr.p, (std::vector<int>{3}));

    auto z = root_profile(c2, split({{0, 1}, {0, 0}}), idx(c2, {1, 0}), Sign::Minus);
    EXPECT_EQ(z.x, 0);
    for (int r = 1; r <= 3; ++r) EXPECT_EQ(z.m(r), c2.d(idx(c2, {1, 0})) * r);
}

TEST(Profile, ConservationAndResidueRange) {
    std::mt19937 gen(1);
    for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::A, 2}, {Family::B, 2}, {Family::G, 2}}) {
        RootSystem rs(f, n);
        for_each_weight(n, -2, 2, [&](const FiniteWeight& mu) {
            for (int k = 1; k <= 3; ++k) {
                auto s = balanced_split(rs, mu, k);
                for (std::size_t a = 0; a < rs.num_positive_roots(); ++a)
                    for (Sign sg : applicable_signs(rs.pairing(mu.coords, a))) {
                        auto pr = root_profile(rs, s, a, sg);
                        EXPECT_EQ(pr.total(), signed_value(sg, rs.pairing(mu.coords, a)));
                        EXPECT_GT(pr.p[0], 0);
                        int count = 0;
                        for (int v : pr.p) count += v;
                        EXPECT_EQ(count, k);
                        for (int r = 1; r <= 3; ++r) {
                            const int m = pr.m(r), step = pr.d * r;
                            EXPECT_GT(m, 0);
                            EXPECT_LE(m, step);
                            EXPECT_EQ(((pr.x - m) % step + step) % step, 0);
                        }
                    }
            }
        });
    }
}

TEST(Admissible, C2Example) {
    RootSystem c2(Family::C, 2);
    const FiniteWeight mu{2, 1};
    const auto bad = split({{1, 1}, {1, 0}});
    auto r1 = is_r_admissible(c2, mu, bad, 1);
    EXPECT_FALSE(r1.admissible_for_r);
    auto v = r1.violations();
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(root_name(c2.root(v[0]->profile.root)), "a1+a2");
    EXPECT_FALSE(v[0]->condition_A);  // 1 * 2 > 2 fails
    EXPECT_TRUE(is_r_admissible(c2, mu, bad, 2).admissible_for_r);

    const auto good = split({{2, 0}, {0, 1}});
    auto g1 = is_r_admissible(c2, mu, good, 1);
    EXPECT_TRUE(g1.admissible_for_r);
    for (const auto& c : g1.roots)
        if (c.profile.root == c2.theta_index()) {
            EXPECT_TRUE(c.condition_B_triggered);  // 3 > 2
            EXPECT_TRUE(c.condition_B);            // x = 2 >= 1 + 1
            EXPECT_EQ(c.profile.x, 2);
            EXPECT_EQ(c.profile.t, 1);
        }
    EXPECT_TRUE(is_r_admissible(c2, mu, good, 2).admissible_for_r);
}

TEST(Admissible, ReportIsConjunction) {
    RootSystem b2(Family::B, 2);
    for_each_weight(2, -2, 2, [&](const FiniteWeight& mu) {
        auto conj = to_dominant(b2, mu);
        for (const auto& dom : enumerate_dominant_splits(conj.lambda, 2)) {
            auto s = pull_back(b2, conj.sigma, dom);
            for (int r = 1; r <= 2; ++r) {
                auto rep = is_r_admissible(b2, mu, s, r);
                bool all = rep.preadmissible.ok;
                for (const auto& c : rep.roots) all = all && c.condition_A && c.condition_B;
                EXPECT_EQ(rep.admissible_for_r, all);
            }
        }
    });
}

TEST(MinimalR, Examples) {
    RootSystem c2(Family::C, 2);
    EXPECT_EQ(minimal_r(c2, {2, 1}, split({{1, 1}, {1, 0}}), 10), 2);
    RootSystem a1(Family::A, 1);
    EXPECT_EQ(minimal_r(a1, {-2}, split({{-1}, {-1}}), 10), 1);
    RootSystem a2(Family::A, 2);
    EXPECT_EQ(minimal_r(a2, {1, -2}, split({{0, -1}, {1, -1}}), 10), 1);
    EXPECT_EQ(minimal_r(a1, {0}, split({{1}, {-1}}), 10), std::nullopt);
}

TEST(MinimalR, StabilizesBeyondBound) {
    for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::A, 2}, {Family::C, 2}, {Family::G, 2}}) {
        RootSystem rs(f, n);
        for_each_weight(n, -3, 3, [&](const FiniteWeight& mu) {
            auto conj = to_dominant(rs, mu);
            for (const auto& dom : enumerate_dominant_splits(conj.lambda, 2)) {
                auto s = pull_back(rs, conj.sigma, dom);
                const int bound = admissibility_bound(rs, mu, s);
                for (int r = bound; r <= bound + 3; ++r)
                    EXPECT_TRUE(is_r_admissible(rs, mu, s, r).admissible_for_r) << rs.name() << " mu=" << mu;
                EXPECT_TRUE(minimal_r(rs, mu, s, bound).has_value());
            }
        });
    }
}

TEST(Admissible, PermutationInvariance) {
    std::mt19937 gen(9);
    for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::A, 3}, {Family::C, 2}}) {
        RootSystem rs(f, n);
        for_each_weight(n, -2, 2, [&](const FiniteWeight& mu) {
            for (int k = 2; k <= 3; ++k) {
                auto conj = to_dominant(rs, mu);
                for (const auto& dom : enumerate_dominant_splits(conj.lambda, k)) {
                    auto s = pull_back(rs, conj.sigma, dom);
                    auto perm = s;
                    std::shuffle(perm.parts.begin(), perm.parts.end(), gen);
                    for (int r = 1; r <= 2; ++r)
                        EXPECT_EQ(is_r_admissible(rs, mu, s, r).admissible_for_r,
                                  is_r_admissible(rs, mu, perm, r).admissible_for_r);
                }
            }
        });
    }
}

TEST(DominantSplits, A1Count) {
    auto all = enumerate_dominant_splits({2}, 2);
    ASSERT_EQ(all.size(), 3u);
    std::set<std::vector<Coords>> got;
    for (const auto& s : all) got.insert({s.parts[0].coords, s.parts[1].coords});
    EXPECT_EQ(got, (std::set<std::vector<Coords>>{{{2}, {0}}, {{1}, {1}}, {{0}, {2}}}));
}

TEST(DominantSplits, StarsAndBarsCount) {
    for (int k = 1; k <= 3; ++k)
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; b <= 3; ++b) {
                FiniteWeight lam{a, b};
                auto all = enumerate_dominant_splits(lam, k);
                EXPECT_EQ(all.size(), count_dominant_splits(lam, k));
                EXPECT_EQ(all.size(), binomial(a + k - 1, k - 1) * binomial(b + k - 1, k - 1));
                for (const auto& s : all) {
                    EXPECT_EQ(s.sum(2), lam);
                    for (const auto& p : s.parts) EXPECT_TRUE(p.is_dominant());
                }
            }
    EXPECT_THROW(enumerate_dominant_splits({1, -1}, 2), std::invalid_argument);
}

TEST(DominantSplits, PullBackIdentityAndPreadmissible) {
    auto s = split({{1, 0}, {0, 2}});
    RootSystem a2(Family::A, 2);
    EXPECT_EQ(pull_back(a2, {}, s), s);
    for (auto [f, n] : std::vector<std::pair<Family, int>>{
             {Family::A, 2}, {Family::A, 3}, {Family::B, 3}, {Family::C, 3}, {Family::G, 2}}) {
        RootSystem rs(f, n);
        for_each_weight(n, -3, 3, [&](const FiniteWeight& mu) {
            auto conj = to_dominant(rs, mu);
            for (int k = 1; k <= 3; ++k) {
                if (count_dominant_splits(conj.lambda, k) > 400) continue;
                for_each_dominant_split(conj.lambda, k, [&](const SplitTuple& dom) {
                    auto pb = pull_back(rs, conj.sigma, dom);
                    EXPECT_EQ(pb.sum(n), mu);
                    EXPECT_TRUE(is_preadmissible(rs, mu, pb).ok) << rs.name() << " mu=" << mu;
                    return true;
                });
            }
        });
    }
}

TEST(Balanced, A3Example) {
    RootSystem a3(Family::A, 3);
    auto s = balanced_split(a3, {5, 4, 7}, 2);
    EXPECT_EQ(s, split({{3, 2, 3}, {2, 2, 4}}));
}

TEST(Balanced, MultipleOfK) {
    RootSystem c2(Family::C, 2);
    auto s = balanced_split(c2, {3, 6}, 3);
    for (const auto& p : s.parts) EXPECT_EQ(p, (FiniteWeight{1, 2}));
}

TEST(Balanced, A2ExampleIsOneAdmissible) {
    RootSystem a2(Family::A, 2);
    auto s = balanced_split(a2, {1, -2}, 2);
    EXPECT_EQ(s.sum(2), (FiniteWeight{1, -2}));
    EXPECT_TRUE(is_r_admissible(a2, {1, -2}, s, 1).admissible_for_r);
}

TEST(Balanced, TypeAProperties) {
    for (int n = 1; n <= 3; ++n) {
        RootSystem rs(Family::A, n);
        for_each_weight(n, -3, 3, [&](const FiniteWeight& mu) {
            for (int k = 1; k <= 3; ++k) {
                auto s = balanced_split(rs, mu, k);
                EXPECT_EQ(s.sum(n), mu);
                for (std::size_t a = 0; a < rs.num_positive_roots(); ++a) {
                    for (const auto& p : s.parts)
                        for (const auto& q : s.parts)
                            EXPECT_LE(std::abs(rs.pairing(p.coords, a) - rs.pairing(q.coords, a)), 1);
                    for (Sign sg : applicable_signs(rs.pairing(mu.coords, a)))
                        EXPECT_LE(root_profile(rs, s, a, sg).t, 1);
                }
                EXPECT_TRUE(is_r_admissible(rs, mu, s, 1).admissible_for_r) << "A" << n << " mu=" << mu;
            }
        });
    }
}

TEST(Search, C2FindsExpectedSplit) {
    RootSystem c2(Family::C, 2);
    auto found = find_1_admissible(c2, {2, 1}, 2);
    ASSERT_TRUE(found.has_value());
    EXPECT_EQ(*found, split({{2, 0}, {0, 1}}));
}

TEST(Search, FoundSplitsAreAdmissible) {
    for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::B, 2}, {Family::G, 2}}) {
        RootSystem rs(f, n);
        for_each_weight(n, -2, 2, [&](const FiniteWeight& mu) {
            for (int k = 1; k <= 3; ++k)
                if (auto s = find_1_admissible(rs, mu, k)) {
                    EXPECT_TRUE(is_r_admissible(rs, mu, *s, 1).admissible_for_r);
                }
        });
    }
}

TEST(TBoundScan, NonExceptionalTypesPass) {
    for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::B, 2}, {Family::C, 2}, {Family::B, 3}}) {
        RootSystem rs(f, n);
        auto rep = nonexceptional_t_scan(rs, 3, 3);
        EXPECT_TRUE(rep.passed()) << rs.name();
        EXPECT_GT(rep.cases, 0u);
    }
    RootSystem g2(Family::G, 2);
    EXPECT_THROW(nonexceptional_t_scan(g2, 1, 1), std::invalid_argument);
}
