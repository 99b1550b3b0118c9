#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace stochloc;

TEST(Gershgorin, DeflatedExampleOne) {
    const auto u = gershgorin_discs(deflate(test::example1_stochastic(), 1).inner);
    ASSERT_EQ(u.size(), 3u);
    const double centers[] = {0.25, -0.3, 0.2};
    const double radii[] = {0.06, 0.35, 0.05};
    for (std::size_t k = 0; k < 3; ++k) {
        EXPECT_NEAR(u.discs[k].center.real(), centers[k], 1e-15);
        EXPECT_EQ(u.discs[k].center.imag(), 0.0);
        EXPECT_NEAR(u.discs[k].radius, radii[k], 1e-15);
        EXPECT_EQ(u.labels[k], k + 1);
    }
}

TEST(Gershgorin, IdentityDiscsArePoints) {
    const auto u = gershgorin_discs(DenseMatrix::identity(4));
    for (const auto& d : u.discs) {
        EXPECT_EQ(d.center, Complex(1.0, 0.0));
        EXPECT_EQ(d.radius, 0.0);
    }
}

TEST(Gershgorin, ZeroDiagonalRowCoversUnitDisc) {
    const auto u = gershgorin_discs(test::example1());
    EXPECT_EQ(u.discs[2].center, Complex(0.0, 0.0));
    EXPECT_NEAR(u.discs[2].radius, 1.0, 1e-15);
}

TEST(DeflatedRegion, ExampleOneLabelsAndDiscs) {
    const auto u = deflated_region(test::example1_stochastic(), 1);
    EXPECT_EQ(u.labels, (std::vector<std::size_t>{2, 3, 4}));
    // k = 2: |0.33 - 0.3| + |0.17 - 0.2|
    EXPECT_NEAR(u.discs[0].center.real(), 0.25, 1e-15);
    EXPECT_NEAR(u.discs[0].radius, 0.06, 1e-15);
    // k = 3: |0.15| + |-0.2|
    EXPECT_NEAR(u.discs[1].center.real(), -0.3, 1e-15);
    EXPECT_NEAR(u.discs[1].radius, 0.35, 1e-15);
}

TEST(DeflatedRegion, ClosedFormAgreesWithDeflatedMatrix) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + trial % 6;
        const auto s = test::random_sparse_stochastic(n, rng);
        for (std::size_t i = 1; i <= n; ++i) {
            const auto u = deflated_region(s, i);
            const auto direct = gershgorin_discs(deflate(s, i).inner);
            for (std::size_t p = 0; p < u.size(); ++p) {
                EXPECT_EQ(u.discs[p].center, direct.discs[p].center);
                EXPECT_EQ(u.discs[p].radius, direct.discs[p].radius);
                // center s_kk - s_ik, radius over j not in {i, k}
                const std::size_t k = u.labels[p] - 1, ii = i - 1;
                double r = 0.0;
                for (std::size_t j = 0; j < n; ++j)
                    if (j != ii && j != k) r += std::abs(s(k, j) - s(ii, j));
                EXPECT_EQ(u.discs[p].center.real(), s(k, k) - s(ii, k));
                EXPECT_NEAR(u.discs[p].radius, r, 1e-15);
            }
        }
    }
}

TEST(DeflatedRegion, IdenticalRowsCollapseToOrigin) {
    const DenseMatrix m{{0.1, 0.9, 0.0}, {0.1, 0.9, 0.0}, {0.1, 0.9, 0.0}};
    const auto s = validate_stochastic(m);
    for (std::size_t i = 1; i <= 3; ++i)
        for (const auto& d : deflated_region(s, i).discs) {
            EXPECT_EQ(d.center, Complex(0.0, 0.0));
            EXPECT_EQ(d.radius, 0.0);
        }
}

TEST(FullRegion, ExampleOneContainsEigenvalues) {
    const auto r = full_inclusion_region(test::example1_stochastic());
    ASSERT_EQ(r.order(), 4u);
    for (const auto& g : r.groups) EXPECT_EQ(g.size(), 3u);
    for (double lam : {-0.3070535638109949, 0.17481864074048906, 0.2822349230705063})
        EXPECT_TRUE(contains(r, Complex(lam, 0.0), 1e-12));
    EXPECT_TRUE(contains(r, Complex(-0.307, 0.0), 1e-3));
    EXPECT_TRUE(contains(r, Complex(1.0, 0.0), 0.0));
    EXPECT_FALSE(contains(r, Complex(-2.0, 0.0), 0.0));
    // group 1 reaches left only to -0.65
    EXPECT_FALSE(contains(r, Complex(-0.7, 0.0), 0.0));
}

TEST(FullRegion, ExchangeMatrixIsTwoPoints) {
    const auto r = full_inclusion_region(validate_stochastic(DenseMatrix{{0, 1}, {1, 0}}));
    for (const auto& g : r.groups) {
        ASSERT_EQ(g.size(), 1u);
        EXPECT_EQ(g.discs[0].center, Complex(-1.0, 0.0));
        EXPECT_EQ(g.discs[0].radius, 0.0);
    }
    EXPECT_TRUE(contains(r, Complex(-1.0, 0.0), 0.0));
    EXPECT_TRUE(contains(r, Complex(1.0, 0.0), 0.0));
    EXPECT_FALSE(contains(r, Complex(0.0, 0.0), 0.0));
}

TEST(FullRegion, ReducibleIdentity) {
    const auto r = full_inclusion_region(validate_stochastic(DenseMatrix::identity(3)));
    for (const auto& g : r.groups)
        for (const auto& d : g.discs) {
            EXPECT_EQ(d.center, Complex(1.0, 0.0));
            EXPECT_EQ(d.radius, 0.0);
        }
}

TEST(FullRegion, OrderTooSmall) {
    try {
        full_inclusion_region(validate_stochastic(DenseMatrix{{1.0}}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::OrderTooSmall);
    }
}

TEST(ClassicDiscs, ExampleOne) {
    const auto s = test::example1_stochastic();
    const auto cv = cvetkovic_classic(s);
    EXPECT_NEAR(cv.shift, 0.4, 1e-12);
    EXPECT_NEAR(cv.disc.center.real(), 0.4, 1e-12);
    EXPECT_NEAR(cv.disc.radius, 1.05, 1e-12);
    const auto ll = lili_classic(s);
    EXPECT_NEAR(ll.shift, 0.35, 1e-12);
    EXPECT_NEAR(ll.disc.center.real(), -0.35, 1e-12);
    EXPECT_NEAR(ll.disc.radius, 1.2, 1e-12);
}

TEST(ClassicDiscs, SmallCases) {
    const auto id = validate_stochastic(DenseMatrix::identity(2));
    EXPECT_EQ(cvetkovic_disc(id).center, Complex(1.0, 0.0));
    EXPECT_EQ(cvetkovic_disc(id).radius, 0.0);
    EXPECT_EQ(lili_disc(id).center, Complex(1.0, 0.0));
    EXPECT_EQ(lili_disc(id).radius, 0.0);

    const auto ex = validate_stochastic(DenseMatrix{{0, 1}, {1, 0}});
    EXPECT_EQ(cvetkovic_disc(ex).center, Complex(-1.0, 0.0));
    EXPECT_EQ(cvetkovic_disc(ex).radius, 0.0);
    EXPECT_EQ(lili_disc(ex).center, Complex(-1.0, 0.0));
    EXPECT_EQ(lili_disc(ex).radius, 0.0);
}

TEST(ClassicDiscs, NeverClampedForStochasticInput) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const auto s = test::random_sparse_stochastic(2 + trial % 7, rng);
        EXPECT_FALSE(cvetkovic_classic(s).radius_clamped);
        EXPECT_FALSE(lili_classic(s).radius_clamped);
    }
}

TEST(DiscUnionInDisc, ExampleOneComparison) {
    const auto s = test::example1_stochastic();
    const auto g1 = deflated_region(s, 1);
    EXPECT_TRUE(disc_union_in_disc(g1, cvetkovic_disc(s)));
    EXPECT_TRUE(disc_union_in_disc(g1, lili_disc(s)));
}

TEST(DiscUnionInDisc, LargerDiscIsNotContained) {
    DiscUnion u{{{Complex(0, 0), 2.0}}, {1}};
    EXPECT_FALSE(disc_union_in_disc(u, {Complex(0, 0), 1.0}));
    EXPECT_TRUE(disc_union_in_disc(u, {Complex(0, 0), 2.0}));
}

TEST(DiscUnionInDisc, Transitive) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> c(-1, 1), r(0, 1);
    for (int trial = 0; trial < 500; ++trial) {
        DiscUnion u;
        for (int k = 0; k < 3; ++k) {
            u.discs.push_back({Complex(c(rng), c(rng)), r(rng)});
            u.labels.push_back(k + 1);
        }
        const Disc d1{Complex(c(rng), c(rng)), 2.0 * r(rng) + 1.0};
        const Disc d2{Complex(c(rng), c(rng)), 3.0 * r(rng) + 1.5};
        const bool union_in_d1 = disc_union_in_disc(u, d1);
        const bool d1_in_d2 = std::abs(d1.center - d2.center) + d1.radius <= d2.radius;
        if (union_in_d1 && d1_in_d2) {
            EXPECT_TRUE(disc_union_in_disc(u, d2, 1e-12));
        }
    }
}

TEST(RealIntervalHull, Examples) {
    const auto [lo, hi] = real_interval_hull(deflated_region(test::example1_stochastic(), 1));
    EXPECT_NEAR(lo, -0.65, 1e-15);
    EXPECT_NEAR(hi, 0.31, 1e-15);

    EXPECT_EQ(real_interval_hull(DiscUnion{{{Complex(0, 0), 0.0}}, {1}}), std::make_pair(0.0, 0.0));
    EXPECT_EQ(real_interval_hull(DiscUnion{{{Complex(-1, 0), 0.5}, {Complex(1, 0), 0.5}}, {1, 2}}),
              std::make_pair(-1.5, 1.5));
}

TEST(RealIntervalHull, RejectsComplexCenters) {
    try {
        real_interval_hull(DiscUnion{{{Complex(0, 0.1), 0.5}}, {1}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ComplexCenters);
    }
}

TEST(RealIntervalHull, BoundsEveryDiscPoint) {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> c(-2, 2), r(0, 1), t(0, 6.283185307179586);
    for (int trial = 0; trial < 200; ++trial) {
        DiscUnion u;
        for (int k = 0; k < 4; ++k) {
            u.discs.push_back({Complex(c(rng), 0.0), r(rng)});
            u.labels.push_back(k + 1);
        }
        const auto [lo, hi] = real_interval_hull(u);
        for (const auto& d : u.discs)
            for (int s = 0; s < 16; ++s) {
                const double x = (d.center + std::polar(d.radius, t(rng))).real();
                EXPECT_GE(x, lo - 1e-15);
                EXPECT_LE(x, hi + 1e-15);
            }
    }
}

TEST(RegionSoundness, RandomEnsemble) {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = 2 + trial % 7;
        const auto s = trial % 2 ? test::random_positive_stochastic(n, rng) : test::random_sparse_stochastic(n, rng);
        const auto region = full_inclusion_region(s);
        const auto cv = cvetkovic_disc(s);
        const auto ll = lili_disc(s);
        for (const auto& z : non_perron(eig_general(s.matrix()), 1e-8).values) {
            EXPECT_TRUE(contains(region, z, 1e-8));
            EXPECT_TRUE(cv.contains(z, 1e-8));
            EXPECT_TRUE(ll.contains(z, 1e-8));
        }
    }
}
