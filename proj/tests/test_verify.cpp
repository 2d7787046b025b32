#include "lpcent/verify.hpp"

#include <gtest/gtest.h>

using namespace lpcent;

TEST(Verify, EverySuitePassesAtDefaultSeed)
{
    VerifyOptions opt;
    for (const auto& s : suites())
        for (const auto& r : s.run(opt)) {
            EXPECT_TRUE(r.passed()) << r.name << " residual " << r.residual << " tolerance " << r.tolerance << "\n"
                                    << r.worst_instance;
            EXPECT_GT(r.instances, 0U) << r.name;
            EXPECT_FALSE(r.worst_instance.empty()) << r.name;
        }
}

TEST(Verify, UnattainableToleranceFailsWithInstance)
{
    VerifyOptions opt;
    opt.tolerance = 1e-30;
    opt.instances = 5;
    const auto rs = check_theorem1(opt);
    ASSERT_FALSE(rs.empty());
    EXPECT_FALSE(rs.front().passed());
    EXPECT_EQ(rs.front().tolerance, 1e-30);
    EXPECT_NE(rs.front().worst_instance.find(' '), std::string::npos);
}

TEST(Verify, SeedAndSizeOptionsChangeInstances)
{
    VerifyOptions a, b, c;
    b.seed = 7;
    c.n_max = 5;
    a.instances = b.instances = c.instances = 3;
    EXPECT_NE(check_spectral(a).front().worst_instance, check_spectral(b).front().worst_instance);
    for (const auto& r : check_theorem1(c)) {
        const Graph g = parse_edge_list(r.worst_instance);
        EXPECT_LE(g.size(), 5U);
    }
    EXPECT_EQ(check_spectral(a).front().residual, check_spectral(a).front().residual);
}

TEST(Verify, NanResidualFails)
{
    VerifyOptions opt;
    detail::Recorder r("x", 1.0, opt);
    r.observe(0.5, path_graph(2));
    r.observe(std::nan(""), path_graph(3));
    r.observe(0.1, path_graph(4));
    EXPECT_FALSE(r.result().passed());
    EXPECT_EQ(r.result().instances, 3U);
}
