#include <gtest/gtest.h>

#include <iostream>

#include "property_suites.hpp"

namespace ps = property_suites;

TEST(Invariants, MonotoneAndLipschitzInP) { EXPECT_EQ(ps::monotone_lipschitz(std::cerr), 0); }
TEST(Invariants, HAndFNonincreasing) { EXPECT_EQ(ps::h_f_nonincreasing(std::cerr), 0); }
TEST(Invariants, SubgraphMonotone) { EXPECT_EQ(ps::subgraph_monotone(std::cerr), 0); }
TEST(Invariants, RayleighBounds) { EXPECT_EQ(ps::rayleigh(std::cerr), 0); }
TEST(Invariants, WeylInequalities) { EXPECT_EQ(ps::weyl(std::cerr), 0); }
TEST(Invariants, PerturbationBound) { EXPECT_EQ(ps::perturbation(std::cerr), 0); }
TEST(Invariants, NordhausBracket) { EXPECT_EQ(ps::nordhaus(std::cerr), 0); }
TEST(Invariants, BoundSuiteSlack) { EXPECT_EQ(ps::bound_slack(std::cerr), 0); }
TEST(Invariants, EigenvectorConstantOnClasses) { EXPECT_EQ(ps::class_constancy(std::cerr), 0); }
TEST(Invariants, PositiveEigenvectorForConnectedGraphs) { EXPECT_EQ(ps::positivity(std::cerr), 0); }
TEST(Invariants, RestartUniquenessAtPAtLeastR) { EXPECT_EQ(ps::restart_uniqueness(std::cerr), 0); }
