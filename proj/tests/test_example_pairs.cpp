#include "fvir/example_pairs.hpp"
#include "fvir/notation.hpp"

#include <gtest/gtest.h>

namespace fvir {
namespace {

using Q = Rational;

std::string failures(const Report& r) {
  std::string out;
  for (const auto& c : r.checks)
    if (!c.passed) out += c.name + ": " + c.residual + "\n";
  return out;
}

struct Case {
  PairSystem system;
  int eps;
};

class ExamplePairs : public ::testing::TestWithParam<Case> {};

TEST_P(ExamplePairs, BothPresentationsReproduceTheFlow) {
  const auto [system, eps] = GetParam();
  auto c = example_pair_case(system, Q(eps));
  EXPECT_EQ(c.presentations.size(), 4u);
  auto rep = verify_example_pairs(c);
  EXPECT_TRUE(rep.passed()) << failures(rep);
}

TEST_P(ExamplePairs, PerturbedHamiltonianFails) {
  const auto [system, eps] = GetParam();
  auto rep = verify_example_pairs(system, Q(eps), {true});
  EXPECT_FALSE(rep.passed());
  for (const auto& c : rep.checks)
    if (!c.passed) EXPECT_FALSE(c.residual.empty()) << c.name;
}

INSTANTIATE_TEST_SUITE_P(AllSystems, ExamplePairs,
                         ::testing::Values(Case{PairSystem::KdV, 2}, Case{PairSystem::CH, 2}, Case{PairSystem::HS, 2},
                                           Case{PairSystem::KdV, -1}, Case{PairSystem::CH, -1},
                                           Case{PairSystem::HS, -1}, Case{PairSystem::KdV, 0},
                                           Case{PairSystem::CH, 0}, Case{PairSystem::HS, 0}),
                         [](const auto& info) {
                           auto eps = info.param.eps;
                           return to_string(info.param.system) + "_eps" + (eps < 0 ? "m" : "") +
                                  std::to_string(eps < 0 ? -eps : eps);
                         });

TEST(ExamplePairs, KdVHamiltoniansAsPublished) {
  auto c = example_pair_case(PairSystem::KdV, Q(2));
  auto syms = componentwise_symbols(2);
  std::map<std::string, DiffPoly> dens;
  for (const auto& p : c.presentations) dens[p.label] = parse_density(p.density, syms, c.eps);
  EXPECT_EQ(dens["H1"], parse_density("vw", syms));
  EXPECT_EQ(dens["H2"], parse_density("1/2(3v^2w+εw^3+2vw_xx)", syms, Q(2)));
  EXPECT_EQ(dens["H~1"], parse_density("1/2(v^2+εw^2)", syms, Q(2)));
}

TEST(ExamplePairs, TranscribedMisprintsFail) {
  for (int eps : {2, 0}) {
    auto ch = verify_example_pairs(example_pair_case(PairSystem::CH, Q(eps), FixtureText::AsPrinted));
    EXPECT_FALSE(ch.passed()) << "CH eps=" << eps;
  }
  auto hs = verify_example_pairs(example_pair_case(PairSystem::HS, Q(0), FixtureText::AsPrinted));
  EXPECT_FALSE(hs.passed());
  auto kdv = verify_example_pairs(example_pair_case(PairSystem::KdV, Q(2), FixtureText::AsPrinted));
  EXPECT_TRUE(kdv.passed()) << failures(kdv);
}

}  // namespace
}  // namespace fvir
