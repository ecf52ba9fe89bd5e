#include <doctest.h>

#include <cmath>

#include "qwalk/analysis.hpp"
#include "qwalk/engine.hpp"
#include "qwalk/grover.hpp"
#include "qwalk/recursion.hpp"

using namespace qwalk;

namespace {

double gprob(const GroverField& f, Position p) {
  auto it = f.amp.find(p);
  return it == f.amp.end() ? 0.0 : it->second.norm2();
}

}  // namespace

TEST_CASE("diffusion coin") {
  const auto g = grover_coin();
  SUBCASE("printed entries") {
    CHECK(g[0][0] == Complex{-0.5});
    CHECK(g[0][1] == Complex{0.5});
    CHECK(g[3][3] == Complex{-0.5});
  }
  SUBCASE("the uniform vector is fixed") {
    for (int i = 0; i < 4; ++i) {
      Complex row{};
      for (int j = 0; j < 4; ++j) row += g[i][j];
      CHECK(std::abs(row - Complex{1.0}) < 1e-15);
    }
  }
  SUBCASE("squares to the identity, hermitian, unitary") {
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        Complex sq{};
        for (int k = 0; k < 4; ++k) sq += g[i][k] * g[k][j];
        CHECK(std::abs(sq - Complex{i == j ? 1.0 : 0.0}) < 1e-15);
        CHECK(std::abs(g[i][j] - std::conj(g[j][i])) < 1e-15);
      }
  }
}

TEST_CASE("grover initial state") {
  const auto f = grover_initial_state();
  CHECK(f.amp.size() == 1);
  CHECK(std::abs(f.norm2() - 1.0) < 1e-15);
  const auto& s = f.amp.at(Position{});
  CHECK(s.a[0] == Complex{0.5});
  CHECK(s.a[1] == Complex{-0.5});
  CHECK(s.a[2] == Complex{-0.5});
  CHECK(s.a[3] == Complex{0.5});
  const auto d = distribution(f);
  CHECK(d.at(Position{}) == doctest::Approx(1.0));
}

TEST_CASE("one grover step") {
  SUBCASE("quarter probability on the four diagonal neighbours") {
    const auto f = grover_step(grover_initial_state());
    CHECK(f.amp.size() == 4);
    for (int x : {-1, 1})
      for (int z : {-1, 1})
        CHECK(gprob(f, Position{{x, z, 0}}) == doctest::Approx(0.25));
    CHECK(std::abs(f.norm2() - 1.0) < 1e-13);
  }
  SUBCASE("the uniform spinor scatters diagonally without mixing") {
    GroverField f;
    f.add(Position{}, Spinor4{{Complex{0.5}, Complex{0.5}, Complex{0.5},
                               Complex{0.5}}});
    const auto out = grover_step(f);
    CHECK(out.amp.size() == 4);
    CHECK(std::abs(out.amp.at(Position{{-1, -1, 0}}).a[0] - Complex{0.5}) <
          1e-15);
    CHECK(std::abs(out.amp.at(Position{{1, 1, 0}}).a[3] - Complex{0.5}) <
          1e-15);
  }
}

TEST_CASE("grover evolution") {
  SUBCASE("zero steps is the origin point mass") {
    const auto d = distribution(grover_evolve_field(0));
    CHECK(d.p.size() == 1);
    CHECK(d.at(Position{}) == doctest::Approx(1.0));
  }
  SUBCASE("norm conserved through fifty steps") {
    GroverField f = grover_initial_state();
    for (int t = 1; t <= 50; ++t) {
      f = grover_step(f);
      CHECK(std::abs(f.norm2() - 1.0) < 1e-12);
    }
  }
  SUBCASE("negative step count is rejected") {
    CHECK_THROWS_AS(grover_evolve_field(-1), std::invalid_argument);
  }
}

TEST_CASE("grover engine equals the four-component recurrence, amplitude level") {
  const auto table = grover_recursion(10);
  GroverField f = grover_initial_state();
  for (int t = 0; t <= 10; ++t) {
    const auto& layer = table.layer(t);
    double m = 0.0;
    for (int x = -t; x <= t; ++x)
      for (int z = -t; z <= t; ++z) {
        const auto cell = layer.get(x, z);
        auto it = f.amp.find(Position{{x, z, 0}});
        const Spinor4 have = it == f.amp.end() ? Spinor4{} : it->second;
        for (int i = 0; i < 4; ++i)
          m = std::max(m, std::abs(cell[i] - have.a[i]));
      }
    CHECK(m < 1e-12);
    if (t < 10) f = grover_step(f);
  }
}

TEST_CASE("coinless square walk and grover walk share one distribution") {
  WalkConfig cfg;
  cfg.lattice = lattice_spec(LatticeKind::Square);
  cfg.steps = 25;
  cfg.initial_spin = spin_plus_i();
  const auto two_state = distribution(evolve(cfg), 2);
  const auto grover = distribution(grover_evolve_field(25));
  CHECK(max_abs_diff(two_state, grover) < 1e-10);
}
