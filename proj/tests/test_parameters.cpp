#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "bv/parameters.hpp"
#include "test_util.hpp"

using namespace bv;
using bvtest::chi;
using bvtest::halves;
using bvtest::ints;
using bvtest::psi_of;
using bvtest::triv;
using bvtest::unipotent_psi;

namespace {

bool has_code(const ValidationReport& r, const std::string& code) {
  for (const Violation& v : r.violations)
    if (v.code == code) return true;
  return false;
}

ArthurParameter bn_example() {
  return psi_of(GroupCase::Bn, 3,
                {triv(4), chi(Rational(1, 2), Rational(-1, 2), 1),
                 chi(Rational(-1, 2), Rational(1, 2), 1)});
}

std::vector<Rational> abs_desc(const std::vector<Gaussian>& v) {
  std::vector<Rational> out;
  for (const Gaussian& g : v) {
    REQUIRE(g.is_real());
    out.push_back(abs(g.re));
  }
  std::sort(out.begin(), out.end(), [](const Rational& x, const Rational& y) {
    return y < x;
  });
  return out;
}

}  // namespace

TEST_CASE("validate accepts") {
  ValidationReport r = validate(bn_example());
  CHECK(r.ok());
  CHECK(!r.almost_unitary);
}

TEST_CASE("validate flags rank") {
  CHECK(has_code(validate(psi_of(GroupCase::Bn, 0, {})), "rank"));
}

TEST_CASE("validate flags dimension") {
  CHECK(has_code(validate(psi_of(GroupCase::Bn, 3, {triv(6), triv(0)})),
                 "dimension"));
}

TEST_CASE("validate flags integrality") {
  ArthurParameter psi =
      psi_of(GroupCase::Cn, 2,
             {chi(Rational(1, 2), Rational(0), 2),
              chi(Rational(-1, 2), Rational(0), 2), triv(1)});
  CHECK(has_code(validate(psi), "integrality"));
}

TEST_CASE("validate flags unitarity") {
  ArthurParameter psi = psi_of(GroupCase::Cn, 2,
                               {chi(Rational(1), Rational(0), 2),
                                chi(Rational(-1), Rational(0), 2), triv(1)});
  CHECK(has_code(validate(psi), "unitarity"));
}

TEST_CASE("validate flags total dimension") {
  CHECK(has_code(validate(psi_of(GroupCase::Cn, 3, {triv(3), triv(3)})),
                 "total_dim"));
}

TEST_CASE("validate flags theta instability") {
  ArthurParameter psi = psi_of(GroupCase::Bn, 3,
                               {chi(Rational(1), Rational(-1), 2), triv(4)});
  ValidationReport r = validate(psi);
  CHECK(has_code(r, "theta"));
  CHECK(!has_code(r, "unitarity"));
}

TEST_CASE("validate flags parity") {
  CHECK(has_code(validate(psi_of(GroupCase::Bn, 3, {triv(5), triv(1)})),
                 "parity"));
  CHECK(validate(psi_of(GroupCase::Bn, 3, {triv(4), triv(1), triv(1)})).ok());
}

TEST_CASE("almost unitary") {
  ArthurParameter psi =
      psi_of(GroupCase::Cn, 2,
             {chi(Rational(9, 16), Rational(-7, 16), 2),
              chi(Rational(-9, 16), Rational(7, 16), 2), triv(1)});
  ValidationReport r = validate(psi);
  CHECK(r.ok());
  CHECK(r.almost_unitary);
  CHECK_NOTHROW(require_valid(psi, false));
  CHECK_THROWS_AS(require_valid(psi, true), std::invalid_argument);
}

TEST_CASE("require_valid rejects invalid") {
  CHECK_THROWS_AS(require_valid(psi_of(GroupCase::Cn, 3, {triv(3), triv(3)}),
                                false),
                  std::invalid_argument);
}

TEST_CASE("unipotent parameters") {
  ArthurParameter psi = unipotent_psi(GroupCase::Cn, {3, 3, 1});
  CHECK(is_unipotent(psi));
  CHECK(!is_unipotent(bn_example()));
  NilpotentOrbit o = orbit_of_unipotent(psi);
  CHECK(o.family == Family::SoOdd);
  CHECK(o.partition == Partition{3, 3, 1});
  CHECK_THROWS_AS(orbit_of_unipotent(bn_example()), std::invalid_argument);
}

TEST_CASE("decompose") {
  Decomposition d = decompose(bn_example());
  REQUIRE(d.rho_pairs.size() == 1);
  CHECK(d.rho_pairs[0] == chi(Rational(1, 2), Rational(-1, 2), 1));
  CHECK(d.bad_halves.empty());
  CHECK(d.u_bp_dims == std::vector<long long>{4});
  CHECK(d.bad_parity_pairs.empty());
  CHECK(d.rho() == std::vector<Summand>{chi(Rational(1, 2), Rational(-1, 2), 1)});

  Decomposition t = decompose(unipotent_psi(GroupCase::Bn, {4, 1, 1}));
  CHECK(t.rho_pairs.empty());
  CHECK(t.u_bp_dims == std::vector<long long>{4});
  REQUIRE(t.bad_parity_pairs.size() == 1);
  CHECK(t.bad_parity_pairs[0] == std::pair<long long, long long>{1, 1});
  CHECK(t.bad_halves == std::vector<Summand>{triv(1)});

  NilpotentOrbit u = u_bp_orbit(bn_example());
  CHECK(u.family == Family::Sp);
  CHECK(u.partition == Partition{4});
}

TEST_CASE("orbit infinitesimal character") {
  CHECK(infinitesimal_character(classify(Family::SoOdd, {5, 3, 3, 1, 1})) ==
        ints({2, 1, 1, 1, 0, 0}));
  CHECK(infinitesimal_character(classify(Family::Sp, {6, 6, 4, 2})) ==
        halves({5, 5, 3, 3, 3, 1, 1, 1, 1}));
}

TEST_CASE("aligned infinitesimal character") {
  ArthurParameter psi = psi_of(GroupCase::Cn, 3,
                               {chi(Rational(1), Rational(-1), 2),
                                chi(Rational(-1), Rational(1), 2), triv(3)});
  InfChar ic = infinitesimal_character(psi);
  CHECK(ic.lambda ==
        std::vector<Gaussian>{Gaussian(Rational(3, 2)), Gaussian(Rational(1, 2)),
                              Gaussian(Rational(1))});
  CHECK(ic.mu ==
        std::vector<Gaussian>{Gaussian(Rational(-1, 2)),
                              Gaussian(Rational(-3, 2)), Gaussian(Rational(1))});

  InfChar b = infinitesimal_character(bn_example());
  CHECK(b.lambda == halves({1, 3, 1}));
  CHECK(b.mu == halves({-1, 3, 1}));
}

TEST_CASE("unipotent character matches orbit rule") {
  struct Row {
    GroupCase gc;
    Family f;
  };
  for (auto [gc, f] : {Row{GroupCase::Cn, Family::SoOdd},
                       Row{GroupCase::Bn, Family::Sp},
                       Row{GroupCase::Dn, Family::SoEven},
                       Row{GroupCase::Mpn, Family::Sp}}) {
    bool odd = f == Family::SoOdd;
    for (long long n = odd ? 1 : 2; n <= 16; n += 2) {
      for (const NilpotentOrbit& o : enumerate_orbits(f, n)) {
        ArthurParameter psi = unipotent_psi(gc, o.partition);
        if (!validate(psi).ok()) continue;
        InfChar ic = infinitesimal_character(psi);
        CHECK(ic.lambda == ic.mu);
        CHECK(abs_desc(ic.lambda) ==
              abs_desc(infinitesimal_character(orbit_of_unipotent(psi))));
      }
    }
  }
}

TEST_CASE("character multiset ignores summand order") {
  ArthurParameter psi = bn_example();
  ArthurParameter flipped = psi;
  std::reverse(flipped.summands.begin(), flipped.summands.end());
  CHECK(abs_desc(infinitesimal_character(psi).lambda) ==
        abs_desc(infinitesimal_character(flipped).lambda));
}

TEST_CASE("regularity") {
  ArthurParameter singleton =
      psi_of(GroupCase::Cn, 3,
             {chi(Rational(1), Rational(-1), 2),
              chi(Rational(-1), Rational(1), 2), triv(3)});
  CHECK(is_regular(infinitesimal_character(singleton)));
  CHECK(!is_regular(infinitesimal_character(bn_example())));
  CHECK(!is_regular(InfChar{ints({1, -1}), ints({1, -1})}));
  CHECK(!is_regular(InfChar{ints({2, 0}), ints({2, 0})}));
}

TEST_CASE("component group of parameter") {
  GroupPresentation g = component_group_of_psi(bn_example());
  CHECK(g.generator_sizes == Partition{4});
  CHECK(g.rank() == 0);
  CHECK(component_group_of_psi(unipotent_psi(GroupCase::Cn, {7, 3, 3})).rank() ==
        2);
}
