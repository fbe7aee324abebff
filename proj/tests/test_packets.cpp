#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "bv/packets.hpp"
#include "test_util.hpp"

using namespace bv;
using bvtest::chi;
using bvtest::halves;
using bvtest::ints;
using bvtest::psi_of;
using bvtest::triv;
using bvtest::unipotent_psi;

namespace {

NilpotentOrbit orb(Family f, const Partition& p) { return classify(f, p); }

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

bool member_matches(const PacketMember& got, WeylKind kind,
                    const std::vector<Gaussian>& lambda,
                    const std::vector<Gaussian>& mu) {
  return equivalent(got.param, make_param(kind, lambda, mu));
}

}  // namespace

TEST_CASE("normal form") {
  LanglandsParam p = normal_form(make_param(WeylKind::BC, ints({-2, 1}),
                                            ints({-1, 1})));
  CHECK(p.lambda == ints({2, 1}));
  CHECK(p.mu == ints({1, 1}));
  CHECK(normal_form(p) == p);

  // GL admits no flips.
  LanglandsParam g = normal_form(make_param(WeylKind::GL, ints({-1}),
                                            ints({-1})));
  CHECK(g.lambda == ints({-1}));

  CHECK(equivalent(make_param(WeylKind::BC, ints({1}), ints({-1})),
                   make_param(WeylKind::BC, ints({-1}), ints({1}))));
  CHECK(!equivalent(make_param(WeylKind::GL, ints({1}), ints({-1})),
                    make_param(WeylKind::GL, ints({-1}), ints({1}))));
  CHECK(equivalent(make_param(WeylKind::BC, ints({2, 1}), ints({1, 1})),
                   make_param(WeylKind::BC, ints({1, 2}), ints({1, 1}))));
}

TEST_CASE("type D flip parity") {
  LanglandsParam a = make_param(WeylKind::D, ints({1, 1}), ints({-1, 1}));
  LanglandsParam b = make_param(WeylKind::D, ints({-1, 1}), ints({1, 1}));
  CHECK(equivalent(a, a));
  CHECK(!equivalent(a, b));
  // A zero pair absorbs the flip parity.
  LanglandsParam az = make_param(WeylKind::D, ints({1, 0}), ints({-1, 0}));
  LanglandsParam bz = make_param(WeylKind::D, ints({-1, 0}), ints({1, 0}));
  CHECK(equivalent(az, bz));
}

TEST_CASE("zero parameter") {
  CHECK(make_zero(WeylKind::BC).zero);
  CHECK(equivalent(make_zero(WeylKind::BC), make_zero(WeylKind::BC)));
  CHECK(!equivalent(make_zero(WeylKind::BC),
                    make_param(WeylKind::BC, ints({1}), ints({1}))));
  CHECK(param_str(make_zero(WeylKind::BC)) == "0");
}

TEST_CASE("exponents") {
  auto ex = exponents(make_param(WeylKind::BC, ints({1, 0}), ints({0, 0})));
  REQUIRE(ex.size() == 2);
  CHECK(ex[0].a == Gaussian(Rational(1)));
  CHECK(ex[0].b == Gaussian(Rational(0)));
  CHECK_THROWS_AS(exponents(make_param(WeylKind::BC, ints({2}), ints({0}))),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      exponents(make_param(WeylKind::BC, halves({1}), ints({0}))),
      std::invalid_argument);
}

TEST_CASE("gl parameter") {
  LanglandsParam p = gl_param({chi(Rational(1), Rational(-1), 2)});
  CHECK(p.kind == WeylKind::GL);
  CHECK(p.lambda == halves({3, 1}));
  CHECK(p.mu == halves({-1, -3}));
  Summand s1 = chi(Rational(1, 2), Rational(-1, 2), 1);
  Summand s2 = triv(3);
  CHECK(equivalent(gl_param({s1, s2}), gl_param({s2, s1})));
}

TEST_CASE("levi data") {
  BVData c = bv_levi_data(orb(Family::SoOdd, {9, 5, 5, 5, 3, 1, 1}),
                          GroupCase::Cn);
  CHECK(c.x0 == 0);
  CHECK(c.m0_rank == 0);
  CHECK(c.gl_sizes == std::vector<long long>{7, 5, 2});

  BVData b = bv_levi_data(orb(Family::Sp, {8, 4, 4, 4, 2}), GroupCase::Bn);
  CHECK(b.m0_rank == 4);
  CHECK(b.gl_sizes == std::vector<long long>{4, 3});

  BVData d = bv_levi_data(orb(Family::SoEven, {11, 7, 7, 7, 3, 3}),
                          GroupCase::Dn);
  CHECK(d.m0_rank == 7);
  CHECK(d.gl_sizes == std::vector<long long>{7, 5});

  BVData m = bv_levi_data(orb(Family::Sp, {12, 8, 4, 4, 4, 2}), GroupCase::Mpn);
  CHECK(m.gl_sizes == std::vector<long long>{10, 4, 3});
  CHECK(!m.mp_factor);
  CHECK(m.m0_rank == 0);

  BVData m2 = bv_levi_data(orb(Family::Sp, {12, 8, 4, 4, 2}), GroupCase::Mpn);
  CHECK(m2.gl_sizes == std::vector<long long>{10, 4});
  CHECK(m2.mp_factor);
  CHECK(m2.x0 == 1);
}

TEST_CASE("string extraction") {
  BVData c = bv_strings(orb(Family::SoOdd, {9, 5, 5, 5, 3, 1, 1}),
                        GroupCase::Cn);
  CHECK(c.lambda0.empty());
  REQUIRE(c.f.size() == 3);
  CHECK(c.f[0] == ints({4, 3, 2, 1, 0, -1, -2}));
  CHECK(c.f[1] == ints({2, 1, 0, -1, -2}));
  CHECK(c.f[2] == ints({1, 0}));
  CHECK(c.ftilde[0] == ints({4, 2, 1, 0, -1, -2, -3}));
  CHECK(c.ftilde[1].empty());
  CHECK(c.ftilde[2] == ints({0, -1}));
  CHECK(c.pair_is_unequal == std::vector<bool>{true, false, true});

  BVData b = bv_strings(orb(Family::Sp, {8, 4, 4, 4, 2}), GroupCase::Bn);
  CHECK(b.lambda0 == halves({7, 5, 3, 1}));
  CHECK(b.f[0] == halves({3, 1, -1, -3}));
  CHECK(b.f[1] == halves({3, 1, -1}));
  CHECK(b.ftilde[0].empty());
  CHECK(b.ftilde[1] == halves({1, -1, -3}));

  BVData d = bv_strings(orb(Family::SoEven, {11, 9, 5, 5, 3, 1}),
                        GroupCase::Dn);
  CHECK(d.lambda0 == ints({5, 4, 3, 2, 1, 0}));
  CHECK(d.f[0] == ints({4, 3, 2, 1, 0, -1, -2}));
  CHECK(d.ftilde[0] == ints({4, 2, 1, 0, -1, -2, -3}));
  CHECK(d.f[1] == ints({2, 1, 0, -1}));
  CHECK(d.ftilde[1] == ints({1, 0, -1, -2}));

  BVData e = bv_strings(orb(Family::SoEven, {9, 5, 5, 3}), GroupCase::Dn);
  CHECK(e.lambda0 == ints({4, 3, 2, 1, 0, -1}));
  REQUIRE(e.f.size() == 1);
  CHECK(e.f[0] == ints({2, 1, 0, -1, -2}));
  CHECK(e.pair_is_unequal == std::vector<bool>{false});

  BVData m = bv_strings(orb(Family::Sp, {12, 8, 4, 4, 4, 2}), GroupCase::Mpn);
  CHECK(m.f[0] == halves({11, 9, 7, 5, 3, 1, -1, -3, -5, -7}));
  CHECK(m.f[2] == halves({3, 1, -1}));
  CHECK(m.ftilde[2] == halves({1, -1, -3}));
  CHECK(m.lambda0.empty());
}

TEST_CASE("packet members match known tuples") {
  // Rank 6 symplectic packet on [7,3,3].
  Packet p1 = bv_packet(orb(Family::SoOdd, {7, 3, 3}), GroupCase::Cn);
  CHECK(p1.m == 1);
  REQUIRE(p1.members.size() == 2);
  CHECK(p1.members[0].eps == std::vector<int>{1});
  CHECK(p1.members[1].eps == std::vector<int>{-1});
  std::vector<Gaussian> l1 = ints({3, 2, 1, 0, -1, 1});
  CHECK(member_matches(p1.members[0], WeylKind::BC, l1, l1));
  CHECK(member_matches(p1.members[1], WeylKind::BC, l1,
                       ints({3, 1, 0, -1, -2, 1})));

  // Rank 6 odd orthogonal packet on [6,4,2].
  Packet p2 = bv_packet(orb(Family::Sp, {6, 4, 2}), GroupCase::Bn);
  REQUIRE(p2.members.size() == 2);
  std::vector<Gaussian> l2 = halves({5, 3, 1, 3, 1, -1});
  CHECK(member_matches(p2.members[0], WeylKind::BC, l2, l2));
  CHECK(member_matches(p2.members[1], WeylKind::BC, l2,
                       halves({5, 3, 1, 1, -1, -3})));

  // Rank 17 even orthogonal packet on [11,9,5,5,3,1].
  Packet p3 = bv_packet(orb(Family::SoEven, {11, 9, 5, 5, 3, 1}),
                        GroupCase::Dn);
  CHECK(p3.m == 2);
  REQUIRE(p3.members.size() == 4);
  std::vector<Gaussian> l3 =
      ints({5, 4, 3, 2, 1, 0, 4, 3, 2, 1, 0, -1, -2, 2, 1, 0, -1});
  CHECK(member_matches(p3.members[0], WeylKind::D, l3, l3));
  CHECK(member_matches(p3.members[1], WeylKind::D, l3,
                       ints({5, 4, 3, 2, 1, 0, 4, 3, 2, 1, 0, -1, -2, 1, 0,
                             -1, -2})));
  CHECK(member_matches(p3.members[2], WeylKind::D, l3,
                       ints({5, 4, 3, 2, 1, 0, 4, 2, 1, 0, -1, -2, -3, 2, 1,
                             0, -1})));
  CHECK(member_matches(p3.members[3], WeylKind::D, l3,
                       ints({5, 4, 3, 2, 1, 0, 4, 2, 1, 0, -1, -2, -3, 1, 0,
                             -1, -2})));

  // Rank 14 symplectic packet on [9,5,5,5,3,1,1].
  Packet p4 = bv_packet(orb(Family::SoOdd, {9, 5, 5, 5, 3, 1, 1}),
                        GroupCase::Cn);
  CHECK(p4.m == 2);
  REQUIRE(p4.members.size() == 4);
  std::vector<Gaussian> l4 =
      ints({4, 3, 2, 1, 0, -1, -2, 2, 1, 0, -1, -2, 1, 0});
  CHECK(member_matches(p4.members[0], WeylKind::BC, l4, l4));
  CHECK(member_matches(p4.members[1], WeylKind::BC, l4,
                       ints({4, 3, 2, 1, 0, -1, -2, 2, 1, 0, -1, -2, 0, -1})));
  CHECK(member_matches(p4.members[2], WeylKind::BC, l4,
                       ints({4, 2, 1, 0, -1, -2, -3, 2, 1, 0, -1, -2, 1, 0})));
  CHECK(member_matches(p4.members[3], WeylKind::BC, l4,
                       ints({4, 2, 1, 0, -1, -2, -3, 2, 1, 0, -1, -2, 0,
                             -1})));

  // Singleton packet: the one pair of [9,5,5,3] is equal.
  Packet p5 = bv_packet(orb(Family::SoEven, {9, 5, 5, 3}), GroupCase::Dn);
  REQUIRE(p5.members.size() == 1);
  std::vector<Gaussian> l5 = ints({4, 3, 2, 1, 0, -1, 2, 1, 0, -1, -2});
  CHECK(member_matches(p5.members[0], WeylKind::D, l5, l5));
}

TEST_CASE("metaplectic packets") {
  Packet p = bv_packet(orb(Family::Sp, {12, 8, 4, 4, 4, 2}), GroupCase::Mpn);
  CHECK(p.m == 2);
  CHECK(!p.mp_coordinate);
  REQUIRE(p.members.size() == 4);
  CHECK(p.members[0].eps == std::vector<int>{1, 1});
  CHECK(p.members[3].eps == std::vector<int>{-1, -1});

  Packet q = bv_packet(orb(Family::Sp, {12, 8, 4, 4, 2}), GroupCase::Mpn);
  CHECK(q.m == 1);
  CHECK(q.mp_coordinate);
  REQUIRE(q.members.size() == 4);
  CHECK(q.members[0].eps == std::vector<int>{1, 1});
  CHECK(q.members[1].eps == std::vector<int>{1, -1});
  // The metaplectic factor contributes a fixed (1/2, +-1/2) coordinate.
  auto count_pairs = [](const LanglandsParam& p, const Rational& l,
                        const Rational& m) {
    int c = 0;
    for (size_t i = 0; i < p.lambda.size(); ++i)
      if (p.lambda[i] == Gaussian(l) && p.mu[i] == Gaussian(m)) ++c;
    return c;
  };
  CHECK(count_pairs(q.members[0].param, Rational(1, 2), Rational(1, 2)) >= 1);
  CHECK(count_pairs(q.members[1].param, Rational(1, 2), Rational(-1, 2)) >= 1);
  CHECK(abs_desc(q.members[0].param.lambda) ==
        abs_desc(q.members[1].param.lambda));
}

TEST_CASE("packet preconditions") {
  CHECK_THROWS_AS(bv_packet(orb(Family::Sp, {4, 1, 1}), GroupCase::Bn),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      bv_packet(classify(Family::SoEven, {2, 2}, VeryEvenLabel::I),
                GroupCase::Dn),
      std::invalid_argument);
  CHECK_THROWS_AS(bv_packet(orb(Family::Sp, {4, 3, 3, 2}), GroupCase::Bn),
                  std::invalid_argument);
}

TEST_CASE("bad parity singleton") {
  Packet p = bv_packet(orb(Family::Sp, {3, 3}), GroupCase::Bn);
  CHECK(p.m == 0);
  REQUIRE(p.members.size() == 1);
  CHECK(!p.members[0].param.zero);
  CHECK(p.members[0].param.lambda.size() == 3);
  CHECK(abs_desc(p.members[0].param.lambda) ==
        abs_desc(infinitesimal_character(orb(Family::Sp, {3, 3}))));
}

TEST_CASE("packet size and coherence") {
  struct Row {
    GroupCase gc;
    Family f;
  };
  for (auto [gc, f] : {Row{GroupCase::Cn, Family::SoOdd},
                       Row{GroupCase::Bn, Family::Sp},
                       Row{GroupCase::Dn, Family::SoEven},
                       Row{GroupCase::Mpn, Family::Sp}}) {
    bool odd = f == Family::SoOdd;
    for (long long n = odd ? 1 : 2; n <= 13; n += 2) {
      for (const NilpotentOrbit& o : enumerate_orbits(f, n)) {
        if (!has_good_parity(o, gc) || !is_special(o, gc)) continue;
        Packet p = bv_packet(o, gc);
        size_t want = 1ull << (p.m + (p.mp_coordinate ? 1 : 0));
        CHECK(p.members.size() == want);
        std::vector<Rational> ic = abs_desc(infinitesimal_character(o));
        for (size_t i = 0; i < p.members.size(); ++i) {
          CHECK(!p.members[i].param.zero);
          CHECK(p.members[i].param == normal_form(p.members[i].param));
          CHECK(abs_desc(p.members[i].param.lambda) == ic);
          CHECK(abs_desc(p.members[i].param.mu) == ic);
          for (size_t j = i + 1; j < p.members.size(); ++j)
            CHECK(!equivalent(p.members[i].param, p.members[j].param));
        }
      }
    }
  }
}

TEST_CASE("members swap symmetric") {
  // (lambda, w lambda) and (lambda, w^-1 lambda) name the same parameter;
  // the latter is Weyl-conjugate to (mu, lambda).
  for (auto [f, gc] :
       {std::pair{Family::SoOdd, GroupCase::Cn},
        std::pair{Family::Sp, GroupCase::Bn},
        std::pair{Family::Sp, GroupCase::Mpn}}) {
    bool odd = f == Family::SoOdd;
    for (long long n = odd ? 1 : 2; n <= 13; n += 2) {
      for (const NilpotentOrbit& o : enumerate_orbits(f, n)) {
        if (!has_good_parity(o, gc) || !is_special(o, gc)) continue;
        for (const PacketMember& mb : bv_packet(o, gc).members)
          CHECK(equivalent(mb.param, make_param(mb.param.kind, mb.param.mu,
                                                mb.param.lambda)));
      }
    }
  }
  for (long long n = 2; n <= 14; n += 2) {
    for (const NilpotentOrbit& o : enumerate_orbits(Family::SoEven, n)) {
      if (!has_good_parity(o, GroupCase::Dn) || !is_special(o, GroupCase::Dn))
        continue;
      for (const PacketMember& mb : bv_packet(o, GroupCase::Dn).members)
        CHECK(equivalent(mb.param, make_param(mb.param.kind, mb.param.mu,
                                              mb.param.lambda)));
    }
  }
}

TEST_CASE("branching doubles inside a window") {
  // [7,3,3] with a pair of fives added: the window x_1 < M + 1 < x_2 holds
  // for M = 2, so the packet doubles.
  Packet small = bv_packet(orb(Family::SoOdd, {7, 3, 3}), GroupCase::Cn);
  Packet big = bv_packet(orb(Family::SoOdd, {7, 5, 5, 3, 3}), GroupCase::Cn);
  CHECK(big.m == small.m + 1);
  CHECK(big.members.size() == 2 * small.members.size());
}

TEST_CASE("characters select members") {
  NilpotentOrbit o = orb(Family::SoOdd, {7, 3, 3});
  Packet p = bv_packet(o, GroupCase::Cn);
  CHECK(equivalent(bv_packet_member(o, GroupCase::Cn, {1, 1}),
                   p.members[0].param));
  CHECK(equivalent(bv_packet_member(o, GroupCase::Cn, {-1, -1}),
                   p.members[1].param));
  CHECK(bv_packet_member(o, GroupCase::Cn, {1, -1}).zero);
  CHECK(bv_packet_member(o, GroupCase::Cn, {-1, 1}).zero);

  // Characters outside the quotient yield zero.
  NilpotentOrbit b = orb(Family::Sp, {8, 4, 4, 4, 2});
  CHECK(!bv_packet_member(b, GroupCase::Bn, {1, 1, 1}).zero);
  CHECK(!bv_packet_member(b, GroupCase::Bn, {1, -1, -1}).zero);
  CHECK(bv_packet_member(b, GroupCase::Bn, {-1, 1, -1}).zero);
  CHECK(bv_packet_member(b, GroupCase::Bn, {-1, -1, 1}).zero);
  // Sign vectors violating the center relation are not characters of A(U).
  CHECK_THROWS_AS(bv_packet_member(b, GroupCase::Bn, {-1, 1, 1}),
                  std::invalid_argument);
}

TEST_CASE("arthur packet of unipotent parameter") {
  ArthurPacket ap = arthur_packet(unipotent_psi(GroupCase::Cn, {7, 3, 3}));
  REQUIRE(ap.members.size() == 4);
  Packet p = bv_packet(orb(Family::SoOdd, {7, 3, 3}), GroupCase::Cn);
  int nonzero = 0;
  for (const ArthurPacketMember& mb : ap.members) {
    if (mb.param.zero) continue;
    ++nonzero;
    bool found = false;
    for (const PacketMember& q : p.members)
      found = found || equivalent(mb.param, q.param);
    CHECK(found);
  }
  CHECK(nonzero == 2);

  // One real member and one zero for the principal orbit.
  ArthurPacket pr = arthur_packet(unipotent_psi(GroupCase::Cn, {7}));
  REQUIRE(pr.members.size() == 2);
  CHECK(equivalent(pr.members[0].param,
                   make_param(WeylKind::BC, ints({3, 2, 1}), ints({3, 2, 1}))));
  CHECK(pr.members[1].param.zero);
}

TEST_CASE("arthur packet with gl factor") {
  ArthurParameter psi =
      psi_of(GroupCase::Bn, 3,
             {triv(4), chi(Rational(1, 2), Rational(-1, 2), 1),
              chi(Rational(-1, 2), Rational(1, 2), 1)});
  ArthurPacket ap = arthur_packet(psi);
  REQUIRE(ap.members.size() == 1);
  CHECK(equivalent(ap.members[0].param,
                   make_param(WeylKind::BC, halves({3, 1, 1}),
                              halves({3, 1, -1}))));

  ArthurParameter sing =
      psi_of(GroupCase::Cn, 3,
             {chi(Rational(1), Rational(-1), 2),
              chi(Rational(-1), Rational(1), 2), triv(3)});
  ArthurPacket sp = arthur_packet(sing);
  REQUIRE(sp.members.size() == 2);
  CHECK(sp.members[1].param.zero);
  CHECK(equivalent(sp.members[0].param,
                   make_param(WeylKind::BC,
                              {Gaussian(Rational(3, 2)), Gaussian(Rational(1, 2)),
                               Gaussian(Rational(1))},
                              {Gaussian(Rational(-1, 2)),
                               Gaussian(Rational(-3, 2)), Gaussian(Rational(1))})));
}

TEST_CASE("regular character forces a singleton") {
  ArthurPacket ap = arthur_packet(unipotent_psi(GroupCase::Cn, {7}));
  CHECK(is_regular(infinitesimal_character(unipotent_psi(GroupCase::Cn, {7}))));
  int nonzero = 0;
  for (const ArthurPacketMember& mb : ap.members)
    if (!mb.param.zero) ++nonzero;
  CHECK(nonzero == 1);
}
