#include <set>     // for set
#include <vector>  // for vector

#include "catch_amalgamated.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace osg {

  namespace {
    std::vector<std::size_t> labels_of(Partition const& p) {
      std::vector<std::size_t> out(p.size());
      for (element_type a = 0; a < p.size(); ++a) {
        out[a] = p.class_of(a);
      }
      return out;
    }
  }  // namespace

  TEST_CASE("for_each_partition", "[congruences][quick]") {
    // Bell numbers, each partition once, universal first and identity last
    std::size_t const bell[] = {0, 1, 2, 5, 15, 52, 203};
    for (std::size_t n = 1; n <= 6; ++n) {
      std::set<std::vector<std::size_t>> seen;
      std::vector<std::vector<std::size_t>> order;
      for_each_partition(n, [&](std::vector<std::size_t> const& l) {
        seen.insert(l);
        order.push_back(l);
      });
      REQUIRE(seen.size() == bell[n]);
      REQUIRE(order.size() == bell[n]);
      REQUIRE(order.front() == std::vector<std::size_t>(n, 0));
      REQUIRE(Partition(order.back()) == Partition::identity(n));
    }
    REQUIRE(oracle::all_partitions(4).size() == 15);
  }

  TEST_CASE("congruences: fixtures", "[congruences][quick]") {
    auto T  = fixtures::trivial();
    auto Z2 = fixtures::load("Z2");
    auto C2 = fixtures::load("C2");
    auto N2 = fixtures::load("N2");

    REQUIRE(enumerate_congruences(T).size() == 1);
    for (auto const& S : {Z2, C2}) {
      auto all = enumerate_congruences(S);
      REQUIRE(all.size() == 2);
      REQUIRE(all[0].partition == Partition::universal(2));
      REQUIRE(all[1].partition == Partition::identity(2));
    }

    REQUIRE(is_semilattice_congruence(C2, Partition::identity(2)));
    REQUIRE(!is_semilattice_congruence(Z2, Partition::identity(2)));
    REQUIRE(is_complete_congruence(C2, Partition::identity(2)));
    for (auto const& S : {Z2, C2, N2, fixtures::load("M3")}) {
      REQUIRE(is_semilattice_congruence(S, Partition::universal(S.size())));
      REQUIRE(is_complete_congruence(S, Partition::universal(S.size())));
    }

    // on N2 the identity relates 1 only to itself but 1^2 = 0, so it is not
    // a semilattice congruence and completeness is undefined
    try {
      is_complete_congruence(N2, Partition::identity(2));
      FAIL("expected NotSemilattice");
    } catch (Error const& e) {
      REQUIRE(e.kind() == ErrorKind::NotSemilattice);
    }

    auto M3 = fixtures::load("M3");
    try {
      // {0,1} | {2}: 0 ~ 1 but 0*0 = 1 and 1*0 = 2 are apart
      make_congruence(M3, Partition(std::vector<std::size_t>{0, 0, 1}));
      FAIL("expected NotACongruence");
    } catch (Error const& e) {
      REQUIRE(e.kind() == ErrorKind::NotACongruence);
    }
  }

  TEST_CASE("finest complete semilattice congruence: fixtures",
            "[congruences][quick]") {
    REQUIRE(finest_complete_semilattice_congruence(fixtures::load("C2")).partition
            == Partition::identity(2));
    REQUIRE(finest_complete_semilattice_congruence(fixtures::load("M3")).partition
            == Partition::universal(3));
    REQUIRE(finest_complete_semilattice_congruence(fixtures::load("Z2")).partition
            == Partition::universal(2));
  }

  TEST_CASE("family conditions: fixtures", "[congruences][quick]") {
    auto C2 = fixtures::load("C2");
    auto f  = check_family_conditions(C2, Partition::identity(2));
    REQUIRE(f.holds);
    REQUIRE(f.index_semilattice.size() == 2);
    REQUIRE(are_isomorphic(f.index_semilattice, C2));

    auto M3 = fixtures::load("M3");
    f       = check_family_conditions(M3, Partition::universal(3));
    REQUIRE(f.holds);
    REQUIRE(f.index_semilattice.size() == 1);

    REQUIRE_THROWS_AS(
        check_family_conditions(fixtures::load("Z2"), Partition::identity(2)),
        Error);
  }

  TEST_CASE("decomposition_check: fixtures", "[congruences][quick]") {
    using K   = ClassType::Kind;
    auto type = ClassType::nil_extension_of({{K::Simple}, {K::Regular}});

    auto d = decomposition_check(fixtures::load("M3"), type);
    REQUIRE(d);
    REQUIRE(d->congruence.partition == Partition::universal(3));
    REQUIRE(d->kernels == std::vector<ElementSet>{{2}});

    d = decomposition_check(fixtures::load("C2"), type);
    REQUIRE(d);
    REQUIRE(d->congruence.partition == Partition::identity(2));

    REQUIRE(!decomposition_check(fixtures::load("R2"), {K::LeftSimple}));
    REQUIRE(decomposition_check(fixtures::load("L2"), {K::LeftSimple}));
  }

  TEST_CASE("congruences agree with brute force at order <= 3",
            "[congruences][property]") {
    for (auto const& s : oracle::universe_up_to(3)) {
      auto S = fixtures::to_osg(s);
      std::set<std::vector<std::size_t>> expected, expected_csl, found, found_csl;
      for (auto const& p : oracle::all_partitions(S.size())) {
        if (oracle::congruence(s, p)) {
          expected.insert(p);
        }
        if (oracle::complete_semilattice(s, p)) {
          expected_csl.insert(p);
        }
      }
      for (auto const& c : enumerate_congruences(S)) {
        found.insert(labels_of(c.partition));
      }
      auto const csl = complete_semilattice_congruences(S);
      for (auto const& c : csl) {
        found_csl.insert(labels_of(c.partition));
      }
      REQUIRE(found == expected);
      REQUIRE(found_csl == expected_csl);
      REQUIRE(!csl.empty());  // the universal relation always qualifies

      // the finest one refines every other and satisfies the family
      // conditions, as does every complete semilattice congruence
      auto finest = finest_complete_semilattice_congruence(S);
      for (auto const& c : csl) {
        REQUIRE(finest.partition.refines(c.partition));
        auto f = check_family_conditions(S, c.partition);
        INFO(f.violation);
        REQUIRE(f.holds);
        // Y is a semilattice
        auto const& Y = f.index_semilattice;
        for (element_type x = 0; x < Y.size(); ++x) {
          REQUIRE(Y.product(x, x) == x);
          for (element_type y = 0; y < Y.size(); ++y) {
            REQUIRE(Y.product(x, y) == Y.product(y, x));
          }
        }
      }
      REQUIRE(decomposition_candidates(S).front().partition == finest.partition);
    }
  }

  TEST_CASE("class types on whole structures", "[congruences][property]") {
    using K = ClassType::Kind;
    for (auto const& S : fixtures::universe(3)) {
      // left group like is left simple
      REQUIRE(holds({K::LeftGroupLike}, S) == holds({K::LeftSimple}, S));
      REQUIRE(holds({K::Simple}, S) == is_simple(S, Sidedness::TwoSided));
      if (holds({K::CompletelyRegular}, S)) {
        REQUIRE(holds({K::Regular}, S));
        REQUIRE(holds({K::RightRegular}, S));
      }
      // a nil extension of T is found exactly when some ideal works
      auto type = ClassType::nil_extension_of({{K::Simple}});
      bool expected = false;
      for (auto const& I : all_ideals(S, Sidedness::TwoSided)) {
        expected = expected
                   || (is_nil_extension(S, I)
                       && is_simple(induced_subsemigroup(S, I).structure,
                                    Sidedness::TwoSided));
      }
      REQUIRE(holds(type, S) == expected);
    }
  }

}  // namespace osg
