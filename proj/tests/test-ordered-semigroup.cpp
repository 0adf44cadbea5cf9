#include <set>     // for set
#include <vector>  // for vector

#include "catch_amalgamated.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace osg {

  namespace {
    template <typename Func>
    Error error_of(Func&& f) {
      try {
        f();
      } catch (Error const& e) {
        return e;
      }
      FAIL("no osg::Error thrown");
      return Error(ErrorKind::Parse, "unreachable");
    }
  }  // namespace

  TEST_CASE("validate: fixtures", "[core][quick]") {
    auto C2 = fixtures::load("C2");
    REQUIRE(C2.size() == 2);
    REQUIRE(C2.leq(0, 1));
    REQUIRE(!C2.leq(1, 0));
    REQUIRE(C2.product(1, 1) == 1);

    auto T = fixtures::trivial();
    REQUIRE(T.size() == 1);
    REQUIRE(T.is_discrete());
  }

  TEST_CASE("validate: violations name their witnesses", "[core][quick]") {
    SECTION("Z2 with 0 <= 1 is not compatible") {
      auto e = error_of([] {
        OrderedSemigroup::validate({{0, 1}, {1, 0}},
                                   {{true, true}, {false, true}});
      });
      REQUIRE(e.kind() == ErrorKind::NotCompatible);
      REQUIRE(e.witness() == std::vector<std::size_t>({0, 1, 1}));
      REQUIRE(e.detail() == "left");
    }
    SECTION("non-associative table") {
      // 0*0 = 1 and every other product is 0: (00)1 = 0 but 0(01) = 1
      auto e = error_of([] {
        OrderedSemigroup::validate({{1, 0}, {0, 0}}, discrete_order(2));
      });
      REQUIRE(e.kind() == ErrorKind::NotAssociative);
      auto const& w = e.witness();
      REQUIRE(w.size() == 3);
      table_type m{{1, 0}, {0, 0}};
      REQUIRE(m[m[w[0]][w[1]]][w[2]] != m[w[0]][m[w[1]][w[2]]]);
    }
    SECTION("partial order axioms") {
      table_type zero{{0, 0}, {0, 0}};
      auto       e = error_of([&] {
        OrderedSemigroup::validate(zero, {{false, false}, {false, true}});
      });
      REQUIRE(e.kind() == ErrorKind::NotPartialOrder);
      REQUIRE(e.detail() == "reflexivity");
      e = error_of([&] {
        OrderedSemigroup::validate(zero, {{true, true}, {true, true}});
      });
      REQUIRE(e.detail() == "antisymmetry");
      table_type zero3(3, std::vector<element_type>(3, 0));
      e = error_of([&] {
        OrderedSemigroup::validate(
            zero3, {{true, true, false}, {false, true, true}, {false, false, true}});
      });
      REQUIRE(e.detail() == "transitivity");
    }
    SECTION("shape") {
      auto e = error_of([] {
        OrderedSemigroup::validate({{0, 2}, {0, 0}}, discrete_order(2));
      });
      REQUIRE(e.kind() == ErrorKind::BadTable);
    }
  }

  TEST_CASE("validate: agrees with the brute-force filter at order 2",
            "[core][quick]") {
    std::size_t accepted = 0;
    std::size_t expected = 0;
    for (auto const& t : oracle::all_tables(2)) {
      for (auto const& r : oracle::partial_orders(2)) {
        bool oracle_ok = oracle::associative(t) && oracle::compatible(t, r);
        bool ok        = true;
        try {
          OrderedSemigroup::validate(t, r);
        } catch (Error const&) {
          ok = false;
        }
        REQUIRE(ok == oracle_ok);
        accepted += ok;
        expected += oracle_ok;
      }
    }
    REQUIRE(accepted == expected);
    REQUIRE(expected == 20);
  }

  TEST_CASE("power and power_orbit", "[core][quick]") {
    auto M3 = fixtures::load("M3");
    auto N2 = fixtures::load("N2");
    auto Z2 = fixtures::load("Z2");
    REQUIRE(power(M3, 0, 5) == 2);
    REQUIRE(power(M3, 1, 1) == 1);
    REQUIRE(power(N2, 1, 2) == 0);
    REQUIRE_THROWS_AS(power(M3, 0, 0), std::invalid_argument);

    auto o = power_orbit(M3, 0);
    REQUIRE(o.index == 3);
    REQUIRE(o.period == 1);
    o = power_orbit(Z2, 1);
    REQUIRE(o.index == 1);
    REQUIRE(o.period == 2);
    o = power_orbit(fixtures::load("C2"), 1);
    REQUIRE(o.index == 1);
    REQUIRE(o.period == 1);
  }

  TEST_CASE("power_orbit: periodicity on every structure of order <= 3",
            "[core][property]") {
    for (auto const& s : oracle::universe_up_to(3)) {
      auto S = fixtures::to_osg(s);
      for (element_type a = 0; a < S.size(); ++a) {
        auto o = power_orbit(S, a);
        REQUIRE(o.index >= 1);
        REQUIRE(o.period >= 1);
        REQUIRE(o.index + o.period <= S.size() + 1);
        REQUIRE(power(S, a, o.index + o.period) == power(S, a, o.index));
        for (std::size_t j = o.index; j < o.index + 3 * o.period; ++j) {
          REQUIRE(power(S, a, j) == power(S, a, j + o.period));
          REQUIRE(power(S, a, j) == oracle::power(s, a, j));
        }
        // minimality
        for (std::size_t i = 1; i < o.index; ++i) {
          for (std::size_t p = 1; p <= S.size(); ++p) {
            REQUIRE(oracle::power(s, a, i) != oracle::power(s, a, i + p));
          }
        }
        for (std::size_t p = 1; p < o.period; ++p) {
          REQUIRE(oracle::power(s, a, o.index)
                  != oracle::power(s, a, o.index + p));
        }
      }
    }
  }

  TEST_CASE("induced_subsemigroup", "[core][quick]") {
    auto M3 = fixtures::load("M3");
    auto sub = induced_subsemigroup(M3, {2});
    REQUIRE(sub.structure.size() == 1);
    REQUIRE(sub.lift({0}) == ElementSet{2});

    auto C2 = fixtures::load("C2");
    REQUIRE(induced_subsemigroup(C2, {0, 1}).structure == C2);

    try {
      induced_subsemigroup(M3, {0, 2});
      FAIL("expected NotClosed");
    } catch (Error const& e) {
      REQUIRE(e.kind() == ErrorKind::NotClosed);
      REQUIRE(e.witness() == std::vector<std::size_t>({0, 0}));
    }
    REQUIRE_THROWS_AS(induced_subsemigroup(M3, {}), std::invalid_argument);
  }

  TEST_CASE("induced_subsemigroup: every closed subset validates",
            "[core][property]") {
    for (auto const& s : oracle::universe_up_to(3)) {
      auto S = fixtures::to_osg(s);
      for (auto const& A : oracle::nonempty_subsets(S.size())) {
        auto set = fixtures::to_set(A);
        if (!is_subsemigroup(S, set)) {
          REQUIRE_THROWS_AS(induced_subsemigroup(S, set), Error);
          continue;
        }
        auto sub = induced_subsemigroup(S, set);
        auto T   = sub.structure;
        REQUIRE_NOTHROW(OrderedSemigroup::validate(T.table(), T.order()));
        for (element_type x = 0; x < T.size(); ++x) {
          for (element_type y = 0; y < T.size(); ++y) {
            REQUIRE(sub.embedding[T.product(x, y)]
                    == S.product(sub.embedding[x], sub.embedding[y]));
            REQUIRE(T.leq(x, y) == S.leq(sub.embedding[x], sub.embedding[y]));
          }
        }
      }
    }
  }

  TEST_CASE("are_isomorphic", "[core][quick]") {
    auto L2 = fixtures::load("L2");
    auto R2 = fixtures::load("R2");
    REQUIRE(!are_isomorphic(L2, R2));
    auto id = are_isomorphic(L2, L2);
    REQUIRE(id);
    REQUIRE(*id == std::vector<element_type>({0, 1}));

    auto zero0 = OrderedSemigroup::validate({{0, 0}, {0, 0}}, discrete_order(2));
    auto zero1 = OrderedSemigroup::validate({{1, 1}, {1, 1}}, discrete_order(2));
    auto swap  = are_isomorphic(zero0, zero1);
    REQUIRE(swap);
    REQUIRE(*swap == std::vector<element_type>({1, 0}));
    REQUIRE(is_isomorphism(zero0, zero1, *swap));
  }

  TEST_CASE("are_isomorphic: an equivalence relation matching brute force",
            "[core][property]") {
    auto const all = oracle::universe(2);
    for (auto const& s : all) {
      auto S = fixtures::to_osg(s);
      REQUIRE(are_isomorphic(S, S));
      for (auto const& t : all) {
        auto T = fixtures::to_osg(t);
        bool iso = are_isomorphic(S, T).has_value();
        REQUIRE(iso == oracle::isomorphic(s, t));
        REQUIRE(iso == are_isomorphic(T, S).has_value());
        if (!iso) {
          continue;
        }
        for (auto const& u : all) {
          auto U = fixtures::to_osg(u);
          if (are_isomorphic(T, U)) {
            REQUIRE(are_isomorphic(S, U));
          }
        }
      }
    }
  }

  TEST_CASE("relabel produces isomorphic copies", "[core][property]") {
    auto M3 = fixtures::load("M3");
    std::vector<element_type> perm{2, 0, 1};
    auto T = relabel(M3, perm);
    REQUIRE(are_isomorphic(M3, T));
    REQUIRE(T.product(1, 1) == 2);  // element 1 of T is element 0 of M3
  }

  TEST_CASE("ElementSet", "[core][quick]") {
    ElementSet A{0, 2};
    REQUIRE(A.size() == 2);
    REQUIRE(A.contains(2));
    REQUIRE(!A.contains(1));
    REQUIRE(A.min() == 0);
    REQUIRE(to_string(A) == "{0,2}");
    REQUIRE(to_string(ElementSet{}) == "{}");
    REQUIRE((A | ElementSet{1}) == ElementSet::full(3));
    REQUIRE((A & ElementSet{2, 3}) == ElementSet{2});
    REQUIRE((A - ElementSet{0}) == ElementSet{2});
    REQUIRE(A.to_vector() == std::vector<element_type>({0, 2}));
    REQUIRE(to_string(std::vector<ElementSet>{{0}, {1, 2}}) == "[{0}, {1,2}]");
  }

}  // namespace osg
