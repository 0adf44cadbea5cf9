//
// osg - finite ordered semigroups
//
// The fundamental structure: a multiplication table on the elements
// {0, ..., n - 1} together with a partial order compatible with
// multiplication on both sides. Instances are only obtainable through
// `OrderedSemigroup::validate` (or operations that provably preserve the
// axioms), and are immutable afterwards.

#ifndef OSG_ORDERED_SEMIGROUP_HPP_
#define OSG_ORDERED_SEMIGROUP_HPP_

#include <algorithm>  // for find, next_permutation
#include <array>      // for array
#include <cstddef>    // for size_t
#include <cstdint>    // for uint8_t
#include <numeric>    // for iota
#include <optional>   // for optional
#include <string>     // for string, to_string
#include <vector>     // for vector

#include "element_set.hpp"  // for ElementSet, element_type
#include "error.hpp"        // for Error, ErrorKind

namespace osg {

  using table_type    = std::vector<std::vector<element_type>>;
  using relation_type = std::vector<std::vector<bool>>;

  enum class Side { Left, Right };

  class OrderedSemigroup;

  namespace detail {
    OrderedSemigroup make_unchecked(table_type const&    mul,
                                    relation_type const& leq);
  }  // namespace detail

  class OrderedSemigroup {
   public:
    //! Checks the three axiom families and returns the structure.
    //!
    //! The relation `leq` is taken as given (no closure is applied); use
    //! `reflexive_transitive_closure` first for terse inputs.
    //!
    //! Throws:
    //! * BadTable if the tables are not n x n with entries in range, or n is
    //!   0 or exceeds `max_order`;
    //! * NotAssociative with witness (a, b, c);
    //! * NotPartialOrder with detail "reflexivity" (witness a),
    //!   "antisymmetry" (witness a, b) or "transitivity" (witness a, b, c);
    //! * NotCompatible with witness (a, b, x), a <= b, and detail "left"
    //!   when x a <= x b fails or "right" when a x <= b x fails.
    static OrderedSemigroup validate(table_type const&    mul,
                                     relation_type const& leq);

    std::size_t size() const noexcept {
      return _n;
    }

    element_type product(element_type a, element_type b) const noexcept {
      return _mul[a * max_order + b];
    }

    bool leq(element_type a, element_type b) const noexcept {
      return _down[b].contains(a);
    }

    //! {t : t <= a}
    ElementSet down(element_type a) const noexcept {
      return _down[a];
    }

    //! {t : a <= t}
    ElementSet up(element_type a) const noexcept {
      return _up[a];
    }

    ElementSet elements() const noexcept {
      return ElementSet::full(_n);
    }

    table_type table() const;
    relation_type order() const;

    //! True when the order is equality.
    bool is_discrete() const noexcept {
      for (element_type a = 0; a < _n; ++a) {
        if (_down[a].size() != 1) {
          return false;
        }
      }
      return true;
    }

    friend bool operator==(OrderedSemigroup const& x,
                           OrderedSemigroup const& y) noexcept {
      return x._n == y._n && x._mul == y._mul && x._down == y._down;
    }

   private:
    friend OrderedSemigroup detail::make_unchecked(table_type const&,
                                                   relation_type const&);

    OrderedSemigroup() = default;

    std::size_t                                     _n = 0;
    std::array<std::uint8_t, max_order * max_order> _mul{};
    std::array<ElementSet, max_order>               _down{};
    std::array<ElementSet, max_order>               _up{};
  };

  namespace detail {
    inline OrderedSemigroup make_unchecked(table_type const&    mul,
                                           relation_type const& leq) {
      OrderedSemigroup S;
      S._n = mul.size();
      for (element_type a = 0; a < S._n; ++a) {
        for (element_type b = 0; b < S._n; ++b) {
          S._mul[a * max_order + b] = static_cast<std::uint8_t>(mul[a][b]);
          if (leq[a][b]) {
            S._down[b].insert(a);
            S._up[a].insert(b);
          }
        }
      }
      return S;
    }

    inline void check_shape(table_type const& mul, relation_type const& leq) {
      std::size_t const n = mul.size();
      if (n == 0 || n > max_order) {
        throw Error(ErrorKind::BadTable,
                    "order must lie in 1.." + std::to_string(max_order)
                        + ", got " + std::to_string(n));
      }
      if (leq.size() != n) {
        throw Error(ErrorKind::BadTable, "order relation is not n x n");
      }
      for (std::size_t a = 0; a < n; ++a) {
        if (mul[a].size() != n || leq[a].size() != n) {
          throw Error(ErrorKind::BadTable,
                      "row " + std::to_string(a) + " has the wrong length",
                      {a});
        }
        for (std::size_t b = 0; b < n; ++b) {
          if (mul[a][b] >= n) {
            throw Error(ErrorKind::BadTable,
                        "product " + std::to_string(a) + "*"
                            + std::to_string(b) + " out of range",
                        {a, b});
          }
        }
      }
    }
  }  // namespace detail

  //! Smallest reflexive and transitive relation containing `rel`.
  inline relation_type reflexive_transitive_closure(relation_type rel) {
    std::size_t const n = rel.size();
    for (std::size_t a = 0; a < n; ++a) {
      rel[a][a] = true;
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t a = 0; a < n; ++a) {
        if (rel[a][k]) {
          for (std::size_t b = 0; b < n; ++b) {
            if (rel[k][b]) {
              rel[a][b] = true;
            }
          }
        }
      }
    }
    return rel;
  }

  //! The discrete (equality) order on n elements.
  inline relation_type discrete_order(std::size_t n) {
    relation_type rel(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a) {
      rel[a][a] = true;
    }
    return rel;
  }

  inline OrderedSemigroup OrderedSemigroup::validate(table_type const& mul,
                                                     relation_type const& leq) {
    detail::check_shape(mul, leq);
    std::size_t const n = mul.size();

    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) {
            throw Error(ErrorKind::NotAssociative,
                        "(" + std::to_string(a) + std::to_string(b) + ")"
                            + std::to_string(c) + " != " + std::to_string(a)
                            + "(" + std::to_string(b) + std::to_string(c)
                            + ")",
                        {a, b, c});
          }
        }
      }
    }

    for (std::size_t a = 0; a < n; ++a) {
      if (!leq[a][a]) {
        throw Error(ErrorKind::NotPartialOrder,
                    "reflexivity fails at " + std::to_string(a),
                    {a},
                    "reflexivity");
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (leq[a][b] && leq[b][a]) {
          throw Error(ErrorKind::NotPartialOrder,
                      "antisymmetry fails: " + std::to_string(a)
                          + " <= " + std::to_string(b) + " <= "
                          + std::to_string(a),
                      {a, b},
                      "antisymmetry");
        }
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (leq[a][b] && leq[b][c] && !leq[a][c]) {
            throw Error(ErrorKind::NotPartialOrder,
                        "transitivity fails: " + std::to_string(a)
                            + " <= " + std::to_string(b) + " <= "
                            + std::to_string(c),
                        {a, b, c},
                        "transitivity");
          }
        }
      }
    }

    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (a == b || !leq[a][b]) {
          continue;
        }
        for (std::size_t x = 0; x < n; ++x) {
          if (!leq[mul[x][a]][mul[x][b]]) {
            throw Error(ErrorKind::NotCompatible,
                        std::to_string(a) + " <= " + std::to_string(b)
                            + " but " + std::to_string(x) + "*"
                            + std::to_string(a) + " = "
                            + std::to_string(mul[x][a]) + " is not <= "
                            + std::to_string(x) + "*" + std::to_string(b)
                            + " = " + std::to_string(mul[x][b]),
                        {a, b, x},
                        "left");
          }
          if (!leq[mul[a][x]][mul[b][x]]) {
            throw Error(ErrorKind::NotCompatible,
                        std::to_string(a) + " <= " + std::to_string(b)
                            + " but " + std::to_string(a) + "*"
                            + std::to_string(x) + " = "
                            + std::to_string(mul[a][x]) + " is not <= "
                            + std::to_string(b) + "*" + std::to_string(x)
                            + " = " + std::to_string(mul[b][x]),
                        {a, b, x},
                        "right");
          }
        }
      }
    }
    return detail::make_unchecked(mul, leq);
  }

  inline table_type OrderedSemigroup::table() const {
    table_type result(_n, std::vector<element_type>(_n));
    for (element_type a = 0; a < _n; ++a) {
      for (element_type b = 0; b < _n; ++b) {
        result[a][b] = product(a, b);
      }
    }
    return result;
  }

  inline relation_type OrderedSemigroup::order() const {
    relation_type result(_n, std::vector<bool>(_n));
    for (element_type a = 0; a < _n; ++a) {
      for (element_type b = 0; b < _n; ++b) {
        result[a][b] = leq(a, b);
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Powers
  ////////////////////////////////////////////////////////////////////////

  //! a^k for k >= 1.
  inline element_type power(OrderedSemigroup const& S,
                            element_type            a,
                            std::size_t             k) {
    if (k == 0) {
      throw std::invalid_argument("power: exponent must be at least 1");
    }
    element_type result = a;
    for (std::size_t i = 1; i < k; ++i) {
      result = S.product(result, a);
    }
    return result;
  }

  //! The power sequence a, a^2, ... enters a cycle at exponent `index` and
  //! repeats with `period`: a^(index + period) = a^index, both minimal.
  struct PowerOrbit {
    element_type element;
    std::size_t  index;
    std::size_t  period;

    //! Every exponent-existence question about a is settled by exponents
    //! 1, ..., span().
    std::size_t span() const noexcept {
      return index + period;
    }
  };

  inline PowerOrbit power_orbit(OrderedSemigroup const& S, element_type a) {
    std::array<std::size_t, max_order> first_seen{};  // 0 = unseen
    element_type                       x = a;
    for (std::size_t k = 1;; ++k) {
      if (first_seen[x] != 0) {
        return {a, first_seen[x], k - first_seen[x]};
      }
      first_seen[x] = k;
      x             = S.product(x, a);
    }
  }

  //! All powers a^1, ..., a^span(), indexed from 1 (entry 0 unused).
  inline std::vector<element_type> powers(OrderedSemigroup const& S,
                                          element_type            a,
                                          std::size_t             count) {
    std::vector<element_type> result(count + 1, a);
    for (std::size_t k = 2; k <= count; ++k) {
      result[k] = S.product(result[k - 1], a);
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Substructures and relabelling
  ////////////////////////////////////////////////////////////////////////

  //! A substructure together with its embedding: element i of `structure`
  //! is element `embedding[i]` of the ambient semigroup.
  struct Substructure {
    OrderedSemigroup          structure;
    std::vector<element_type> embedding;

    //! Maps a set of substructure elements back to ambient elements.
    ElementSet lift(ElementSet local) const {
      ElementSet result;
      for (auto x : local) {
        result.insert(embedding[x]);
      }
      return result;
    }

    //! Maps ambient elements (which must lie in the image) to local ones.
    ElementSet restrict(ElementSet ambient) const {
      ElementSet result;
      for (element_type i = 0; i < embedding.size(); ++i) {
        if (ambient.contains(embedding[i])) {
          result.insert(i);
        }
      }
      return result;
    }
  };

  //! The ordered subsemigroup on A with the induced multiplication and
  //! order, elements renumbered in ascending order.
  //!
  //! Throws NotClosed with witness (a, b) if a b escapes A, and
  //! std::invalid_argument if A is empty.
  inline Substructure induced_subsemigroup(OrderedSemigroup const& S,
                                           ElementSet              A) {
    if (A.empty()) {
      throw std::invalid_argument("induced_subsemigroup: empty subset");
    }
    std::vector<element_type>          embedding = A.to_vector();
    std::array<element_type, max_order> local{};
    for (element_type i = 0; i < embedding.size(); ++i) {
      local[embedding[i]] = i;
    }
    std::size_t const m = embedding.size();
    table_type        mul(m, std::vector<element_type>(m));
    relation_type     leq(m, std::vector<bool>(m));
    for (element_type i = 0; i < m; ++i) {
      for (element_type j = 0; j < m; ++j) {
        element_type ab = S.product(embedding[i], embedding[j]);
        if (!A.contains(ab)) {
          throw Error(ErrorKind::NotClosed,
                      std::to_string(embedding[i]) + "*"
                          + std::to_string(embedding[j]) + " = "
                          + std::to_string(ab) + " lies outside "
                          + to_string(A),
                      {embedding[i], embedding[j]});
        }
        mul[i][j] = local[ab];
        leq[i][j] = S.leq(embedding[i], embedding[j]);
      }
    }
    return {detail::make_unchecked(mul, leq), std::move(embedding)};
  }

  //! Whether A is closed under multiplication.
  inline bool is_subsemigroup(OrderedSemigroup const& S, ElementSet A) {
    for (auto a : A) {
      for (auto b : A) {
        if (!A.contains(S.product(a, b))) {
          return false;
        }
      }
    }
    return !A.empty();
  }

  //! The isomorphic copy T of S in which element i of T is element perm[i]
  //! of S.
  inline OrderedSemigroup relabel(OrderedSemigroup const&          S,
                                  std::vector<element_type> const& perm) {
    std::size_t const         n = S.size();
    std::vector<element_type> inverse(n);
    for (element_type i = 0; i < n; ++i) {
      inverse[perm[i]] = i;
    }
    table_type    mul(n, std::vector<element_type>(n));
    relation_type leq(n, std::vector<bool>(n));
    for (element_type i = 0; i < n; ++i) {
      for (element_type j = 0; j < n; ++j) {
        mul[i][j] = inverse[S.product(perm[i], perm[j])];
        leq[i][j] = S.leq(perm[i], perm[j]);
      }
    }
    return detail::make_unchecked(mul, leq);
  }

  //! Checks whether `phi` (element a of S maps to phi[a] of T) preserves
  //! multiplication and order in both directions.
  inline bool is_isomorphism(OrderedSemigroup const&          S,
                             OrderedSemigroup const&          T,
                             std::vector<element_type> const& phi) {
    if (S.size() != T.size() || phi.size() != S.size()) {
      return false;
    }
    for (element_type a = 0; a < S.size(); ++a) {
      for (element_type b = 0; b < S.size(); ++b) {
        if (phi[S.product(a, b)] != T.product(phi[a], phi[b])
            || S.leq(a, b) != T.leq(phi[a], phi[b])) {
          return false;
        }
      }
    }
    return true;
  }

  //! Returns an isomorphism S -> T (phi[a] is the image of a) if one exists.
  inline std::optional<std::vector<element_type>>
  are_isomorphic(OrderedSemigroup const& S, OrderedSemigroup const& T) {
    if (S.size() != T.size()) {
      return std::nullopt;
    }
    std::vector<element_type> phi(S.size());
    std::iota(phi.begin(), phi.end(), 0);
    do {
      if (is_isomorphism(S, T, phi)) {
        return phi;
      }
    } while (std::next_permutation(phi.begin(), phi.end()));
    return std::nullopt;
  }

}  // namespace osg

#endif  // OSG_ORDERED_SEMIGROUP_HPP_
