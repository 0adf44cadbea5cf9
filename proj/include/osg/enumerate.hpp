//
// osg - finite ordered semigroups
//
// Exhaustive generation of associative tables, their compatible partial
// orders and hence of all ordered semigroups of a small order, with
// optional reduction modulo isomorphism via a brute-force canonical form.

#ifndef OSG_ENUMERATE_HPP_
#define OSG_ENUMERATE_HPP_

#include <algorithm>      // for next_permutation
#include <cstdint>        // for uint64_t
#include <numeric>        // for iota
#include <string>         // for string
#include <unordered_set>  // for unordered_set
#include <vector>         // for vector

#include "ordered_semigroup.hpp"  // for OrderedSemigroup, relabel

namespace osg {

  //! Largest order the enumerators accept.
  constexpr std::size_t max_enumeration_order = 4;

  //! Restricts table enumeration to the tables whose first row, read as a
  //! base-n number, is congruent to `index` modulo `count`.
  struct TableShard {
    std::size_t index = 0;
    std::size_t count = 1;
  };

  namespace detail {
    inline void check_enumeration_order(std::size_t n) {
      if (n == 0 || n > max_enumeration_order) {
        throw std::invalid_argument(
            "enumeration order must lie in 1.."
            + std::to_string(max_enumeration_order));
      }
    }

    // Backtracking over the cells in row-major order. After each assignment
    // every triple whose four relevant cells are already filled is checked.
    class TableSearch {
     public:
      TableSearch(std::size_t n, TableShard shard)
          : _n(n), _shard(shard), _cells(n * n, unset) {}

      template <typename Func>
      void run(Func&& emit) {
        fill(0, emit);
      }

     private:
      static constexpr std::size_t unset = max_order;

      std::size_t at(std::size_t a, std::size_t b) const {
        return _cells[a * _n + b];
      }

      // Checks every triple whose four cells are filled. Only triples
      // involving the newest cell can fail, but at these orders a full scan
      // costs at most n^3 lookups.
      bool consistent() const {
        for (std::size_t a = 0; a < _n; ++a) {
          for (std::size_t b = 0; b < _n; ++b) {
            std::size_t const ab = at(a, b);
            if (ab == unset) {
              continue;
            }
            for (std::size_t c = 0; c < _n; ++c) {
              std::size_t const bc = at(b, c);
              if (bc == unset) {
                continue;
              }
              std::size_t const lhs = at(ab, c);
              std::size_t const rhs = at(a, bc);
              if (lhs != unset && rhs != unset && lhs != rhs) {
                return false;
              }
            }
          }
        }
        return true;
      }

      template <typename Func>
      void fill(std::size_t pos, Func& emit) {
        if (pos == _n && _shard.count > 1) {
          std::size_t code = 0;
          for (std::size_t b = 0; b < _n; ++b) {
            code = code * _n + at(0, b);
          }
          if (code % _shard.count != _shard.index) {
            return;
          }
        }
        if (pos == _cells.size()) {
          table_type table(_n, std::vector<element_type>(_n));
          for (std::size_t a = 0; a < _n; ++a) {
            for (std::size_t b = 0; b < _n; ++b) {
              table[a][b] = at(a, b);
            }
          }
          emit(table);
          return;
        }
        for (std::size_t v = 0; v < _n; ++v) {
          _cells[pos] = v;
          if (consistent()) {
            fill(pos + 1, emit);
          }
        }
        _cells[pos] = unset;
      }

      std::size_t              _n;
      TableShard               _shard;
      std::vector<std::size_t> _cells;
    };
  }  // namespace detail

  //! Calls emit(table) for every associative n x n table, lexicographically
  //! by row-major content.
  template <typename Func>
  void for_each_mul_table(std::size_t n, Func&& emit, TableShard shard = {}) {
    detail::check_enumeration_order(n);
    detail::TableSearch(n, shard).run(emit);
  }

  inline std::vector<table_type> enumerate_mul_tables(std::size_t n,
                                                      TableShard  shard = {}) {
    std::vector<table_type> result;
    for_each_mul_table(
        n, [&](table_type const& t) { result.push_back(t); }, shard);
    return result;
  }

  //! Every partial order on n elements, ordered by the bit mask of strict
  //! pairs over the off-diagonal positions, so the discrete order is first.
  inline std::vector<relation_type> all_partial_orders(std::size_t n) {
    detail::check_enumeration_order(n);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (a != b) {
          pairs.emplace_back(a, b);
        }
      }
    }
    std::vector<relation_type> result;
    std::vector<std::size_t>   below(n);  // strict down-sets as bit masks
    std::uint64_t const        total = std::uint64_t(1) << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      std::fill(below.begin(), below.end(), 0);
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if ((mask >> i) & 1U) {
          below[pairs[i].second] |= std::size_t(1) << pairs[i].first;
        }
      }
      bool ok = true;
      for (std::size_t b = 0; b < n && ok; ++b) {
        for (std::size_t a = 0; a < n && ok; ++a) {
          if ((below[b] >> a) & 1U) {
            // antisymmetry, and transitivity: below[a] must lie in below[b]
            ok = !((below[a] >> b) & 1U) && (below[a] & ~below[b]) == 0;
          }
        }
      }
      if (ok) {
        relation_type rel = discrete_order(n);
        for (std::size_t b = 0; b < n; ++b) {
          for (std::size_t a = 0; a < n; ++a) {
            if ((below[b] >> a) & 1U) {
              rel[a][b] = true;
            }
          }
        }
        result.push_back(std::move(rel));
      }
    }
    return result;
  }

  //! Whether the partial order is compatible with the table on both sides.
  inline bool is_compatible(table_type const& mul, relation_type const& leq) {
    std::size_t const n = mul.size();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (a == b || !leq[a][b]) {
          continue;
        }
        for (std::size_t x = 0; x < n; ++x) {
          if (!leq[mul[x][a]][mul[x][b]] || !leq[mul[a][x]][mul[b][x]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  //! Every partial order compatible with an associative table, discrete
  //! order first.
  inline std::vector<relation_type>
  enumerate_compatible_orders(table_type const&                 mul,
                              std::vector<relation_type> const& candidates) {
    std::vector<relation_type> result;
    for (auto const& leq : candidates) {
      if (is_compatible(mul, leq)) {
        result.push_back(leq);
      }
    }
    return result;
  }

  inline std::vector<relation_type>
  enumerate_compatible_orders(table_type const& mul) {
    return enumerate_compatible_orders(mul, all_partial_orders(mul.size()));
  }

  //! The lexicographically least (table, order) encoding over all
  //! relabellings, written "n|<table digits>|<order bits>".
  using CanonicalForm = std::string;

  namespace detail {
    inline std::string encode(OrderedSemigroup const&          S,
                              std::vector<element_type> const& perm,
                              std::vector<element_type> const& inverse) {
      std::size_t const n = S.size();
      std::string       out;
      out.reserve(2 * n * n + 4);
      out += std::to_string(n);
      out += '|';
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          out += static_cast<char>(
              '0' + inverse[S.product(perm[i], perm[j])]);
        }
      }
      out += '|';
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          out += S.leq(perm[i], perm[j]) ? '1' : '0';
        }
      }
      return out;
    }
  }  // namespace detail

  inline CanonicalForm canonical_form(OrderedSemigroup const& S) {
    std::size_t const         n = S.size();
    std::vector<element_type> perm(n), inverse(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
      for (std::size_t i = 0; i < n; ++i) {
        inverse[perm[i]] = i;
      }
      std::string code = detail::encode(S, perm, inverse);
      if (best.empty() || code < best) {
        best = std::move(code);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  }

  //! Every ordered semigroup on n elements: all associative tables, each
  //! with all its compatible orders. With `dedup`, only the first member of
  //! each isomorphism class (by canonical form) is kept. Left/right duals
  //! are distinct.
  inline std::vector<OrderedSemigroup>
  enumerate_ordered_semigroups(std::size_t n, bool dedup, TableShard shard = {}) {
    std::vector<OrderedSemigroup>   result;
    std::unordered_set<std::string> seen;
    auto const                      orders = all_partial_orders(n);
    for_each_mul_table(
        n,
        [&](table_type const& mul) {
          for (auto const& leq : orders) {
            if (!is_compatible(mul, leq)) {
              continue;
            }
            auto S = OrderedSemigroup::validate(mul, leq);
            if (dedup && !seen.insert(canonical_form(S)).second) {
              continue;
            }
            result.push_back(std::move(S));
          }
        },
        shard);
    return result;
  }

}  // namespace osg

#endif  // OSG_ENUMERATE_HPP_
