//
// osg - finite ordered semigroups
//

#ifndef OSG_ELEMENT_SET_HPP_
#define OSG_ELEMENT_SET_HPP_

#include <bit>               // for popcount, countr_zero
#include <cstddef>           // for size_t
#include <cstdint>           // for uint32_t
#include <initializer_list>  // for initializer_list
#include <iterator>          // for forward_iterator_tag
#include <string>            // for string
#include <vector>            // for vector

namespace osg {

  //! Largest supported number of elements.
  constexpr std::size_t max_order = 8;

  using element_type = std::size_t;

  //! A subset of the elements {0, ..., n - 1} of some ordered semigroup,
  //! stored as a bit mask. Comparison is by mask value, which is the
  //! deterministic "ascending" order used wherever sets are listed.
  class ElementSet {
   public:
    using bits_type = std::uint32_t;

    class const_iterator {
     public:
      using iterator_category = std::forward_iterator_tag;
      using value_type        = element_type;
      using difference_type   = std::ptrdiff_t;
      using pointer           = element_type const*;
      using reference         = element_type;

      constexpr const_iterator() noexcept = default;
      constexpr explicit const_iterator(bits_type rest) noexcept
          : _rest(rest) {}

      constexpr element_type operator*() const noexcept {
        return static_cast<element_type>(std::countr_zero(_rest));
      }

      constexpr const_iterator& operator++() noexcept {
        _rest &= _rest - 1;
        return *this;
      }

      constexpr const_iterator operator++(int) noexcept {
        auto copy = *this;
        ++*this;
        return copy;
      }

      constexpr bool operator==(const_iterator const&) const noexcept
          = default;

     private:
      bits_type _rest = 0;
    };

    constexpr ElementSet() noexcept = default;

    ElementSet(std::initializer_list<element_type> xs) noexcept {
      for (auto x : xs) {
        insert(x);
      }
    }

    static constexpr ElementSet from_bits(bits_type bits) noexcept {
      ElementSet result;
      result._bits = bits;
      return result;
    }

    static constexpr ElementSet singleton(element_type x) noexcept {
      return from_bits(bits_type(1) << x);
    }

    //! The set {0, ..., n - 1}.
    static constexpr ElementSet full(std::size_t n) noexcept {
      return from_bits(n >= 32 ? ~bits_type(0) : (bits_type(1) << n) - 1);
    }

    constexpr bits_type bits() const noexcept {
      return _bits;
    }

    constexpr bool contains(element_type x) const noexcept {
      return (_bits >> x) & 1U;
    }

    constexpr void insert(element_type x) noexcept {
      _bits |= bits_type(1) << x;
    }

    constexpr void erase(element_type x) noexcept {
      _bits &= ~(bits_type(1) << x);
    }

    constexpr std::size_t size() const noexcept {
      return static_cast<std::size_t>(std::popcount(_bits));
    }

    constexpr bool empty() const noexcept {
      return _bits == 0;
    }

    //! Smallest member; the set must be nonempty.
    constexpr element_type min() const noexcept {
      return static_cast<element_type>(std::countr_zero(_bits));
    }

    constexpr bool is_subset_of(ElementSet other) const noexcept {
      return (_bits & ~other._bits) == 0;
    }

    constexpr bool intersects(ElementSet other) const noexcept {
      return (_bits & other._bits) != 0;
    }

    constexpr const_iterator begin() const noexcept {
      return const_iterator(_bits);
    }

    constexpr const_iterator end() const noexcept {
      return const_iterator(0);
    }

    std::vector<element_type> to_vector() const {
      return {begin(), end()};
    }

    constexpr ElementSet& operator|=(ElementSet other) noexcept {
      _bits |= other._bits;
      return *this;
    }

    constexpr ElementSet& operator&=(ElementSet other) noexcept {
      _bits &= other._bits;
      return *this;
    }

    constexpr ElementSet& operator-=(ElementSet other) noexcept {
      _bits &= ~other._bits;
      return *this;
    }

    friend constexpr ElementSet operator|(ElementSet x, ElementSet y) noexcept {
      return x |= y;
    }

    friend constexpr ElementSet operator&(ElementSet x, ElementSet y) noexcept {
      return x &= y;
    }

    friend constexpr ElementSet operator-(ElementSet x, ElementSet y) noexcept {
      return x -= y;
    }

    friend constexpr bool operator==(ElementSet, ElementSet) noexcept
        = default;
    friend constexpr auto operator<=>(ElementSet, ElementSet) noexcept
        = default;

   private:
    bits_type _bits = 0;
  };

  //! Formats as "{0,2,3}".
  inline std::string to_string(ElementSet set) {
    std::string out = "{";
    bool        first = true;
    for (auto x : set) {
      if (!first) {
        out += ',';
      }
      out += std::to_string(x);
      first = false;
    }
    out += '}';
    return out;
  }

  //! Formats as "[{0}, {1,2}]".
  inline std::string to_string(std::vector<ElementSet> const& sets) {
    std::string out = "[";
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (i != 0) {
        out += ", ";
      }
      out += to_string(sets[i]);
    }
    out += ']';
    return out;
  }

}  // namespace osg

#endif  // OSG_ELEMENT_SET_HPP_
