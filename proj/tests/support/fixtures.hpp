// The shipped fixture structures and conversions between the test oracles
// and the library types.

#ifndef OSG_TESTS_FIXTURES_HPP_
#define OSG_TESTS_FIXTURES_HPP_

#include <string>  // for string
#include <vector>  // for vector

#include "oracles.hpp"
#include "osg/osg.hpp"

namespace fixtures {

  inline std::string path(std::string const& name) {
    return std::string(OSG_FIXTURE_DIR) + "/" + name + ".osg";
  }

  inline osg::OrderedSemigroup load(std::string const& name) {
    return osg::read_structure(osg::read_file(path(name)));
  }

  inline std::vector<std::string> names() {
    return {"C2", "L2", "R2", "N2", "Z2", "M3"};
  }

  inline osg::OrderedSemigroup trivial() {
    return osg::OrderedSemigroup::validate({{0}}, {{true}});
  }

  inline osg::OrderedSemigroup to_osg(oracle::Structure const& s) {
    return osg::OrderedSemigroup::validate(s.mul, s.leq);
  }

  inline oracle::Structure to_oracle(osg::OrderedSemigroup const& S) {
    return {S.table(), S.order()};
  }

  inline osg::ElementSet to_set(oracle::Subset const& s) {
    osg::ElementSet out;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i]) {
        out.insert(i);
      }
    }
    return out;
  }

  // Every labelled ordered semigroup of order 1..n, from the brute-force
  // filter.
  inline std::vector<osg::OrderedSemigroup> universe(std::size_t n) {
    std::vector<osg::OrderedSemigroup> out;
    for (auto const& s : oracle::universe_up_to(n)) {
      out.push_back(to_osg(s));
    }
    return out;
  }

}  // namespace fixtures

#endif  // OSG_TESTS_FIXTURES_HPP_
