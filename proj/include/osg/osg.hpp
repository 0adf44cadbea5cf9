//
// osg - finite ordered semigroups
//
// Includes the whole library.

#ifndef OSG_OSG_HPP_
#define OSG_OSG_HPP_

#include "congruences.hpp"
#include "element_classes.hpp"
#include "element_set.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "green.hpp"
#include "ideals.hpp"
#include "io.hpp"
#include "ordered_semigroup.hpp"
#include "quotients.hpp"
#include "sweep.hpp"
#include "theorems.hpp"

#endif  // OSG_OSG_HPP_
