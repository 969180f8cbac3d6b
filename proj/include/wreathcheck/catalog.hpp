#pragma once

#include <string>
#include <vector>

#include "wreathcheck/group.hpp"

namespace wreathcheck {

/**
 * Named groups built from fixed generators:
 *   Cn     n-cycle (0 1 ... n-1)
 *   D2m    dihedral of order 2m: rotation i -> i+1 and reflection i -> -i mod m
 *   Sn     (0 1) and the n-cycle
 *   An     3-cycles (0 1 k), k = 2..n-1
 *   Q8     quaternion units {±1, ±i, ±j, ±k}
 *   SL(2,3) left multiplication by [[1,1],[0,1]] and [[0,-1],[1,0]] on the
 *          24 matrices of determinant 1, listed lexicographically by (a,b,c,d)
 * Throws UnknownGroup for anything else.
 */
GroupPtr catalog(const std::string& name, std::size_t order_limit = kDefaultOrderLimit);

/// Names accepted by catalog() that the test suites iterate over.
std::vector<std::string> small_catalog_names();

}  // namespace wreathcheck
