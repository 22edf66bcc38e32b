#pragma once

#include <string>
#include <string_view>

#include "caplab/domains.hpp"

namespace caplab {

// Domain literals:
//   E(a,b)  P(a,b)  sum(E(a,b),E(c,d))  prod(<domain>,m,R)
// with rationals written p or p/q. Whitespace between tokens is ignored.

DomainSpec parse_domain(std::string_view text);
std::string format_domain(const DomainSpec& domain);
std::string format_ellipsoid(const Ellipsoid& e);

}  // namespace caplab
