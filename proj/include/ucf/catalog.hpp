#pragma once

#include <string>
#include <vector>

#include "ucf/group.hpp"

namespace ucf {

struct CatalogEntry {
  std::string name;
  GroupPtr group;
};

// Fixed roster of small groups (orders up to 200) used by the test suites:
// cyclic, abelian products, dihedral, the classic order-24-and-below
// nonabelian groups, two Frobenius groups, a few direct products, and the
// small nonsolvable groups.  Built once and cached.
const std::vector<CatalogEntry>& catalog();

// Catalog entries with solvable groups only.
std::vector<CatalogEntry> solvable_catalog();

}  // namespace ucf
