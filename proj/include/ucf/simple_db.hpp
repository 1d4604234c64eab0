#pragma once

#include <map>
#include <optional>
#include <string>

#include "ucf/certificate.hpp"

namespace ucf {

// Group order plus element-order histogram, e.g. "60|1:1,2:15,3:20,5:24".
// Groups with different fingerprints cannot be isomorphic; at the scale of
// this library the fingerprint is treated as an identifying key.
std::string group_fingerprint(const PermGroup& g);

// Verified factorization certificates for simple groups, keyed by
// fingerprint.  A lookup transplants an entry onto a concrete group by
// padding the stored generators with fixed points, so the target must
// literally contain the padded factors.
class SimpleFactorizationDB {
public:
  // Re-checks the certificate, then stores it under its group fingerprint.
  void add(const Certificate& cert);

  static SimpleFactorizationDB load(const std::string& path);
  void save(const std::string& path) const;

  bool contains_fingerprint(const std::string& fingerprint) const;
  std::size_t size() const { return entries_.size(); }

  // Factorization of g transplanted from the entry matching g's
  // fingerprint, re-verified on g; nullopt when no entry matches.  Throws
  // DbError when an entry matches but does not embed into g.
  std::optional<Factorization> lookup(const GroupPtr& g) const;

private:
  std::map<std::string, Certificate> entries_;
};

// Entries shipped with the library: the alternating groups on five and six
// points and the simple group of order 168.
const SimpleFactorizationDB& builtin_simple_db();

// Cyclic factorization of an arbitrary group by structural reduction:
// coprime splitting for cyclic groups, database lookup for simple groups
// (with non-cyclic entry factors refined recursively), and otherwise
// descent through a largest maximal normal subgroup — factor the quotient,
// lift its generators, and recurse on the subgroup.  Every produced factor
// is cyclic; the multiplicity can exceed 1.
Factorization simple_reduction_ucf(GroupPtr g, const SimpleFactorizationDB& db);

// Same, using the built-in database.
Factorization simple_reduction_ucf(GroupPtr g);

}  // namespace ucf
