#include <cstdio>
#include <filesystem>
#include <string>

#include "ucf/builders.hpp"
#include "ucf/certificate.hpp"
#include "ucf/factor.hpp"
#include "ucf/simple_db.hpp"

// Regenerates the repository's data/ directory: the built-in simple-group
// database and the bundled example certificates.  Deterministic, so the
// committed files can always be reproduced bit-for-bit.
using namespace ucf;

namespace {

Certificate textbook_s5(int which) {
  GroupPtr g = symmetric_group(5);
  FactorTuple tuple;
  tuple.parent = g;
  std::vector<std::vector<const char*>> texts;
  std::uint64_t t = 1;
  if (which == 1) {
    texts = {{"(1,2)"}, {"(1,2,3)"}, {"(1,2,3,4)"}, {"(1,2,3,4,5)"}};
  } else if (which == 2) {
    texts = {{"(1,2,3,4,5)"}, {"(1,2,4,3)"}, {"(1,2,3)(4,5)"}};
  } else {
    texts = {{"(1,2,3,4,5)"}, {"(1,2,3,4)"}, {"(1,3,2,4)"}, {"(1,2,3)"}};
    t = 2;
  }
  for (const auto& gens : texts) {
    tuple.factors.push_back(cyclic_factor(g, parse_cycles(gens[0], 5)));
  }
  return make_certificate(Factorization{tuple, t, "textbook", false, false});
}

// C4 split into the subsets {1, s} and {1, s^2}: exact and minimal, but the
// first part is not a subgroup.
Certificate c4_subsets() {
  GroupPtr g = cyclic_group(4);
  Perm s = parse_cycles("(1,2,3,4)", 4);
  FactorTuple tuple;
  tuple.parent = g;
  tuple.factors.push_back(subset_factor({Perm::identity(4), s}));
  tuple.factors.push_back(subset_factor({Perm::identity(4), s.pow(2)}));
  return make_certificate(Factorization{tuple, 1, "textbook", false, false});
}

}  // namespace

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "data";
  std::filesystem::create_directories(dir + "/certs");

  builtin_simple_db().save(dir + "/simple_db.json");
  std::printf("wrote %s/simple_db.json (%zu entries)\n", dir.c_str(),
              builtin_simple_db().size());

  save_certificate(textbook_s5(1), dir + "/certs/s5_h1.json");
  save_certificate(textbook_s5(2), dir + "/certs/s5_h2.json");
  save_certificate(textbook_s5(3), dir + "/certs/s5_h3.json");
  save_certificate(c4_subsets(), dir + "/certs/c4_subsets.json");
  std::printf("wrote %s/certs/{s5_h1,s5_h2,s5_h3,c4_subsets}.json\n", dir.c_str());
  return 0;
}
