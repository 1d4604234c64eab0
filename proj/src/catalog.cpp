#include "ucf/catalog.hpp"

#include "ucf/builders.hpp"

namespace ucf {

namespace {

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  auto add = [&](const std::string& name) { out.push_back({name, named_group(name)}); };
  auto add_group = [&](const std::string& name, GroupPtr g) {
    out.push_back({name, std::move(g)});
  };

  for (std::uint32_t n : {2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 16, 20, 24, 30, 36, 60})
    add("C" + std::to_string(n));

  add("C2xC2");
  add("C2xC4");
  add("C2xC2xC2");
  add("C2xC6");
  add("C3xC3");
  add("C4xC4");
  add("C6xC6");
  add("C3xC9");
  add("C2xC2xC2xC2");

  for (std::uint32_t order : {6, 8, 10, 12, 14, 16, 20, 24})
    add("D" + std::to_string(order));

  add("Q8");
  add("S3");
  add("S4");
  add("A4");
  add("A4xC2");
  add("S3xC3");
  add("S3xS3");
  add("D8xC2");
  add("Q8xC3");
  add("S4xC2");
  add("A4xC4");
  add("S4xS3");

  // Frobenius groups: C5:C4 of order 20 and C7:C3 of order 21.
  add_group("F20", make_group(5,
                              {parse_cycles("(1,2,3,4,5)", 5),
                               parse_cycles("(2,3,5,4)", 5)},
                              "F20"));
  add_group("F21", make_group(7,
                              {parse_cycles("(1,2,3,4,5,6,7)", 7),
                               parse_cycles("(2,3,5)(4,7,6)", 7)},
                              "F21"));

  add("A5");
  add("S5");
  add("A5xC2");
  add("A5xC3");
  add("PSL(2,7)");
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

std::vector<CatalogEntry> solvable_catalog() {
  std::vector<CatalogEntry> out;
  for (const auto& entry : catalog())
    if (is_solvable(entry.group)) out.push_back(entry);
  return out;
}

}  // namespace ucf
