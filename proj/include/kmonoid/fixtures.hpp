#ifndef KMONOID_FIXTURES_HPP_
#define KMONOID_FIXTURES_HPP_

#include <string>
#include <vector>

namespace kmonoid {

struct FixtureFile {
  std::string name;      // suggested filename
  std::string contents;  // byte-stable across runs
};

/// Known names: prod22, counterexample3, counterexample3-repaired,
/// adding-machine, rsv, nk<k> (e.g. nk3). Throws DomainError on anything
/// else. The rsv fixture cross-checks its derived tables before returning.
std::vector<FixtureFile> fixture_files(const std::string& name);

std::vector<std::string> fixture_names();

/// The raw relator tables behind the rsv fixture; everything else about
/// that fixture is derived from these.
struct RsvData {
  std::vector<std::string> group_letters;  // a-letters, inverses second half
  std::vector<std::string> alphabet_b;
  std::vector<std::string> alphabet_c;
  std::vector<std::vector<std::string>> bc_relators;
  std::vector<std::vector<std::string>> action_relators;
};
const RsvData& rsv_data();

}  // namespace kmonoid

#endif  // KMONOID_FIXTURES_HPP_
