#ifndef KMONOID_TESTS_HELPERS_HPP_
#define KMONOID_TESTS_HELPERS_HPP_

#include <random>
#include <string>

#include "kmonoid/codes.hpp"
#include "kmonoid/errors.hpp"
#include "kmonoid/fixtures.hpp"
#include "kmonoid/group.hpp"
#include "kmonoid/presentation.hpp"
#include "kmonoid/props.hpp"
#include "kmonoid/selfsim.hpp"

namespace kmonoid::testing {

inline std::string fixture_text(const std::string& fixture,
                                const std::string& file) {
  for (const auto& f : fixture_files(fixture)) {
    if (f.name == file) return f.contents;
  }
  throw DomainError("no file " + file + " in fixture " + fixture);
}

inline Presentation fixture_presentation(const std::string& fixture) {
  return parse_presentation(
      fixture_text(fixture, fixture_files(fixture).front().name));
}

/// 2-monoid on {a,b} x {p,q} where every square flips both letters:
/// a p = q b, a q = p b, b p = q a, b q = p a. Valid (k = 2) and nowhere
/// commuting.
inline Presentation flip2() {
  return Presentation::from_data(
      {{"a", "b"}, {"p", "q"}},
      {{"a", "p", "q", "b"}, {"a", "q", "p", "b"},
       {"b", "p", "q", "a"}, {"b", "q", "p", "a"}},
      false);
}

/// Maximal prefix code grown from {eps} by `steps` random full-atom
/// expansions.
inline Code random_expansion_chain(const Presentation& p,
                                   std::mt19937_64& rng, int steps) {
  Code code = {Element::identity(p)};
  for (int s = 0; s < steps; ++s) {
    size_t at = rand_below(rng, code.size());
    int color = 1 + static_cast<int>(rand_below(
                        rng, static_cast<uint64_t>(p.rank())));
    code = expand_code(code, code[at], color);
  }
  return code;
}

/// Random essential code bijection: two expansion chains of equal length
/// with a random pairing.
inline CodeBijection random_bijection(const Presentation& p,
                                      std::mt19937_64& rng, int steps) {
  Code dom = random_expansion_chain(p, rng, steps);
  Code ran = random_expansion_chain(p, rng, steps);
  while (ran.size() != dom.size()) {
    // expansions add |X_i| - 1 elements; with uneven alphabets re-grow
    ran = random_expansion_chain(p, rng, steps);
  }
  std::vector<Element> image(ran.begin(), ran.end());
  for (size_t i = image.size(); i > 1; --i) {
    std::swap(image[i - 1], image[rand_below(rng, i)]);
  }
  return CodeBijection(std::move(dom), std::move(image));
}

inline SelfSimilarAction parse_fixture_action(const std::string& fixture,
                                              Presentation& base_out) {
  auto files = fixture_files(fixture);
  std::string km, ksa;
  for (const auto& f : files) {
    if (f.name.size() > 3 && f.name.substr(f.name.size() - 3) == ".km") {
      km = f.contents;
    }
    if (f.name.size() > 4 && f.name.substr(f.name.size() - 4) == ".ksa") {
      ksa = f.contents;
    }
  }
  base_out = parse_presentation(km);
  return parse_action(ksa, base_out);
}

}  // namespace kmonoid::testing

#endif  // KMONOID_TESTS_HELPERS_HPP_
