#ifndef KMONOID_CODES_HPP_
#define KMONOID_CODES_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kmonoid/element.hpp"

namespace kmonoid {

/// A finite generalized prefix code: pairwise incomparable elements of one
/// presentation, kept sorted for deterministic output.
using Code = std::vector<Element>;

/// The s with c = d s, if degree(d) <= degree(c) and the degree-(d) prefix
/// of c is d; absent otherwise.
std::optional<Element> divides(const Element& d, const Element& c);

/// C_m: all elements of degree exactly m, sorted.
Code enumerate_degree(const Presentation& p, const Degree& m);

/// a ⊔ b: the canonical generating code of aS ∩ bS, i.e. all common right
/// multiples at degree join(delta a, delta b). Empty iff a, b incomparable.
Code common_upper(const Element& a, const Element& b);

bool is_comparable(const Element& a, const Element& b);

bool is_prefix_code(const std::vector<Element>& xs);

/// With m the join of the member degrees: every element of C_m must be
/// divisible by a member. Requires a strict presentation.
bool is_maximal_code(const Presentation& p, const Code& code);

/// (code \ {x}) ∪ { x a : a in X_color }. Throws DomainError when x is not
/// a member or the alphabet is empty.
Code expand_code(const Code& code, const Element& x, int color);

struct AlignmentReport {
  Degree bound;
  uint64_t pairs = 0;
  size_t max_upper = 0;   // largest |a ⊔ b| witnessed
  bool singly_aligned() const { return max_upper <= 1; }
  std::string witness;    // a pair attaining the maximum
};

/// Exhaustive |common_upper| scan over all ordered pairs of elements of
/// degree <= bound. Requires a validated strict presentation.
AlignmentReport alignment_probe(const Presentation& p, const Degree& bound);

/// Parses a code file: one element per line, letters space-separated,
/// "." for the identity. Sorts and checks the prefix-code invariant.
Code parse_code(const Presentation& p, const std::string& text);

}  // namespace kmonoid

#endif  // KMONOID_CODES_HPP_
