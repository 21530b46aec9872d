#ifndef KMONOID_ELEMENT_HPP_
#define KMONOID_ELEMENT_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kmonoid/degree.hpp"
#include "kmonoid/presentation.hpp"

namespace kmonoid {

/// A k-monoid element in canonical normal form: one word per color, colors
/// ascending, words[i] over X_{i+1}. Elements are immutable values tied to
/// the presentation object they were built against (stored by pointer;
/// operations refuse to mix elements of distinct presentation objects).
class Element {
 public:
  Element() = default;
  static Element identity(const Presentation& p);
  Element(const Presentation& p, std::vector<std::vector<uint16_t>> words);

  bool valid() const { return pres_ != nullptr; }
  const Presentation& presentation() const { return *pres_; }
  const std::vector<std::vector<uint16_t>>& words() const { return words_; }
  Degree degree() const;
  bool is_identity() const;
  uint64_t length() const;  // total number of atoms
  Letter letter_at(int color, size_t pos) const;

  bool operator==(const Element& o) const {
    return pres_ == o.pres_ && words_ == o.words_;
  }
  bool operator!=(const Element& o) const { return !(*this == o); }
  /// Deterministic container order: words lexicographic (same presentation).
  bool operator<(const Element& o) const { return words_ < o.words_; }

 private:
  const Presentation* pres_ = nullptr;
  std::vector<std::vector<uint16_t>> words_;
};

/// Normal form of a product of atoms, by the sorting rewrite: while an
/// adjacent pair (u of color j, v of color i) with j > i exists, the
/// leftmost one is replaced through the square u v = v' u'.
Element from_word(const Presentation& p, const std::vector<Letter>& letters);
/// Same, resolving letter names first.
Element from_names(const Presentation& p, const std::vector<std::string>& names);

/// delta(x); also available as x.degree().
Degree degree(const Element& x);

Element multiply(const Element& x, const Element& y);

/// The unique (x1, x2) with x = x1 x2, delta(x1) = m. Throws DomainError
/// when m is not <= degree(x).
std::pair<Element, Element> factor(const Element& x, const Degree& m);

/// x = a . rest with a the head atom of color i commuted to the front.
std::pair<Letter, Element> pop_atom(const Element& x, int color);

/// Given multiply(x,y) == multiply(u,v) and degree(x) >= degree(u), the
/// interpolant t with x = u t and v = t y. Throws DomainError otherwise.
Element levi_interpolant(const Element& x, const Element& y, const Element& u,
                         const Element& v);

/// Multi-line rendering "color i: a b", one line per color.
std::string render_lines(const Element& x);
/// Single-line rendering: letters space-separated in normal-form order,
/// "." for the identity.
std::string render_inline(const Element& x);

/// ASCII picture of a rank-2 element as a fully labelled m x n grid,
/// recomputed from the normal form: the label of every horizontal and
/// vertical edge is derived by factoring, so any monotone path through the
/// picture spells a representative of x. Rank-2 presentations only.
std::string render_grid(const Element& x);

}  // namespace kmonoid

#endif  // KMONOID_ELEMENT_HPP_
