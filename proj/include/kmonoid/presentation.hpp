#ifndef KMONOID_PRESENTATION_HPP_
#define KMONOID_PRESENTATION_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kmonoid/degree.hpp"

namespace kmonoid {

/// An atom of one of the k colored alphabets. `color` is 1-based to match
/// the usual indexing of the alphabets X_1..X_k; `index` is the 0-based
/// position inside that alphabet.
struct Letter {
  uint16_t color = 0;
  uint16_t index = 0;

  bool operator==(const Letter& o) const {
    return color == o.color && index == o.index;
  }
  bool operator!=(const Letter& o) const { return !(*this == o); }
  bool operator<(const Letter& o) const {
    return color != o.color ? color < o.color : index < o.index;
  }
};

struct ValidationFailure {
  std::string kind;     // "incomplete", "mutual-inverse", "color", "cube"
  std::string witness;  // human-readable letters involved
};

struct ValidationReport {
  std::vector<ValidationFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// One explicit commutation square u v -> v' u', meaning uv = v'u' with
/// u, u' sharing a color and v, v' sharing the other.
struct SquareRule {
  std::string u, v, v_out, u_out;
};

/// A k-monoid presentation: k colored alphabets and the complete set of
/// squares sigma_ij : X_i x X_j -> X_j x X_i. Immutable once built; elements
/// keep a pointer to the presentation object they were created against.
class Presentation {
 public:
  Presentation() = default;

  /// k = 1 presentation with an empty square map.
  static Presentation free_monoid(const std::vector<std::string>& names);

  /// Assemble from raw data. Explicit squares are entered together with
  /// their mutual inverses (without overwriting conflicting earlier
  /// entries, so that defective inputs survive to validation); when
  /// `commute_fill` is set, every cross pair with both orientations still
  /// unset commutes, and remaining one-sided gaps are matched against the
  /// unused targets of their family in lexicographic order.
  static Presentation from_data(std::vector<std::vector<std::string>> alphabets,
                                const std::vector<SquareRule>& squares,
                                bool commute_fill);

  int rank() const { return static_cast<int>(alphabets_.size()); }
  int alphabet_size(int color) const {
    return static_cast<int>(alphabets_[static_cast<size_t>(color - 1)].size());
  }
  const std::vector<std::string>& alphabet(int color) const {
    return alphabets_[static_cast<size_t>(color - 1)];
  }
  const std::string& name(Letter l) const {
    return alphabets_[static_cast<size_t>(l.color - 1)][l.index];
  }
  std::optional<Letter> find(const std::string& name) const;
  Letter letter(const std::string& name) const;  // throws on unknown

  bool has_square(Letter u, Letter v) const;
  /// (v', u') with u v = v' u'. Throws DomainError when missing.
  std::pair<Letter, Letter> square(Letter u, Letter v) const;

  bool operator==(const Presentation& o) const;

 private:
  friend Presentation product(const Presentation&, const Presentation&);
  friend Presentation strictify(const Presentation&);

  uint32_t pack(Letter u, Letter v, uint32_t* slot) const;
  void set_square(Letter u, Letter v, Letter v2, Letter u2, bool overwrite);

  std::vector<std::vector<std::string>> alphabets_;
  // squares_[(i-1)*k + (j-1)] for i != j: flat |X_i| x |X_j| table of packed
  // (v' index << 16 | u' index); kMissing marks absent entries.
  std::vector<std::vector<uint32_t>> squares_;
  static constexpr uint32_t kMissing = 0xFFFFFFFFu;
};

/// Reads the UTF-8 presentation format:
///   k = <int>
///   alphabet <i>: name1 name2 ...
///   square: u v -> v' u'
///   commute: *
/// '#' starts a comment. Throws ParseError (syntax, duplicate letter,
/// unknown letter in a square); completeness is left to validate_squares.
Presentation parse_presentation(const std::string& text);

/// Canonical renderer: alphabets, explicit non-commuting squares of each
/// family in the color-ascending orientation, then "commute: *". Assumes a
/// mutually inverse square map. parse(render(P)) == P.
std::string render_presentation(const Presentation& p);

/// (k+l)-color presentation; squares within each factor are copied and all
/// cross-factor pairs commute.
Presentation product(const Presentation& p, const Presentation& q);

/// Completeness and mutual-inverse (sigma_ji = sigma_ij^-1) checks.
ValidationReport validate_squares(const Presentation& p);

/// The cube condition: both commuting routes around every triple of
/// distinct-color atoms must agree. Vacuous for k <= 2. Requires a complete
/// square map (run validate_squares first).
ValidationReport validate_associativity(const Presentation& p);

/// True iff every alphabet is non-empty.
bool is_strict(const Presentation& p);

/// Drops empty colors, renumbering the rest; identity on strict input.
Presentation strictify(const Presentation& p);

/// True iff every square is the commuting one (u,v) -> (v,u).
bool is_commutative_cross(const Presentation& p);

}  // namespace kmonoid

#endif  // KMONOID_PRESENTATION_HPP_
