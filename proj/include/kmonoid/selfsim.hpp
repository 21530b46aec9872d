#ifndef KMONOID_SELFSIM_HPP_
#define KMONOID_SELFSIM_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kmonoid/element.hpp"
#include "kmonoid/presentation.hpp"

namespace kmonoid {

/// A freely reduced word over the group generators: +i is generator i
/// (1-based), -i its inverse.
struct GroupWord {
  std::vector<int32_t> syms;

  bool empty() const { return syms.empty(); }
  size_t size() const { return syms.size(); }
  bool operator==(const GroupWord& o) const { return syms == o.syms; }
  bool operator!=(const GroupWord& o) const { return !(*this == o); }
  bool operator<(const GroupWord& o) const { return syms < o.syms; }
};

GroupWord reduced(GroupWord w);
GroupWord gw_concat(const GroupWord& a, const GroupWord& b);
GroupWord gw_inverse(const GroupWord& a);
/// All freely reduced words of length <= maxlen, shortest first.
std::vector<GroupWord> reduced_words(int num_generators, int maxlen);

/// A group acting on a k-monoid atom-wise: for every signed generator g and
/// atom x an image letter g.x of the same color and a restriction word g|_x.
/// Inverse tables may be given explicitly or derived from the generators'.
class SelfSimilarAction {
 public:
  SelfSimilarAction() = default;
  SelfSimilarAction(const Presentation& base,
                    std::vector<std::string> generator_names,
                    std::vector<std::string> inverse_names);

  const Presentation& base() const { return *base_; }
  int num_generators() const { return static_cast<int>(gen_names_.size()); }

  void set_entry(int32_t sym, Letter x, Letter image, GroupWord rest);
  bool has_entry(int32_t sym, Letter x) const;
  Letter act_letter(int32_t sym, Letter x) const;
  const GroupWord& rest_letter(int32_t sym, Letter x) const;
  /// Fills missing inverse tables from bijective generator tables.
  void derive_inverses();

  /// Name for +i / -i; inverses render as the alias or "name^-1".
  std::string sym_token(int32_t sym) const;
  int32_t token_sym(const std::string& token) const;
  std::string word_token(const GroupWord& w) const;  // "." when empty
  GroupWord parse_word(const std::vector<std::string>& tokens) const;

 private:
  size_t slot(int32_t sym) const;
  const Presentation* base_ = nullptr;
  std::vector<std::string> gen_names_;
  std::vector<std::string> inv_names_;  // "" when no alias
  // per signed generator, per color, per letter index
  std::vector<std::vector<std::vector<uint16_t>>> act_;
  std::vector<std::vector<std::vector<GroupWord>>> rest_;
  static constexpr uint16_t kUnset = 0xFFFFu;
};

/// (g.x, g|_x) by the letterwise recursion, generator by generator.
std::pair<Element, GroupWord> act_word(const SelfSimilarAction& a,
                                       const GroupWord& g, const Element& x);

/// Zappa-Szep pair (monoid part, group part); the size map is the degree of
/// the monoid part.
struct GeneralizedElement {
  Element monoid;
  GroupWord group;

  bool operator==(const GeneralizedElement& o) const {
    return monoid == o.monoid && group == o.group;
  }
};

/// (u,g)(v,h) = (u.(g.v), (g|_v) h).
GeneralizedElement zs_multiply(const SelfSimilarAction& a,
                               const GeneralizedElement& p,
                               const GeneralizedElement& q);

/// Atom bijectivity, inverse coherence, and compatibility with every square
/// of the base presentation.
ValidationReport validate_action(const SelfSimilarAction& a);

/// Relator machinery for presentations like the triple-tree fixture: each
/// length-4 relator x y x' y' = 1 over two alphabets contributes the square
/// x y -> (y')^-1 (x')^-1 and its three rotated/inverted readings. Letter
/// inverses pair index p with p+n (mod 2n) in a size-2n alphabet.
std::vector<SquareRule> squares_from_relators(
    const std::vector<std::string>& alphabet1,
    const std::vector<std::string>& alphabet2,
    const std::vector<std::vector<std::string>>& relators);

/// Same reading for relators mixing group letters (first alphabet, with the
/// first half generators and the second half their inverses) and base atoms:
/// every rotation starting with a group letter becomes an action entry.
SelfSimilarAction action_from_relators(
    const Presentation& base, const std::vector<std::string>& group_letters,
    const std::vector<std::vector<std::string>>& relators);

struct WfpReport {
  bool pass = true;
  uint64_t elements = 0;       // generalized elements enumerated
  uint64_t factorizations = 0; // windowed factorizations verified
  uint64_t pairs = 0;          // factorization pairs compared
  uint64_t inconclusive = 0;   // linking unit exceeded the window
  std::vector<std::string> failures;
};

/// Windowed weak-factorization check, see the report fields. Existence uses
/// the base monoid's factorization; uniqueness-up-to-unit compares all
/// windowed factorizations of every split.
WfpReport wfp_check(const SelfSimilarAction& a, const Degree& bound,
                    int window);

/// Action file: "base = <file>", "generators: ...", optional
/// "inverses: ...", and lines "act: g x -> y | r1 r2 ...".
SelfSimilarAction parse_action(const std::string& text,
                               const Presentation& base);
std::string action_base_reference(const std::string& text);
std::string render_action(const SelfSimilarAction& a,
                          const std::string& base_reference);

}  // namespace kmonoid

#endif  // KMONOID_SELFSIM_HPP_
