#include "kmonoid/selfsim.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

#include "kmonoid/codes.hpp"
#include "kmonoid/errors.hpp"

namespace kmonoid {

GroupWord reduced(GroupWord w) {
  std::vector<int32_t> out;
  for (int32_t s : w.syms) {
    if (s == 0) throw DomainError("zero symbol in group word");
    if (!out.empty() && out.back() == -s) {
      out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return GroupWord{std::move(out)};
}

GroupWord gw_concat(const GroupWord& a, const GroupWord& b) {
  GroupWord w = a;
  w.syms.insert(w.syms.end(), b.syms.begin(), b.syms.end());
  return reduced(std::move(w));
}

GroupWord gw_inverse(const GroupWord& a) {
  GroupWord w;
  w.syms.reserve(a.syms.size());
  for (auto it = a.syms.rbegin(); it != a.syms.rend(); ++it) {
    w.syms.push_back(-*it);
  }
  return w;
}

std::vector<GroupWord> reduced_words(int num_generators, int maxlen) {
  std::vector<GroupWord> out = {GroupWord{}};
  size_t level_begin = 0;
  for (int len = 1; len <= maxlen; ++len) {
    size_t level_end = out.size();
    for (size_t i = level_begin; i < level_end; ++i) {
      for (int g = 1; g <= num_generators; ++g) {
        for (int32_t s : {g, -g}) {
          if (!out[i].syms.empty() && out[i].syms.back() == -s) continue;
          GroupWord w = out[i];
          w.syms.push_back(s);
          out.push_back(std::move(w));
        }
      }
    }
    level_begin = level_end;
  }
  return out;
}

SelfSimilarAction::SelfSimilarAction(const Presentation& base,
                                     std::vector<std::string> generator_names,
                                     std::vector<std::string> inverse_names)
    : base_(&base),
      gen_names_(std::move(generator_names)),
      inv_names_(std::move(inverse_names)) {
  if (gen_names_.empty()) throw DomainError("action needs at least one generator");
  if (inv_names_.empty()) {
    inv_names_.assign(gen_names_.size(), "");
  }
  if (inv_names_.size() != gen_names_.size()) {
    throw DomainError("inverse alias list length mismatch");
  }
  size_t slots = 2 * gen_names_.size();
  act_.resize(slots);
  rest_.resize(slots);
  for (size_t s = 0; s < slots; ++s) {
    act_[s].resize(static_cast<size_t>(base.rank()));
    rest_[s].resize(static_cast<size_t>(base.rank()));
    for (int c = 1; c <= base.rank(); ++c) {
      act_[s][static_cast<size_t>(c - 1)].assign(
          static_cast<size_t>(base.alphabet_size(c)), kUnset);
      rest_[s][static_cast<size_t>(c - 1)].resize(
          static_cast<size_t>(base.alphabet_size(c)));
    }
  }
}

size_t SelfSimilarAction::slot(int32_t sym) const {
  int g = sym > 0 ? sym : -sym;
  if (g < 1 || g > num_generators() || sym == 0) {
    throw DomainError("group symbol out of range");
  }
  return static_cast<size_t>(2 * (g - 1) + (sym < 0 ? 1 : 0));
}

void SelfSimilarAction::set_entry(int32_t sym, Letter x, Letter image,
                                  GroupWord rest) {
  if (image.color != x.color) {
    throw DomainError("action entry changes the color of " + base().name(x));
  }
  size_t s = slot(sym);
  GroupWord r = reduced(std::move(rest));
  auto& cell = act_[s][static_cast<size_t>(x.color - 1)][x.index];
  if (cell != kUnset &&
      (cell != image.index ||
       rest_[s][static_cast<size_t>(x.color - 1)][x.index] != r)) {
    throw DomainError("conflicting action entries for " + sym_token(sym) +
                      " at " + base().name(x));
  }
  cell = image.index;
  rest_[s][static_cast<size_t>(x.color - 1)][x.index] = std::move(r);
}

bool SelfSimilarAction::has_entry(int32_t sym, Letter x) const {
  return act_[slot(sym)][static_cast<size_t>(x.color - 1)][x.index] != kUnset;
}

Letter SelfSimilarAction::act_letter(int32_t sym, Letter x) const {
  uint16_t img = act_[slot(sym)][static_cast<size_t>(x.color - 1)][x.index];
  if (img == kUnset) {
    throw DomainError("no action entry for " + sym_token(sym) + " at " +
                      base().name(x));
  }
  return Letter{x.color, img};
}

const GroupWord& SelfSimilarAction::rest_letter(int32_t sym, Letter x) const {
  if (!has_entry(sym, x)) {
    throw DomainError("no action entry for " + sym_token(sym) + " at " +
                      base().name(x));
  }
  return rest_[slot(sym)][static_cast<size_t>(x.color - 1)][x.index];
}

void SelfSimilarAction::derive_inverses() {
  for (int g = 1; g <= num_generators(); ++g) {
    for (int c = 1; c <= base().rank(); ++c) {
      for (int i = 0; i < base().alphabet_size(c); ++i) {
        Letter x{static_cast<uint16_t>(c), static_cast<uint16_t>(i)};
        if (!has_entry(g, x)) continue;
        Letter y = act_letter(g, x);
        if (has_entry(-g, y)) continue;
        set_entry(-g, y, x, gw_inverse(rest_letter(g, x)));
      }
    }
  }
}

std::string SelfSimilarAction::sym_token(int32_t sym) const {
  int g = sym > 0 ? sym : -sym;
  if (sym > 0) return gen_names_[static_cast<size_t>(g - 1)];
  const std::string& alias = inv_names_[static_cast<size_t>(g - 1)];
  if (!alias.empty()) return alias;
  return gen_names_[static_cast<size_t>(g - 1)] + "^-1";
}

int32_t SelfSimilarAction::token_sym(const std::string& token) const {
  std::string stem = token;
  bool inverted = false;
  if (stem.size() > 3 && stem.substr(stem.size() - 3) == "^-1") {
    stem = stem.substr(0, stem.size() - 3);
    inverted = true;
  }
  for (int g = 1; g <= num_generators(); ++g) {
    if (gen_names_[static_cast<size_t>(g - 1)] == stem) {
      return inverted ? -g : g;
    }
    if (inv_names_[static_cast<size_t>(g - 1)] == stem) {
      return inverted ? g : -g;
    }
  }
  throw DomainError("unknown group symbol '" + token + "'");
}

std::string SelfSimilarAction::word_token(const GroupWord& w) const {
  if (w.empty()) return ".";
  std::string out;
  for (int32_t s : w.syms) {
    if (!out.empty()) out += " ";
    out += sym_token(s);
  }
  return out;
}

GroupWord SelfSimilarAction::parse_word(
    const std::vector<std::string>& tokens) const {
  GroupWord w;
  for (const auto& t : tokens) {
    if (t == ".") continue;
    w.syms.push_back(token_sym(t));
  }
  return reduced(std::move(w));
}

namespace {
std::pair<Letter, GroupWord> act_word_letter(const SelfSimilarAction& a,
                                             const GroupWord& w, Letter x) {
  Letter cur = x;
  std::vector<GroupWord> rests;  // collected right-to-left
  for (auto it = w.syms.rbegin(); it != w.syms.rend(); ++it) {
    rests.push_back(a.rest_letter(*it, cur));
    cur = a.act_letter(*it, cur);
  }
  GroupWord total;
  for (auto it = rests.rbegin(); it != rests.rend(); ++it) {
    total = gw_concat(total, *it);
  }
  return {cur, std::move(total)};
}
}  // namespace

std::pair<Element, GroupWord> act_word(const SelfSimilarAction& a,
                                       const GroupWord& g, const Element& x) {
  if (&x.presentation() != &a.base()) {
    throw DomainError("act_word: element is not over the action's base");
  }
  GroupWord state = reduced(g);
  auto words = x.words();
  for (size_t c = 0; c < words.size(); ++c) {
    for (auto& idx : words[c]) {
      Letter l{static_cast<uint16_t>(c + 1), idx};
      auto [img, next] = act_word_letter(a, state, l);
      idx = img.index;
      state = std::move(next);
    }
  }
  return {Element(a.base(), std::move(words)), std::move(state)};
}

GeneralizedElement zs_multiply(const SelfSimilarAction& a,
                               const GeneralizedElement& p,
                               const GeneralizedElement& q) {
  auto [v, r] = act_word(a, p.group, q.monoid);
  return GeneralizedElement{multiply(p.monoid, v), gw_concat(r, q.group)};
}

ValidationReport validate_action(const SelfSimilarAction& a) {
  ValidationReport rep;
  const Presentation& base = a.base();
  std::vector<int32_t> syms;
  for (int g = 1; g <= a.num_generators(); ++g) {
    syms.push_back(g);
    syms.push_back(-g);
  }
  // completeness and atom bijectivity
  for (int32_t s : syms) {
    for (int c = 1; c <= base.rank(); ++c) {
      std::vector<bool> hit(static_cast<size_t>(base.alphabet_size(c)), false);
      for (int i = 0; i < base.alphabet_size(c); ++i) {
        Letter x{static_cast<uint16_t>(c), static_cast<uint16_t>(i)};
        if (!a.has_entry(s, x)) {
          rep.failures.push_back(
              {"incomplete", a.sym_token(s) + " at " + base.name(x)});
          continue;
        }
        Letter y = a.act_letter(s, x);
        if (hit[y.index]) {
          rep.failures.push_back(
              {"not-bijective", a.sym_token(s) + " on color " +
                                    std::to_string(c) + " repeats " +
                                    base.name(y)});
        }
        hit[y.index] = true;
      }
    }
  }
  if (!rep.ok()) return rep;
  // inverse coherence on atoms
  for (int32_t s : syms) {
    for (int c = 1; c <= base.rank(); ++c) {
      for (int i = 0; i < base.alphabet_size(c); ++i) {
        Letter x{static_cast<uint16_t>(c), static_cast<uint16_t>(i)};
        Letter y = a.act_letter(s, x);
        if (a.act_letter(-s, y) != x ||
            reduced(a.rest_letter(-s, y)) !=
                gw_inverse(a.rest_letter(s, x))) {
          rep.failures.push_back(
              {"inverse", a.sym_token(s) + " at " + base.name(x)});
        }
      }
    }
  }
  // compatibility with every square u v = v' u' of the base
  for (int i = 1; i <= base.rank(); ++i) {
    for (int j = i + 1; j <= base.rank(); ++j) {
      for (int ua = 0; ua < base.alphabet_size(i); ++ua) {
        for (int vb = 0; vb < base.alphabet_size(j); ++vb) {
          Letter u{static_cast<uint16_t>(i), static_cast<uint16_t>(ua)};
          Letter v{static_cast<uint16_t>(j), static_cast<uint16_t>(vb)};
          if (!base.has_square(u, v)) continue;
          auto [v2, u2] = base.square(u, v);
          for (int32_t s : syms) {
            Letter iu = a.act_letter(s, u);
            auto [iv, r2] = act_word_letter(a, a.rest_letter(s, u), v);
            Element lhs = from_word(base, {iu, iv});
            Letter iv2 = a.act_letter(s, v2);
            auto [iu2, q2] = act_word_letter(a, a.rest_letter(s, v2), u2);
            Element rhs = from_word(base, {iv2, iu2});
            if (lhs != rhs || r2 != q2) {
              rep.failures.push_back(
                  {"square", a.sym_token(s) + " at " + base.name(u) + " " +
                                 base.name(v)});
            }
          }
        }
      }
    }
  }
  return rep;
}

namespace {

struct LetterTable {
  // name -> (alphabet 0/1, index)
  std::map<std::string, std::pair<int, int>> where;
  std::vector<std::vector<std::string>> alphabets;

  int inverse(int alpha, int idx) const {
    int n = static_cast<int>(alphabets[static_cast<size_t>(alpha)].size());
    return (idx + n / 2) % n;
  }
};

LetterTable make_table(const std::vector<std::string>& a1,
                       const std::vector<std::string>& a2) {
  LetterTable t;
  t.alphabets = {a1, a2};
  for (int alpha = 0; alpha < 2; ++alpha) {
    const auto& names = t.alphabets[static_cast<size_t>(alpha)];
    if (names.size() % 2 != 0) {
      throw DomainError("relator alphabet must pair letters with inverses");
    }
    for (size_t i = 0; i < names.size(); ++i) {
      if (!t.where.emplace(names[i], std::make_pair(alpha, static_cast<int>(i)))
               .second) {
        throw DomainError("duplicate letter '" + names[i] + "'");
      }
    }
  }
  return t;
}

struct RelatorEntry {
  int alpha0;                 // alphabet of positions 0 and 2
  std::array<int, 4> idx;     // letter indices, positions alternate alphabets
};

RelatorEntry resolve_relator(const LetterTable& t,
                             const std::vector<std::string>& relator) {
  if (relator.size() != 4) {
    throw DomainError("relator must have exactly 4 letters");
  }
  RelatorEntry e{};
  std::array<std::pair<int, int>, 4> pos;
  for (int i = 0; i < 4; ++i) {
    auto it = t.where.find(relator[static_cast<size_t>(i)]);
    if (it == t.where.end()) {
      throw DomainError("unknown letter '" + relator[static_cast<size_t>(i)] +
                        "' in relator");
    }
    pos[static_cast<size_t>(i)] = it->second;
  }
  if (pos[0].first == pos[1].first || pos[0].first != pos[2].first ||
      pos[1].first != pos[3].first) {
    throw DomainError("relator does not alternate the two alphabets");
  }
  e.alpha0 = pos[0].first;
  for (int i = 0; i < 4; ++i) e.idx[static_cast<size_t>(i)] = pos[static_cast<size_t>(i)].second;
  return e;
}

}  // namespace

std::vector<SquareRule> squares_from_relators(
    const std::vector<std::string>& alphabet1,
    const std::vector<std::string>& alphabet2,
    const std::vector<std::vector<std::string>>& relators) {
  LetterTable t = make_table(alphabet1, alphabet2);
  // entries keyed by (alpha of u, u idx, v idx) -> (v' idx, u' idx)
  std::map<std::tuple<int, int, int>, std::pair<int, int>> entries;
  auto add = [&](int alpha_u, int u, int v, int v2, int u2) {
    auto key = std::make_tuple(alpha_u, u, v);
    auto val = std::make_pair(v2, u2);
    auto [it, inserted] = entries.emplace(key, val);
    if (!inserted && it->second != val) {
      const auto& un = t.alphabets[static_cast<size_t>(alpha_u)][static_cast<size_t>(u)];
      const auto& vn = t.alphabets[static_cast<size_t>(1 - alpha_u)][static_cast<size_t>(v)];
      throw DomainError("convention clash at pair (" + un + ", " + vn + ")");
    }
  };
  for (const auto& rel : relators) {
    RelatorEntry e = resolve_relator(t, rel);
    int a = e.alpha0;
    int b = 1 - a;
    int x = e.idx[0], y = e.idx[1], x2 = e.idx[2], y2 = e.idx[3];
    // the relator, its rotations, and their inverses give one square
    // reading per corner: p q p' q' = 1 turns into p q = (q')^-1 (p')^-1
    auto ix = [&](int alpha, int l) { return t.inverse(alpha, l); };
    add(a, x, y, ix(b, y2), ix(a, x2));                    // x y x' y'
    add(b, y, x2, ix(a, x), ix(b, y2));                    // y x' y' x
    add(a, x2, y2, ix(b, y), ix(a, x));                    // x' y' x y
    add(b, y2, x, ix(a, x2), ix(b, y));                    // y' x y x'
    add(b, ix(b, y2), ix(a, x2), x, y);                    // rotations of the
    add(a, ix(a, x2), ix(b, y), y2, x);                    // inverse relator
    add(b, ix(b, y), ix(a, x), x2, y2);
    add(a, ix(a, x), ix(b, y2), y, x2);
  }
  std::vector<SquareRule> rules;
  for (const auto& [key, val] : entries) {
    auto [alpha_u, u, v] = key;
    if (alpha_u != 0) continue;  // one orientation; mutual is implied
    rules.push_back(SquareRule{
        t.alphabets[0][static_cast<size_t>(u)],
        t.alphabets[1][static_cast<size_t>(v)],
        t.alphabets[1][static_cast<size_t>(val.first)],
        t.alphabets[0][static_cast<size_t>(val.second)]});
  }
  return rules;
}

SelfSimilarAction action_from_relators(
    const Presentation& base, const std::vector<std::string>& group_letters,
    const std::vector<std::vector<std::string>>& relators) {
  if (group_letters.size() % 2 != 0) {
    throw DomainError("group alphabet must pair letters with inverses");
  }
  int n = static_cast<int>(group_letters.size()) / 2;
  std::vector<std::string> gens(group_letters.begin(),
                                 group_letters.begin() + n);
  std::vector<std::string> invs(group_letters.begin() + n,
                                 group_letters.end());
  SelfSimilarAction a(base, gens, invs);
  auto gsym = [&](int idx) {  // letter index in group_letters -> signed sym
    return idx < n ? idx + 1 : -(idx - n + 1);
  };
  auto ginv = [&](int idx) {
    return (idx + n) % (2 * n);
  };
  for (const auto& rel : relators) {
    if (rel.size() != 4) throw DomainError("relator must have exactly 4 letters");
    int g = -1, g2 = -1;
    Letter x{}, x2{};
    for (size_t i = 0; i < group_letters.size(); ++i) {
      if (group_letters[i] == rel[0]) g = static_cast<int>(i);
      if (group_letters[i] == rel[2]) g2 = static_cast<int>(i);
    }
    if (g < 0 || g2 < 0) {
      throw DomainError("relator must start with a group letter");
    }
    x = base.letter(rel[1]);
    x2 = base.letter(rel[3]);
    if (x.color != x2.color) {
      throw DomainError("relator mixes base colors");
    }
    int sz = base.alphabet_size(x.color);
    if (sz % 2 != 0) {
      throw DomainError("base alphabet must pair letters with inverses");
    }
    auto linv = [&](Letter l) {
      return Letter{l.color,
                    static_cast<uint16_t>((l.index + sz / 2) % sz)};
    };
    auto one = [&](int sym) { return GroupWord{{sym}}; };
    // the four group-letter-first readings of g x g' x' = 1
    a.set_entry(gsym(g), x, linv(x2), one(-gsym(g2)));
    a.set_entry(gsym(g2), x2, linv(x), one(-gsym(g)));
    a.set_entry(gsym(ginv(g2)), linv(x), x2, one(gsym(g)));
    a.set_entry(gsym(ginv(g)), linv(x2), x, one(gsym(g2)));
  }
  return a;
}

WfpReport wfp_check(const SelfSimilarAction& a, const Degree& bound,
                    int window) {
  WfpReport rep;
  const Presentation& base = a.base();
  std::vector<GroupWord> words = reduced_words(a.num_generators(), window);
  std::vector<Element> monoid_parts;
  for (const Degree& d : degrees_below(bound)) {
    for (const Element& u : enumerate_degree(base, d)) {
      monoid_parts.push_back(u);
    }
  }
  for (const Element& u : monoid_parts) {
    for (const Degree& m : degrees_below(u.degree())) {
      auto [u1, u2] = factor(u, m);
      // existence for every windowed (u, g): the base factorization with the
      // group part carried right
      for (const GroupWord& g : words) {
        GeneralizedElement whole{u, g};
        GeneralizedElement prod = zs_multiply(
            a, GeneralizedElement{u1, GroupWord{}}, GeneralizedElement{u2, g});
        if (!(prod == whole)) {
          rep.pass = false;
          rep.failures.push_back("no factorization of " + render_inline(u) +
                                 " * " + a.word_token(g) + " at " +
                                 to_string(m));
        }
      }
      // all windowed factorizations of (u, eps) at split (m, delta(u)-m):
      // first factor (u1, w), second forced to (w^-1 . u2, (w^-1)|_{u2})
      std::vector<GeneralizedElement> firsts, seconds;
      for (const GroupWord& w : words) {
        auto [v, rinv] = act_word(a, gw_inverse(w), u2);
        GeneralizedElement x1{u1, w};
        GeneralizedElement x2{v, rinv};
        GeneralizedElement prod = zs_multiply(a, x1, x2);
        ++rep.factorizations;
        if (prod.monoid != u || !prod.group.empty()) {
          rep.pass = false;
          rep.failures.push_back("factorization of " + render_inline(u) +
                                 " at " + to_string(m) + " with unit " +
                                 a.word_token(w) + " does not multiply back");
          continue;
        }
        firsts.push_back(std::move(x1));
        seconds.push_back(std::move(x2));
      }
      // any two factorizations must differ by a windowed unit
      for (size_t i = 0; i < firsts.size(); ++i) {
        for (size_t j = i + 1; j < firsts.size(); ++j) {
          ++rep.pairs;
          GroupWord h =
              gw_concat(gw_inverse(firsts[i].group), firsts[j].group);
          if (static_cast<int>(h.size()) > window) {
            ++rep.inconclusive;
            continue;
          }
          GeneralizedElement unit{Element::identity(base), h};
          GeneralizedElement lhs = zs_multiply(a, firsts[i], unit);
          GeneralizedElement rhs = zs_multiply(
              a, GeneralizedElement{Element::identity(base), gw_inverse(h)},
              seconds[i]);
          if (lhs != firsts[j] || rhs != seconds[j]) {
            rep.pass = false;
            rep.failures.push_back(
                "factorizations of " + render_inline(u) + " at " +
                to_string(m) + " are not unit-linked (" +
                a.word_token(firsts[i].group) + " vs " +
                a.word_token(firsts[j].group) + ")");
          }
        }
      }
    }
    // lambda^-1(0) inside the window: exactly the pairs (eps, w), and each
    // is invertible
    if (u.is_identity()) {
      for (const GroupWord& w : words) {
        GeneralizedElement g{u, w};
        GeneralizedElement ginv{u, gw_inverse(w)};
        GeneralizedElement prod = zs_multiply(a, g, ginv);
        if (!prod.monoid.is_identity() || !prod.group.empty()) {
          rep.pass = false;
          rep.failures.push_back("unit " + a.word_token(w) +
                                 " is not invertible");
        }
      }
    }
    rep.elements += words.size();
  }
  return rep;
}

std::string action_base_reference(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    auto hash = raw.find('#');
    std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
    std::stringstream ss(line);
    std::string t1, t2, t3;
    if (ss >> t1 >> t2 >> t3 && t1 == "base" && t2 == "=") return t3;
  }
  throw DomainError("action file has no 'base = <file>' line");
}

SelfSimilarAction parse_action(const std::string& text,
                               const Presentation& base) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  std::vector<std::string> gens, invs;
  struct RawEntry {
    std::string sym, letter, image;
    std::vector<std::string> rest;
    int line;
  };
  std::vector<RawEntry> entries;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
    std::vector<std::string> toks;
    std::stringstream ss(line);
    std::string tok;
    while (ss >> tok) toks.push_back(tok);
    if (toks.empty()) continue;
    if (toks[0] == "base" && toks.size() >= 2 && toks[1] == "=") continue;
    if (toks[0] == "generators:") {
      gens.assign(toks.begin() + 1, toks.end());
    } else if (toks[0] == "inverses:") {
      invs.assign(toks.begin() + 1, toks.end());
    } else if (toks[0] == "act:") {
      // act: g x -> y | r1 r2 ...
      if (toks.size() < 6 || toks[3] != "->" || toks[5] != "|") {
        throw ParseError("expected 'act: g x -> y | restriction...'", lineno);
      }
      entries.push_back(RawEntry{toks[1], toks[2], toks[4],
                                 {toks.begin() + 6, toks.end()}, lineno});
    } else {
      throw ParseError("unrecognized line '" + toks[0] + "'", lineno);
    }
  }
  if (gens.empty()) throw DomainError("action file lists no generators");
  SelfSimilarAction a(base, gens, invs);
  for (const auto& e : entries) {
    try {
      a.set_entry(a.token_sym(e.sym), base.letter(e.letter),
                  base.letter(e.image), a.parse_word(e.rest));
    } catch (const DomainError& err) {
      throw ParseError(err.what(), e.line);
    }
  }
  a.derive_inverses();
  return a;
}

std::string render_action(const SelfSimilarAction& a,
                          const std::string& base_reference) {
  std::ostringstream out;
  out << "base = " << base_reference << "\n";
  out << "generators:";
  for (int g = 1; g <= a.num_generators(); ++g) out << " " << a.sym_token(g);
  out << "\n";
  bool any_alias = false;
  for (int g = 1; g <= a.num_generators(); ++g) {
    if (a.sym_token(-g).find("^-1") == std::string::npos) any_alias = true;
  }
  if (any_alias) {
    out << "inverses:";
    for (int g = 1; g <= a.num_generators(); ++g) out << " " << a.sym_token(-g);
    out << "\n";
  }
  const Presentation& base = a.base();
  std::vector<int32_t> syms;
  for (int g = 1; g <= a.num_generators(); ++g) syms.push_back(g);
  for (int g = 1; g <= a.num_generators(); ++g) syms.push_back(-g);
  for (int32_t s : syms) {
    for (int c = 1; c <= base.rank(); ++c) {
      for (int i = 0; i < base.alphabet_size(c); ++i) {
        Letter x{static_cast<uint16_t>(c), static_cast<uint16_t>(i)};
        if (!a.has_entry(s, x)) continue;
        out << "act: " << a.sym_token(s) << " " << base.name(x) << " -> "
            << base.name(a.act_letter(s, x)) << " |";
        for (int32_t r : a.rest_letter(s, x).syms) {
          out << " " << a.sym_token(r);
        }
        out << "\n";
      }
    }
  }
  return out.str();
}

}  // namespace kmonoid
