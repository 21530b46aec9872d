#include "kmonoid/element.hpp"

#include <sstream>

#include "kmonoid/errors.hpp"

namespace kmonoid {

namespace {

void require_same_presentation(const Element& x, const Element& y) {
  if (&x.presentation() != &y.presentation()) {
    throw DomainError("elements belong to different presentations");
  }
}

}  // namespace

Element Element::identity(const Presentation& p) {
  return Element(p, std::vector<std::vector<uint16_t>>(
                        static_cast<size_t>(p.rank())));
}

Element::Element(const Presentation& p,
                 std::vector<std::vector<uint16_t>> words)
    : pres_(&p), words_(std::move(words)) {
  if (static_cast<int>(words_.size()) != p.rank()) {
    throw DimensionError("element has " + std::to_string(words_.size()) +
                         " words for a rank-" + std::to_string(p.rank()) +
                         " presentation");
  }
  for (size_t c = 0; c < words_.size(); ++c) {
    for (uint16_t idx : words_[c]) {
      if (idx >= p.alphabet_size(static_cast<int>(c) + 1)) {
        throw DomainError("letter index out of range in color " +
                          std::to_string(c + 1));
      }
    }
  }
}

Degree Element::degree() const {
  std::vector<uint32_t> comps(words_.size());
  for (size_t c = 0; c < words_.size(); ++c) {
    comps[c] = static_cast<uint32_t>(words_[c].size());
  }
  return Degree(std::move(comps));
}

bool Element::is_identity() const {
  for (const auto& w : words_) {
    if (!w.empty()) return false;
  }
  return true;
}

uint64_t Element::length() const {
  uint64_t n = 0;
  for (const auto& w : words_) n += w.size();
  return n;
}

Letter Element::letter_at(int color, size_t pos) const {
  return Letter{static_cast<uint16_t>(color),
                words_[static_cast<size_t>(color - 1)][pos]};
}

Element from_word(const Presentation& p, const std::vector<Letter>& letters) {
  std::vector<Letter> w = letters;
  for (const Letter& l : w) {
    if (l.color < 1 || l.color > p.rank() ||
        l.index >= p.alphabet_size(l.color)) {
      throw DomainError("letter out of range for presentation");
    }
  }
  // leftmost-descending-pair sorting; after a swap the next descent cannot
  // be left of the previous position minus one
  size_t i = 0;
  while (w.size() > 1 && i + 1 < w.size()) {
    if (w[i].color > w[i + 1].color) {
      auto [v2, u2] = p.square(w[i], w[i + 1]);
      w[i] = v2;
      w[i + 1] = u2;
      i = i > 0 ? i - 1 : 0;
    } else {
      ++i;
    }
  }
  std::vector<std::vector<uint16_t>> words(static_cast<size_t>(p.rank()));
  for (const Letter& l : w) {
    words[static_cast<size_t>(l.color - 1)].push_back(l.index);
  }
  return Element(p, std::move(words));
}

Element from_names(const Presentation& p,
                   const std::vector<std::string>& names) {
  std::vector<Letter> letters;
  letters.reserve(names.size());
  for (const auto& n : names) letters.push_back(p.letter(n));
  return from_word(p, letters);
}

Degree degree(const Element& x) { return x.degree(); }

Element multiply(const Element& x, const Element& y) {
  require_same_presentation(x, y);
  if (x.is_identity()) return y;
  if (y.is_identity()) return x;
  const Presentation& p = x.presentation();
  std::vector<Letter> seq;
  seq.reserve(x.length() + y.length());
  auto append = [&seq](const Element& e) {
    const auto& ws = e.words();
    for (size_t c = 0; c < ws.size(); ++c) {
      for (uint16_t idx : ws[c]) {
        seq.push_back(Letter{static_cast<uint16_t>(c + 1), idx});
      }
    }
  };
  append(x);
  append(y);
  return from_word(p, seq);
}

namespace {

// removes the head color-`color` atom from `words`, commuting it left
// through the lower colors; returns the letter that reaches the front
Letter pop_inplace(const Presentation& p,
                   std::vector<std::vector<uint16_t>>& words, int color) {
  auto& wc = words[static_cast<size_t>(color - 1)];
  Letter v{static_cast<uint16_t>(color), wc.front()};
  wc.erase(wc.begin());
  for (int j = color - 1; j >= 1; --j) {
    auto& wj = words[static_cast<size_t>(j - 1)];
    for (size_t t = wj.size(); t-- > 0;) {
      Letter u{static_cast<uint16_t>(j), wj[t]};
      auto [v2, u2] = p.square(u, v);
      wj[t] = u2.index;
      v = v2;
    }
  }
  return v;
}

}  // namespace

std::pair<Letter, Element> pop_atom(const Element& x, int color) {
  const Presentation& p = x.presentation();
  if (color < 1 || color > p.rank()) {
    throw DomainError("pop_atom color out of range");
  }
  auto words = x.words();
  if (words[static_cast<size_t>(color - 1)].empty()) {
    throw DomainError("pop_atom: element has no atoms of color " +
                      std::to_string(color));
  }
  Letter v = pop_inplace(p, words, color);
  return {v, Element(p, std::move(words))};
}

std::pair<Element, Element> factor(const Element& x, const Degree& m) {
  const Presentation& p = x.presentation();
  if (m.rank() != p.rank()) {
    throw DimensionError("factor degree rank mismatch");
  }
  if (!leq(m, x.degree())) {
    throw DomainError("factor: degree " + to_string(m) +
                      " exceeds element degree " + to_string(x.degree()));
  }
  std::vector<std::vector<uint16_t>> head(static_cast<size_t>(p.rank()));
  auto rest = x.words();
  for (int c = 1; c <= p.rank(); ++c) {
    auto& hc = head[static_cast<size_t>(c - 1)];
    hc.reserve(m[c - 1]);
    for (uint32_t t = 0; t < m[c - 1]; ++t) {
      hc.push_back(pop_inplace(p, rest, c).index);
    }
  }
  return {Element(p, std::move(head)), Element(p, std::move(rest))};
}

Element levi_interpolant(const Element& x, const Element& y, const Element& u,
                         const Element& v) {
  require_same_presentation(x, y);
  require_same_presentation(x, u);
  require_same_presentation(x, v);
  if (!leq(u.degree(), x.degree())) {
    throw DomainError("levi_interpolant: degree(x) is not >= degree(u)");
  }
  if (multiply(x, y) != multiply(u, v)) {
    throw DomainError("levi_interpolant: xy != uv");
  }
  auto [head, t] = factor(x, u.degree());
  if (head != u) {
    throw DomainError("levi_interpolant: x does not extend u");
  }
  return t;
}

std::string render_lines(const Element& x) {
  const Presentation& p = x.presentation();
  std::ostringstream out;
  for (int c = 1; c <= p.rank(); ++c) {
    out << "color " << c << ":";
    for (uint16_t idx : x.words()[static_cast<size_t>(c - 1)]) {
      out << " " << p.name(Letter{static_cast<uint16_t>(c), idx});
    }
    out << "\n";
  }
  return out.str();
}

std::string render_inline(const Element& x) {
  if (x.is_identity()) return ".";
  const Presentation& p = x.presentation();
  std::string out;
  for (int c = 1; c <= p.rank(); ++c) {
    for (uint16_t idx : x.words()[static_cast<size_t>(c - 1)]) {
      if (!out.empty()) out += " ";
      out += p.name(Letter{static_cast<uint16_t>(c), idx});
    }
  }
  return out;
}

std::string render_grid(const Element& x) {
  const Presentation& p = x.presentation();
  if (p.rank() != 2) {
    throw DomainError("grid rendering needs a rank-2 presentation");
  }
  uint32_t m = x.degree()[0], n = x.degree()[1];
  // horiz[j] = the m color-1 labels at height j; vert[i] = the n color-2
  // labels at horizontal offset i
  std::vector<std::vector<std::string>> horiz(n + 1), vert(m + 1);
  for (uint32_t j = 0; j <= n; ++j) {
    Element rest = factor(x, Degree(std::vector<uint32_t>{0, j})).second;
    Element row = factor(rest, Degree(std::vector<uint32_t>{m, 0})).first;
    for (uint16_t idx : row.words()[0]) {
      horiz[j].push_back(p.name(Letter{1, idx}));
    }
  }
  for (uint32_t i = 0; i <= m; ++i) {
    Element rest = factor(x, Degree(std::vector<uint32_t>{i, 0})).second;
    Element col = factor(rest, Degree(std::vector<uint32_t>{0, n})).first;
    for (uint16_t idx : col.words()[1]) {
      vert[i].push_back(p.name(Letter{2, idx}));
    }
  }
  size_t width = 1;
  for (const auto& row : horiz) {
    for (const auto& s : row) width = std::max(width, s.size());
  }
  for (const auto& col : vert) {
    for (const auto& s : col) width = std::max(width, s.size());
  }
  auto pad = [width](const std::string& s, char fill) {
    std::string out = s;
    while (out.size() < width) {
      out += fill;
      if (out.size() < width) out.insert(out.begin(), fill);
    }
    return out;
  };
  std::ostringstream out;
  for (uint32_t line = 0; line <= 2 * n; ++line) {
    if (line % 2 == 0) {
      uint32_t j = n - line / 2;
      out << "+";
      for (uint32_t i = 0; i < m; ++i) {
        out << "-" << pad(horiz[j][i], '-') << "-+";
      }
      out << "\n";
    } else {
      uint32_t j = n - 1 - (line - 1) / 2;
      for (uint32_t i = 0; i <= m; ++i) {
        if (i > 0) out << "   ";
        out << pad(vert[i][j], ' ');
      }
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace kmonoid
