#include "kmonoid/codes.hpp"

#include <algorithm>
#include <sstream>

#include "kmonoid/errors.hpp"

namespace kmonoid {

std::optional<Element> divides(const Element& d, const Element& c) {
  if (&d.presentation() != &c.presentation()) {
    throw DomainError("divides: elements of different presentations");
  }
  if (!leq(d.degree(), c.degree())) return std::nullopt;
  auto [head, rest] = factor(c, d.degree());
  if (head != d) return std::nullopt;
  return rest;
}

Code enumerate_degree(const Presentation& p, const Degree& m) {
  if (m.rank() != p.rank()) {
    throw DimensionError("enumerate_degree rank mismatch");
  }
  for (int c = 1; c <= p.rank(); ++c) {
    if (m[c - 1] > 0 && p.alphabet_size(c) == 0) return {};
  }
  // mixed-radix odometer, last slot fastest; emission order is already the
  // lexicographic element order
  std::vector<int> radix;
  for (int c = 1; c <= p.rank(); ++c) {
    for (uint32_t t = 0; t < m[c - 1]; ++t) radix.push_back(p.alphabet_size(c));
  }
  std::vector<uint16_t> digits(radix.size(), 0);
  Code out;
  while (true) {
    std::vector<std::vector<uint16_t>> words(static_cast<size_t>(p.rank()));
    size_t s = 0;
    for (int c = 1; c <= p.rank(); ++c) {
      auto& w = words[static_cast<size_t>(c - 1)];
      w.reserve(m[c - 1]);
      for (uint32_t t = 0; t < m[c - 1]; ++t) w.push_back(digits[s++]);
    }
    out.push_back(Element(p, std::move(words)));
    int i = static_cast<int>(digits.size()) - 1;
    while (i >= 0 && digits[static_cast<size_t>(i)] + 1 ==
                         radix[static_cast<size_t>(i)]) {
      digits[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++digits[static_cast<size_t>(i)];
  }
  return out;
}

Code common_upper(const Element& a, const Element& b) {
  if (&a.presentation() != &b.presentation()) {
    throw DomainError("common_upper: elements of different presentations");
  }
  const Presentation& p = a.presentation();
  Degree j = join(a.degree(), b.degree());
  Degree ext = *diff(j, a.degree());
  Code out;
  for (const Element& x : enumerate_degree(p, ext)) {
    Element c = multiply(a, x);
    if (divides(b, c)) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_comparable(const Element& a, const Element& b) {
  return !common_upper(a, b).empty();
}

bool is_prefix_code(const std::vector<Element>& xs) {
  for (size_t i = 0; i < xs.size(); ++i) {
    for (size_t j = i + 1; j < xs.size(); ++j) {
      if (is_comparable(xs[i], xs[j])) return false;
    }
  }
  return true;
}

bool is_maximal_code(const Presentation& p, const Code& code) {
  if (!is_strict(p)) {
    throw DomainError("maximality test requires a strict presentation");
  }
  if (code.empty()) return false;
  Degree m = Degree::zero(p.rank());
  for (const Element& x : code) m = join(m, x.degree());
  for (const Element& c : enumerate_degree(p, m)) {
    bool covered = false;
    for (const Element& x : code) {
      if (divides(x, c)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

Code expand_code(const Code& code, const Element& x, int color) {
  auto it = std::find(code.begin(), code.end(), x);
  if (it == code.end()) {
    throw DomainError("expand_code: element is not a member of the code");
  }
  const Presentation& p = x.presentation();
  if (color < 1 || color > p.rank() || p.alphabet_size(color) == 0) {
    throw DomainError("expand_code: no atoms of color " + std::to_string(color));
  }
  Code out;
  for (const Element& y : code) {
    if (y != x) out.push_back(y);
  }
  for (int i = 0; i < p.alphabet_size(color); ++i) {
    Element atom = from_word(
        p, {Letter{static_cast<uint16_t>(color), static_cast<uint16_t>(i)}});
    out.push_back(multiply(x, atom));
  }
  std::sort(out.begin(), out.end());
  return out;
}

AlignmentReport alignment_probe(const Presentation& p, const Degree& bound) {
  AlignmentReport rep;
  rep.bound = bound;
  std::vector<Element> all;
  for (const Degree& d : degrees_below(bound)) {
    Code c = enumerate_degree(p, d);
    all.insert(all.end(), c.begin(), c.end());
  }
  for (size_t i = 0; i < all.size(); ++i) {
    for (size_t j = 0; j < all.size(); ++j) {
      Code up = common_upper(all[i], all[j]);
      ++rep.pairs;
      if (up.size() > rep.max_upper) {
        rep.max_upper = up.size();
        rep.witness =
            render_inline(all[i]) + " | " + render_inline(all[j]);
      }
    }
  }
  return rep;
}

Code parse_code(const Presentation& p, const std::string& text) {
  Code out;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto pos = raw.find('#');
    std::string line = pos == std::string::npos ? raw : raw.substr(0, pos);
    std::vector<std::string> names;
    std::stringstream ss(line);
    std::string tok;
    while (ss >> tok) names.push_back(tok);
    if (names.empty()) continue;
    if (names.size() == 1 && names[0] == ".") {
      out.push_back(Element::identity(p));
      continue;
    }
    try {
      out.push_back(from_names(p, names));
    } catch (const DomainError& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (!is_prefix_code(out)) {
    throw DomainError("code file does not describe a prefix code");
  }
  return out;
}

}  // namespace kmonoid
