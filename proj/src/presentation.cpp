#include "kmonoid/presentation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "kmonoid/errors.hpp"

namespace kmonoid {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace

std::optional<Letter> Presentation::find(const std::string& name) const {
  for (size_t c = 0; c < alphabets_.size(); ++c) {
    const auto& alpha = alphabets_[c];
    for (size_t i = 0; i < alpha.size(); ++i) {
      if (alpha[i] == name) {
        return Letter{static_cast<uint16_t>(c + 1), static_cast<uint16_t>(i)};
      }
    }
  }
  return std::nullopt;
}

Letter Presentation::letter(const std::string& name) const {
  auto l = find(name);
  if (!l) throw DomainError("unknown letter '" + name + "'");
  return *l;
}

uint32_t Presentation::pack(Letter u, Letter v, uint32_t* slot) const {
  // slot index into squares_[(i-1)*k+(j-1)]
  int k = rank();
  *slot = static_cast<uint32_t>((u.color - 1) * k + (v.color - 1));
  return static_cast<uint32_t>(u.index) *
             static_cast<uint32_t>(alphabet_size(v.color)) +
         v.index;
}

bool Presentation::has_square(Letter u, Letter v) const {
  uint32_t slot;
  uint32_t cell = pack(u, v, &slot);
  return squares_[slot][cell] != kMissing;
}

std::pair<Letter, Letter> Presentation::square(Letter u, Letter v) const {
  uint32_t slot;
  uint32_t cell = pack(u, v, &slot);
  uint32_t packed = squares_[slot][cell];
  if (packed == kMissing) {
    throw DomainError("no square for pair (" + name(u) + ", " + name(v) + ")");
  }
  Letter v2{v.color, static_cast<uint16_t>(packed >> 16)};
  Letter u2{u.color, static_cast<uint16_t>(packed & 0xFFFFu)};
  return {v2, u2};
}

void Presentation::set_square(Letter u, Letter v, Letter v2, Letter u2,
                              bool overwrite) {
  uint32_t slot;
  uint32_t cell = pack(u, v, &slot);
  if (!overwrite && squares_[slot][cell] != kMissing) return;
  squares_[slot][cell] =
      (static_cast<uint32_t>(v2.index) << 16) | static_cast<uint32_t>(u2.index);
}

bool Presentation::operator==(const Presentation& o) const {
  return alphabets_ == o.alphabets_ && squares_ == o.squares_;
}

Presentation Presentation::free_monoid(const std::vector<std::string>& names) {
  return from_data({names}, {}, false);
}

Presentation Presentation::from_data(
    std::vector<std::vector<std::string>> alphabets,
    const std::vector<SquareRule>& squares, bool commute_fill) {
  Presentation p;
  p.alphabets_ = std::move(alphabets);
  {
    std::set<std::string> seen;
    for (const auto& alpha : p.alphabets_) {
      for (const auto& n : alpha) {
        if (n.empty()) throw DomainError("empty letter name");
        if (!seen.insert(n).second) throw DomainError("duplicate letter '" + n + "'");
      }
    }
  }
  int k = p.rank();
  p.squares_.assign(static_cast<size_t>(k) * static_cast<size_t>(k), {});
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) {
      if (i == j) continue;
      p.squares_[static_cast<size_t>((i - 1) * k + (j - 1))].assign(
          static_cast<size_t>(p.alphabet_size(i)) *
              static_cast<size_t>(p.alphabet_size(j)),
          kMissing);
    }
  }

  for (const auto& r : squares) {
    Letter u = p.letter(r.u), v = p.letter(r.v);
    Letter v2 = p.letter(r.v_out), u2 = p.letter(r.u_out);
    if (u.color == v.color) {
      throw DomainError("square (" + r.u + ", " + r.v + ") is not cross-color");
    }
    if (v2.color != v.color || u2.color != u.color) {
      throw DomainError("square " + r.u + " " + r.v + " -> " + r.v_out + " " +
                        r.u_out + " does not preserve colors");
    }
    if (p.has_square(u, v) && p.square(u, v) != std::make_pair(v2, u2)) {
      throw DomainError("conflicting squares for pair (" + r.u + ", " + r.v + ")");
    }
    p.set_square(u, v, v2, u2, true);
    p.set_square(v2, u2, u, v, false);  // mutual inverse, never clobbering
  }

  if (commute_fill) {
    // Pass 1: both orientations free -> commuting square.
    for (int i = 1; i <= k; ++i) {
      for (int j = i + 1; j <= k; ++j) {
        for (int a = 0; a < p.alphabet_size(i); ++a) {
          for (int b = 0; b < p.alphabet_size(j); ++b) {
            Letter u{static_cast<uint16_t>(i), static_cast<uint16_t>(a)};
            Letter v{static_cast<uint16_t>(j), static_cast<uint16_t>(b)};
            if (!p.has_square(u, v) && !p.has_square(v, u)) {
              p.set_square(u, v, v, u, false);
              p.set_square(v, u, u, v, false);
            }
          }
        }
      }
    }
    // Pass 2: leftover keys matched against leftover targets, letter-name
    // lexicographic on both sides.
    for (int i = 1; i <= k; ++i) {
      for (int j = i + 1; j <= k; ++j) {
        auto by_names = [&p](const std::pair<Letter, Letter>& x,
                             const std::pair<Letter, Letter>& y) {
          const std::string &x1 = p.name(x.first), &y1 = p.name(y.first);
          if (x1 != y1) return x1 < y1;
          return p.name(x.second) < p.name(y.second);
        };
        std::vector<std::pair<Letter, Letter>> keys;
        std::set<std::pair<Letter, Letter>> used;
        for (int a = 0; a < p.alphabet_size(i); ++a) {
          for (int b = 0; b < p.alphabet_size(j); ++b) {
            Letter u{static_cast<uint16_t>(i), static_cast<uint16_t>(a)};
            Letter v{static_cast<uint16_t>(j), static_cast<uint16_t>(b)};
            if (p.has_square(u, v)) {
              used.insert(p.square(u, v));
            } else {
              keys.push_back({u, v});
            }
          }
        }
        std::vector<std::pair<Letter, Letter>> vals;
        for (int b = 0; b < p.alphabet_size(j); ++b) {
          for (int a = 0; a < p.alphabet_size(i); ++a) {
            Letter v{static_cast<uint16_t>(j), static_cast<uint16_t>(b)};
            Letter u{static_cast<uint16_t>(i), static_cast<uint16_t>(a)};
            if (!used.count({v, u})) vals.push_back({v, u});
          }
        }
        std::sort(keys.begin(), keys.end(), by_names);
        std::sort(vals.begin(), vals.end(), by_names);
        size_t n = std::min(keys.size(), vals.size());
        for (size_t t = 0; t < n; ++t) {
          p.set_square(keys[t].first, keys[t].second, vals[t].first,
                       vals[t].second, false);
          p.set_square(vals[t].first, vals[t].second, keys[t].first,
                       keys[t].second, false);
        }
      }
    }
  }
  return p;
}

Presentation parse_presentation(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  int k = -1;
  std::vector<std::vector<std::string>> alphabets;
  std::vector<SquareRule> rules;
  bool commute = false;

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip_comment(raw);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0] == "k" && toks.size() >= 3 && toks[1] == "=") {
      if (k >= 0) throw ParseError("repeated k header", lineno);
      try {
        k = std::stoi(toks[2]);
      } catch (const std::exception&) {
        throw ParseError("bad k value '" + toks[2] + "'", lineno);
      }
      if (k < 0 || toks.size() != 3) throw ParseError("bad k header", lineno);
      alphabets.assign(static_cast<size_t>(k), {});
    } else if (toks[0] == "alphabet") {
      if (k < 0) throw ParseError("alphabet before k header", lineno);
      if (toks.size() < 2 || toks[1].back() != ':') {
        throw ParseError("expected 'alphabet <i>: names...'", lineno);
      }
      int idx = 0;
      try {
        idx = std::stoi(toks[1].substr(0, toks[1].size() - 1));
      } catch (const std::exception&) {
        throw ParseError("bad alphabet index '" + toks[1] + "'", lineno);
      }
      if (idx < 1 || idx > k) throw ParseError("alphabet index out of range", lineno);
      auto& alpha = alphabets[static_cast<size_t>(idx - 1)];
      if (!alpha.empty()) throw ParseError("alphabet " + std::to_string(idx) + " given twice", lineno);
      alpha.assign(toks.begin() + 2, toks.end());
    } else if (toks[0] == "square:") {
      if (toks.size() != 6 || toks[3] != "->") {
        throw ParseError("expected 'square: u v -> v' u''", lineno);
      }
      rules.push_back(SquareRule{toks[1], toks[2], toks[4], toks[5]});
    } else if (toks[0] == "commute:") {
      if (toks.size() != 2 || toks[1] != "*") {
        throw ParseError("expected 'commute: *'", lineno);
      }
      commute = true;
    } else {
      throw ParseError("unrecognized line '" + toks[0] + "'", lineno);
    }
  }
  if (k < 0) throw ParseError("missing 'k = <int>' header", lineno == 0 ? 1 : lineno);

  try {
    return Presentation::from_data(std::move(alphabets), rules, commute);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), lineno);
  }
}

std::string render_presentation(const Presentation& p) {
  std::ostringstream out;
  int k = p.rank();
  out << "k = " << k << "\n";
  for (int i = 1; i <= k; ++i) {
    out << "alphabet " << i << ":";
    for (const auto& n : p.alphabet(i)) out << " " << n;
    out << "\n";
  }
  bool any_commuting = false;
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      for (int a = 0; a < p.alphabet_size(i); ++a) {
        for (int b = 0; b < p.alphabet_size(j); ++b) {
          Letter u{static_cast<uint16_t>(i), static_cast<uint16_t>(a)};
          Letter v{static_cast<uint16_t>(j), static_cast<uint16_t>(b)};
          if (!p.has_square(u, v)) continue;
          auto [v2, u2] = p.square(u, v);
          if (v2 == v && u2 == u) {
            any_commuting = true;
          } else {
            out << "square: " << p.name(u) << " " << p.name(v) << " -> "
                << p.name(v2) << " " << p.name(u2) << "\n";
          }
        }
      }
    }
  }
  if (any_commuting) out << "commute: *\n";
  return out.str();
}

Presentation product(const Presentation& p, const Presentation& q) {
  std::vector<std::vector<std::string>> alphabets = p.alphabets_;
  alphabets.insert(alphabets.end(), q.alphabets_.begin(), q.alphabets_.end());
  std::vector<SquareRule> rules;
  auto copy_noncommuting = [&rules](const Presentation& src) {
    int k = src.rank();
    for (int i = 1; i <= k; ++i) {
      for (int j = i + 1; j <= k; ++j) {
        for (int a = 0; a < src.alphabet_size(i); ++a) {
          for (int b = 0; b < src.alphabet_size(j); ++b) {
            Letter u{static_cast<uint16_t>(i), static_cast<uint16_t>(a)};
            Letter v{static_cast<uint16_t>(j), static_cast<uint16_t>(b)};
            if (!src.has_square(u, v)) continue;
            auto [v2, u2] = src.square(u, v);
            if (v2 == v && u2 == u) continue;
            rules.push_back(SquareRule{src.name(u), src.name(v), src.name(v2),
                                       src.name(u2)});
          }
        }
      }
    }
  };
  copy_noncommuting(p);
  copy_noncommuting(q);
  // cross pairs (and any commuting pairs inside the factors) commute
  return Presentation::from_data(std::move(alphabets), rules, true);
}

ValidationReport validate_squares(const Presentation& p) {
  ValidationReport rep;
  int k = p.rank();
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) {
      if (i == j) continue;
      for (int a = 0; a < p.alphabet_size(i); ++a) {
        for (int b = 0; b < p.alphabet_size(j); ++b) {
          Letter u{static_cast<uint16_t>(i), static_cast<uint16_t>(a)};
          Letter v{static_cast<uint16_t>(j), static_cast<uint16_t>(b)};
          if (!p.has_square(u, v)) {
            rep.failures.push_back(
                {"incomplete", p.name(u) + " " + p.name(v)});
            continue;
          }
          auto [v2, u2] = p.square(u, v);
          if (!p.has_square(v2, u2) ||
              p.square(v2, u2) != std::make_pair(u, v)) {
            std::string back = p.has_square(v2, u2)
                                   ? p.name(p.square(v2, u2).first) + " " +
                                         p.name(p.square(v2, u2).second)
                                   : std::string("missing");
            rep.failures.push_back(
                {"mutual-inverse", p.name(u) + " " + p.name(v) + " -> " +
                                       p.name(v2) + " " + p.name(u2) +
                                       " but reverse gives " + back});
          }
        }
      }
    }
  }
  return rep;
}

ValidationReport validate_associativity(const Presentation& p) {
  ValidationReport rep;
  int k = p.rank();
  auto fmt = [&p](Letter x, Letter y, Letter z) {
    return "(" + p.name(x) + "," + p.name(y) + "," + p.name(z) + ")";
  };
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      for (int l = j + 1; l <= k; ++l) {
        for (int fa = 0; fa < p.alphabet_size(i); ++fa) {
          for (int ga = 0; ga < p.alphabet_size(j); ++ga) {
            for (int ha = 0; ha < p.alphabet_size(l); ++ha) {
              Letter f{static_cast<uint16_t>(i), static_cast<uint16_t>(fa)};
              Letter g{static_cast<uint16_t>(j), static_cast<uint16_t>(ga)};
              Letter h{static_cast<uint16_t>(l), static_cast<uint16_t>(ha)};
              // route A: fg = g1 f1, f1 h = h1 f2, g1 h1 = h2 g2
              auto [g1, f1] = p.square(f, g);
              auto [h1, f2] = p.square(f1, h);
              auto [h2, g2] = p.square(g1, h1);
              // route B: gh = H1 G1, f H1 = H2 F1, F1 G1 = G2 F2
              auto [H1, G1] = p.square(g, h);
              auto [H2, F1] = p.square(f, H1);
              auto [G2, F2] = p.square(F1, G1);
              if (f2 != F2 || g2 != G2 || h2 != H2) {
                rep.failures.push_back(
                    {"cube", fmt(f, g, h) + ": " + fmt(h2, g2, f2) + " vs " +
                                 fmt(H2, G2, F2)});
              }
            }
          }
        }
      }
    }
  }
  return rep;
}

bool is_strict(const Presentation& p) {
  for (int i = 1; i <= p.rank(); ++i) {
    if (p.alphabet_size(i) == 0) return false;
  }
  return true;
}

Presentation strictify(const Presentation& p) {
  std::vector<std::vector<std::string>> alphabets;
  for (int i = 1; i <= p.rank(); ++i) {
    if (p.alphabet_size(i) > 0) alphabets.push_back(p.alphabet(i));
  }
  std::vector<SquareRule> rules;
  for (int i = 1; i <= p.rank(); ++i) {
    for (int j = i + 1; j <= p.rank(); ++j) {
      for (int a = 0; a < p.alphabet_size(i); ++a) {
        for (int b = 0; b < p.alphabet_size(j); ++b) {
          Letter u{static_cast<uint16_t>(i), static_cast<uint16_t>(a)};
          Letter v{static_cast<uint16_t>(j), static_cast<uint16_t>(b)};
          if (!p.has_square(u, v)) continue;
          auto [v2, u2] = p.square(u, v);
          if (v2 == v && u2 == u) continue;
          rules.push_back(
              SquareRule{p.name(u), p.name(v), p.name(v2), p.name(u2)});
        }
      }
    }
  }
  return Presentation::from_data(std::move(alphabets), rules, true);
}

bool is_commutative_cross(const Presentation& p) {
  int k = p.rank();
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) {
      if (i == j) continue;
      for (int a = 0; a < p.alphabet_size(i); ++a) {
        for (int b = 0; b < p.alphabet_size(j); ++b) {
          Letter u{static_cast<uint16_t>(i), static_cast<uint16_t>(a)};
          Letter v{static_cast<uint16_t>(j), static_cast<uint16_t>(b)};
          if (!p.has_square(u, v)) return false;
          if (p.square(u, v) != std::make_pair(v, u)) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace kmonoid
