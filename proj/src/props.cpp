#include "kmonoid/props.hpp"

#include "kmonoid/codes.hpp"
#include "kmonoid/errors.hpp"

namespace kmonoid {

uint64_t rand_below(std::mt19937_64& rng, uint64_t n) {
  return n == 0 ? 0 : rng() % n;
}

Element random_element(const Presentation& p, std::mt19937_64& rng,
                       uint32_t max_component) {
  std::vector<std::vector<uint16_t>> words(static_cast<size_t>(p.rank()));
  for (int c = 1; c <= p.rank(); ++c) {
    if (p.alphabet_size(c) == 0) continue;
    uint64_t len = rand_below(rng, max_component + 1);
    for (uint64_t t = 0; t < len; ++t) {
      words[static_cast<size_t>(c - 1)].push_back(static_cast<uint16_t>(
          rand_below(rng, static_cast<uint64_t>(p.alphabet_size(c)))));
    }
  }
  return Element(p, std::move(words));
}

namespace {

Degree random_degree_below(const Degree& bound, std::mt19937_64& rng) {
  std::vector<uint32_t> comps(static_cast<size_t>(bound.rank()));
  for (int i = 0; i < bound.rank(); ++i) {
    comps[static_cast<size_t>(i)] =
        static_cast<uint32_t>(rand_below(rng, bound[i] + 1));
  }
  return Degree(std::move(comps));
}

}  // namespace

LawReport check_algebraic_laws(const Presentation& p, uint64_t cases,
                               uint64_t seed, uint32_t max_component) {
  LawReport rep;
  std::mt19937_64 rng(seed);
  auto fail = [&rep](const std::string& what, const Element& x,
                     const Element& y) {
    if (rep.failures.size() < 32) {
      rep.failures.push_back(what + " at x=" + render_inline(x) +
                             " y=" + render_inline(y));
    }
  };
  for (uint64_t t = 0; t < cases; ++t) {
    ++rep.cases;
    Element x = random_element(p, rng, max_component);
    Element y = random_element(p, rng, max_component);
    Element z = multiply(x, y);

    if (z.degree() != x.degree() + y.degree()) {
      fail("degree additivity", x, y);
      continue;
    }
    if (z.is_identity() && !(x.is_identity() && y.is_identity())) {
      fail("conicality", x, y);
    }
    // cancellation through unique factorization
    {
      auto [head, tail] = factor(z, x.degree());
      if (head != x || tail != y) fail("cancellativity", x, y);
    }
    // explicit two-sided implication on a same-degree candidate
    {
      Element y2 = y;
      if (rand_below(rng, 2) == 1) {
        auto ws = y.words();
        for (size_t c = 0; c < ws.size(); ++c) {
          for (auto& idx : ws[c]) {
            idx = static_cast<uint16_t>(rand_below(
                rng,
                static_cast<uint64_t>(p.alphabet_size(static_cast<int>(c) + 1))));
          }
        }
        y2 = Element(p, std::move(ws));
      }
      if (multiply(x, y) == multiply(x, y2) && y != y2) {
        fail("left cancellation", x, y);
      }
      if (multiply(y, x) == multiply(y2, x) && y != y2) {
        fail("right cancellation", x, y);
      }
    }
    // Levi interpolation round trip on a comparable split
    {
      Degree m = random_degree_below(meet(x.degree(), z.degree()), rng);
      auto [u, v] = factor(z, m);
      Element interp = levi_interpolant(x, y, u, v);
      if (multiply(u, interp) != x || multiply(interp, y) != v) {
        fail("levi interpolation", x, y);
      }
    }
    // equidivisibility via the join when the split degrees are incomparable
    {
      Degree m = random_degree_below(z.degree(), rng);
      auto [u, v] = factor(z, m);
      Degree j = join(x.degree(), u.degree());
      Element w = factor(z, j).first;
      if (!divides(x, w) || !divides(u, w)) {
        fail("equidivisibility join path", x, u);
      }
      (void)v;
    }
  }
  return rep;
}

}  // namespace kmonoid
