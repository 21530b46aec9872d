#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "kmonoid/errors.hpp"
#include "kmonoid/selfsim.hpp"

using namespace kmonoid;

namespace {

Degree d(std::vector<uint32_t> v) { return Degree(std::move(v)); }

GroupWord w(std::vector<int32_t> syms) { return GroupWord{std::move(syms)}; }

}  // namespace

TEST_CASE("free reduction") {
  CHECK(reduced(w({1, -1})) == w({}));
  CHECK(reduced(w({1, 2, -2, -1})) == w({}));
  CHECK(reduced(w({1, -2, 2, 1})) == w({1, 1}));
  CHECK(gw_concat(w({1, 2}), w({-2, 1})) == w({1, 1}));
  CHECK(gw_inverse(w({1, 2})) == w({-2, -1}));
  CHECK(reduced_words(1, 2).size() == 5);
  CHECK(reduced_words(2, 3).size() == 1 + 4 + 12 + 36);
}

TEST_CASE("the adding machine increments with carry") {
  Presentation base;
  SelfSimilarAction a = testing::parse_fixture_action("adding-machine", base);
  CHECK(validate_action(a).ok());

  auto [img, rest] = act_word(a, w({1}), from_names(base, {"0", "0"}));
  CHECK(render_inline(img) == "1 0");
  CHECK(rest.empty());

  auto [img2, rest2] = act_word(a, w({1}), from_names(base, {"1", "1"}));
  CHECK(render_inline(img2) == "0 0");
  CHECK(rest2 == w({1}));

  // identity word acts trivially
  Element x = from_names(base, {"0", "1"});
  auto [img3, rest3] = act_word(a, w({}), x);
  CHECK(img3 == x);
  CHECK(rest3.empty());

  // g then g^-1 is the identity on every short string
  for (const Degree& m : degrees_below(d({3}))) {
    for (const Element& u : enumerate_degree(base, m)) {
      auto [v, r] = act_word(a, w({1}), u);
      auto [back, r2] = act_word(a, w({-1}), v);
      CHECK(back == u);
      CHECK(gw_concat(r2, gw_inverse(r2)) == w({}));
      (void)r;
    }
  }
}

TEST_CASE("zappa-szep multiplication") {
  Presentation base;
  SelfSimilarAction a = testing::parse_fixture_action("adding-machine", base);
  Element zero = from_names(base, {"0"});
  Element one = from_names(base, {"1"});
  GeneralizedElement u{zero, w({})}, v{one, w({})};
  CHECK(zs_multiply(a, u, v) ==
        GeneralizedElement{from_names(base, {"0", "1"}), w({})});
  // (eps, g) . (0, eps) = (1, eps)
  CHECK(zs_multiply(a, {Element::identity(base), w({1})}, u) ==
        GeneralizedElement{one, w({})});
  // pure group parts multiply freely
  CHECK(zs_multiply(a, {Element::identity(base), w({1})},
                    {Element::identity(base), w({-1})}) ==
        GeneralizedElement{Element::identity(base), w({})});
}

TEST_CASE("zappa-szep coherence laws hold exhaustively at small degree") {
  for (const char* name : {"adding-machine", "rsv"}) {
    Presentation base;
    SelfSimilarAction a = testing::parse_fixture_action(name, base);
    std::vector<GroupWord> units = reduced_words(a.num_generators(), 1);
    Degree bound(std::vector<uint32_t>(static_cast<size_t>(base.rank()), 2));
    std::vector<Element> elements;
    for (const Degree& m : degrees_below(bound)) {
      if (m.total() > 2) continue;
      Code c = enumerate_degree(base, m);
      elements.insert(elements.end(), c.begin(), c.end());
    }
    for (const GroupWord& g : units) {
      for (const GroupWord& h : units) {
        for (const Element& u : elements) {
          // (gh) . u = g . (h . u) and (gh)|_u = (g|_{h.u})(h|_u)
          auto [hu, hrest] = act_word(a, h, u);
          auto [ghu, grest] = act_word(a, g, hu);
          auto [whole, wrest] = act_word(a, gw_concat(g, h), u);
          CHECK(whole == ghu);
          CHECK(wrest == gw_concat(grest, hrest));
          for (const Element& v : elements) {
            if ((u.degree() + v.degree()).total() > 2) continue;
            // g . (uv) = (g.u)((g|_u).v) and g|_{uv} = (g|_u)|_v
            auto [gu, ru] = act_word(a, g, u);
            auto [gv, rv] = act_word(a, ru, v);
            auto [guv, ruv] = act_word(a, g, multiply(u, v));
            CHECK(guv == multiply(gu, gv));
            CHECK(ruv == rv);
          }
        }
      }
    }
  }
}

TEST_CASE("relators expand to the triple-tree square map") {
  Presentation base;
  SelfSimilarAction a = testing::parse_fixture_action("rsv", base);
  CHECK(base.rank() == 2);
  CHECK(base.alphabet_size(1) == 6);
  CHECK(base.alphabet_size(2) == 8);
  CHECK(validate_squares(base).ok());

  // b1 c1 = c8 b2
  CHECK(base.square(base.letter("b1"), base.letter("c1")) ==
        std::make_pair(base.letter("c8"), base.letter("b2")));

  // 48 distinct squares in the color-ascending orientation
  int noncommuting = 0, total = 0;
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 8; ++j) {
      Letter u{1, static_cast<uint16_t>(i)}, v{2, static_cast<uint16_t>(j)};
      CHECK(base.has_square(u, v));
      ++total;
      if (base.square(u, v) != std::make_pair(v, u)) ++noncommuting;
    }
  }
  CHECK(total == 48);

  CHECK(validate_action(a).ok());
  // a1(c1) = c4 with restriction a2^-1
  CHECK(base.name(a.act_letter(1, base.letter("c1"))) == "c4");
  CHECK(a.rest_letter(1, base.letter("c1")) == w({-2}));
  // the consistent neighbour of the printed spot pair
  CHECK(base.name(a.act_letter(-2, base.letter("b4"))) == "b5");
}

TEST_CASE("exactly one inverse pairing keeps the triple-tree fixture coherent") {
  // letter inverses pair positionally (index i with i+n), so permuting the
  // second half of an alphabet realizes every candidate pairing
  const RsvData& data = rsv_data();
  const auto& relators_bc = data.bc_relators;
  const auto& relators_a = data.action_relators;

  std::vector<std::string> ainv = {"a3", "a4"};
  std::vector<std::string> binv = {"b4", "b5", "b6"};
  std::vector<std::string> cinv = {"c5", "c6", "c7", "c8"};
  std::sort(ainv.begin(), ainv.end());
  std::sort(binv.begin(), binv.end());
  std::sort(cinv.begin(), cinv.end());
  int coherent = 0;
  bool standard_is_coherent = false;
  do {
    do {
      do {
        std::vector<std::string> a = {"a1", "a2"};
        a.insert(a.end(), ainv.begin(), ainv.end());
        std::vector<std::string> b = {"b1", "b2", "b3"};
        b.insert(b.end(), binv.begin(), binv.end());
        std::vector<std::string> c = {"c1", "c2", "c3", "c4"};
        c.insert(c.end(), cinv.begin(), cinv.end());
        try {
          Presentation base = Presentation::from_data(
              {b, c}, squares_from_relators(b, c, relators_bc), false);
          if (!validate_squares(base).ok()) continue;
          SelfSimilarAction act = action_from_relators(base, a, relators_a);
          if (!validate_action(act).ok()) continue;
          ++coherent;
          if (ainv == std::vector<std::string>{"a3", "a4"} &&
              binv == std::vector<std::string>{"b4", "b5", "b6"} &&
              cinv == std::vector<std::string>{"c5", "c6", "c7", "c8"}) {
            standard_is_coherent = true;
          }
        } catch (const DomainError&) {
          // convention clash; not a coherent pairing
        }
      } while (std::next_permutation(cinv.begin(), cinv.end()));
    } while (std::next_permutation(binv.begin(), binv.end()));
  } while (std::next_permutation(ainv.begin(), ainv.end()));
  CHECK(coherent == 1);
  CHECK(standard_is_coherent);
}

TEST_CASE("corrupting one action entry is detected") {
  Presentation base;
  SelfSimilarAction a = testing::parse_fixture_action("rsv", base);
  // break a1 at b1: point it at the image of a1 at b2
  Letter b1 = base.letter("b1"), b2 = base.letter("b2");
  SelfSimilarAction fresh(base, {"a1", "a2"}, {"a3", "a4"});
  for (int g = 1; g <= 2; ++g) {
    for (int32_t s : {g, -g}) {
      for (int c = 1; c <= base.rank(); ++c) {
        for (int i = 0; i < base.alphabet_size(c); ++i) {
          Letter x{static_cast<uint16_t>(c), static_cast<uint16_t>(i)};
          Letter img = a.act_letter(s, x);
          if (s == 1 && x == b1) img = a.act_letter(1, b2);
          fresh.set_entry(s, x, img, a.rest_letter(s, x));
        }
      }
    }
  }
  ValidationReport rep = validate_action(fresh);
  CHECK_FALSE(rep.ok());
  bool square_witness = std::any_of(
      rep.failures.begin(), rep.failures.end(),
      [](const ValidationFailure& f) {
        return f.kind == "square" || f.kind == "not-bijective" ||
               f.kind == "inverse";
      });
  CHECK(square_witness);
}

TEST_CASE("windowed weak factorization") {
  Presentation base;
  SelfSimilarAction a = testing::parse_fixture_action("adding-machine", base);
  WfpReport rep = wfp_check(a, d({2}), 2);
  CHECK(rep.pass);
  CHECK(rep.failures.empty());

  // trivial group: factorization must be unique on the nose
  Presentation f2 = Presentation::free_monoid({"x", "y"});
  SelfSimilarAction trivial(f2, {"e"}, {});
  for (int c = 1; c <= f2.rank(); ++c) {
    for (int i = 0; i < f2.alphabet_size(c); ++i) {
      Letter x{static_cast<uint16_t>(c), static_cast<uint16_t>(i)};
      trivial.set_entry(1, x, x, w({}));
    }
  }
  trivial.derive_inverses();
  CHECK(validate_action(trivial).ok());
  WfpReport rep2 = wfp_check(trivial, d({2}), 0);
  CHECK(rep2.pass);
}

TEST_CASE("transversal factorization in the adding machine") {
  Presentation base;
  SelfSimilarAction a = testing::parse_fixture_action("adding-machine", base);
  std::vector<GroupWord> units = reduced_words(1, 3);
  // every (u, g) with |u| <= 3 arises exactly once as
  // (word over {0,1}) * (unit)
  for (const Degree& m : degrees_below(d({3}))) {
    for (const Element& u : enumerate_degree(base, m)) {
      for (const GroupWord& g : units) {
        int representations = 0;
        for (const Element& word : enumerate_degree(base, m)) {
          for (const GroupWord& h : units) {
            GeneralizedElement cand =
                zs_multiply(a, {word, w({})},
                            {Element::identity(base), h});
            if (cand == GeneralizedElement{u, g}) ++representations;
          }
        }
        CHECK(representations == 1);
      }
    }
  }
}

TEST_CASE("action file errors") {
  Presentation base = Presentation::free_monoid({"0", "1"});
  CHECK_THROWS_AS(action_base_reference("generators: g\n"), DomainError);
  CHECK_THROWS_AS(parse_action("base = x.km\nact: g 0 -> 1 |\n", base),
                  DomainError);  // no generators line
  CHECK_THROWS_AS(
      parse_action("base = x.km\ngenerators: g\nact: g 0 -> 1\n", base),
      ParseError);  // missing '|'
  CHECK_THROWS_AS(
      parse_action("base = x.km\ngenerators: g\nact: g 0 -> z |\n", base),
      ParseError);  // unknown letter
}

TEST_CASE("relator machinery rejects malformed input") {
  // non-alternating relator
  CHECK_THROWS_AS(
      squares_from_relators({"b1", "b2"}, {"c1", "c2"},
                            {{"b1", "b2", "b1", "c1"}}),
      DomainError);
  // convention clash: two relators force different squares at (b1, c1)
  CHECK_THROWS_AS(
      squares_from_relators({"b1", "b2"}, {"c1", "c2"},
                            {{"b1", "c1", "b1", "c1"},
                             {"b1", "c1", "b2", "c2"}}),
      DomainError);
  // odd alphabets cannot pair letters with inverses
  CHECK_THROWS_AS(
      squares_from_relators({"b1", "b2", "b3"}, {"c1", "c2"},
                            {{"b1", "c1", "b1", "c1"}}),
      DomainError);
}

TEST_CASE("generalized size is additive") {
  Presentation base;
  SelfSimilarAction a = testing::parse_fixture_action("rsv", base);
  std::mt19937_64 rng(23);
  std::vector<GroupWord> words = reduced_words(2, 2);
  for (int t = 0; t < 200; ++t) {
    GeneralizedElement p{random_element(base, rng, 2),
                         words[rand_below(rng, words.size())]};
    GeneralizedElement q{random_element(base, rng, 2),
                         words[rand_below(rng, words.size())]};
    GeneralizedElement pq = zs_multiply(a, p, q);
    CHECK(pq.monoid.degree() == p.monoid.degree() + q.monoid.degree());
  }
}

TEST_CASE("action files round trip") {
  Presentation base;
  SelfSimilarAction a = testing::parse_fixture_action("rsv", base);
  std::string text = render_action(a, "rsv.km");
  SelfSimilarAction b = parse_action(text, base);
  CHECK(render_action(b, "rsv.km") == text);
  CHECK(action_base_reference(text) == "rsv.km");

  CHECK(a.token_sym("a1") == 1);
  CHECK(a.token_sym("a3") == -1);
  CHECK(a.token_sym("a1^-1") == -1);
  CHECK(a.token_sym("a3^-1") == 1);
  CHECK_THROWS_AS(a.token_sym("zz"), DomainError);
}

TEST_CASE("atoms of the generalized 1-monoid are the size-1 elements") {
  Presentation base;
  SelfSimilarAction a = testing::parse_fixture_action("adding-machine", base);
  std::vector<GroupWord> units = reduced_words(1, 2);
  for (const Degree& m : degrees_below(d({2}))) {
    for (const Element& u : enumerate_degree(base, m)) {
      for (const GroupWord& g : units) {
        GeneralizedElement x{u, g};
        if (u.degree().total() == 1) {
          // every windowed factorization has a unit side
          for (const Degree& split : degrees_below(u.degree())) {
            for (const GroupWord& h : units) {
              auto [u1, u2] = factor(u, split);
              auto [v, rinv] = act_word(a, gw_inverse(h), u2);
              GeneralizedElement left{u1, h};
              GeneralizedElement right{v, gw_concat(rinv, g)};
              if (zs_multiply(a, left, right) == x) {
                CHECK((left.monoid.is_identity() ||
                       right.monoid.is_identity()));
              }
            }
          }
        } else if (u.degree().total() == 2) {
          // a split into two non-units exists
          auto [u1, u2] = factor(u, d({1}));
          GeneralizedElement left{u1, w({})}, right{u2, g};
          CHECK(zs_multiply(a, left, right) == x);
          CHECK_FALSE(left.monoid.is_identity());
          CHECK_FALSE(right.monoid.is_identity());
        }
      }
    }
  }
}
