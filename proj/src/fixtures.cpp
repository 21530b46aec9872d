#include "kmonoid/fixtures.hpp"

#include <sstream>

#include "kmonoid/errors.hpp"
#include "kmonoid/presentation.hpp"
#include "kmonoid/selfsim.hpp"

namespace kmonoid {

// The triple-tree lattice: generators of valencies 4, 6, 8 with the
// inverse-numbering convention a_{i+2} = a_i^-1, b_{i+3} = b_i^-1,
// c_{i+4} = c_i^-1 (the only pairing under which the derived squares are
// involutive and the derived action coherent).
const RsvData& rsv_data() {
  static const RsvData data = {
      {"a1", "a2", "a3", "a4"},
      {"b1", "b2", "b3", "b4", "b5", "b6"},
      {"c1", "c2", "c3", "c4", "c5", "c6", "c7", "c8"},
      {{"b1", "c1", "b5", "c4"}, {"b1", "c2", "b1", "c5"},
       {"b1", "c3", "b6", "c1"}, {"b1", "c4", "b3", "c6"},
       {"b1", "c6", "b2", "c3"}, {"b1", "c7", "b1", "c8"},
       {"b2", "c1", "b3", "c2"}, {"b2", "c2", "b5", "c5"},
       {"b2", "c4", "b5", "c3"}, {"b2", "c7", "b6", "c4"},
       {"b3", "c1", "b6", "c6"}, {"b3", "c4", "b6", "c3"}},
      {{"a1", "b1", "a4", "b2"}, {"a1", "b2", "a4", "b4"},
       {"a1", "b3", "a2", "b1"}, {"a1", "b4", "a2", "b3"},
       {"a1", "b5", "a1", "b6"}, {"a2", "b2", "a2", "b6"},
       {"a1", "c1", "a2", "c8"}, {"a1", "c2", "a4", "c4"},
       {"a1", "c3", "a2", "c2"}, {"a1", "c4", "a3", "c3"},
       {"a1", "c5", "a1", "c6"}, {"a1", "c7", "a4", "c1"},
       {"a2", "c1", "a4", "c6"}, {"a2", "c4", "a2", "c7"}},
  };
  return data;
}

namespace {

std::string counterexample3_text() {
  return
      "k = 3\n"
      "alphabet 1: a a1 a2 a3\n"
      "alphabet 2: b b1 b2 b3 b4\n"
      "alphabet 3: c c1 c2 c3\n"
      "square: a b -> b1 a1\n"
      "square: b c -> c2 b2\n"
      "square: a1 c -> c1 a2\n"
      "square: a c2 -> c3 a3\n"
      "square: a3 b2 -> b3 a2\n"
      "square: b1 c1 -> c3 b4\n"
      "commute: *\n";
}

// Same alphabets with a square map that does satisfy the cube condition;
// keeps the a3 b2 and b1 c1 squares of the non-example and replaces the
// color-1/3 interaction.
std::string counterexample3_repaired_text() {
  return
      "k = 3\n"
      "alphabet 1: a a1 a2 a3\n"
      "alphabet 2: b b1 b2 b3 b4\n"
      "alphabet 3: c c1 c2 c3\n"
      "square: a2 b3 -> b2 a3\n"
      "square: a3 b2 -> b3 a2\n"
      "square: a c2 -> c a1\n"
      "square: a1 c -> c2 a\n"
      "square: b1 c1 -> c3 b4\n"
      "square: b4 c3 -> c1 b1\n"
      "commute: *\n";
}

std::vector<FixtureFile> rsv_files() {
  const RsvData& d = rsv_data();
  Presentation base = Presentation::from_data(
      {d.alphabet_b, d.alphabet_c},
      squares_from_relators(d.alphabet_b, d.alphabet_c, d.bc_relators),
      false);
  if (!validate_squares(base).ok()) {
    throw Error("rsv fixture cross-check failed: square map invalid");
  }
  SelfSimilarAction action =
      action_from_relators(base, d.group_letters, d.action_relators);
  if (!validate_action(action).ok()) {
    throw Error("rsv fixture cross-check failed: action incoherent");
  }
  // spot value from the source table: a1(c1) = c4 with restriction a2^-1
  Letter c1 = base.letter("c1");
  if (base.name(action.act_letter(1, c1)) != "c4" ||
      action.rest_letter(1, c1) != GroupWord{{-2}}) {
    throw Error("rsv fixture cross-check failed: a1(c1) spot value");
  }
  return {{"rsv.km", render_presentation(base)},
          {"rsv.ksa", render_action(action, "rsv.km")}};
}

std::vector<FixtureFile> adding_machine_files() {
  Presentation base = Presentation::free_monoid({"0", "1"});
  SelfSimilarAction action(base, {"g"}, {});
  Letter zero = base.letter("0"), one = base.letter("1");
  action.set_entry(1, zero, one, GroupWord{});
  action.set_entry(1, one, zero, GroupWord{{1}});
  action.derive_inverses();
  return {{"adding-machine.km", render_presentation(base)},
          {"adding-machine.ksa", render_action(action, "adding-machine.km")}};
}

}  // namespace

std::vector<FixtureFile> fixture_files(const std::string& name) {
  if (name == "prod22") {
    Presentation p = product(Presentation::free_monoid({"a", "b"}),
                             Presentation::free_monoid({"α", "β"}));
    return {{"prod22.km", render_presentation(p)}};
  }
  if (name == "counterexample3") {
    return {{"counterexample3.km", counterexample3_text()}};
  }
  if (name == "counterexample3-repaired") {
    return {{"counterexample3-repaired.km", counterexample3_repaired_text()}};
  }
  if (name == "adding-machine") return adding_machine_files();
  if (name == "rsv") return rsv_files();
  if (name.size() > 2 && name.substr(0, 2) == "nk") {
    int k = 0;
    try {
      k = std::stoi(name.substr(2));
    } catch (const std::exception&) {
      throw DomainError("unknown fixture '" + name + "'");
    }
    if (k < 1 || k > 16) throw DomainError("nk fixture rank out of range");
    std::ostringstream out;
    out << "k = " << k << "\n";
    for (int i = 1; i <= k; ++i) {
      out << "alphabet " << i << ": x" << i << "\n";
    }
    if (k > 1) out << "commute: *\n";
    return {{name + ".km", out.str()}};
  }
  throw DomainError("unknown fixture '" + name + "'");
}

std::vector<std::string> fixture_names() {
  return {"prod22",         "counterexample3", "counterexample3-repaired",
          "adding-machine", "rsv",             "nk<k>"};
}

}  // namespace kmonoid
