// kmonoid - compute in k-monoids: validate presentations, normal forms,
// factorizations, prefix codes, Thompson-Higman group elements, and
// self-similar actions.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "kmonoid/codes.hpp"
#include "kmonoid/element.hpp"
#include "kmonoid/errors.hpp"
#include "kmonoid/fixtures.hpp"
#include "kmonoid/group.hpp"
#include "kmonoid/presentation.hpp"
#include "kmonoid/props.hpp"
#include "kmonoid/selfsim.hpp"

namespace {

using namespace kmonoid;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitSquares = 2;
constexpr int kExitCubes = 3;
constexpr int kExitOperation = 4;

struct Options {
  std::string format = "text";  // or "tabular"
  uint64_t seed = 20250810;
  uint64_t cases = 10000;
};

const char kUsage[] =
    "usage: kmonoid [--format text|tabular] [--seed N] <command> ...\n"
    "\n"
    "commands:\n"
    "  validate <file>                         square and cube validation\n"
    "  nf <file> <letters...>                  normal form of a product of atoms\n"
    "  grid <file> <letters...>                labelled rectangle picture (k = 2)\n"
    "  mul <file> <lhs...> -- <rhs...>         product of two elements\n"
    "  factor <file> <letters...> --at m1,..   unique factorization at a degree\n"
    "  join <file> <a...> -- <b...>            canonical code generating aS \\cap bS\n"
    "  code check <file> --code <code-file>    prefix-code test\n"
    "  code maximal <file> --code <code-file>  maximality test\n"
    "  probe <file> --bound m1,..              alignment probe up to a bound\n"
    "  group compose <file> --elt A --elt B    composition A after B\n"
    "  group invert <file> --elt A             inverse element\n"
    "  group equal <file> --elt A --elt B      sigma-equality in the group\n"
    "  selfsim check <action-file>             action coherence validation\n"
    "  selfsim act <action-file> <word...> -- <letters...>\n"
    "  selfsim mul <action-file> <u...> [/ <w...>] -- <v...> [/ <w...>]\n"
    "  wfp <action-file> --bound m1,.. --window N\n"
    "  fixture <name> [--out <dir>]            emit canonical fixture files\n"
    "  props <file> [--cases N]                randomized algebraic-law suite\n"
    "\n"
    "exit codes: 0 ok, 1 usage, 2 square/validation failure, 3 cube failure,\n"
    "            4 operation error\n";

int usage_error(const std::string& msg) {
  if (!msg.empty()) std::cerr << "kmonoid: " << msg << "\n";
  std::cerr << kUsage;
  return kExitUsage;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Presentation load_presentation(const std::string& path) {
  return parse_presentation(read_file(path));
}

void print_kv(const Options& opt, const std::string& key,
              const std::string& value) {
  if (opt.format == "tabular") {
    std::cout << key << "\t" << value << "\n";
  } else {
    std::cout << key << ": " << value << "\n";
  }
}

// splits args at the first "--"; a missing separator is a usage error
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::pair<std::vector<std::string>, std::vector<std::string>> split_dashes(
    const std::vector<std::string>& args) {
  auto it = std::find(args.begin(), args.end(), "--");
  if (it == args.end()) {
    throw UsageError("expected '--' separating the two operands");
  }
  return {{args.begin(), it}, {it + 1, args.end()}};
}

Element element_from_tokens(const Presentation& p,
                            const std::vector<std::string>& tokens) {
  if (tokens.empty()) throw DomainError("empty element");
  if (tokens.size() == 1 && tokens[0] == ".") return Element::identity(p);
  return from_names(p, tokens);
}

int cmd_validate(const Options& opt, const std::vector<std::string>& args) {
  if (args.size() != 1) return usage_error("validate takes one file");
  Presentation p = load_presentation(args[0]);
  ValidationReport squares = validate_squares(p);
  for (const auto& f : squares.failures) print_kv(opt, f.kind, f.witness);
  if (!squares.ok()) return kExitSquares;
  ValidationReport cubes = validate_associativity(p);
  for (const auto& f : cubes.failures) print_kv(opt, f.kind, f.witness);
  if (!cubes.ok()) return kExitCubes;
  print_kv(opt, "validation", "ok");
  return kExitOk;
}

int cmd_nf(const Options&, const std::vector<std::string>& args) {
  if (args.size() < 2) return usage_error("nf takes a file and letters");
  Presentation p = load_presentation(args[0]);
  Element x = element_from_tokens(p, {args.begin() + 1, args.end()});
  std::cout << render_lines(x);
  return kExitOk;
}

int cmd_grid(const Options&, const std::vector<std::string>& args) {
  if (args.size() < 2) return usage_error("grid takes a file and letters");
  Presentation p = load_presentation(args[0]);
  Element x = element_from_tokens(p, {args.begin() + 1, args.end()});
  std::cout << render_grid(x);
  return kExitOk;
}

int cmd_mul(const Options&, const std::vector<std::string>& args) {
  if (args.empty()) return usage_error("mul takes a file and two words");
  Presentation p = load_presentation(args[0]);
  auto [lhs, rhs] = split_dashes({args.begin() + 1, args.end()});
  Element x = element_from_tokens(p, lhs);
  Element y = element_from_tokens(p, rhs);
  std::cout << render_lines(multiply(x, y));
  return kExitOk;
}

int cmd_factor(const Options&, std::vector<std::string> args) {
  std::string at;
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--at" && i + 1 < args.size()) {
      at = args[i + 1];
      args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
      break;
    }
  }
  if (args.size() < 2 || at.empty()) {
    return usage_error("factor takes a file, letters and --at m1,m2,...");
  }
  Presentation p = load_presentation(args[0]);
  Element x = element_from_tokens(p, {args.begin() + 1, args.end()});
  Degree m = parse_degree(at, p.rank());
  auto [x1, x2] = factor(x, m);
  std::cout << "x1:\n" << render_lines(x1) << "x2:\n" << render_lines(x2);
  return kExitOk;
}

int cmd_join(const Options&, const std::vector<std::string>& args) {
  if (args.empty()) return usage_error("join takes a file and two elements");
  Presentation p = load_presentation(args[0]);
  auto [lhs, rhs] = split_dashes({args.begin() + 1, args.end()});
  Element a = element_from_tokens(p, lhs);
  Element b = element_from_tokens(p, rhs);
  Code up = common_upper(a, b);
  if (up.empty()) {
    std::cout << "(empty)\n";
  } else {
    for (const Element& c : up) std::cout << render_inline(c) << "\n";
  }
  return kExitOk;
}

int cmd_code(const Options& opt, std::vector<std::string> args) {
  if (args.size() < 2) return usage_error("code takes check|maximal");
  std::string sub = args[0];
  std::string code_path;
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--code" && i + 1 < args.size()) {
      code_path = args[i + 1];
      args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
      break;
    }
  }
  if (args.size() != 2 || code_path.empty()) {
    return usage_error("code " + sub + " <file> --code <code-file>");
  }
  Presentation p = load_presentation(args[1]);
  std::string text = read_file(code_path);
  if (sub == "check") {
    try {
      Code c = parse_code(p, text);
      print_kv(opt, "prefix code", "yes");
      print_kv(opt, "size", std::to_string(c.size()));
      return kExitOk;
    } catch (const DomainError&) {
      print_kv(opt, "prefix code", "no");
      return kExitSquares;
    }
  }
  if (sub == "maximal") {
    Code c = parse_code(p, text);
    bool m = is_maximal_code(p, c);
    print_kv(opt, "maximal", m ? "yes" : "no");
    return m ? kExitOk : kExitSquares;
  }
  return usage_error("unknown code subcommand '" + sub + "'");
}

int cmd_probe(const Options& opt, std::vector<std::string> args) {
  std::string bound;
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--bound" && i + 1 < args.size()) {
      bound = args[i + 1];
      args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
      break;
    }
  }
  if (args.size() != 1 || bound.empty()) {
    return usage_error("probe <file> --bound m1,m2,...");
  }
  Presentation p = load_presentation(args[0]);
  if (!is_strict(p)) throw DomainError("alignment probe requires a strict presentation");
  AlignmentReport rep = alignment_probe(p, parse_degree(bound, p.rank()));
  print_kv(opt, "bound", to_string(rep.bound));
  print_kv(opt, "pairs", std::to_string(rep.pairs));
  print_kv(opt, "max common upper size", std::to_string(rep.max_upper));
  print_kv(opt, "witness", rep.witness);
  print_kv(opt, "singly aligned up to bound", rep.singly_aligned() ? "yes" : "no");
  return kExitOk;
}

int cmd_group(const Options& opt, std::vector<std::string> args) {
  if (args.empty()) return usage_error("group takes compose|invert|equal");
  std::string sub = args[0];
  std::vector<std::string> elts;
  for (size_t i = 0; i < args.size();) {
    if (args[i] == "--elt" && i + 1 < args.size()) {
      elts.push_back(args[i + 1]);
      args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
    } else {
      ++i;
    }
  }
  if (args.size() != 2) return usage_error("group " + sub + " <file> --elt ...");
  Presentation p = load_presentation(args[1]);
  std::vector<CodeBijection> loaded;
  for (const auto& path : elts) {
    loaded.push_back(parse_bijection(p, read_file(path)));
  }
  if (sub == "invert") {
    if (loaded.size() != 1) return usage_error("group invert takes one --elt");
    std::cout << render_bijection(inverse(loaded[0]));
    return kExitOk;
  }
  if (sub == "compose") {
    if (loaded.size() != 2) return usage_error("group compose takes two --elt");
    std::cout << render_bijection(compose(loaded[0], loaded[1]));
    return kExitOk;
  }
  if (sub == "equal") {
    if (loaded.size() != 2) return usage_error("group equal takes two --elt");
    bool eq = equal_in_group(loaded[0], loaded[1]);
    print_kv(opt, "equal", eq ? "yes" : "no");
    return kExitOk;
  }
  return usage_error("unknown group subcommand '" + sub + "'");
}

SelfSimilarAction load_action(const std::string& path, Presentation& base) {
  std::string text = read_file(path);
  std::string base_ref = action_base_reference(text);
  std::filesystem::path dir = std::filesystem::path(path).parent_path();
  base = load_presentation((dir / base_ref).string());
  return parse_action(text, base);
}

int cmd_selfsim(const Options& opt, std::vector<std::string> args) {
  if (args.size() < 2) return usage_error("selfsim takes check|act|mul");
  std::string sub = args[0];
  Presentation base;
  SelfSimilarAction a = load_action(args[1], base);
  std::vector<std::string> rest(args.begin() + 2, args.end());
  if (sub == "check") {
    ValidationReport rep = validate_action(a);
    for (const auto& f : rep.failures) print_kv(opt, f.kind, f.witness);
    if (!rep.ok()) return kExitSquares;
    print_kv(opt, "action", "ok");
    return kExitOk;
  }
  if (sub == "act") {
    auto [word_toks, letter_toks] = split_dashes(rest);
    GroupWord g = a.parse_word(word_toks);
    Element x = element_from_tokens(base, letter_toks);
    auto [img, r] = act_word(a, g, x);
    std::cout << render_lines(img);
    print_kv(opt, "restriction", a.word_token(r));
    return kExitOk;
  }
  if (sub == "mul") {
    auto [lhs, rhs] = split_dashes(rest);
    auto read_elt = [&](const std::vector<std::string>& toks) {
      auto slash = std::find(toks.begin(), toks.end(), "/");
      std::vector<std::string> letters(toks.begin(), slash);
      std::vector<std::string> word(slash == toks.end() ? slash : slash + 1,
                                    toks.end());
      return GeneralizedElement{element_from_tokens(base, letters),
                                a.parse_word(word)};
    };
    GeneralizedElement prod = zs_multiply(a, read_elt(lhs), read_elt(rhs));
    std::cout << render_lines(prod.monoid);
    print_kv(opt, "group", a.word_token(prod.group));
    return kExitOk;
  }
  return usage_error("unknown selfsim subcommand '" + sub + "'");
}

int cmd_wfp(const Options& opt, std::vector<std::string> args) {
  std::string bound;
  int window = 2;
  for (size_t i = 0; i < args.size();) {
    if (args[i] == "--bound" && i + 1 < args.size()) {
      bound = args[i + 1];
      args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
    } else if (args[i] == "--window" && i + 1 < args.size()) {
      window = std::stoi(args[i + 1]);
      args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
    } else {
      ++i;
    }
  }
  if (args.size() != 1 || bound.empty()) {
    return usage_error("wfp <action-file> --bound m1,.. --window N");
  }
  Presentation base;
  SelfSimilarAction a = load_action(args[0], base);
  WfpReport rep = wfp_check(a, parse_degree(bound, base.rank()), window);
  for (const auto& f : rep.failures) print_kv(opt, "failure", f);
  print_kv(opt, "pass", rep.pass ? "yes" : "no");
  print_kv(opt, "elements", std::to_string(rep.elements));
  print_kv(opt, "factorizations", std::to_string(rep.factorizations));
  print_kv(opt, "pairs", std::to_string(rep.pairs));
  print_kv(opt, "inconclusive", std::to_string(rep.inconclusive));
  return rep.pass ? kExitOk : kExitSquares;
}

int cmd_fixture(const Options&, std::vector<std::string> args) {
  std::string out_dir = ".";
  for (size_t i = 0; i < args.size();) {
    if (args[i] == "--out" && i + 1 < args.size()) {
      out_dir = args[i + 1];
      args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
    } else {
      ++i;
    }
  }
  if (args.size() != 1) return usage_error("fixture <name> [--out dir]");
  std::vector<FixtureFile> files;
  try {
    files = fixture_files(args[0]);
  } catch (const DomainError& e) {
    return usage_error(e.what());
  }
  std::filesystem::create_directories(out_dir);
  for (const auto& f : files) {
    std::filesystem::path path = std::filesystem::path(out_dir) / f.name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot write '" + path.string() + "'");
    out << f.contents;
    std::cout << "wrote " << path.string() << "\n";
  }
  return kExitOk;
}

int cmd_props(const Options& opt, std::vector<std::string> args) {
  uint64_t cases = opt.cases;
  for (size_t i = 0; i < args.size();) {
    if (args[i] == "--cases" && i + 1 < args.size()) {
      cases = std::stoull(args[i + 1]);
      args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
    } else {
      ++i;
    }
  }
  if (args.size() != 1) return usage_error("props <file> [--cases N]");
  Presentation p = load_presentation(args[0]);
  ValidationReport squares = validate_squares(p);
  if (!squares.ok()) {
    for (const auto& f : squares.failures) print_kv(opt, f.kind, f.witness);
    return kExitSquares;
  }
  ValidationReport cubes = validate_associativity(p);
  if (!cubes.ok()) {
    for (const auto& f : cubes.failures) print_kv(opt, f.kind, f.witness);
    return kExitCubes;
  }
  LawReport rep = check_algebraic_laws(p, cases, opt.seed);
  for (const auto& f : rep.failures) print_kv(opt, "failure", f);
  print_kv(opt, "cases", std::to_string(rep.cases));
  print_kv(opt, "laws", rep.ok() ? "ok" : "violated");
  return rep.ok() ? kExitOk : kExitOperation;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  Options opt;
  for (size_t i = 0; i < args.size();) {
    if (args[i] == "--format" && i + 1 < args.size()) {
      opt.format = args[i + 1];
      if (opt.format != "text" && opt.format != "tabular") {
        return usage_error("unknown format '" + opt.format + "'");
      }
      args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
    } else if (args[i] == "--seed" && i + 1 < args.size()) {
      opt.seed = std::stoull(args[i + 1]);
      args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
    } else if (args[i] == "--help" || args[i] == "-h") {
      std::cout << kUsage;
      return kExitOk;
    } else {
      ++i;
    }
  }
  if (args.empty()) return usage_error("");
  std::string cmd = args[0];
  std::vector<std::string> rest(args.begin() + 1, args.end());
  if (!rest.empty() && (rest[0] == "--help" || rest[0] == "-h")) {
    std::cout << kUsage;
    return kExitOk;
  }
  try {
    if (cmd == "validate") return cmd_validate(opt, rest);
    if (cmd == "nf") return cmd_nf(opt, rest);
    if (cmd == "grid") return cmd_grid(opt, rest);
    if (cmd == "mul") return cmd_mul(opt, rest);
    if (cmd == "factor") return cmd_factor(opt, rest);
    if (cmd == "join") return cmd_join(opt, rest);
    if (cmd == "code") return cmd_code(opt, rest);
    if (cmd == "probe") return cmd_probe(opt, rest);
    if (cmd == "group") return cmd_group(opt, rest);
    if (cmd == "selfsim") return cmd_selfsim(opt, rest);
    if (cmd == "wfp") return cmd_wfp(opt, rest);
    if (cmd == "fixture") return cmd_fixture(opt, rest);
    if (cmd == "props") return cmd_props(opt, rest);
    return usage_error("unknown command '" + cmd + "'");
  } catch (const UsageError& e) {
    return usage_error(e.what());
  } catch (const Error& e) {
    std::cerr << "kmonoid: " << e.what() << "\n";
    return kExitOperation;
  } catch (const std::exception& e) {
    std::cerr << "kmonoid: " << e.what() << "\n";
    return kExitOperation;
  }
}
