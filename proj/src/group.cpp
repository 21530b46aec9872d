#include "kmonoid/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "kmonoid/errors.hpp"

namespace kmonoid {

CodeBijection::CodeBijection(unchecked_t, Code domain,
                             std::vector<Element> image)
    : domain_(std::move(domain)), image_(std::move(image)) {}

CodeBijection::CodeBijection(Code domain, std::vector<Element> image) {
  if (domain.empty() || domain.size() != image.size()) {
    throw DomainError("code bijection needs equally sized non-empty codes");
  }
  const Presentation* pres = &domain.front().presentation();
  for (const Element& e : domain) {
    if (&e.presentation() != pres) {
      throw DomainError("code bijection mixes presentations");
    }
  }
  for (const Element& e : image) {
    if (&e.presentation() != pres) {
      throw DomainError("code bijection mixes presentations");
    }
  }
  std::vector<size_t> order(domain.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&domain](size_t a, size_t b) { return domain[a] < domain[b]; });
  for (size_t i : order) {
    domain_.push_back(domain[i]);
    image_.push_back(image[i]);
  }
  for (size_t i = 1; i < domain_.size(); ++i) {
    if (domain_[i] == domain_[i - 1]) {
      throw DomainError("code bijection domain has a repeated element");
    }
  }
  Code r = image_;
  std::sort(r.begin(), r.end());
  for (size_t i = 1; i < r.size(); ++i) {
    if (r[i] == r[i - 1]) {
      throw DomainError("code bijection pairing is not injective");
    }
  }
  if (!is_prefix_code(domain_)) {
    throw DomainError("code bijection domain is not a prefix code");
  }
  if (!is_prefix_code(r)) {
    throw DomainError("code bijection range is not a prefix code");
  }
}

const Presentation& CodeBijection::presentation() const {
  return domain_.front().presentation();
}

Code CodeBijection::range_sorted() const {
  Code r = image_;
  std::sort(r.begin(), r.end());
  return r;
}

Degree CodeBijection::domain_join() const {
  Degree m = Degree::zero(presentation().rank());
  for (const Element& e : domain_) m = join(m, e.degree());
  return m;
}

Degree CodeBijection::range_join() const {
  Degree m = Degree::zero(presentation().rank());
  for (const Element& e : image_) m = join(m, e.degree());
  return m;
}

CodeBijection identity_bijection(const Presentation& p) {
  Code dom = {Element::identity(p)};
  std::vector<Element> img = dom;
  return CodeBijection(CodeBijection::unchecked_t{}, std::move(dom),
                       std::move(img));
}

std::optional<Element> apply(const CodeBijection& theta, const Element& x) {
  for (size_t i = 0; i < theta.size(); ++i) {
    if (auto s = divides(theta.domain()[i], x)) {
      return multiply(theta.image()[i], *s);
    }
  }
  return std::nullopt;
}

bool is_essential(const CodeBijection& theta) {
  const Presentation& p = theta.presentation();
  return is_maximal_code(p, theta.domain()) &&
         is_maximal_code(p, theta.range_sorted());
}

namespace {
void require_essential(const CodeBijection& theta, const char* op) {
  if (!is_essential(theta)) {
    throw DomainError(std::string(op) +
                      " requires an essential element (both codes maximal)");
  }
}
}  // namespace

CodeBijection inverse(const CodeBijection& theta) {
  std::vector<size_t> order(theta.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&theta](size_t a, size_t b) {
    return theta.image()[a] < theta.image()[b];
  });
  Code dom;
  std::vector<Element> img;
  for (size_t i : order) {
    dom.push_back(theta.image()[i]);
    img.push_back(theta.domain()[i]);
  }
  return CodeBijection(CodeBijection::unchecked_t{}, std::move(dom),
                       std::move(img));
}

CodeBijection refine_to(const CodeBijection& theta, const Degree& m) {
  if (!leq(theta.domain_join(), m)) {
    throw DomainError("refine_to: degree " + to_string(m) +
                      " does not dominate the domain join " +
                      to_string(theta.domain_join()));
  }
  require_essential(theta, "refine_to");
  const Presentation& p = theta.presentation();
  Code dom = enumerate_degree(p, m);
  std::vector<Element> img;
  img.reserve(dom.size());
  for (const Element& c : dom) {
    auto y = apply(theta, c);
    if (!y) {
      throw DomainError("refine_to: domain does not cover " + render_inline(c));
    }
    img.push_back(std::move(*y));
  }
  return CodeBijection(CodeBijection::unchecked_t{}, std::move(dom),
                       std::move(img));
}

CodeBijection compose(const CodeBijection& phi, const CodeBijection& theta) {
  if (&phi.presentation() != &theta.presentation()) {
    throw DomainError("compose: elements of different presentations");
  }
  require_essential(theta, "compose");
  require_essential(phi, "compose");
  const Presentation& p = theta.presentation();
  Degree m = join(theta.range_join(), phi.domain_join());
  CodeBijection theta_inv = inverse(theta);
  Code dom;
  std::vector<Element> img;
  for (const Element& c : enumerate_degree(p, m)) {
    auto pre = apply(theta_inv, c);
    auto post = apply(phi, c);
    if (!pre || !post) {
      throw DomainError("compose: refinement failed to cover " +
                        render_inline(c));
    }
    dom.push_back(std::move(*pre));
    img.push_back(std::move(*post));
  }
  std::vector<size_t> order(dom.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&dom](size_t a, size_t b) { return dom[a] < dom[b]; });
  Code dom2;
  std::vector<Element> img2;
  for (size_t i : order) {
    dom2.push_back(std::move(dom[i]));
    img2.push_back(std::move(img[i]));
  }
  return CodeBijection(CodeBijection::unchecked_t{}, std::move(dom2),
                       std::move(img2));
}

bool equal_in_group(const CodeBijection& theta, const CodeBijection& phi) {
  if (&phi.presentation() != &theta.presentation()) {
    throw DomainError("equal_in_group: elements of different presentations");
  }
  require_essential(theta, "equal_in_group");
  require_essential(phi, "equal_in_group");
  Degree m = join(theta.domain_join(), phi.domain_join());
  CodeBijection a = refine_to(theta, m);
  CodeBijection b = refine_to(phi, m);
  return a.domain() == b.domain() && a.image() == b.image();
}

CodeBijection parse_bijection(const Presentation& p, const std::string& text) {
  Code dom;
  std::vector<Element> img;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
    std::vector<std::string> toks;
    std::stringstream ss(line);
    std::string tok;
    while (ss >> tok) toks.push_back(tok);
    if (toks.empty()) continue;
    auto arrow = std::find(toks.begin(), toks.end(), "->");
    if (arrow == toks.end() || arrow == toks.begin() || arrow + 1 == toks.end()) {
      throw ParseError("expected 'd1 ... -> r1 ...'", lineno);
    }
    auto read_side = [&](std::vector<std::string> names) {
      if (names.size() == 1 && names[0] == ".") return Element::identity(p);
      return from_names(p, names);
    };
    try {
      dom.push_back(read_side({toks.begin(), arrow}));
      img.push_back(read_side({arrow + 1, toks.end()}));
    } catch (const DomainError& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  return CodeBijection(std::move(dom), std::move(img));
}

std::string render_bijection(const CodeBijection& theta) {
  std::ostringstream out;
  for (size_t i = 0; i < theta.size(); ++i) {
    out << render_inline(theta.domain()[i]) << " -> "
        << render_inline(theta.image()[i]) << "\n";
  }
  return out.str();
}

}  // namespace kmonoid
