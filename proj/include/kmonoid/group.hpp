#ifndef KMONOID_GROUP_HPP_
#define KMONOID_GROUP_HPP_

#include <optional>
#include <string>
#include <vector>

#include "kmonoid/codes.hpp"

namespace kmonoid {

/// An element of the inverse monoid P(S): an isomorphism between the right
/// ideals generated by two finite generalized prefix codes, stored as the
/// domain code (sorted) with the parallel image list. Group arithmetic in
/// G(S) = P(S)^e / sigma demands both codes maximal (essential elements).
class CodeBijection {
 public:
  CodeBijection() = default;
  /// Validates: codes over one presentation, prefix-code domain and range,
  /// bijective pairing. Throws DomainError on violations.
  CodeBijection(Code domain, std::vector<Element> image);

  const Presentation& presentation() const;
  const Code& domain() const { return domain_; }
  const std::vector<Element>& image() const { return image_; }
  Code range_sorted() const;
  size_t size() const { return domain_.size(); }
  /// Join of the domain degrees.
  Degree domain_join() const;
  Degree range_join() const;

  bool operator==(const CodeBijection& o) const {
    return domain_ == o.domain_ && image_ == o.image_;
  }

 private:
  struct unchecked_t {};
  CodeBijection(unchecked_t, Code domain, std::vector<Element> image);
  friend CodeBijection identity_bijection(const Presentation&);
  friend CodeBijection inverse(const CodeBijection&);
  friend CodeBijection refine_to(const CodeBijection&, const Degree&);
  friend CodeBijection compose(const CodeBijection&, const CodeBijection&);

  Code domain_;                 // sorted
  std::vector<Element> image_;  // image_[i] = theta(domain_[i])
};

/// ({eps}, {eps}, eps -> eps).
CodeBijection identity_bijection(const Presentation& p);

/// theta(d s) = theta(d) s for the unique domain member d dividing x;
/// absent when none does.
std::optional<Element> apply(const CodeBijection& theta, const Element& x);

/// Both codes maximal.
bool is_essential(const CodeBijection& theta);

CodeBijection inverse(const CodeBijection& theta);

/// Restriction to the essential ideal C_m S: new domain C_m, images pushed
/// through theta. Requires m >= domain join and an essential theta.
CodeBijection refine_to(const CodeBijection& theta, const Degree& m);

/// phi after theta, refined through C_m with m = range-join(theta) v
/// domain-join(phi). Requires both essential.
CodeBijection compose(const CodeBijection& phi, const CodeBijection& theta);

/// sigma-equality: refine both to the common C_m and compare pointwise.
bool equal_in_group(const CodeBijection& theta, const CodeBijection& phi);

/// Element-file format: one line per pair, "d1 d2 ... -> r1 r2 ...", each
/// side the space-separated letters of one element ("." for the identity).
CodeBijection parse_bijection(const Presentation& p, const std::string& text);
std::string render_bijection(const CodeBijection& theta);

}  // namespace kmonoid

#endif  // KMONOID_GROUP_HPP_
