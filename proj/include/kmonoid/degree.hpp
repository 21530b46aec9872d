#ifndef KMONOID_DEGREE_HPP_
#define KMONOID_DEGREE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kmonoid {

/// An element of the lattice N^k with the componentwise order. Immutable
/// value type; the rank k is the length of the component vector and every
/// binary operation insists both sides agree on it.
class Degree {
 public:
  Degree() = default;
  explicit Degree(std::vector<uint32_t> components)
      : components_(std::move(components)) {}

  static Degree zero(int rank);
  /// e_i: zero everywhere except 1 at color i (1-based). Throws DomainError
  /// if i is out of range.
  static Degree basis(int color, int rank);

  int rank() const { return static_cast<int>(components_.size()); }
  uint32_t operator[](int i) const { return components_[static_cast<size_t>(i)]; }
  const std::vector<uint32_t>& components() const { return components_; }
  bool is_zero() const;
  uint64_t total() const;

  bool operator==(const Degree& other) const {
    return components_ == other.components_;
  }
  bool operator!=(const Degree& other) const { return !(*this == other); }
  /// Lexicographic; used only for deterministic ordering in containers,
  /// not the lattice order.
  bool operator<(const Degree& other) const {
    return components_ < other.components_;
  }

 private:
  std::vector<uint32_t> components_;
};

bool leq(const Degree& m, const Degree& n);
Degree join(const Degree& m, const Degree& n);
Degree meet(const Degree& m, const Degree& n);
Degree operator+(const Degree& m, const Degree& n);
/// m - n componentwise when n <= m, absent otherwise.
std::optional<Degree> diff(const Degree& m, const Degree& n);

/// "(m1,...,mk)"
std::string to_string(const Degree& m);
/// Accepts "m1,m2,..." or "(m1,m2,...)". Throws DomainError on junk or,
/// when expected_rank >= 0, on a rank mismatch.
Degree parse_degree(const std::string& text, int expected_rank = -1);

/// All degrees d with d <= bound, in lexicographic order.
std::vector<Degree> degrees_below(const Degree& bound);

}  // namespace kmonoid

#endif  // KMONOID_DEGREE_HPP_
