#include "kmonoid/degree.hpp"

#include <algorithm>
#include <sstream>

#include "kmonoid/errors.hpp"

namespace kmonoid {

namespace {
void require_same_rank(const Degree& m, const Degree& n) {
  if (m.rank() != n.rank()) {
    throw DimensionError("degree rank mismatch: " + to_string(m) + " vs " +
                         to_string(n));
  }
}
}  // namespace

Degree Degree::zero(int rank) {
  return Degree(std::vector<uint32_t>(static_cast<size_t>(rank), 0));
}

Degree Degree::basis(int color, int rank) {
  if (color < 1 || color > rank) {
    throw DomainError("basis color " + std::to_string(color) +
                      " out of range 1.." + std::to_string(rank));
  }
  std::vector<uint32_t> c(static_cast<size_t>(rank), 0);
  c[static_cast<size_t>(color - 1)] = 1;
  return Degree(std::move(c));
}

bool Degree::is_zero() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](uint32_t v) { return v == 0; });
}

uint64_t Degree::total() const {
  uint64_t t = 0;
  for (uint32_t v : components_) t += v;
  return t;
}

bool leq(const Degree& m, const Degree& n) {
  require_same_rank(m, n);
  for (int i = 0; i < m.rank(); ++i) {
    if (m[i] > n[i]) return false;
  }
  return true;
}

Degree join(const Degree& m, const Degree& n) {
  require_same_rank(m, n);
  std::vector<uint32_t> c(static_cast<size_t>(m.rank()));
  for (int i = 0; i < m.rank(); ++i) c[static_cast<size_t>(i)] = std::max(m[i], n[i]);
  return Degree(std::move(c));
}

Degree meet(const Degree& m, const Degree& n) {
  require_same_rank(m, n);
  std::vector<uint32_t> c(static_cast<size_t>(m.rank()));
  for (int i = 0; i < m.rank(); ++i) c[static_cast<size_t>(i)] = std::min(m[i], n[i]);
  return Degree(std::move(c));
}

Degree operator+(const Degree& m, const Degree& n) {
  require_same_rank(m, n);
  std::vector<uint32_t> c(static_cast<size_t>(m.rank()));
  for (int i = 0; i < m.rank(); ++i) c[static_cast<size_t>(i)] = m[i] + n[i];
  return Degree(std::move(c));
}

std::optional<Degree> diff(const Degree& m, const Degree& n) {
  require_same_rank(m, n);
  if (!leq(n, m)) return std::nullopt;
  std::vector<uint32_t> c(static_cast<size_t>(m.rank()));
  for (int i = 0; i < m.rank(); ++i) c[static_cast<size_t>(i)] = m[i] - n[i];
  return Degree(std::move(c));
}

std::string to_string(const Degree& m) {
  std::string s = "(";
  for (int i = 0; i < m.rank(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(m[i]);
  }
  s += ")";
  return s;
}

Degree parse_degree(const std::string& text, int expected_rank) {
  std::string t = text;
  if (!t.empty() && t.front() == '(' && t.back() == ')') {
    t = t.substr(1, t.size() - 2);
  }
  std::vector<uint32_t> comps;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &pos);
    } catch (const std::exception&) {
      throw DomainError("bad degree component '" + item + "'");
    }
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
    if (pos != item.size()) throw DomainError("bad degree component '" + item + "'");
    comps.push_back(static_cast<uint32_t>(v));
  }
  if (comps.empty()) throw DomainError("empty degree '" + text + "'");
  Degree d(std::move(comps));
  if (expected_rank >= 0 && d.rank() != expected_rank) {
    throw DimensionError("degree " + to_string(d) + " has rank " +
                         std::to_string(d.rank()) + ", expected " +
                         std::to_string(expected_rank));
  }
  return d;
}

std::vector<Degree> degrees_below(const Degree& bound) {
  std::vector<Degree> out;
  std::vector<uint32_t> cur(static_cast<size_t>(bound.rank()), 0);
  while (true) {
    out.push_back(Degree(cur));
    int i = bound.rank() - 1;
    while (i >= 0 && cur[static_cast<size_t>(i)] == bound[i]) {
      cur[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++cur[static_cast<size_t>(i)];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kmonoid
