#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "atom.hpp"
#include "multiset.hpp"

namespace flca {

// A finite direct sum of atoms in canonical form. The empty sum is the zero group.
class FlcaGroup {
 public:
  using Atoms = SortedMultiset<Atom>;

  FlcaGroup() = default;
  explicit FlcaGroup(Atoms atoms) : atoms_(std::move(atoms)) {}
  FlcaGroup(const Atom& a, std::uint64_t count = 1) { atoms_.add(a, count); }  // NOLINT

  const Atoms& atoms() const noexcept { return atoms_; }
  bool is_zero() const noexcept { return atoms_.empty(); }
  std::uint64_t count(const Atom& a) const { return atoms_.count(a); }

  FlcaGroup& operator+=(const FlcaGroup& other) {
    atoms_.add(other.atoms_);
    return *this;
  }
  friend FlcaGroup operator+(FlcaGroup lhs, const FlcaGroup& rhs) { return lhs += rhs; }

  FlcaGroup repeated(std::uint64_t k) const { return FlcaGroup(atoms_.scaled(k)); }

  friend bool operator==(const FlcaGroup&, const FlcaGroup&) = default;

 private:
  Atoms atoms_;
};

inline FlcaGroup canonicalize(const std::vector<std::pair<Atom, std::uint64_t>>& raw) {
  return FlcaGroup(FlcaGroup::Atoms(raw));
}

// Z/m as the direct sum of its primary parts.
inline FlcaGroup decompose_cyclic(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("Z/0 is not a finite cyclic group");
  FlcaGroup out;
  for (std::uint64_t p = 2; p <= m / p; ++p) {
    std::uint32_t e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e > 0) out += Atom::cyclic(Prime(p), e);
  }
  if (m > 1) out += Atom::cyclic(Prime(m), 1);
  return out;
}

inline FlcaGroup dual(const FlcaGroup& x) {
  return FlcaGroup(x.atoms().mapped([](const Atom& a) { return dual(a); }));
}

// Rewrites every A summand as R + Afin.
inline FlcaGroup split_adele(const FlcaGroup& x) {
  FlcaGroup out;
  for (const auto& [a, c] : x.atoms()) {
    if (a.family() == Family::Adele) {
      out += FlcaGroup(Atom::reals(), c);
      out += FlcaGroup(Atom::finite_adeles(), c);
    } else {
      out += FlcaGroup(a, c);
    }
  }
  return out;
}

namespace detail {

inline std::string render_term(const std::string& base, std::uint64_t count, std::int64_t shift) {
  std::string s = base;
  if (count != 1) s += "^" + std::to_string(count);
  if (shift != 0) s += "[" + std::to_string(shift) + "]";
  return s;
}

}  // namespace detail

inline std::string to_string(const FlcaGroup& x) {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& [a, c] : x.atoms()) {
    if (!s.empty()) s += " + ";
    s += detail::render_term(to_string(a), c, 0);
  }
  return s;
}

// Distinct primes carried by local atoms, ascending.
inline std::vector<std::uint64_t> primes_of(const FlcaGroup& x) {
  std::vector<std::uint64_t> ps;
  for (const auto& [a, c] : x.atoms())
    if (a.local() && (ps.empty() || ps.back() != a.prime_value())) ps.push_back(a.prime_value());
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  return ps;
}

}  // namespace flca
