#pragma once

// Brute-force arithmetic on small finite abelian groups, used as an oracle
// for the cyclic rows of the Hom / Ext / tensor tables. Nothing here calls
// into the engine.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

namespace flca::testing {

// Z/n_1 + ... + Z/n_k, elements as coordinate vectors.
class FiniteAbelian {
 public:
  using Element = std::vector<std::uint64_t>;

  FiniteAbelian() = default;
  explicit FiniteAbelian(std::vector<std::uint64_t> orders) : orders_(std::move(orders)) {}

  const std::vector<std::uint64_t>& orders() const { return orders_; }

  std::uint64_t size() const {
    std::uint64_t n = 1;
    for (auto o : orders_) n *= o;
    return n;
  }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    Element x(orders_.size(), 0);
    for (std::uint64_t idx = 0; idx < size(); ++idx) {
      out.push_back(x);
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (++x[i] < orders_[i]) break;
        x[i] = 0;
      }
    }
    return out;
  }

  Element scale(std::uint64_t k, const Element& x) const {
    Element y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = (k % orders_[i]) * x[i] % orders_[i];
    return y;
  }

  Element add(const Element& x, const Element& y) const {
    Element z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = (x[i] + y[i]) % orders_[i];
    return z;
  }

  bool is_zero(const Element& x) const {
    for (auto c : x)
      if (c != 0) return false;
    return true;
  }

 private:
  std::vector<std::uint64_t> orders_;
};

// d -> #{x : d x = 0} for every d dividing the exponent bound; this function
// determines a finite abelian group up to isomorphism.
using TorsionProfile = std::map<std::uint64_t, std::uint64_t>;

inline TorsionProfile torsion_profile_of_elements(const std::vector<std::vector<std::uint64_t>>& elems,
                                                  const auto& is_killed_by) {
  TorsionProfile prof;
  for (std::uint64_t d = 1; d <= 64; ++d) {
    std::uint64_t n = 0;
    for (const auto& x : elems)
      if (is_killed_by(d, x)) ++n;
    prof[d] = n;
  }
  return prof;
}

inline TorsionProfile torsion_profile(const FiniteAbelian& g) {
  return torsion_profile_of_elements(g.elements(), [&](std::uint64_t d, const auto& x) {
    return g.is_zero(g.scale(d, x));
  });
}

// Hom(G, H) enumerated as tuples of generator images h_i with n_i h_i = 0,
// with pointwise addition.
inline TorsionProfile hom_profile(const FiniteAbelian& g, const FiniteAbelian& h) {
  const auto hs = h.elements();
  std::vector<std::vector<FiniteAbelian::Element>> choices;
  for (auto n : g.orders()) {
    std::vector<FiniteAbelian::Element> ok;
    for (const auto& y : hs)
      if (h.is_zero(h.scale(n, y))) ok.push_back(y);
    choices.push_back(ok);
  }
  // Each hom is the concatenation of its generator images.
  std::vector<std::vector<std::uint64_t>> homs{{}};
  for (const auto& c : choices) {
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& partial : homs)
      for (const auto& y : c) {
        auto v = partial;
        v.insert(v.end(), y.begin(), y.end());
        next.push_back(v);
      }
    homs = std::move(next);
  }
  std::vector<std::uint64_t> big_orders;
  for (std::size_t i = 0; i < g.orders().size(); ++i)
    big_orders.insert(big_orders.end(), h.orders().begin(), h.orders().end());
  const FiniteAbelian ambient(big_orders);
  return torsion_profile_of_elements(homs, [&](std::uint64_t d, const auto& x) {
    return ambient.is_zero(ambient.scale(d, x));
  });
}

// Ext^1(Z/n, H) = H / nH from 0 -> Z -> Z -> Z/n -> 0; for G a sum of cyclics
// the cosets are enumerated summand by summand.
inline TorsionProfile ext1_profile(const FiniteAbelian& g, const FiniteAbelian& h) {
  const auto hs = h.elements();
  // Per summand Z/n: profile of the quotient H/nH, counted as
  // #{x in H : d x in nH} / |nH|.
  std::vector<TorsionProfile> parts;
  for (auto n : g.orders()) {
    std::vector<FiniteAbelian::Element> image;
    for (const auto& y : hs) {
      auto z = h.scale(n, y);
      if (std::find(image.begin(), image.end(), z) == image.end()) image.push_back(z);
    }
    TorsionProfile prof;
    for (std::uint64_t d = 1; d <= 64; ++d) {
      std::uint64_t count = 0;
      for (const auto& x : hs)
        if (std::find(image.begin(), image.end(), h.scale(d, x)) != image.end()) ++count;
      prof[d] = count / image.size();
    }
    parts.push_back(prof);
  }
  // Torsion profiles multiply over direct sums.
  TorsionProfile total;
  for (std::uint64_t d = 1; d <= 64; ++d) {
    std::uint64_t n = 1;
    for (const auto& p : parts) n *= p.at(d);
    total[d] = n;
  }
  return total;
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

}  // namespace flca::testing
