#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "quadform/rational.hpp"

namespace quadform {

// Finite abelian group in invariant-factor form: Z/n1 x ... x Z/nk with
// n1 | n2 | ... and each ni >= 2.  Elements are residue tuples.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<Int> factors) : factors_(std::move(factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (factors_[i] < 2) throw std::invalid_argument("invariant factors must be >= 2");
      if (i + 1 < factors_.size() && mod_pos(factors_[i + 1], factors_[i]) != 0)
        throw std::invalid_argument("invariant factors must form a divisibility chain");
    }
  }

  const std::vector<Int>& factors() const { return factors_; }
  std::size_t num_generators() const { return factors_.size(); }
  bool trivial() const { return factors_.empty(); }

  Int order() const {
    Int o(1);
    for (const Int& f : factors_) o *= f;
    return o;
  }

  std::uint64_t order_u64() const {
    Int o = order();
    if (!o.fits_ulong_p()) throw std::overflow_error("group too large to enumerate");
    return o.get_ui();
  }

  std::vector<Int> zero() const { return std::vector<Int>(factors_.size(), Int(0)); }

  std::vector<Int> reduce(std::vector<Int> x) const {
    for (std::size_t i = 0; i < factors_.size(); ++i) x[i] = mod_pos(x[i], factors_[i]);
    return x;
  }

  std::vector<Int> add(const std::vector<Int>& a, const std::vector<Int>& b) const {
    std::vector<Int> r(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) r[i] = mod_pos(a[i] + b[i], factors_[i]);
    return r;
  }

  std::vector<Int> neg(const std::vector<Int>& a) const {
    std::vector<Int> r(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) r[i] = mod_pos(-a[i], factors_[i]);
    return r;
  }

  bool is_zero(const std::vector<Int>& a) const {
    for (std::size_t i = 0; i < factors_.size(); ++i)
      if (mod_pos(a[i], factors_[i]) != 0) return false;
    return true;
  }

  // Visit every element once (odometer order).
  void for_each(const std::function<void(const std::vector<Int>&)>& fn) const {
    std::vector<Int> x = zero();
    while (true) {
      fn(x);
      std::size_t i = 0;
      while (i < factors_.size()) {
        x[i] += 1;
        if (x[i] < factors_[i]) break;
        x[i] = 0;
        ++i;
      }
      if (i == factors_.size()) break;
      if (factors_.empty()) break;
    }
  }

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<Int> factors_;
};

}  // namespace quadform
