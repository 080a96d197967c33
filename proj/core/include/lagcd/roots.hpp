#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace lagcd {

using Complex = std::complex<double>;

struct Root {
  Complex value;
  int multiplicity = 1;

  friend bool operator==(const Root&, const Root&) = default;
};

/// Orders complex numbers by real part, then imaginary part.
bool lessByRealThenImag(const Complex& a, const Complex& b) noexcept;

/// A multiset of complex roots stored as (root, multiplicity) pairs.
///
/// Entries are kept sorted by real part and then imaginary part so that two
/// lists built from the same data compare and print identically. Entries with
/// equal values are allowed; nothing is coalesced implicitly.
class RootList {
 public:
  RootList() = default;
  explicit RootList(std::vector<Root> entries);

  /// One entry of multiplicity 1 per value.
  static RootList simple(std::span<const Complex> values);

  const std::vector<Root>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const Root& operator[](std::size_t i) const { return entries_[i]; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  int totalMultiplicity() const noexcept;

  /// Roots repeated according to multiplicity, in entry order.
  std::vector<Complex> expanded() const;

  friend bool operator==(const RootList&, const RootList&) = default;

 private:
  std::vector<Root> entries_;
};

}  // namespace lagcd
