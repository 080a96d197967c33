#include "lagcd/roots.hpp"

#include <algorithm>
#include <string>

#include "lagcd/error.hpp"

namespace lagcd {

bool lessByRealThenImag(const Complex& a, const Complex& b) noexcept {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

RootList::RootList(std::vector<Root> entries) : entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    if (e.multiplicity < 1) {
      throw Error(ErrorCode::InvalidArgument,
                  "root multiplicity must be >= 1, got " + std::to_string(e.multiplicity));
    }
  }
  std::stable_sort(entries_.begin(), entries_.end(), [](const Root& a, const Root& b) {
    return lessByRealThenImag(a.value, b.value);
  });
}

RootList RootList::simple(std::span<const Complex> values) {
  std::vector<Root> entries;
  entries.reserve(values.size());
  for (const auto& v : values) entries.push_back({v, 1});
  return RootList(std::move(entries));
}

int RootList::totalMultiplicity() const noexcept {
  int total = 0;
  for (const auto& e : entries_) total += e.multiplicity;
  return total;
}

std::vector<Complex> RootList::expanded() const {
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(totalMultiplicity()));
  for (const auto& e : entries_) out.insert(out.end(), static_cast<std::size_t>(e.multiplicity), e.value);
  return out;
}

}  // namespace lagcd
