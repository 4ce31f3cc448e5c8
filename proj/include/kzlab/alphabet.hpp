#pragma once

#include <string>
#include <vector>

#include "kzlab/errors.hpp"

namespace kzlab {

/// The alphabet A_d = {1-d, 3-d, ..., d-1}. Vectors on C^{A_d} use the
/// ascending order, so letter p sits at index (p + d - 1) / 2.
struct Alphabet {
  int d;

  explicit Alphabet(int d_) : d(d_) {
    if (d < 1) throw InvalidArgument("alphabet size must be positive");
  }

  bool contains(int p) const { return p >= 1 - d && p <= d - 1 && ((p + d - 1) % 2 == 0); }

  void check(int p) const {
    if (!contains(p)) throw InvalidIndex("letter " + std::to_string(p) + " is not in A_" + std::to_string(d));
  }

  std::size_t index(int p) const {
    check(p);
    return static_cast<std::size_t>((p + d - 1) / 2);
  }

  int letter(std::size_t idx) const { return 1 - d + 2 * static_cast<int>(idx); }

  /// w with p = d - 1 - 2w.
  int w_of(int p) const {
    check(p);
    return (d - 1 - p) / 2;
  }

  std::vector<int> letters() const {
    std::vector<int> v;
    for (int p = 1 - d; p <= d - 1; p += 2) v.push_back(p);
    return v;
  }
};

}  // namespace kzlab
