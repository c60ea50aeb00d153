#pragma once

#include <string>
#include <vector>

namespace apolar {

struct HilbertFunction {
  std::vector<int> values;  // index = degree, trailing zeros trimmed

  HilbertFunction() = default;
  explicit HilbertFunction(std::vector<int> v);

  int total() const;
  int at(int d) const { return d < static_cast<int>(values.size()) ? values[d] : 0; }
  bool palindromic() const;
  // "(1,4,4,1,1)"
  std::string str() const;

  friend bool operator==(const HilbertFunction&, const HilbertFunction&) = default;
};

}  // namespace apolar
