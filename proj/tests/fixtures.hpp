// Shared fixture chains.  T1 is the four-element chain 0 < x < e < 1 whose
// middle idempotent e is not a local unit; L3/L4 are Lukasiewicz chains; G3
// is the three-element minimum-product chain; S4 is L3 stacked below TWO.
#pragma once

#include <vector>

#include "mtl/chain.hpp"

namespace fx {

inline mtl::Chain make(std::vector<std::vector<int>> rows) {
  return mtl::make_chain(static_cast<int>(rows.size()), rows);
}

inline const mtl::Chain ZERO = make({{0}});
inline const mtl::Chain TWO = make({{0, 0}, {0, 1}});
inline const mtl::Chain G3 = make({{0, 0, 0}, {0, 1, 1}, {0, 1, 2}});
inline const mtl::Chain L3 = make({{0, 0, 0}, {0, 0, 1}, {0, 1, 2}});
inline const mtl::Chain T1 = make({{0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}});
inline const mtl::Chain L4 = make({{0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 2}, {0, 1, 2, 3}});
inline const mtl::Chain S4 = make({{0, 0, 0, 0}, {0, 0, 1, 1}, {0, 1, 2, 2}, {0, 1, 2, 3}});

}  // namespace fx
