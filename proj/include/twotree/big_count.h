// Copyright 2026 The twotree-enum Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TWOTREE_BIG_COUNT_H_
#define TWOTREE_BIG_COUNT_H_

#include <boost/multiprecision/cpp_int.hpp>

namespace twotree {

// Exact nonnegative counts. Spanning-tree and PEO counts leave 64-bit range
// quickly, so every count path stays in arbitrary precision.
using BigCount = boost::multiprecision::cpp_int;

inline BigCount factorial(int l) {
  BigCount r = 1;
  for (int k = 2; k <= l; ++k) r *= k;
  return r;
}

}  // namespace twotree

#endif  // TWOTREE_BIG_COUNT_H_
