// Copyright 2026 The halin-enum Authors
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

#include "halin/bounds.h"

#include <string>

#include "halin/status.h"

namespace halin {
namespace {

BigInt Power(BigInt base, std::size_t exp) {
  BigInt out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

BigInt Factorial(std::size_t k) {
  BigInt out = 1;
  for (std::size_t i = 2; i <= k; ++i) out *= i;
  return out;
}

BigInt Binomial(std::size_t n, std::size_t k) {
  BigInt out = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    out = out * (n - k + i) / i;
  }
  return out;
}

}  // namespace

BigInt BoundSet::NodeBound(std::size_t i) const {
  return Factorial(i) * Power(BigInt(2 * d), i);
}

BoundSet ComputeBounds(std::size_t p, std::size_t d) {
  if (p < 3 || d < 1) {
    throw HalinError(ErrorCode::kInvalidParams,
                     "bounds need p >= 3 and d >= 1, got p=" +
                         std::to_string(p) + " d=" + std::to_string(d));
  }
  BoundSet b;
  b.p = p;
  b.d = d;
  b.total = 0;
  for (std::size_t i = 0; i < p; ++i) {
    b.per_level.push_back(Binomial(p, i) * b.NodeBound(i));
    b.total += b.per_level.back();
  }
  b.headline = Power(BigInt(2 * p * d), p);
  return b;
}

bool CheckDepthBound(const HalinGraph& h) {
  return h.n() >= 2 && h.d() + 1 <= h.n() / 2;
}

}  // namespace halin
