// Copyright 2026 The follow_up_scenarios Authors
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

#ifndef FOLLOW_UP__RANDOM_HPP_
#define FOLLOW_UP__RANDOM_HPP_

#include <array>
#include <cstdint>

namespace follow_up
{

/// Philox4x32-10 block cipher used as a counter-based generator.
///
/// The 64-bit key and the 128-bit counter fully determine the output block,
/// so any variate can be recomputed from (key, counter) alone.
std::array<std::uint32_t, 4> philox4x32(
  std::array<std::uint32_t, 4> counter, std::array<std::uint32_t, 2> key);

/// Random stream keyed by (seed, stream_id, draw_index).
///
/// Each call to next_block() consumes one draw index. Two sources with equal
/// seed and stream id produce identical sequences regardless of what other
/// streams have been consumed.
class RandomSource
{
public:
  RandomSource(std::uint64_t seed, std::uint64_t stream_id) : seed_(seed), stream_id_(stream_id) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }
  std::uint64_t draw_index() const { return draw_index_; }

  /// Raw 128-bit block for the current draw index, then advance.
  std::array<std::uint32_t, 4> next_block();

  /// Two independent uniforms in the open interval (0, 1) from one block.
  std::array<double, 2> next_uniform_pair();

  /// One uniform in (0, 1); consumes a whole block.
  double next_uniform();

private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t draw_index_{0};
};

}  // namespace follow_up

#endif  // FOLLOW_UP__RANDOM_HPP_
