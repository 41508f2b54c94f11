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

#include "follow_up/random.hpp"

namespace follow_up
{

namespace
{
constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t & hi, std::uint32_t & lo)
{
  const std::uint64_t product = static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(b);
  hi = static_cast<std::uint32_t>(product >> 32);
  lo = static_cast<std::uint32_t>(product);
}

// 53 random bits mapped to the centre of one of 2^53 cells, never 0 or 1.
inline double to_open_unit(std::uint64_t bits)
{
  return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}
}  // namespace

std::array<std::uint32_t, 4> philox4x32(
  std::array<std::uint32_t, 4> ctr, std::array<std::uint32_t, 2> key)
{
  for (int round = 0; round < 10; ++round) {
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kPhiloxM0, ctr[0], hi0, lo0);
    mulhilo(kPhiloxM1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kPhiloxW0;
    key[1] += kPhiloxW1;
  }
  return ctr;
}

std::array<std::uint32_t, 4> RandomSource::next_block()
{
  const std::array<std::uint32_t, 4> counter{
    static_cast<std::uint32_t>(draw_index_), static_cast<std::uint32_t>(draw_index_ >> 32),
    static_cast<std::uint32_t>(stream_id_), static_cast<std::uint32_t>(stream_id_ >> 32)};
  const std::array<std::uint32_t, 2> key{
    static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32)};
  ++draw_index_;
  return philox4x32(counter, key);
}

std::array<double, 2> RandomSource::next_uniform_pair()
{
  const auto block = next_block();
  const std::uint64_t first = (static_cast<std::uint64_t>(block[1]) << 32) | block[0];
  const std::uint64_t second = (static_cast<std::uint64_t>(block[3]) << 32) | block[2];
  return {to_open_unit(first), to_open_unit(second)};
}

double RandomSource::next_uniform()
{
  return next_uniform_pair()[0];
}

}  // namespace follow_up
