//
// Copyright 2026 The dpgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//


#ifndef DPGRAPH_RANDOM_H_
#define DPGRAPH_RANDOM_H_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

namespace dpgraph {

// Every sampling operation owns one of these, seeded from an explicit 64-bit
// seed. mt19937_64's output sequence is fixed by the C++ standard, so seeded
// runs are reproducible across platforms and standard libraries.
using Engine = std::mt19937_64;

// Uniform double in the open interval (0, 1) from one engine draw. The 53-bit
// conversion is done by hand because std::uniform_real_distribution is
// implementation-defined.
inline double UniformOpen01(Engine& engine) {
  return (static_cast<double>(engine() >> 11) + 0.5) * 0x1.0p-53;
}

// SplitMix64 finalizer; a bijection on 64-bit words.
std::uint64_t Mix64(std::uint64_t x);

// 64-bit FNV-1a of a string, for folding string tags into seeds.
std::uint64_t HashTag(std::string_view tag);

// Derives an independent child seed by folding each path component into the
// master seed. The same (master, path) always yields the same seed, and
// adding new paths never changes the seeds of existing ones.
std::uint64_t DeriveSeed(std::uint64_t master,
                         std::initializer_list<std::uint64_t> path);

}  // namespace dpgraph

#endif  // DPGRAPH_RANDOM_H_
