// Copyright 2026 the qvbench authors
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

#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace qvb {

// std::mt19937_64 is fully specified by the standard, so streams are
// bit-reproducible across platforms. Distribution transforms are hand-rolled
// below for the same reason (std distributions are implementation-defined).
using Rng = std::mt19937_64;

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Derive an independent stream from a master seed and a tag path, e.g.
// fork(seed, {level, k, observable}). Results do not depend on which thread
// consumes the stream.
inline Rng fork_rng(uint64_t master_seed, std::initializer_list<uint64_t> tags) {
    uint64_t s = master_seed ^ 0x6a09e667f3bcc909ULL;
    uint64_t acc = splitmix64(s);
    for (uint64_t t : tags) {
        s ^= t + 0x9e3779b97f4a7c15ULL + (acc << 6) + (acc >> 2);
        acc ^= splitmix64(s);
    }
    return Rng(acc);
}

// Uniform double in [0, 1).
inline double uniform_double(Rng& rng) {
    return (rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, bound) without modulo bias.
inline uint64_t uniform_below(Rng& rng, uint64_t bound) {
    uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        uint64_t r = rng();
        if (r >= threshold) {
            return r % bound;
        }
    }
}

inline bool bernoulli(Rng& rng, double p) {
    return uniform_double(rng) < p;
}

// Standard normal via Box-Muller (one value per call, no caching, so the
// stream position is easy to reason about).
inline double standard_normal(Rng& rng) {
    double u1, u2;
    do {
        u1 = uniform_double(rng);
    } while (u1 <= 0.0);
    u2 = uniform_double(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
}

// Number of failures before the next success of a Bernoulli(p) sequence.
// Used to skip ahead over gate positions that receive no fault.
inline uint64_t geometric_skip(Rng& rng, double p) {
    if (p >= 1.0) {
        return 0;
    }
    double u;
    do {
        u = uniform_double(rng);
    } while (u <= 0.0);
    return static_cast<uint64_t>(std::log(u) / std::log1p(-p));
}

}  // namespace qvb
