// SPDX-License-Identifier: Apache-2.0
//
// hrnsim - link-level Monte Carlo simulator for relay, reflective-surface,
// and hybrid relaying networks
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef HRNSIM_RNG_HPP
#define HRNSIM_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace hrnsim
{

// splitmix64 finalizer; bijective on 64-bit ints
inline std::uint64_t mix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Deterministic random source. Gaussians come from an explicit Box-Muller
// transform so that the draw sequence is fixed by this class alone and does
// not depend on the standard library's distribution implementations.
class Rng
{
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // uniform on [0, 1)
    double uniform()
    {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    // standard normal N(0, 1)
    double normal()
    {
        if (have_spare_)
        {
            have_spare_ = false;
            return spare_;
        }
        // u1 in (0, 1] keeps the log finite
        double u1 = (static_cast<double>(gen_() >> 11) + 1.0) * 0x1.0p-53;
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    // circularly-symmetric complex normal with unit variance, (a + jb)/sqrt(2)
    std::complex<double> complex_normal()
    {
        double a = normal();
        double b = normal();
        return {a * M_SQRT1_2, b * M_SQRT1_2};
    }

  private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Counter-based sub-seeding: stream `index` of a master seed. Realization i
// always sees the same generator state no matter which worker runs it.
inline Rng substream(std::uint64_t master_seed, std::uint64_t index)
{
    return Rng(mix64(master_seed ^ mix64(index)));
}

} // namespace hrnsim

#endif
