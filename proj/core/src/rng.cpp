#include "cover/rng.hpp"

namespace cover {

namespace {

// splitmix64 finalizer (Steele, Lea, Flood 2014); bijective on 64-bit words.
std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream)
    : master_seed_(master_seed), stream_(stream) {
  derived_seed_ = mix(mix(master_seed) ^ mix(stream + 0x6a09e667f3bcc909ULL));
  gen_.seed(derived_seed_);
}

}  // namespace cover
