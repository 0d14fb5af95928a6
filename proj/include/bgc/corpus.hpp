#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "bgc/build.hpp"

namespace bgc {

// Deterministic test-instance generator. Four classes:
//   a  tensor products of random single complexes (double complexes)
//   b  regraded double complexes with D01 = 0 and anticommuting D10, D2m1
//   c  conjugated double complexes with all three operators nonzero
//   d  geometry-built and fixed worked examples
// Every emitted complex passes validation; class (c) instances are certified
// to carry a nonzero D2m1.
struct CorpusEntry {
    char cls;
    BigradedComplex complex;
};

std::vector<CorpusEntry> generate_corpus(std::uint64_t seed, int count);

// A random cochain complex in degrees 0..len-1, built from a rank-profile
// normal form conjugated by random unimodular changes of basis.
SingleComplex random_single_complex(std::mt19937_64& rng, int max_len = 3, int max_dim = 3);

}  // namespace bgc
