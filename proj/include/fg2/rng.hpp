#pragma once
#include <cstdint>
#include <map>
#include <random>
#include <vector>
#include "fg2/rational.hpp"

namespace fg2 {

// Deterministic sampling of evaluation points: integers in [2,97].
// Callers that hit a vanishing denominator resample, at most 100 times,
// then give up loudly (SampleExhausted).
class Sampler {
public:
    explicit Sampler(uint64_t seed) : rng_(seed), dist_(2, 97) {}

    Rational next() { return Rational(dist_(rng_)); }

    std::map<uint32_t, Rational> point(const std::vector<uint32_t>& vars) {
        std::map<uint32_t, Rational> p;
        for (uint32_t v : vars) p[v] = next();
        return p;
    }

    // Runs body with fresh points until it returns without throwing
    // DenominatorZero/ZeroMinor/NonGenericInput; rethrows anything else.
    template <class Body>
    auto withResampling(Body body) {
        for (int attempt = 0; attempt < 100; ++attempt) {
            try {
                return body();
            } catch (const DenominatorZero&) {
            } catch (const ZeroMinor&) {
            } catch (const NonGenericInput&) {
            }
        }
        throw SampleExhausted();
    }

    std::mt19937_64& raw() { return rng_; }

private:
    std::mt19937_64 rng_;
    std::uniform_int_distribution<long> dist_;
};

} // namespace fg2
