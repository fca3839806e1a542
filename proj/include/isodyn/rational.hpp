#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstdint>
#include <string>

namespace isodyn {

/// Exact rational scalar. All arithmetic in this library is exact; gmp keeps
/// values canonical (gcd(num, den) = 1, den > 0) after every operation.
using Rat = mpq_class;

/// Builds a canonical rational from an integer pair.
inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "n", "n/d", or "-n/d" (decimal digits).
Rat rat_from_string(const std::string& text);

inline std::string to_string(const Rat& q) { return q.get_str(); }

/// splitmix64; deterministic across platforms, unlike the std distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi], inclusive.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }

    /// Random rational with numerator in [num_lo, num_hi] and denominator in
    /// [den_lo, den_hi].
    Rat rational(std::int64_t num_lo, std::int64_t num_hi, std::int64_t den_lo, std::int64_t den_hi) {
        return rat(uniform(num_lo, num_hi), uniform(den_lo, den_hi));
    }

private:
    std::uint64_t state_;
};

}  // namespace isodyn

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    typedef mpq_class Real;
    typedef mpq_class NonInteger;
    typedef mpq_class Nested;

    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }

    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 150,
        MulCost = 100
    };
};

}  // namespace Eigen
