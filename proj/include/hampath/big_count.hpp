#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace hampath {

/// Arbitrary-precision nonnegative integer. Little-endian 32-bit limbs,
/// no trailing zero limbs (empty vector encodes 0). Big enough headroom
/// for every count in this project (binomials up to n = 64 and beyond).
class BigCount {
public:
    BigCount() = default;
    BigCount(std::uint64_t value);

    BigCount& operator+=(const BigCount& rhs);
    friend BigCount operator+(BigCount lhs, const BigCount& rhs) {
        lhs += rhs;
        return lhs;
    }

    BigCount operator*(const BigCount& rhs) const;

    /// Multiply by 2^e in place.
    BigCount& shift_left(unsigned e);

    /// Multiply / divide by a machine word. Division must be exact;
    /// div_exact aborts the operation with std::logic_error otherwise.
    BigCount& mul_small(std::uint32_t m);
    BigCount& div_exact(std::uint32_t d);

    bool is_zero() const { return limbs_.empty(); }
    bool fits_u64() const { return limbs_.size() <= 2; }
    std::uint64_t to_u64() const;

    std::string str() const;

    bool operator==(const BigCount&) const = default;
    std::strong_ordering operator<=>(const BigCount& rhs) const;

private:
    void trim();
    std::vector<std::uint32_t> limbs_;
};

/// Exact binomial coefficient, multiplicative evaluation with exact
/// intermediate division. Requires 0 <= k <= n.
BigCount binomial(int n, int k);

/// Number of balanced bipartitions of an n-element ground set:
/// C(n, n/2) for odd n, C(n, n/2)/2 for even n.
BigCount balanced_bipartition_count(int n);

}  // namespace hampath
