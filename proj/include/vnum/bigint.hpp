#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vnum {

// Arbitrary-precision signed integer, sign/magnitude over 32-bit limbs.
// Exponents and degrees never overflow, and the fraction-free elimination
// in the homology code gets the exact division it relies on.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    static BigInt parse(std::string_view decimal); // throws vnum::error on junk

    bool is_zero() const { return mag_.empty(); }
    int sign() const { return mag_.empty() ? 0 : (neg_ ? -1 : 1); }

    BigInt operator-() const;
    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    // Truncated division; b must be nonzero.
    static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b);
    // Division known to be exact; throws std::logic_error on a remainder.
    static BigInt divexact(const BigInt& a, const BigInt& b);

    std::strong_ordering operator<=>(const BigInt& o) const;
    bool operator==(const BigInt& o) const = default;

    bool fits_long_long() const;
    long long to_long_long() const; // throws capacity_error when out of range

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

private:
    bool neg_ = false;
    std::vector<std::uint32_t> mag_; // little-endian, no leading zero limbs

    void trim();
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // Requires a >= b.
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static void divmod_mag(const std::vector<std::uint32_t>& u,
                           const std::vector<std::uint32_t>& v,
                           std::vector<std::uint32_t>& quot,
                           std::vector<std::uint32_t>& rem);
};

} // namespace vnum
