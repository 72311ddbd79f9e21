#include "vnum/bigint.hpp"

#include "vnum/errors.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace vnum {

namespace {
constexpr std::uint64_t kBase = 1ULL << 32;
}

BigInt::BigInt(long long v) {
    neg_ = v < 0;
    // Avoid overflow on LLONG_MIN by widening first.
    unsigned long long u = neg_ ? ~static_cast<unsigned long long>(v) + 1ULL
                                : static_cast<unsigned long long>(v);
    while (u != 0) {
        mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffULL));
        u >>= 32;
    }
    if (mag_.empty()) neg_ = false;
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) neg_ = false;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> r;
    r.reserve(big.size() + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < big.size(); ++i) {
        std::uint64_t sum = carry + big[i] + (i < small.size() ? small[i] : 0);
        r.push_back(static_cast<std::uint32_t>(sum & 0xffffffffULL));
        carry = sum >> 32;
    }
    if (carry) r.push_back(static_cast<std::uint32_t>(carry));
    return r;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r;
    r.reserve(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow -
                         (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
        if (d < 0) {
            d += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r.push_back(static_cast<std::uint32_t>(d));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = static_cast<std::uint64_t>(a[i]) * b[j] + r[i + j] + carry;
            r[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
        }
        std::size_t k = i + b.size();
        while (carry) {
            std::uint64_t cur = r[k] + carry;
            r[k] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Knuth algorithm D on 32-bit limbs.
void BigInt::divmod_mag(const std::vector<std::uint32_t>& u,
                        const std::vector<std::uint32_t>& v,
                        std::vector<std::uint32_t>& quot,
                        std::vector<std::uint32_t>& rem) {
    quot.clear();
    rem.clear();
    if (v.empty()) throw std::logic_error("BigInt: division by zero");
    if (cmp_mag(u, v) < 0) {
        rem = u;
        return;
    }
    if (v.size() == 1) {
        std::uint64_t d = v[0], r = 0;
        quot.assign(u.size(), 0);
        for (std::size_t i = u.size(); i-- > 0;) {
            std::uint64_t cur = (r << 32) | u[i];
            quot[i] = static_cast<std::uint32_t>(cur / d);
            r = cur % d;
        }
        while (!quot.empty() && quot.back() == 0) quot.pop_back();
        if (r) rem.push_back(static_cast<std::uint32_t>(r));
        return;
    }

    const int shift = std::countl_zero(v.back());
    const std::size_t n = v.size();
    const std::size_t m = u.size() - n;

    auto shl = [shift](const std::vector<std::uint32_t>& x) {
        std::vector<std::uint32_t> r(x.size() + 1, 0);
        for (std::size_t i = 0; i < x.size(); ++i) {
            r[i] |= static_cast<std::uint32_t>((static_cast<std::uint64_t>(x[i]) << shift) &
                                               0xffffffffULL);
            if (shift) r[i + 1] = static_cast<std::uint32_t>(x[i] >> (32 - shift));
        }
        return r;
    };

    std::vector<std::uint32_t> un = shl(u); // size u.size()+1
    std::vector<std::uint32_t> vn = shl(v);
    vn.resize(n); // top limb shifted out is zero by choice of shift

    quot.assign(m + 1, 0);
    for (std::size_t j = m + 1; j-- > 0;) {
        std::uint64_t num = (static_cast<std::uint64_t>(un[j + n]) << 32) | un[j + n - 1];
        std::uint64_t qhat = num / vn[n - 1];
        std::uint64_t rhat = num % vn[n - 1];
        while (qhat >= kBase ||
               qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
            --qhat;
            rhat += vn[n - 1];
            if (rhat >= kBase) break;
        }
        // Multiply-subtract qhat*vn from un[j..j+n].
        std::int64_t borrow = 0;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t p = qhat * vn[i] + carry;
            carry = p >> 32;
            std::int64_t t = static_cast<std::int64_t>(un[i + j]) -
                             static_cast<std::int64_t>(p & 0xffffffffULL) - borrow;
            if (t < 0) {
                t += static_cast<std::int64_t>(kBase);
                borrow = 1;
            } else {
                borrow = 0;
            }
            un[i + j] = static_cast<std::uint32_t>(t);
        }
        std::int64_t t = static_cast<std::int64_t>(un[j + n]) -
                         static_cast<std::int64_t>(carry) - borrow;
        if (t < 0) {
            // qhat was one too large: add back.
            t += static_cast<std::int64_t>(kBase);
            --qhat;
            std::uint64_t c = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t s = static_cast<std::uint64_t>(un[i + j]) + vn[i] + c;
                un[i + j] = static_cast<std::uint32_t>(s & 0xffffffffULL);
                c = s >> 32;
            }
            t += static_cast<std::int64_t>(c);
            t &= static_cast<std::int64_t>(0xffffffffLL);
        }
        un[j + n] = static_cast<std::uint32_t>(t);
        quot[j] = static_cast<std::uint32_t>(qhat);
    }
    while (!quot.empty() && quot.back() == 0) quot.pop_back();

    // Denormalize the remainder.
    rem.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        rem[i] = static_cast<std::uint32_t>(un[i] >> shift);
        if (shift && i + 1 < un.size()) {
            rem[i] |= static_cast<std::uint32_t>(
                (static_cast<std::uint64_t>(un[i + 1]) << (32 - shift)) & 0xffffffffULL);
        }
    }
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.mag_.empty()) r.neg_ = !r.neg_;
    return r;
}

BigInt& BigInt::operator+=(const BigInt& o) {
    if (neg_ == o.neg_) {
        mag_ = add_mag(mag_, o.mag_);
    } else {
        int c = cmp_mag(mag_, o.mag_);
        if (c == 0) {
            mag_.clear();
            neg_ = false;
        } else if (c > 0) {
            mag_ = sub_mag(mag_, o.mag_);
        } else {
            mag_ = sub_mag(o.mag_, mag_);
            neg_ = o.neg_;
        }
    }
    trim();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    r.mag_ = BigInt::mul_mag(a.mag_, b.mag_);
    r.neg_ = !r.mag_.empty() && (a.neg_ != b.neg_);
    return r;
}

std::pair<BigInt, BigInt> BigInt::divmod(const BigInt& a, const BigInt& b) {
    if (b.is_zero()) throw std::logic_error("BigInt: division by zero");
    BigInt q, r;
    divmod_mag(a.mag_, b.mag_, q.mag_, r.mag_);
    q.neg_ = !q.mag_.empty() && (a.neg_ != b.neg_);
    r.neg_ = !r.mag_.empty() && a.neg_;
    return {q, r};
}

BigInt BigInt::divexact(const BigInt& a, const BigInt& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("BigInt: inexact division in divexact");
    return q;
}

std::strong_ordering BigInt::operator<=>(const BigInt& o) const {
    int sa = sign(), sb = o.sign();
    if (sa != sb) return sa <=> sb;
    int c = cmp_mag(mag_, o.mag_);
    if (sa < 0) c = -c;
    return c <=> 0;
}

bool BigInt::fits_long_long() const {
    if (mag_.size() > 2) return false;
    unsigned long long u = 0;
    for (std::size_t i = mag_.size(); i-- > 0;) u = (u << 32) | mag_[i];
    if (neg_) return u <= 1ULL << 63;
    return u < 1ULL << 63;
}

long long BigInt::to_long_long() const {
    if (!fits_long_long())
        throw capacity_error("integer too large for a machine word: " + to_string());
    unsigned long long u = 0;
    for (std::size_t i = mag_.size(); i-- > 0;) u = (u << 32) | mag_[i];
    return neg_ ? -static_cast<long long>(u) : static_cast<long long>(u);
}

BigInt BigInt::parse(std::string_view s) {
    std::size_t pos = 0;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        neg = s[pos] == '-';
        ++pos;
    }
    if (pos == s.size()) throw error("empty integer literal");
    BigInt r;
    std::size_t i = pos;
    while (i < s.size()) {
        std::size_t take = std::min<std::size_t>(9, s.size() - i);
        long long v = 0;
        long long scale = 1;
        for (std::size_t k = 0; k < take; ++k) {
            char c = s[i + k];
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw error("bad digit in integer literal: '" + std::string(s) + "'");
            v = v * 10 + (c - '0');
            scale *= 10;
        }
        r = r * BigInt(scale) + BigInt(v);
        i += take;
    }
    if (neg && !r.is_zero()) r.neg_ = true;
    return r;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> m = mag_;
    const std::vector<std::uint32_t> ten9 = {1000000000u};
    std::string out;
    while (!m.empty()) {
        std::vector<std::uint32_t> q, r;
        divmod_mag(m, ten9, q, r);
        std::uint32_t part = r.empty() ? 0 : r[0];
        std::string s = std::to_string(part);
        if (!q.empty()) s.insert(0, 9 - s.size(), '0');
        out.insert(0, s);
        m = std::move(q);
    }
    if (neg_) out.insert(0, 1, '-');
    return out;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

} // namespace vnum
