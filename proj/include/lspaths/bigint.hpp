#pragma once

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lspaths {

/// Arbitrary-precision signed integer, sign-magnitude over base-2^32 limbs.
/// Small values (the common case here) stay in a single limb and take fast
/// uint64 paths in add/mul/divmod.
class BigInt {
public:
  BigInt() = default;

  BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    unsigned long long m =
        v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL : static_cast<unsigned long long>(v);
    mag_.push_back(static_cast<std::uint32_t>(m & 0xffffffffu));
    if (m >> 32) mag_.push_back(static_cast<std::uint32_t>(m >> 32));
  }
  BigInt(int v) : BigInt(static_cast<long long>(v)) {}

  static BigInt from_string(std::string_view s) {
    BigInt r;
    std::size_t i = 0;
    int sign = 1;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
      if (s[i] == '-') sign = -1;
      ++i;
    }
    if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
    for (; i < s.size(); ++i) {
      char c = s[i];
      if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit in numeral");
      r.mul_small_inplace(10);
      r.add_small_inplace(static_cast<std::uint32_t>(c - '0'));
    }
    r.sign_ = r.mag_.empty() ? 0 : sign;
    return r;
  }

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }

  bool fits_ll() const {
    if (mag_.size() > 2) return false;
    unsigned long long m = mag_ull();
    if (sign_ >= 0) return m <= static_cast<unsigned long long>(std::numeric_limits<long long>::max());
    return m <= static_cast<unsigned long long>(std::numeric_limits<long long>::max()) + 1ULL;
  }

  long long to_ll() const {
    if (!fits_ll()) throw std::overflow_error("BigInt: value does not fit in long long");
    unsigned long long m = mag_ull();
    if (sign_ < 0) return -static_cast<long long>(m - 1) - 1;
    return static_cast<long long>(m);
  }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
  }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
    int c = cmp_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c < 0 : c > 0;
  }
  friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

  BigInt operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
  }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
      r.mag_ = add_mag(a.mag_, b.mag_);
      r.sign_ = a.sign_;
    } else {
      int c = cmp_mag(a.mag_, b.mag_);
      if (c == 0) return BigInt();
      if (c > 0) {
        r.mag_ = sub_mag(a.mag_, b.mag_);
        r.sign_ = a.sign_;
      } else {
        r.mag_ = sub_mag(b.mag_, a.mag_);
        r.sign_ = b.sign_;
      }
    }
    return r;
  }
  friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt r;
    r.sign_ = a.sign_ * b.sign_;
    if (a.mag_.size() == 1 && b.mag_.size() == 1) {
      unsigned long long p = static_cast<unsigned long long>(a.mag_[0]) * b.mag_[0];
      r.mag_.push_back(static_cast<std::uint32_t>(p & 0xffffffffu));
      if (p >> 32) r.mag_.push_back(static_cast<std::uint32_t>(p >> 32));
      return r;
    }
    r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
    for (std::size_t i = 0; i < a.mag_.size(); ++i) {
      unsigned long long carry = 0;
      for (std::size_t j = 0; j < b.mag_.size(); ++j) {
        unsigned long long cur = r.mag_[i + j] +
                                 static_cast<unsigned long long>(a.mag_[i]) * b.mag_[j] + carry;
        r.mag_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
        carry = cur >> 32;
      }
      std::size_t k = i + b.mag_.size();
      while (carry) {
        unsigned long long cur = r.mag_[k] + carry;
        r.mag_[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
        carry = cur >> 32;
        ++k;
      }
    }
    trim(r.mag_);
    return r;
  }

  /// Quotient truncated toward zero, remainder with the sign of the dividend.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    int c = cmp_mag(a.mag_, b.mag_);
    if (a.sign_ == 0 || c < 0) {
      q = BigInt();
      r = a;
      return;
    }
    std::vector<std::uint32_t> qm, rm;
    if (b.mag_.size() == 1) {
      divmod_small(a.mag_, b.mag_[0], qm, rm);
    } else {
      divmod_mag(a.mag_, b.mag_, qm, rm);
    }
    q = BigInt();
    q.mag_ = std::move(qm);
    trim(q.mag_);
    q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
    r = BigInt();
    r.mag_ = std::move(rm);
    trim(r.mag_);
    r.sign_ = r.mag_.empty() ? 0 : a.sign_;
  }

  friend BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return q;
  }
  friend BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return r;
  }

  static BigInt gcd(BigInt a, BigInt b) {
    a.sign_ = a.mag_.empty() ? 0 : 1;
    b.sign_ = b.mag_.empty() ? 0 : 1;
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.mag_.size() == 1 && b.mag_.size() == 1) {
      std::uint32_t x = a.mag_[0], y = b.mag_[0];
      while (y) {
        std::uint32_t t = x % y;
        x = y;
        y = t;
      }
      return BigInt(static_cast<long long>(x));
    }
    while (!b.is_zero()) {
      BigInt q, r;
      divmod(a, b, q, r);
      a = b;
      b = r;
    }
    return a;
  }

  std::string to_string() const {
    if (sign_ == 0) return "0";
    std::vector<std::uint32_t> m = mag_;
    std::string digits;
    while (!m.empty()) {
      std::vector<std::uint32_t> q;
      std::uint64_t rem = 0;
      q.resize(m.size());
      for (std::size_t i = m.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | m[i];
        q[i] = static_cast<std::uint32_t>(cur / 1000000000ULL);
        rem = cur % 1000000000ULL;
      }
      trim(q);
      std::string chunk = std::to_string(rem);
      if (!q.empty()) chunk.insert(0, 9 - chunk.size(), '0');
      digits.insert(0, chunk);
      m = std::move(q);
    }
    return sign_ < 0 ? "-" + digits : digits;
  }

  bool is_even() const { return mag_.empty() || (mag_[0] & 1u) == 0; }

private:
  int sign_ = 0;
  std::vector<std::uint32_t> mag_;

  unsigned long long mag_ull() const {
    unsigned long long m = 0;
    if (mag_.size() > 0) m = mag_[0];
    if (mag_.size() > 1) m |= static_cast<unsigned long long>(mag_[1]) << 32;
    return m;
  }

  static void trim(std::vector<std::uint32_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  }

  static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    const auto &big = a.size() >= b.size() ? a : b, &small = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> r = big;
    unsigned long long carry = 0;
    for (std::size_t i = 0; i < small.size() || carry; ++i) {
      if (i >= r.size()) r.push_back(0);
      unsigned long long cur = r[i] + carry + (i < small.size() ? small[i] : 0u);
      r[i] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    return r;
  }

  /// Requires |a| >= |b|.
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r = a;
    long long borrow = 0;
    for (std::size_t i = 0; i < b.size() || borrow; ++i) {
      long long cur = static_cast<long long>(r[i]) - borrow - (i < b.size() ? b[i] : 0u);
      if (cur < 0) {
        cur += 1LL << 32;
        borrow = 1;
      } else {
        borrow = 0;
      }
      r[i] = static_cast<std::uint32_t>(cur);
    }
    trim(r);
    return r;
  }

  static void divmod_small(const std::vector<std::uint32_t>& a, std::uint32_t d,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
    q.assign(a.size(), 0);
    std::uint64_t rem = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | a[i];
      q[i] = static_cast<std::uint32_t>(cur / d);
      rem = cur % d;
    }
    r.clear();
    if (rem) r.push_back(static_cast<std::uint32_t>(rem));
  }

  /// Shift-subtract long division on magnitudes; |a| >= |b|, |b| > 1 limb.
  static void divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                         std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
    auto bit = [](const std::vector<std::uint32_t>& v, std::size_t i) -> int {
      std::size_t limb = i / 32, off = i % 32;
      if (limb >= v.size()) return 0;
      return (v[limb] >> off) & 1;
    };
    std::size_t abits = a.size() * 32;
    q.assign(a.size(), 0);
    std::vector<std::uint32_t> rem;
    for (std::size_t i = abits; i-- > 0;) {
      // rem = rem*2 + bit_i(a)
      unsigned carry = static_cast<unsigned>(bit(a, i));
      for (std::size_t k = 0; k < rem.size(); ++k) {
        std::uint64_t cur = (static_cast<std::uint64_t>(rem[k]) << 1) | carry;
        rem[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
        carry = static_cast<unsigned>(cur >> 32);
      }
      if (carry) rem.push_back(carry);
      if (cmp_mag(rem, b) >= 0) {
        rem = sub_mag(rem, b);
        q[i / 32] |= 1u << (i % 32);
      }
    }
    r = std::move(rem);
  }

  void mul_small_inplace(std::uint32_t f) {
    unsigned long long carry = 0;
    for (auto& limb : mag_) {
      unsigned long long cur = static_cast<unsigned long long>(limb) * f + carry;
      limb = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    if (carry) mag_.push_back(static_cast<std::uint32_t>(carry));
    trim(mag_);
    if (mag_.empty()) sign_ = 0;
  }

  void add_small_inplace(std::uint32_t v) {
    unsigned long long carry = v;
    for (std::size_t i = 0; carry; ++i) {
      if (i >= mag_.size()) mag_.push_back(0);
      unsigned long long cur = mag_[i] + carry;
      mag_[i] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    if (!mag_.empty() && sign_ == 0) sign_ = 1;
  }
};

}  // namespace lspaths
