#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gor {

inline constexpr int kMaxVars = 32;
inline constexpr int kMaxDegree = 127;

class DimensionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Exponent vector packed one byte per variable into four 64-bit words.
///
/// Total degree is capped at 127 so every exponent stays below 128; the
/// divisibility and lcm tests below rely on the free high bit of each byte.
class Monomial {
  public:
    static constexpr int kWords = kMaxVars / 8;

    Monomial() = default;

    explicit Monomial(std::span<const int> exponents) {
        if (exponents.size() > kMaxVars)
            throw DimensionError("at most " + std::to_string(kMaxVars) + " variables are supported");
        int deg = 0;
        for (std::size_t i = 0; i < exponents.size(); ++i) {
            if (exponents[i] < 0) throw std::invalid_argument("negative exponent");
            deg += exponents[i];
            if (deg > kMaxDegree) throw std::overflow_error("monomial degree exceeds 127");
            set_byte(static_cast<int>(i), static_cast<std::uint8_t>(exponents[i]));
        }
        deg_ = deg;
    }
    Monomial(std::initializer_list<int> exps) : Monomial(std::span<const int>(exps.begin(), exps.size())) {}

    static Monomial variable(int i, int power = 1) {
        Monomial m;
        m.set_byte(i, static_cast<std::uint8_t>(power));
        m.deg_ = power;
        return m;
    }

    int degree() const { return deg_; }
    int operator[](int i) const { return static_cast<int>((w_[i >> 3] >> ((i & 7) * 8)) & 0xFF); }
    bool is_one() const { return deg_ == 0; }

    std::vector<int> exponents(int nvars) const {
        std::vector<int> e(nvars);
        for (int i = 0; i < nvars; ++i) e[i] = (*this)[i];
        return e;
    }

    /// this | other
    bool divides(const Monomial& other) const {
        if (deg_ > other.deg_) return false;
        for (int k = 0; k < kWords; ++k)
            if ((((other.w_[k] | kHigh) - w_[k]) & kHigh) != kHigh) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        r.deg_ = a.deg_ + b.deg_;
        if (r.deg_ > kMaxDegree) throw std::overflow_error("monomial degree exceeds 127");
        for (int k = 0; k < kWords; ++k) r.w_[k] = a.w_[k] + b.w_[k];
        return r;
    }

    /// Exact quotient; requires b | a.
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        Monomial r;
        r.deg_ = a.deg_ - b.deg_;
        for (int k = 0; k < kWords; ++k) r.w_[k] = a.w_[k] - b.w_[k];
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r;
        int deg = 0;
        for (int k = 0; k < kWords; ++k) {
            std::uint64_t ge = (((a.w_[k] | kHigh) - b.w_[k]) & kHigh) >> 7;
            std::uint64_t mask = ge * 0xFF;
            r.w_[k] = (a.w_[k] & mask) | (b.w_[k] & ~mask);
            deg += byte_sum(r.w_[k]);
        }
        r.deg_ = deg;
        return r;
    }

    friend Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial r;
        int deg = 0;
        for (int k = 0; k < kWords; ++k) {
            std::uint64_t ge = (((a.w_[k] | kHigh) - b.w_[k]) & kHigh) >> 7;
            std::uint64_t mask = ge * 0xFF;
            r.w_[k] = (b.w_[k] & mask) | (a.w_[k] & ~mask);
            deg += byte_sum(r.w_[k]);
        }
        r.deg_ = deg;
        return r;
    }

    friend bool coprime(const Monomial& a, const Monomial& b) {
        for (int k = 0; k < kWords; ++k) {
            // nonzero-byte masks
            std::uint64_t na = ((a.w_[k] & ~kHigh) + ~kHigh) | a.w_[k];
            std::uint64_t nb = ((b.w_[k] & ~kHigh) + ~kHigh) | b.w_[k];
            if (na & nb & kHigh) return false;
        }
        return true;
    }

    /// Graded reverse lexicographic comparison: -1, 0, 1.
    friend int grevlex_cmp(const Monomial& a, const Monomial& b) {
        if (a.deg_ != b.deg_) return a.deg_ > b.deg_ ? 1 : -1;
        for (int k = kWords - 1; k >= 0; --k) {
            std::uint64_t x = a.w_[k] ^ b.w_[k];
            if (x == 0) continue;
            int shift = (63 - std::countl_zero(x)) & ~7;
            unsigned ea = (a.w_[k] >> shift) & 0xFF;
            unsigned eb = (b.w_[k] >> shift) & 0xFF;
            return ea < eb ? 1 : -1;
        }
        return 0;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.deg_ == b.deg_ && a.w_ == b.w_;
    }

    std::size_t hash() const {
        std::uint64_t h = 0x9E3779B97F4A7C15ull ^ static_cast<std::uint64_t>(deg_);
        for (auto w : w_) {
            h ^= w + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdull;
        }
        return static_cast<std::size_t>(h ^ (h >> 33));
    }

    /// Bit i set iff variable i occurs; a cheap pre-filter for divisibility.
    std::uint32_t support_mask() const {
        std::uint32_t m = 0;
        for (int k = 0; k < kWords; ++k) {
            std::uint64_t nz = ((w_[k] & ~kHigh) + ~kHigh) | w_[k];
            nz &= kHigh;
            while (nz) {
                int bit = std::countr_zero(nz);
                m |= 1u << (k * 8 + bit / 8);
                nz &= nz - 1;
            }
        }
        return m;
    }

    std::string to_string(std::span<const std::string> names) const {
        if (deg_ == 0) return "1";
        std::string out;
        for (int i = 0; i < kMaxVars; ++i) {
            int e = (*this)[i];
            if (e == 0) continue;
            if (!out.empty()) out += '*';
            out += i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i);
            if (e > 1) out += "^" + std::to_string(e);
        }
        return out;
    }

  private:
    static constexpr std::uint64_t kHigh = 0x8080808080808080ull;

    static int byte_sum(std::uint64_t w) {
        w = (w & 0x00FF00FF00FF00FFull) + ((w >> 8) & 0x00FF00FF00FF00FFull);
        w = (w & 0x0000FFFF0000FFFFull) + ((w >> 16) & 0x0000FFFF0000FFFFull);
        w = (w & 0x00000000FFFFFFFFull) + (w >> 32);
        return static_cast<int>(w);
    }

    void set_byte(int i, std::uint8_t v) {
        std::uint64_t& w = w_[i >> 3];
        int shift = (i & 7) * 8;
        w = (w & ~(std::uint64_t(0xFF) << shift)) | (std::uint64_t(v) << shift);
    }

    std::array<std::uint64_t, kWords> w_{};
    int deg_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Strict "greater than" under grevlex, for sorting terms in decreasing order.
struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_cmp(a, b) > 0; }
};

/// All monomials of degree d in n variables, in decreasing grevlex order.
inline std::vector<Monomial> monomials_of_degree(int nvars, int d) {
    std::vector<Monomial> out;
    if (d < 0 || nvars <= 0) {
        if (d == 0) out.emplace_back();
        return out;
    }
    std::vector<int> e(nvars, 0);
    std::function<void(int, int)> rec = [&](int var, int left) {
        if (var == nvars - 1) {
            e[var] = left;
            out.emplace_back(std::span<const int>(e));
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[var] = k;
            rec(var + 1, left - k);
        }
        e[var] = 0;
    };
    rec(0, d);
    std::sort(out.begin(), out.end(), GrevlexGreater{});
    return out;
}

inline long long binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace gor
