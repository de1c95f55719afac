#pragma once

#include <cctype>
#include <concepts>
#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace gor {

/// Raised when a field is misconfigured or an operation needs an
/// invertible element that is zero.
class FieldError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// GF(p) for an odd prime p < 2^31. Elements are residues in [0, p).
class PrimeField {
  public:
    using Element = std::uint32_t;
    static constexpr std::uint32_t kDefaultPrime = 32003;

    explicit PrimeField(std::uint32_t p = kDefaultPrime) : p_(p) {
        if (p <= 2 || p >= (1u << 31) || !is_prime(p))
            throw FieldError("GF(p) requires an odd prime p < 2^31, got " + std::to_string(p));
    }

    std::uint32_t characteristic() const { return p_; }
    bool is_prime_field() const { return true; }

    Element zero() const { return 0; }
    Element one() const { return 1; }
    bool is_zero(Element a) const { return a == 0; }
    bool is_one(Element a) const { return a == 1; }

    Element add(Element a, Element b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
    Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
    Element mul(Element a, Element b) const {
        return static_cast<Element>((std::uint64_t(a) * b) % p_);
    }
    Element inv(Element a) const {
        if (a == 0) throw FieldError("division by zero in GF(" + std::to_string(p_) + ")");
        std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        if (t < 0) t += p_;
        return static_cast<Element>(t);
    }
    Element div(Element a, Element b) const { return mul(a, inv(b)); }

    Element from_int(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<Element>(r);
    }
    Element from_mpz(const mpz_class& v) const {
        mpz_class r = v % p_;
        if (r < 0) r += p_;
        return static_cast<Element>(r.get_ui());
    }
    /// Representative in (-p/2, p/2], used for printing.
    std::int64_t to_signed(Element a) const {
        return a > p_ / 2 ? std::int64_t(a) - std::int64_t(p_) : std::int64_t(a);
    }
    std::string to_string(Element a) const { return std::to_string(to_signed(a)); }

    template <class Rng>
    Element random(Rng& rng) const {
        return std::uniform_int_distribution<std::uint32_t>(0, p_ - 1)(rng);
    }

    std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

  private:
    std::uint32_t p_;
};

/// The rationals, backed by GMP.
class RationalField {
  public:
    using Element = mpq_class;

    std::uint32_t characteristic() const { return 0; }
    bool is_prime_field() const { return false; }

    Element zero() const { return 0; }
    Element one() const { return 1; }
    bool is_zero(const Element& a) const { return sgn(a) == 0; }
    bool is_one(const Element& a) const { return a == 1; }

    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element inv(const Element& a) const {
        if (sgn(a) == 0) throw FieldError("division by zero in QQ");
        return 1 / a;
    }
    Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

    Element from_int(std::int64_t v) const { return Element(static_cast<long>(v)); }
    Element from_mpz(const mpz_class& v) const { return Element(v); }
    std::string to_string(const Element& a) const { return a.get_str(); }

    /// Small random integers; large enough to be generic for the sizes handled here.
    template <class Rng>
    Element random(Rng& rng) const {
        return Element(std::uniform_int_distribution<long>(-100, 100)(rng));
    }

    std::string name() const { return "QQ"; }

    friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

template <class F>
concept CoefficientField = requires(const F& f, const typename F::Element& a, std::mt19937_64& rng) {
    { f.zero() } -> std::convertible_to<typename F::Element>;
    { f.one() } -> std::convertible_to<typename F::Element>;
    { f.is_zero(a) } -> std::convertible_to<bool>;
    { f.add(a, a) } -> std::convertible_to<typename F::Element>;
    { f.sub(a, a) } -> std::convertible_to<typename F::Element>;
    { f.mul(a, a) } -> std::convertible_to<typename F::Element>;
    { f.neg(a) } -> std::convertible_to<typename F::Element>;
    { f.inv(a) } -> std::convertible_to<typename F::Element>;
    { f.from_int(std::int64_t{}) } -> std::convertible_to<typename F::Element>;
    { f.to_string(a) } -> std::convertible_to<std::string>;
    { f.random(rng) } -> std::convertible_to<typename F::Element>;
    { f.characteristic() } -> std::convertible_to<std::uint32_t>;
    { f.name() } -> std::convertible_to<std::string>;
};

static_assert(CoefficientField<PrimeField>);
static_assert(CoefficientField<RationalField>);

/// Parsed form of a `GF(p)` / `QQ` field declaration.
struct FieldDescriptor {
    bool rational = false;
    std::uint32_t prime = PrimeField::kDefaultPrime;

    std::string name() const { return rational ? "QQ" : "GF(" + std::to_string(prime) + ")"; }

    static FieldDescriptor parse(const std::string& text) {
        std::string s;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s += c;
        if (s == "QQ") return FieldDescriptor{true, 0};
        if (s.size() > 4 && s.rfind("GF(", 0) == 0 && s.back() == ')') {
            std::string digits = s.substr(3, s.size() - 4);
            if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos &&
                digits.size() <= 10) {
                std::uint64_t p = std::stoull(digits);
                if (p > 2 && p < (1ull << 31) && is_prime(p))
                    return FieldDescriptor{false, static_cast<std::uint32_t>(p)};
                throw FieldError("GF(p) requires an odd prime p < 2^31, got " + digits);
            }
        }
        throw FieldError("unrecognised field '" + text + "' (expected GF(p) or QQ)");
    }
};

/// Calls `fn` with a concrete field object for the descriptor.
template <class Fn>
decltype(auto) with_field(const FieldDescriptor& desc, Fn&& fn) {
    if (desc.rational) return fn(RationalField{});
    return fn(PrimeField{desc.prime});
}

}  // namespace gor
