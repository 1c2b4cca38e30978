#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace circuit {

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Textual form is "p/q", with "/q" omitted when q == 1.
class Ratio {
 public:
  Ratio() = default;

  template <std::integral I>
  Ratio(I n) : q_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)

  template <std::integral I, std::integral J>
  Ratio(I num, J den) {
    if (den == 0) throw std::domain_error("Ratio: zero denominator");
    q_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    q_.canonicalize();
  }

  explicit Ratio(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "[+|-]p" or "[+|-]p/q". Decimal points, exponents, embedded
  /// whitespace and q == 0 are rejected.
  static Ratio parse(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
      negative = s.front() == '-';
      s.remove_prefix(1);
    }
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : s.substr(slash + 1);
    auto all_digits = [](std::string_view d) {
      if (d.empty()) return false;
      for (char c : d)
        if (c < '0' || c > '9') return false;
      return true;
    };
    if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den)))
      throw std::invalid_argument("malformed rational '" + std::string(text) +
                                  "' (expected p or p/q with integer p, q)");
    mpz_class n(std::string(num), 10);
    mpz_class d = slash == std::string_view::npos ? mpz_class(1) : mpz_class(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("malformed rational '" + std::string(text) + "' (zero denominator)");
    if (negative) n = -n;
    return Ratio(mpq_class(n, d));
  }

  [[nodiscard]] std::string str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  [[nodiscard]] const mpz_class& num() const { return q_.get_num(); }
  [[nodiscard]] const mpz_class& den() const { return q_.get_den(); }
  [[nodiscard]] const mpq_class& raw() const { return q_; }

  [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(q_); }
  [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }

  /// Largest integer not above this value.
  [[nodiscard]] Ratio floor() const {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return Ratio(mpq_class(f));
  }
  [[nodiscard]] Ratio ceil() const {
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return Ratio(mpq_class(c));
  }
  [[nodiscard]] Ratio abs() const { return Ratio(mpq_class(::abs(q_))); }

  /// Display only; never used on a computation path.
  [[nodiscard]] double to_double() const { return q_.get_d(); }

  /// Value as a signed 64-bit integer; throws if not integral or out of range.
  [[nodiscard]] long to_long() const {
    if (!is_integer() || !q_.get_num().fits_slong_p())
      throw std::range_error("Ratio " + str() + " is not a machine integer");
    return q_.get_num().get_si();
  }

  Ratio& operator+=(const Ratio& o) { q_ += o.q_; return *this; }
  Ratio& operator-=(const Ratio& o) { q_ -= o.q_; return *this; }
  Ratio& operator*=(const Ratio& o) { q_ *= o.q_; return *this; }
  Ratio& operator/=(const Ratio& o) {
    if (o.is_zero()) throw std::domain_error("Ratio: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Ratio operator+(Ratio a, const Ratio& b) { return a += b; }
  friend Ratio operator-(Ratio a, const Ratio& b) { return a -= b; }
  friend Ratio operator*(Ratio a, const Ratio& b) { return a *= b; }
  friend Ratio operator/(Ratio a, const Ratio& b) { return a /= b; }
  friend Ratio operator-(const Ratio& a) { return Ratio(mpq_class(-a.q_)); }

  friend bool operator==(const Ratio& a, const Ratio& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Ratio& r) { return os << r.str(); }

 private:
  mpq_class q_{0};
};

inline Ratio min(const Ratio& a, const Ratio& b) { return b < a ? b : a; }
inline Ratio max(const Ratio& a, const Ratio& b) { return a < b ? b : a; }

/// x reduced into [0, m) for m > 0.
inline Ratio mod(const Ratio& x, const Ratio& m) { return x - m * (x / m).floor(); }

}  // namespace circuit

template <>
struct std::hash<circuit::Ratio> {
  size_t operator()(const circuit::Ratio& r) const noexcept {
    size_t h1 = mpz_get_ui(r.num().get_mpz_t()) ^ static_cast<size_t>(r.sign() + 1);
    size_t h2 = mpz_get_ui(r.den().get_mpz_t());
    return h1 * 0x9E3779B97F4A7C15ULL ^ (h2 + 0x7F4A7C15ULL + (h1 << 6) + (h1 >> 2));
  }
};
