#ifndef HOMHOPF_SCALAR_HPP
#define HOMHOPF_SCALAR_HPP

// Exact field elements over the rationals or a prime field GF(p).

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace homhopf {

/// Descriptor of the ground field: either Q or GF(p) with p prime, p < 2^31.
class Field {
 public:
  constexpr Field() noexcept = default;

  static constexpr Field rationals() noexcept { return Field{}; }

  static Field prime(std::uint64_t p) {
    if (p < 2 || p >= (std::uint64_t{1} << 31)) {
      throw std::invalid_argument("GF(p) requires 2 <= p < 2^31, got " + std::to_string(p));
    }
    for (std::uint64_t d = 2; d * d <= p; ++d) {
      if (p % d == 0) {
        throw std::invalid_argument("GF(p) requires p prime, got " + std::to_string(p));
      }
    }
    Field f;
    f.p_ = static_cast<std::uint32_t>(p);
    return f;
  }

  /// Accepts "Q", "GF(7)", "GF7".
  static Field parse(std::string_view text) {
    if (text == "Q" || text == "QQ") return rationals();
    std::string_view rest = text;
    if (rest.substr(0, 2) == "GF") rest.remove_prefix(2);
    if (!rest.empty() && rest.front() == '(' && rest.back() == ')') {
      rest = rest.substr(1, rest.size() - 2);
    }
    if (rest.empty() || rest.size() > 10 || rest.find_first_not_of("0123456789") != std::string_view::npos) {
      throw std::invalid_argument("unrecognised field '" + std::string(text) + "'");
    }
    return prime(std::stoull(std::string(rest)));
  }

  constexpr bool is_rational() const noexcept { return p_ == 0; }
  constexpr std::uint32_t characteristic() const noexcept { return p_; }

  std::string to_string() const { return is_rational() ? "Q" : "GF(" + std::to_string(p_) + ")"; }

  friend constexpr bool operator==(const Field&, const Field&) noexcept = default;

 private:
  std::uint32_t p_ = 0;
};

namespace detail {

using i128 = __int128;
using u128 = unsigned __int128;

inline u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline u128 abs128(i128 x) { return x < 0 ? static_cast<u128>(-(x + 1)) + 1 : static_cast<u128>(x); }

constexpr i128 kInt64Min = std::numeric_limits<std::int64_t>::min();
constexpr i128 kInt64Max = std::numeric_limits<std::int64_t>::max();

inline mpz_class to_mpz(std::int64_t v) {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
  return z;
}

}  // namespace detail

/// An exact element of a Field. Rationals are held as a reduced int64
/// fraction and promoted to GMP arbitrary precision whenever a result does
/// not fit; GF(p) elements are canonical residues in [0, p).
class Scalar {
 public:
  explicit Scalar(Field field = Field::rationals()) : field_(field) {}

  Scalar(Field field, long value) : field_(field) {
    if (field_.is_rational()) {
      num_ = value;
    } else {
      const long p = static_cast<long>(field_.characteristic());
      long r = value % p;
      num_ = r < 0 ? r + p : r;
    }
  }

  Scalar(Field field, const mpq_class& value) : field_(field) {
    if (field_.is_rational()) {
      mpq_class q = value;
      q.canonicalize();
      set_big(std::move(q));
    } else {
      num_ = reduce(value);
    }
  }

  static Scalar zero(Field field) { return Scalar(field); }
  static Scalar one(Field field) { return Scalar(field, 1L); }

  /// Parses "5", "-3", "3/2". Over GF(p) a fraction is read as num * den^{-1}.
  static Scalar parse(Field field, std::string_view text) {
    std::string s(text);
    std::size_t pos = 0;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    const auto slash = s.find('/');
    auto digits = [&](std::size_t b, std::size_t e) {
      if (b >= e) return false;
      for (std::size_t i = b; i < e; ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
      }
      return true;
    };
    const bool ok = slash == std::string::npos ? digits(pos, s.size())
                                               : digits(pos, slash) && digits(slash + 1, s.size());
    if (!ok) throw std::invalid_argument("malformed coefficient '" + s + "'");
    if (s[0] == '+') s.erase(0, 1);
    const auto cut = s.find('/');
    mpz_class num(s.substr(0, cut), 10);
    mpz_class den = cut == std::string::npos ? mpz_class(1) : mpz_class(s.substr(cut + 1), 10);
    if (den == 0) throw std::domain_error("zero denominator in coefficient '" + std::string(text) + "'");
    return Scalar(field, mpq_class(num, den));
  }

  const Field& field() const noexcept { return field_; }

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }

  /// Canonical text form: lowest-terms "p/q" or an integer; GF(p) residues in [0, p).
  std::string to_string() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  mpq_class rational() const {
    if (big_) return *big_;
    return mpq_class(detail::to_mpz(num_), detail::to_mpz(den_));
  }

  std::uint32_t residue() const noexcept { return field_.is_rational() ? 0 : static_cast<std::uint32_t>(num_); }

  Scalar& operator+=(const Scalar& o) { return add(o, false); }
  Scalar& operator-=(const Scalar& o) { return add(o, true); }

  Scalar& operator*=(const Scalar& o) {
    same_field(o);
    if (!field_.is_rational()) {
      num_ = static_cast<std::int64_t>(static_cast<std::uint64_t>(num_) * static_cast<std::uint64_t>(o.num_) %
                                       field_.characteristic());
      return *this;
    }
    if (!big_ && !o.big_) {
      using namespace detail;
      // cross-reduce so the product is already in lowest terms
      const u128 g1 = gcd128(abs128(num_), static_cast<u128>(o.den_));
      const u128 g2 = gcd128(abs128(o.num_), static_cast<u128>(den_));
      const i128 a = g1 > 1 ? static_cast<i128>(num_) / static_cast<i128>(g1) : num_;
      const i128 d = g1 > 1 ? static_cast<i128>(o.den_) / static_cast<i128>(g1) : o.den_;
      const i128 c = g2 > 1 ? static_cast<i128>(o.num_) / static_cast<i128>(g2) : o.num_;
      const i128 b = g2 > 1 ? static_cast<i128>(den_) / static_cast<i128>(g2) : den_;
      const i128 n = a * c;
      const i128 m = b * d;
      if (n >= kInt64Min && n <= kInt64Max && m <= kInt64Max) {
        num_ = static_cast<std::int64_t>(n);
        den_ = n == 0 ? 1 : static_cast<std::int64_t>(m);
        return *this;
      }
    }
    set_big(mpq_class(rational() * o.rational()));
    return *this;
  }

  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  Scalar inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    Scalar out(field_);
    if (field_.is_rational()) {
      if (big_) {
        out.set_big(mpq_class(1) / *big_);
      } else if (num_ == std::numeric_limits<std::int64_t>::min()) {
        out.set_big(mpq_class(1) / rational());
      } else {
        out.num_ = num_ < 0 ? -den_ : den_;
        out.den_ = num_ < 0 ? -num_ : num_;
      }
      return out;
    }
    // Fermat: r^(p-2)
    const std::uint64_t p = field_.characteristic();
    std::uint64_t base = static_cast<std::uint64_t>(num_), exp = p - 2, acc = 1;
    while (exp > 0) {
      if (exp & 1U) acc = acc * base % p;
      base = base * base % p;
      exp >>= 1U;
    }
    out.num_ = static_cast<std::int64_t>(acc);
    return out;
  }

  Scalar operator-() const {
    Scalar out(field_);
    out -= *this;
    return out;
  }

  /// this += a * b
  void add_product(const Scalar& a, const Scalar& b) {
    if (!field_.is_rational() && a.field_ == field_ && b.field_ == field_) {
      const std::uint64_t p = field_.characteristic();
      const std::uint64_t t = static_cast<std::uint64_t>(a.num_) * static_cast<std::uint64_t>(b.num_) % p;
      num_ = static_cast<std::int64_t>((static_cast<std::uint64_t>(num_) + t) % p);
      return;
    }
    Scalar t = a;
    t *= b;
    *this += t;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_) return false;
    if (a.big_ || b.big_) return a.big_ && b.big_ && *a.big_ == *b.big_;
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Scalar& add(const Scalar& o, bool subtract) {
    same_field(o);
    if (!field_.is_rational()) {
      const std::int64_t p = field_.characteristic();
      std::int64_t r = subtract ? num_ - o.num_ : num_ + o.num_;
      r %= p;
      num_ = r < 0 ? r + p : r;
      return *this;
    }
    if (!big_ && !o.big_) {
      using namespace detail;
      const i128 on = subtract ? -static_cast<i128>(o.num_) : static_cast<i128>(o.num_);
      i128 n, m;
      if (den_ == o.den_) {
        n = static_cast<i128>(num_) + on;
        m = den_;
      } else {
        n = static_cast<i128>(num_) * o.den_ + on * den_;
        m = static_cast<i128>(den_) * o.den_;
      }
      if (n == 0) {
        num_ = 0;
        den_ = 1;
        return *this;
      }
      if (m != 1) {
        const u128 g = gcd128(abs128(n), static_cast<u128>(m));
        if (g > 1) {
          n /= static_cast<i128>(g);
          m /= static_cast<i128>(g);
        }
      }
      if (n >= kInt64Min && n <= kInt64Max && m <= kInt64Max) {
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(m);
        return *this;
      }
    }
    set_big(subtract ? mpq_class(rational() - o.rational()) : mpq_class(rational() + o.rational()));
    return *this;
  }

  /// Stores a canonical rational, demoting to the int64 form when it fits.
  void set_big(mpq_class q) {
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
      num_ = q.get_num().get_si();
      den_ = q.get_den().get_si();
      big_.reset();
    } else {
      num_ = 0;
      den_ = 1;
      big_ = std::make_shared<const mpq_class>(std::move(q));
    }
  }

  void same_field(const Scalar& o) const {
    if (o.field_ != field_) {
      throw std::invalid_argument("field mismatch: " + field_.to_string() + " vs " + o.field_.to_string());
    }
  }

  std::int64_t reduce(const mpq_class& value) const {
    const mpz_class p = field_.characteristic();
    mpz_class num = value.get_num() % p;
    mpz_class den = value.get_den() % p;
    if (num < 0) num += p;
    if (den < 0) den += p;
    if (den == 0) {
      throw std::domain_error("denominator " + value.get_den().get_str() + " vanishes in " + field_.to_string());
    }
    Scalar n(field_), d(field_);
    n.num_ = static_cast<std::int64_t>(num.get_ui());
    d.num_ = static_cast<std::int64_t>(den.get_ui());
    return (n / d).num_;
  }

  Field field_;
  std::int64_t num_ = 0;  // numerator, or the residue over GF(p)
  std::int64_t den_ = 1;  // positive; always 1 over GF(p)
  std::shared_ptr<const mpq_class> big_;
};

}  // namespace homhopf

#endif  // HOMHOPF_SCALAR_HPP
