#include "blockloewy/gfield.hpp"

#include <stdexcept>

namespace blockloewy {

namespace {

constexpr std::uint64_t kTableCap = 1u << 20;
constexpr std::uint64_t kAddTableCap = 729;

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m over F_p.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() >= m.size()) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      const std::uint64_t sub = lead * m[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t n = f.size() - 1;
  if (n == 1) return true;
  // Trial division by every monic polynomial of degree 1..n/2.
  for (std::size_t k = 1; 2 * k <= n; ++k) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly d(k + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < k; ++i) {
        d[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      d[k] = 1;
      if (poly_mod(f, d, p).empty()) return false;
    }
  }
  return true;
}

GField::GField(std::uint32_t p, std::uint32_t s) : p_(p), s_(s) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (s == 0) throw std::invalid_argument("extension degree must be positive");
  pow_p_.resize(s + 1);
  pow_p_[0] = 1;
  for (std::uint32_t i = 1; i <= s; ++i) {
    if (pow_p_[i - 1] > (std::uint64_t{1} << 32) / p)
      throw std::invalid_argument("field too large for 32-bit element encoding");
    pow_p_[i] = pow_p_[i - 1] * p;
  }
  q_ = pow_p_[s];

  for (std::uint64_t code = 0; code < q_; ++code) {
    Poly m(s + 1, 0);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < s; ++i) {
      m[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    m[s] = 1;
    if (is_irreducible_mod_p(m, p)) {
      modulus_ = std::move(m);
      break;
    }
  }

  if (q_ == 2) {
    generator_ = 1;
  } else {
    const auto factors = prime_factors(q_ - 1);
    for (std::uint64_t g = 2; g < q_; ++g) {
      bool ok = true;
      for (auto r : factors) {
        if (pow(static_cast<Elem>(g), (q_ - 1) / r) == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        generator_ = static_cast<Elem>(g);
        break;
      }
    }
  }

  if (q_ <= kTableCap) {
    const std::uint64_t n = q_ - 1;
    exp_.resize(2 * n + 1);
    log_.assign(q_, 0);
    Elem x = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
      exp_[i] = x;
      log_[x] = static_cast<std::uint32_t>(i);
      x = poly_mul(x, generator_);
    }
    for (std::uint64_t i = n; i < exp_.size(); ++i) exp_[i] = exp_[i - n];
    tables_ = true;
  }

  if (s_ > 1 && p_ != 2 && q_ <= kAddTableCap) {
    add_table_.resize(q_ * q_);
    for (std::uint64_t a = 0; a < q_; ++a) {
      for (std::uint64_t b = 0; b < q_; ++b) {
        Elem r = 0;
        std::uint64_t x = a, y = b;
        for (std::uint32_t i = 0; i < s_; ++i) {
          r += static_cast<Elem>(((x % p_) + (y % p_)) % p_ * pow_p_[i]);
          x /= p_;
          y /= p_;
        }
        add_table_[a * q_ + b] = r;
      }
    }
  }
}

GField::Elem GField::poly_mul(Elem a, Elem b) const {
  if (s_ == 1) return static_cast<Elem>(std::uint64_t{a} * b % p_);
  const auto ca = coords(a);
  const auto cb = coords(b);
  Poly prod(2 * s_ - 1, 0);
  for (std::uint32_t i = 0; i < s_; ++i) {
    if (ca[i] == 0) continue;
    for (std::uint32_t j = 0; j < s_; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % p_);
  }
  Poly r = poly_mod(std::move(prod), modulus_, p_);
  r.resize(s_, 0);
  return from_coords(r);
}

GField::Elem GField::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  if (s_ == 1) {
    const Elem r = a + b;
    return r >= p_ ? r - p_ : r;
  }
  if (!add_table_.empty()) return add_table_[std::uint64_t{a} * q_ + b];
  Elem r = 0;
  for (std::uint32_t i = 0; i < s_; ++i) {
    r += static_cast<Elem>((a % p_ + b % p_) % p_ * pow_p_[i]);
    a /= p_;
    b /= p_;
  }
  return r;
}

GField::Elem GField::neg(Elem a) const {
  if (p_ == 2) return a;
  if (s_ == 1) return a == 0 ? 0 : p_ - a;
  Elem r = 0;
  for (std::uint32_t i = 0; i < s_; ++i) {
    r += static_cast<Elem>((p_ - a % p_) % p_ * pow_p_[i]);
    a /= p_;
  }
  return r;
}

GField::Elem GField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

GField::Elem GField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  if (s_ == 1) return static_cast<Elem>(std::uint64_t{a} * b % p_);
  if (tables_) return exp_[log_[a] + log_[b]];
  return poly_mul(a, b);
}

GField::Elem GField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  if (tables_) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  return pow(a, q_ - 2);
}

GField::Elem GField::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (tables_) {
    const std::uint64_t n = q_ - 1;
    return exp_[(std::uint64_t{log_[a]} * (e % n)) % n];
  }
  Elem result = 1;
  Elem base = a;
  while (e > 0) {
    if (e & 1) result = poly_mul(result, base);
    base = poly_mul(base, base);
    e >>= 1;
  }
  return result;
}

GField::Elem GField::frobenius(Elem a, std::uint32_t k) const {
  k %= s_;
  if (k == 0) return a;
  return pow(a, pow_p_[k]);
}

GField::Elem GField::from_int(std::int64_t v) const {
  const std::int64_t p = p_;
  return static_cast<Elem>(((v % p) + p) % p);
}

std::vector<std::uint32_t> GField::coords(Elem a) const {
  std::vector<std::uint32_t> c(s_);
  for (std::uint32_t i = 0; i < s_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

GField::Elem GField::from_coords(std::span<const std::uint32_t> c) const {
  Elem r = 0;
  for (std::size_t i = 0; i < c.size() && i < s_; ++i) r += static_cast<Elem>(c[i] % p_ * pow_p_[i]);
  return r;
}

void GField::axpy(Elem* dst, const Elem* src, Elem f, std::size_t n) const {
  if (f == 0) return;
  if (p_ == 2 && s_ == 1) {
    for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
    return;
  }
  if (s_ == 1) {
    const std::uint64_t ff = f;
    for (std::size_t i = 0; i < n; ++i) {
      if (src[i] == 0) continue;
      dst[i] = static_cast<Elem>((dst[i] + ff * src[i]) % p_);
    }
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (src[i] == 0) continue;
    dst[i] = add(dst[i], mul(f, src[i]));
  }
}

void GField::scale(Elem* v, Elem f, std::size_t n) const {
  if (f == 1) return;
  for (std::size_t i = 0; i < n; ++i) v[i] = mul(v[i], f);
}

std::string GField::to_string(Elem a) const {
  if (s_ == 1) return std::to_string(a);
  const auto c = coords(a);
  std::string out;
  for (std::uint32_t i = s_; i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (c[i] != 1 || i == 0) out += std::to_string(c[i]);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::string GField::name() const {
  return "GF(" + std::to_string(p_) + (s_ > 1 ? "^" + std::to_string(s_) : "") + ")";
}

FieldPtr make_field(std::uint32_t p, std::uint32_t s) { return std::make_shared<const GField>(p, s); }

}  // namespace blockloewy
