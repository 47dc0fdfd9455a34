#include "vcount/finite_field.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <numeric>

namespace vcount {

namespace {

constexpr std::uint64_t kMaxQ = 1u << 22;       // eager tables stay desk-scale
constexpr std::uint64_t kSmallTableQ = 256;     // full add/mul tables below this

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

using Poly = std::vector<std::uint32_t>;  // coefficients mod p, lowest degree first

int poly_degree(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

// Remainder of f by monic-normalizable g, all arithmetic mod p.
Poly poly_mod(Poly f, const Poly& g, std::uint64_t p) {
  int dg = poly_degree(g);
  assert(dg >= 0);
  std::uint64_t lead = g[dg];
  // lead^-1 mod p by Fermat
  std::uint64_t inv_lead = 1, base = lead, e = p - 2;
  while (e) {
    if (e & 1) inv_lead = inv_lead * base % p;
    base = base * base % p;
    e >>= 1;
  }
  for (int i = poly_degree(f); i >= dg; i = poly_degree(f)) {
    std::uint64_t factor = f[i] * inv_lead % p;
    for (int j = 0; j <= dg; ++j) {
      std::uint64_t sub = factor * g[j] % p;
      f[i - dg + j] = static_cast<std::uint32_t>((f[i - dg + j] + p - sub) % p);
    }
  }
  return f;
}

// Trial division by every monic polynomial of degree 1..deg(f)/2.
bool poly_irreducible(const Poly& f, std::uint64_t p) {
  int n = poly_degree(f);
  if (n < 1) return false;
  if (n == 1) return true;
  for (int d = 1; d <= n / 2; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      std::uint64_t c = code;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_degree(poly_mod(f, g, p)) < 0) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> code_digits(std::uint64_t v, std::uint64_t p, unsigned n) {
  std::vector<std::uint32_t> d(n, 0);
  for (unsigned i = 0; i < n && v; ++i) {
    d[i] = static_cast<std::uint32_t>(v % p);
    v /= p;
  }
  return d;
}

std::uint64_t digits_code(const std::vector<std::uint32_t>& d, std::uint64_t p) {
  std::uint64_t v = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) v = v * p + d[i];
  return v;
}

bool scan_uint(std::string_view s, std::size_t& pos, std::uint64_t& out) {
  std::size_t start = pos;
  std::uint64_t v = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
    ++pos;
  }
  if (pos == start) return false;
  out = v;
  return true;
}

}  // namespace

std::vector<std::int64_t> parse_poly_text(std::string_view text) {
  std::vector<std::int64_t> coeffs;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto set_coeff = [&](std::size_t deg, std::int64_t c) {
    if (coeffs.size() <= deg) coeffs.resize(deg + 1, 0);
    coeffs[deg] += c;
  };
  skip_ws();
  if (pos == text.size()) fail(Errc::parse_error, "empty element literal");
  bool first = true;
  while (true) {
    skip_ws();
    std::int64_t sign = 1;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      if (first) {
        if (text[pos] == '-') sign = -1;
        ++pos;
      } else {
        sign = text[pos] == '-' ? -1 : 1;
        ++pos;
      }
    } else if (!first) {
      break;
    }
    first = false;
    skip_ws();
    std::uint64_t mag = 0;
    bool have_number = scan_uint(text, pos, mag);
    std::int64_t coef = sign * static_cast<std::int64_t>(mag);
    std::uint64_t deg = 0;
    skip_ws();
    bool have_var = false;
    if (have_number && pos < text.size() && text[pos] == '*') {
      ++pos;
      skip_ws();
    }
    if (pos < text.size() && (text[pos] == 't' || text[pos] == 'x')) {
      have_var = true;
      ++pos;
      skip_ws();
      deg = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip_ws();
        if (!scan_uint(text, pos, deg)) fail(Errc::parse_error, "missing exponent after '^'");
      }
    }
    if (!have_number && !have_var) fail(Errc::parse_error, "malformed element literal");
    if (!have_number) coef = sign;
    set_coeff(static_cast<std::size_t>(deg), coef);
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '+' && text[pos] != '-')
      fail(Errc::parse_error, "unexpected character in element literal");
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

std::string render_poly_text(const std::vector<std::int64_t>& coeffs, char var) {
  std::string out;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    std::int64_t c = coeffs[d];
    if (c == 0) continue;
    bool negative = c < 0;
    std::uint64_t mag = negative ? static_cast<std::uint64_t>(-c) : static_cast<std::uint64_t>(c);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? '-' : '+';
    }
    if (d == 0) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) {
        out += std::to_string(mag);
        out += '*';
      }
      out += var;
      if (d > 1) {
        out += '^';
        out += std::to_string(d);
      }
    }
  }
  if (out.empty()) out = "0";
  return out;
}

FiniteField FiniteField::make(std::uint64_t p, unsigned degree,
                              std::optional<std::vector<std::int64_t>> modulus) {
  if (p == 2) fail(Errc::even_characteristic, "characteristic 2 is out of scope");
  if (!is_prime(p)) fail(Errc::not_prime, "p = " + std::to_string(p) + " is not prime");
  if (p % 2 == 0) fail(Errc::even_characteristic, "characteristic must be odd");
  if (degree < 1) fail(Errc::bad_argument, "extension degree must be >= 1");

  std::uint64_t q = 1;
  for (unsigned i = 0; i < degree; ++i) {
    if (q > kMaxQ / p) fail(Errc::bad_argument, "q = p^n exceeds the supported table size");
    q *= p;
  }

  FiniteField f;
  f.p_ = p;
  f.degree_ = degree;
  f.q_ = q;

  if (degree == 1) {
    if (modulus) fail(Errc::bad_argument, "prime fields take no modulus");
  } else if (modulus) {
    if (modulus->empty() || static_cast<unsigned>(modulus->size()) != degree + 1)
      fail(Errc::degree_mismatch, "modulus must have degree n = " + std::to_string(degree));
    Poly m(degree + 1);
    for (unsigned i = 0; i <= degree; ++i) {
      std::int64_t c = (*modulus)[i] % static_cast<std::int64_t>(p);
      if (c < 0) c += static_cast<std::int64_t>(p);
      m[i] = static_cast<std::uint32_t>(c);
    }
    if (m[degree] != 1) fail(Errc::bad_argument, "modulus must be monic");
    if (!poly_irreducible(m, p))
      fail(Errc::reducible_modulus, "modulus is reducible over F_" + std::to_string(p));
    f.modulus_ = std::move(m);
  } else {
    // Canonical choice: smallest coefficient code (base-p digits c0..c_{n-1})
    // among monic irreducibles of degree n.
    std::uint64_t span = q;  // p^n candidate lower parts
    for (std::uint64_t code = 0; code < span; ++code) {
      Poly m(degree + 1, 0);
      std::uint64_t c = code;
      for (unsigned i = 0; i < degree; ++i) {
        m[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      m[degree] = 1;
      if (poly_irreducible(m, p)) {
        f.modulus_ = std::move(m);
        break;
      }
    }
    assert(!f.modulus_.empty());
  }

  f.build_tables(f.search_generator());
  return f;
}

// First code in 1..q-1 whose order is exactly q-1, checked against the prime
// factorization of q-1 using table-free arithmetic.
Fq FiniteField::search_generator() const {
  std::uint64_t m = q_ - 1;
  auto factors = prime_factors(m);
  for (std::uint64_t c = 1; c < q_; ++c) {
    Fq g{static_cast<std::uint32_t>(c)};
    bool ok = true;
    for (std::uint64_t ell : factors) {
      if (pow_direct(g, m / ell) == fq_one) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  fail(Errc::bad_argument, "no generator found (unreachable for a valid field)");
}

Fq FiniteField::mul_direct(Fq a, Fq b) const {
  if (degree_ == 1) {
    return Fq{static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v) * b.v % p_)};
  }
  auto da = code_digits(a.v, p_, degree_);
  auto db = code_digits(b.v, p_, degree_);
  std::vector<std::uint64_t> prod(2 * degree_ - 1, 0);
  for (unsigned i = 0; i < degree_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < degree_; ++j)
      prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_;
  }
  // reduce by the monic modulus
  for (int i = static_cast<int>(prod.size()) - 1; i >= static_cast<int>(degree_); --i) {
    std::uint64_t c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (unsigned j = 0; j < degree_; ++j) {
      std::uint64_t sub = c * modulus_[j] % p_;
      prod[i - degree_ + j] = (prod[i - degree_ + j] + p_ - sub) % p_;
    }
  }
  std::vector<std::uint32_t> digits(degree_);
  for (unsigned i = 0; i < degree_; ++i) digits[i] = static_cast<std::uint32_t>(prod[i]);
  return Fq{static_cast<std::uint32_t>(digits_code(digits, p_))};
}

Fq FiniteField::pow_direct(Fq a, std::uint64_t e) const {
  Fq acc = fq_one;
  Fq base = a;
  while (e) {
    if (e & 1) acc = mul_direct(acc, base);
    base = mul_direct(base, base);
    e >>= 1;
  }
  return acc;
}

void FiniteField::build_tables(Fq generator) {
  alpha_ = generator;
  exp_table_.assign(q_ - 1, 0);
  log_table_.assign(q_, 0);
  Fq cur = fq_one;
  for (std::uint64_t k = 0; k < q_ - 1; ++k) {
    exp_table_[k] = cur.v;
    log_table_[cur.v] = k;
    cur = mul_direct(cur, generator);
  }
  assert(cur == fq_one);  // full cycle

  if (q_ <= kSmallTableQ) {
    add_table_.assign(q_ * q_, 0);
    mul_table_.assign(q_ * q_, 0);
    for (std::uint64_t a = 0; a < q_; ++a) {
      for (std::uint64_t b = 0; b < q_; ++b) {
        std::uint32_t sum;
        if (degree_ == 1) {
          sum = static_cast<std::uint32_t>((a + b) % p_);
        } else {
          auto da = code_digits(a, p_, degree_);
          auto db = code_digits(b, p_, degree_);
          for (unsigned i = 0; i < degree_; ++i)
            da[i] = static_cast<std::uint32_t>((da[i] + db[i]) % p_);
          sum = static_cast<std::uint32_t>(digits_code(da, p_));
        }
        add_table_[a * q_ + b] = sum;
        mul_table_[a * q_ + b] =
            mul_direct(Fq{static_cast<std::uint32_t>(a)}, Fq{static_cast<std::uint32_t>(b)}).v;
      }
    }
  }
}

Fq FiniteField::add(Fq a, Fq b) const {
  if (!add_table_.empty()) return Fq{add_table_[static_cast<std::uint64_t>(a.v) * q_ + b.v]};
  if (degree_ == 1) return Fq{static_cast<std::uint32_t>((static_cast<std::uint64_t>(a.v) + b.v) % p_)};
  auto da = code_digits(a.v, p_, degree_);
  auto db = code_digits(b.v, p_, degree_);
  for (unsigned i = 0; i < degree_; ++i) da[i] = static_cast<std::uint32_t>((da[i] + db[i]) % p_);
  return Fq{static_cast<std::uint32_t>(digits_code(da, p_))};
}

Fq FiniteField::neg(Fq a) const {
  if (degree_ == 1) return Fq{static_cast<std::uint32_t>((p_ - a.v) % p_)};
  auto d = code_digits(a.v, p_, degree_);
  for (unsigned i = 0; i < degree_; ++i) d[i] = static_cast<std::uint32_t>((p_ - d[i]) % p_);
  return Fq{static_cast<std::uint32_t>(digits_code(d, p_))};
}

Fq FiniteField::sub(Fq a, Fq b) const { return add(a, neg(b)); }

Fq FiniteField::mul(Fq a, Fq b) const {
  if (!mul_table_.empty()) return Fq{mul_table_[static_cast<std::uint64_t>(a.v) * q_ + b.v]};
  if (a.v == 0 || b.v == 0) return fq_zero;
  std::uint64_t k = log_table_[a.v] + log_table_[b.v];
  if (k >= q_ - 1) k -= q_ - 1;
  return Fq{exp_table_[k]};
}

Fq FiniteField::inv(Fq a) const {
  if (a.v == 0) fail(Errc::bad_argument, "zero has no inverse");
  std::uint64_t k = (q_ - 1 - log_table_[a.v]) % (q_ - 1);
  return Fq{exp_table_[k]};
}

Fq FiniteField::pow(Fq a, std::uint64_t e) const {
  if (a.v == 0) return e == 0 ? fq_one : fq_zero;
  std::uint64_t k = log_table_[a.v] * (e % (q_ - 1)) % (q_ - 1);
  return Fq{exp_table_[k]};
}

std::uint64_t FiniteField::index_of(Fq a) const {
  if (a.v == 0) fail(Errc::zero_has_no_index, "index of zero is undefined");
  return log_table_[a.v];
}

Fq FiniteField::element_at(std::uint64_t k) const { return Fq{exp_table_[k % (q_ - 1)]}; }

Fq FiniteField::from_integer(std::int64_t value) const {
  std::int64_t r = value % static_cast<std::int64_t>(p_);
  if (r < 0) r += static_cast<std::int64_t>(p_);
  return Fq{static_cast<std::uint32_t>(r)};
}

std::vector<std::uint32_t> FiniteField::coefficients(Fq a) const {
  return code_digits(a.v, p_, degree_);
}

std::uint64_t FiniteField::multiplicative_order(Fq a) const {
  if (a.v == 0) fail(Errc::bad_argument, "zero has no multiplicative order");
  std::uint64_t k = log_table_[a.v];
  return (q_ - 1) / std::gcd(q_ - 1, k);
}

bool FiniteField::is_generator(Fq a) const {
  return a.v != 0 && multiplicative_order(a) == q_ - 1;
}

std::vector<Fq> FiniteField::generators() const {
  std::vector<Fq> out;
  for (std::uint64_t c = 1; c < q_; ++c) {
    Fq a{static_cast<std::uint32_t>(c)};
    if (is_generator(a)) out.push_back(a);
  }
  return out;
}

FiniteField FiniteField::with_primitive_element(Fq g) const {
  if (!is_generator(g))
    fail(Errc::bad_argument, to_string(g) + " does not generate the multiplicative group");
  FiniteField f = *this;
  f.build_tables(g);
  return f;
}

std::string FiniteField::to_string(Fq a) const {
  if (degree_ == 1) return std::to_string(a.v);
  auto digits = code_digits(a.v, p_, degree_);
  std::vector<std::int64_t> coeffs(digits.begin(), digits.end());
  return render_poly_text(coeffs, 't');
}

Fq FiniteField::parse_element(std::string_view text) const {
  auto coeffs = parse_poly_text(text);
  if (static_cast<unsigned>(coeffs.size()) > degree_)
    fail(Errc::degree_mismatch, "element literal degree exceeds field degree");
  Fq acc = fq_zero;
  Fq t = degree_ == 1 ? fq_zero : Fq{static_cast<std::uint32_t>(p_)};  // code of t
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    Fq c = from_integer(coeffs[d]);
    acc = add(acc, mul(c, pow(t, d)));
  }
  return acc;
}

Fq find_primitive_element(const FiniteField& field) {
  for (std::uint64_t c = 1; c < field.q(); ++c) {
    Fq g{static_cast<std::uint32_t>(c)};
    if (field.is_generator(g)) return g;
  }
  fail(Errc::bad_argument, "no generator found (unreachable for a valid field)");
}

}  // namespace vcount
