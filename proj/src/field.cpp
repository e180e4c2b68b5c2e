#include "prf/field.hpp"

#include <sstream>

namespace prf {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<unsigned, unsigned>> prime_power(unsigned q) {
  if (q < 2) return std::nullopt;
  unsigned p = 2;
  while (q % p != 0) ++p;
  unsigned m = 0;
  unsigned r = q;
  while (r % p == 0) {
    r /= p;
    ++m;
  }
  if (r != 1) return std::nullopt;
  return std::make_pair(p, m);
}

namespace {

unsigned long long ipow_u(unsigned base, unsigned exp) {
  unsigned long long r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// Multiplies the packed vector v by x modulo the monic polynomial f.
std::uint32_t times_x(std::uint32_t v, const std::vector<unsigned>& f, unsigned p, unsigned m) {
  std::vector<unsigned> d(m + 1, 0);
  for (unsigned i = 0; i < m; ++i) {
    d[i + 1] = v % p;
    v /= p;
  }
  unsigned top = d[m];
  std::uint32_t out = 0;
  for (unsigned i = m; i-- > 0;) {
    unsigned digit = (d[i] + (p - (top * f[i]) % p)) % p;
    out = out * p + digit;
  }
  return out;
}

// Returns the exp sequence of x modulo f, or an empty vector when x does not
// have order exactly p^m - 1.
std::vector<std::uint32_t> power_sequence(const std::vector<unsigned>& f, unsigned p, unsigned m) {
  const auto q = static_cast<std::uint32_t>(ipow_u(p, m));
  const std::uint32_t order = q - 1;
  std::vector<std::uint32_t> seq;
  seq.reserve(order);
  std::vector<bool> seen(q, false);
  std::uint32_t cur = 1;
  for (std::uint32_t k = 0; k < order; ++k) {
    if (cur == 0 || seen[cur]) return {};
    seen[cur] = true;
    seq.push_back(cur);
    if (m == 1) {
      // f = x + c0, so x = -c0
      cur = static_cast<std::uint32_t>((static_cast<unsigned long long>(cur) * ((p - f[0] % p) % p)) % p);
    } else {
      cur = times_x(cur, f, p, m);
    }
  }
  if (cur != 1) return {};
  return seq;
}

}  // namespace

FieldCtx::FieldCtx(FieldSpec spec, FieldOptions options) : spec_(std::move(spec)) {
  const unsigned p = spec_.p;
  const unsigned m = spec_.m;
  if (!is_prime(p)) throw NonPrimePError("characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw DegreeMismatchError("extension degree must be at least 1");
  if (ipow_u(p, m) > kMaxOrder)
    throw FieldTooLargeError("q = " + std::to_string(p) + "^" + std::to_string(m) + " exceeds 65536");
  auto& f = spec_.prim_poly;
  while (f.size() > 1 && f.back() % p == 0) f.pop_back();
  if (f.size() != m + 1)
    throw DegreeMismatchError("primitive polynomial must have degree " + std::to_string(m));
  for (auto& c : f) c %= p;
  if (f.back() != 1) throw DegreeMismatchError("primitive polynomial must be monic");

  q_ = static_cast<unsigned>(ipow_u(p, m));
  order_ = q_ - 1;
  exp_ = power_sequence(f, p, m);
  if (exp_.empty()) throw NonPrimitivePolyError("root does not generate all nonzero elements");

  log_.assign(q_, 0);
  for (unsigned k = 0; k < order_; ++k) log_[exp_[k]] = static_cast<std::uint16_t>(k + 1);

  neg_.assign(q_, 0);
  for (unsigned lab = 1; lab < q_; ++lab) {
    std::uint32_t v = exp_[lab - 1];
    std::uint32_t out = 0;
    std::uint32_t scale = 1;
    while (v != 0) {
      out += ((p - v % p) % p) * scale;
      v /= p;
      scale *= p;
    }
    neg_[lab] = log_[out];
  }
  minus_one_ = Elem{neg_[1]};

  inv_.assign(q_, 0);
  for (unsigned lab = 1; lab < q_; ++lab) inv_[lab] = static_cast<std::uint16_t>((order_ - (lab - 1)) % order_ + 1);

  // Vector addition is digitwise mod p.
  auto vec_add = [p](std::uint32_t a, std::uint32_t b) {
    std::uint32_t out = 0;
    std::uint32_t scale = 1;
    while (a != 0 || b != 0) {
      out += ((a % p + b % p) % p) * scale;
      a /= p;
      b /= p;
      scale *= p;
    }
    return out;
  };

  zech_.assign(order_, 0);
  for (unsigned k = 0; k < order_; ++k) zech_[k] = log_[vec_add(1, exp_[k])];

  if (!options.force_zech && q_ <= kTableLimit) {
    add_.assign(static_cast<std::size_t>(q_) * q_, 0);
    for (unsigned a = 0; a < q_; ++a)
      for (unsigned b = 0; b < q_; ++b)
        add_[static_cast<std::size_t>(a) * q_ + b] = zech_add(Elem{static_cast<std::uint16_t>(a)}, Elem{static_cast<std::uint16_t>(b)}).label;
  }
}

Elem FieldCtx::zech_add(Elem a, Elem b) const noexcept {
  if (a.label == 0) return b;
  if (b.label == 0) return a;
  unsigned i = a.label - 1u;
  unsigned j = b.label - 1u;
  unsigned diff = j >= i ? j - i : j + order_ - i;
  std::uint16_t z = zech_[diff];
  if (z == 0) return zero();
  return mul(a, Elem{z});
}

Elem FieldCtx::pow(Elem a, long long n) const {
  if (n == 0) return one();
  if (a.label == 0) {
    if (n < 0) throw DivisionByZeroError("negative power of zero");
    return zero();
  }
  long long e = static_cast<long long>(a.label - 1) * (n % static_cast<long long>(order_));
  e %= static_cast<long long>(order_);
  if (e < 0) e += order_;
  return Elem{static_cast<std::uint16_t>(e + 1)};
}

Elem FieldCtx::from_int(long long k) const {
  long long r = k % static_cast<long long>(spec_.p);
  if (r < 0) r += spec_.p;
  return Elem{log_[static_cast<std::uint32_t>(r)]};
}

Elem FieldCtx::from_vector(std::uint32_t v) const {
  if (v >= q_) throw ParseError("vector representation out of range");
  return Elem{log_[v]};
}

FieldSpec default_spec(unsigned p, unsigned m) {
  if (!is_prime(p)) throw NonPrimePError("characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw DegreeMismatchError("extension degree must be at least 1");
  if (ipow_u(p, m) > FieldCtx::kMaxOrder)
    throw FieldTooLargeError("q = " + std::to_string(p) + "^" + std::to_string(m) + " exceeds 65536");
  if (m == 1) {
    for (unsigned g = 1; g < p || p == 2; ++g) {
      std::vector<unsigned> f{(p - g % p) % p, 1};
      if (!power_sequence(f, p, 1).empty()) return FieldSpec{p, 1, f};
      if (p == 2) break;
    }
    throw NonPrimitivePolyError("no primitive root found");
  }
  // Enumerate (c0, ..., c_{m-1}) lexicographically, c0 most significant.
  const unsigned long long total = ipow_u(p, m);
  for (unsigned long long idx = 0; idx < total; ++idx) {
    std::vector<unsigned> f(m + 1, 0);
    unsigned long long r = idx;
    for (unsigned i = m; i-- > 0;) {
      f[i] = static_cast<unsigned>(r % p);
      r /= p;
    }
    f[m] = 1;
    if (f[0] == 0) continue;
    if (!power_sequence(f, p, m).empty()) return FieldSpec{p, m, f};
  }
  throw NonPrimitivePolyError("no primitive polynomial found");
}

std::vector<unsigned> parse_coeff_list(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t start = item.find_first_not_of(" \t");
    std::size_t end = item.find_last_not_of(" \t");
    if (start == std::string::npos) throw ParseError("empty coefficient in '" + text + "'");
    item = item.substr(start, end - start + 1);
    std::size_t pos = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(item, &pos);
    } catch (const std::exception&) {
      throw ParseError("bad coefficient '" + item + "'");
    }
    if (pos != item.size() || value > 0xFFFFFFFFul) throw ParseError("bad coefficient '" + item + "'");
    out.push_back(static_cast<unsigned>(value));
  }
  if (out.empty()) throw ParseError("empty coefficient list");
  return out;
}

}  // namespace prf
