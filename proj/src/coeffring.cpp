#include "dadelab/coeffring.hpp"

#include <cctype>
#include <sstream>

namespace dadelab {

bool is_prime(std::int64_t v) {
  if (v < 2) return false;
  for (std::int64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

Ring::Ring(Kind kind, int p, int n, int N) : kind_(kind), p_(p), n_(n), N_(N) {
  if (!is_prime(p)) throw InvalidArgument("ring: " + std::to_string(p) + " is not prime");
  if (N < 1) throw InvalidArgument("ring: precision N must be >= 1");
  if (n < 0) n_ = 0;

  // p^N must leave headroom below 2^63 for modular addition.
  unsigned __int128 q = 1;
  for (int i = 0; i < N; ++i) {
    q *= static_cast<unsigned>(p);
    if (q > (static_cast<unsigned __int128>(1) << 62)) {
      throw InvalidArgument("ring: p^N exceeds 2^62");
    }
  }
  q_ = static_cast<std::uint64_t>(q);
  power_of_two_ = (p == 2);
  wide_ = q_ >= (std::uint64_t{1} << 32);

  root_order_ = 1;
  for (int i = 0; i < n_; ++i) root_order_ *= static_cast<std::uint64_t>(p);
  if (n_ == 0) {
    degree_ = 1;
    step_ = 1;
  } else {
    step_ = root_order_ / static_cast<std::uint64_t>(p);
    degree_ = static_cast<int>((static_cast<std::uint64_t>(p) - 1) * step_);
  }
  if (degree_ > kMaxDegree) {
    throw InvalidArgument("ring: phi(p^n) = " + std::to_string(degree_) + " exceeds the supported degree " +
                          std::to_string(kMaxDegree));
  }
  precision_ = degree_ * N_;

  if (n_ == 0) {
    uniformizer_ = from_int(p);
  } else {
    uniformizer_ = sub(zeta(), one());
    // Synthetic division of Phi(t) - p by (t - 1).
    std::vector<std::uint64_t> phi(static_cast<std::size_t>(degree_) + 1, 0);
    for (int j = 0; j < p; ++j) phi[static_cast<std::size_t>(j) * step_] = 1;
    std::vector<std::uint64_t> quotient(static_cast<std::size_t>(degree_), 0);
    quotient[static_cast<std::size_t>(degree_) - 1] = phi[static_cast<std::size_t>(degree_)];
    for (int k = degree_ - 1; k >= 1; --k) {
      quotient[static_cast<std::size_t>(k) - 1] = mod_add(phi[static_cast<std::size_t>(k)] % q_,
                                                           quotient[static_cast<std::size_t>(k)]);
    }
    for (int k = 0; k < degree_; ++k) p_cofactor_.c[static_cast<std::size_t>(k)] = quotient[static_cast<std::size_t>(k)] % q_;
  }

  roots_.reserve(root_order_);
  Element z = one();
  const Element step = zeta();
  for (std::uint64_t a = 0; a < root_order_; ++a) {
    roots_.push_back(z);
    z = mul(z, step);
  }
  if (!is_one(z)) throw InternalInvariantViolation("ring: zeta^(p^n) != 1");
}

std::shared_ptr<const Ring> Ring::prime_field(int p) {
  return std::shared_ptr<const Ring>(new Ring(Kind::kPrimeField, p, 0, 1));
}

std::shared_ptr<const Ring> Ring::truncated_dvr(int p, int n, int N) {
  return std::shared_ptr<const Ring>(new Ring(Kind::kTruncatedDvr, p, n, N));
}

RingPtr build_ring(int p, int n, int N) { return Ring::truncated_dvr(p, n, N); }

bool Ring::same_as(const Ring& other) const {
  return kind_ == other.kind_ && p_ == other.p_ && n_ == other.n_ && N_ == other.N_;
}

std::string Ring::header() const {
  std::ostringstream os;
  if (is_field()) {
    os << "R k p=" << p_;
  } else {
    os << "R O p=" << p_ << " n=" << n_ << " N=" << N_;
  }
  return os.str();
}

std::shared_ptr<const Ring> Ring::parse_header(const std::string& line) {
  std::istringstream is(line);
  std::string tag, kind;
  is >> tag >> kind;
  if (tag != "R" || (kind != "k" && kind != "O")) throw ParseError("ring header: expected 'R k' or 'R O'");
  int p = -1, n = -1, N = -1;
  std::string tok;
  while (is >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw ParseError("ring header: bad token '" + tok + "'");
    std::string key = tok.substr(0, eq);
    int value = 0;
    try {
      value = std::stoi(tok.substr(eq + 1));
    } catch (const std::exception&) {
      throw ParseError("ring header: bad value in '" + tok + "'");
    }
    if (key == "p") {
      p = value;
    } else if (key == "n") {
      n = value;
    } else if (key == "N") {
      N = value;
    } else {
      throw ParseError("ring header: unknown key '" + key + "'");
    }
  }
  if (p < 0) throw ParseError("ring header: missing p");
  if (kind == "k") return prime_field(p);
  if (n < 0 || N < 0) throw ParseError("ring header: O needs n and N");
  return truncated_dvr(p, n, N);
}

std::shared_ptr<const Ring> Ring::residue_field() const { return prime_field(p_); }

Element Ring::from_int(std::int64_t v) const {
  Element e;
  std::int64_t m = static_cast<std::int64_t>(q_);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  e.c[0] = static_cast<std::uint64_t>(r);
  return e;
}

Element Ring::zeta() const {
  if (n_ == 0) return one();
  if (degree_ >= 2) {
    Element e;
    e.c[1] = 1;
    return e;
  }
  // degree 1 means p = 2, n = 1 and zeta = -1.
  return from_int(-1);
}

Element Ring::zeta_pow(std::int64_t a) const {
  std::int64_t m = static_cast<std::int64_t>(root_order_);
  std::int64_t r = a % m;
  if (r < 0) r += m;
  return roots_[static_cast<std::size_t>(r)];
}

std::uint64_t Ring::mod_mul(std::uint64_t a, std::uint64_t b) const {
  if (power_of_two_) return (a * b) & (q_ - 1);
  if (!wide_) return (a * b) % q_;
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % q_);
}

Element Ring::add(const Element& a, const Element& b) const {
  Element r;
  for (int i = 0; i < degree_; ++i) r.c[i] = mod_add(a.c[i], b.c[i]);
  return r;
}

Element Ring::sub(const Element& a, const Element& b) const {
  Element r;
  for (int i = 0; i < degree_; ++i) r.c[i] = mod_sub(a.c[i], b.c[i]);
  return r;
}

Element Ring::neg(const Element& a) const {
  Element r;
  for (int i = 0; i < degree_; ++i) r.c[i] = a.c[i] == 0 ? 0 : q_ - a.c[i];
  return r;
}

Element Ring::mul(const Element& a, const Element& b) const {
  Element r;
  if (degree_ == 1) {
    r.c[0] = mod_mul(a.c[0], b.c[0]);
    return r;
  }
  std::array<std::uint64_t, 2 * kMaxDegree> t{};
  for (int i = 0; i < degree_; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < degree_; ++j) {
      if (b.c[j] == 0) continue;
      t[i + j] = mod_add(t[i + j], mod_mul(a.c[i], b.c[j]));
    }
  }
  // zeta^e = -(1 + zeta^s + ... + zeta^{(p-2)s}), s = p^{n-1}.
  for (int k = 2 * degree_ - 2; k >= degree_; --k) {
    std::uint64_t c = t[k];
    if (c == 0) continue;
    t[k] = 0;
    for (int j = 0; j + 1 < p_; ++j) {
      std::size_t pos = static_cast<std::size_t>(k - degree_) + static_cast<std::size_t>(j) * step_;
      t[pos] = mod_sub(t[pos], c);
    }
  }
  for (int i = 0; i < degree_; ++i) r.c[i] = t[i];
  return r;
}

Element Ring::mul_add(const Element& a, const Element& b, const Element& c) const {
  if (degree_ == 1) {
    Element r;
    r.c[0] = mod_add(a.c[0], mod_mul(b.c[0], c.c[0]));
    return r;
  }
  return add(a, mul(b, c));
}

Element Ring::pow(const Element& a, std::uint64_t e) const {
  Element result = one();
  Element base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint64_t Ring::residue_value(const Element& a) const {
  std::uint64_t s = 0;
  const auto pp = static_cast<std::uint64_t>(p_);
  for (int i = 0; i < degree_; ++i) s = (s + a.c[i] % pp) % pp;
  return s;
}

Element Ring::inverse(const Element& a) const {
  std::uint64_t r = residue_value(a);
  if (r == 0) throw NonUnit("inverse of a non-unit " + to_string(a));
  std::uint64_t rinv = 1;
  const auto pp = static_cast<std::uint64_t>(p_);
  while ((rinv * r) % pp != 1) ++rinv;
  Element x = from_int(static_cast<std::int64_t>(rinv));
  const Element two = from_int(2);
  for (int iter = 0; iter < 80; ++iter) {
    Element ax = mul(a, x);
    if (is_one(ax)) return x;
    x = mul(x, sub(two, ax));
  }
  throw InternalInvariantViolation("inverse: Newton iteration did not converge");
}

Element Ring::divide_by_uniformizer(const Element& a) const {
  if (residue_value(a) != 0) throw NonUnit("divide_by_uniformizer: element is a unit");
  const auto pp = static_cast<std::uint64_t>(p_);
  if (n_ == 0) {
    Element r;
    r.c[0] = a.c[0] / pp;
    return r;
  }
  // a(t) = (t - 1) Q(t) + R with R = a(1) = p s, and p = -(zeta - 1) H(zeta).
  Element quotient;
  for (int k = degree_ - 1; k >= 1; --k) {
    quotient.c[k - 1] = mod_add(a.c[k], k < degree_ - 1 ? quotient.c[k] : 0);
  }
  std::uint64_t rem = mod_add(a.c[0], degree_ >= 2 ? quotient.c[0] : 0);
  std::uint64_t s = rem / pp;
  Element scaled = mul(from_int(static_cast<std::int64_t>(s)), p_cofactor_);
  return sub(quotient, scaled);
}

int Ring::valuation(const Element& a) const {
  if (is_zero(a)) return precision_;
  int v = 0;
  Element x = a;
  while (residue_value(x) == 0) {
    x = divide_by_uniformizer(x);
    ++v;
    if (v >= precision_) return precision_;
  }
  return v;
}

Element Ring::divide(const Element& a, const Element& b) const {
  if (is_unit(b)) return mul(a, inverse(b));
  if (is_zero(a)) return zero();
  Element bu = b;
  Element au = a;
  int vb = 0;
  while (residue_value(bu) == 0) {
    if (is_zero(bu)) throw NonUnit("divide: division by zero");
    if (residue_value(au) != 0) throw NonUnit("divide: valuation of numerator below denominator");
    bu = divide_by_uniformizer(bu);
    au = divide_by_uniformizer(au);
    if (++vb > precision_) throw NonUnit("divide: division by zero");
  }
  return mul(au, inverse(bu));
}

std::optional<std::uint64_t> Ring::match_root_of_unity(const Element& x) const {
  for (std::uint64_t a = 0; a < roots_.size(); ++a) {
    if (roots_[a] == x) return a;
  }
  return std::nullopt;
}

std::string Ring::to_string(const Element& a) const {
  std::string out;
  for (int i = 0; i < degree_; ++i) {
    if (i > 0) out += ',';
    out += std::to_string(a.c[i]);
  }
  return out;
}

Element Ring::parse_element(const std::string& text) const {
  Element e;
  std::istringstream is(text);
  std::string part;
  int idx = 0;
  while (std::getline(is, part, ',')) {
    if (idx >= degree_) throw ParseError("element '" + text + "' has too many coefficients");
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(part, &used);
    } catch (const std::exception&) {
      throw ParseError("element '" + text + "': bad coefficient '" + part + "'");
    }
    while (used < part.size() && std::isspace(static_cast<unsigned char>(part[used]))) ++used;
    if (used != part.size()) throw ParseError("element '" + text + "': bad coefficient '" + part + "'");
    e.c[idx++] = from_int(v).c[0];
  }
  if (idx == 0) throw ParseError("empty element");
  return e;
}

namespace {

void require_same(const RingValue& a, const RingValue& b) {
  if (!a.ring || !b.ring || !a.ring->same_as(*b.ring)) throw RingMismatch("ring mismatch");
}

}  // namespace

bool operator==(const RingValue& a, const RingValue& b) {
  return a.ring && b.ring && a.ring->same_as(*b.ring) && a.value == b.value;
}

RingValue operator+(const RingValue& a, const RingValue& b) {
  require_same(a, b);
  return {a.ring, a.ring->add(a.value, b.value)};
}

RingValue operator-(const RingValue& a, const RingValue& b) {
  require_same(a, b);
  return {a.ring, a.ring->sub(a.value, b.value)};
}

RingValue operator*(const RingValue& a, const RingValue& b) {
  require_same(a, b);
  return {a.ring, a.ring->mul(a.value, b.value)};
}

RingValue operator-(const RingValue& a) { return {a.ring, a.ring->neg(a.value)}; }

RingValue inverse(const RingValue& a) { return {a.ring, a.ring->inverse(a.value)}; }

RingValue reduce_residue(const RingValue& a) {
  auto k = a.ring->residue_field();
  return {k, k->from_int(static_cast<std::int64_t>(a.ring->residue_value(a.value)))};
}

}  // namespace dadelab
