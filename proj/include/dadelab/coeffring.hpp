#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dadelab/errors.hpp"

namespace dadelab {

/// Largest supported degree phi(p^n) of the cyclotomic extension.
inline constexpr int kMaxDegree = 8;

/// Coefficient vector of 1, zeta, zeta^2, ... in a coefficient ring.
///
/// Elements carry no ring pointer; every operation goes through the owning
/// Ring. Unused trailing coefficients are always zero, so equality is plain
/// array equality.
struct Element {
  std::array<std::uint64_t, kMaxDegree> c{};

  friend bool operator==(const Element&, const Element&) = default;
};

/// Either the prime field GF(p) (the residue field k) or the finite ring
/// Z[zeta]/(Phi_{p^n}(zeta), p^N) standing in for the complete DVR O.
///
/// The truncated ring is a finite chain ring with uniformizer zeta - 1
/// (or p when n = 0) and nilpotency index precision() = degree() * N.
class Ring {
 public:
  enum class Kind { kPrimeField, kTruncatedDvr };

  static std::shared_ptr<const Ring> prime_field(int p);
  static std::shared_ptr<const Ring> truncated_dvr(int p, int n, int N);

  Kind kind() const { return kind_; }
  bool is_field() const { return kind_ == Kind::kPrimeField; }
  int p() const { return p_; }
  /// Exponent n with zeta of order p^n (0 for the prime field).
  int n() const { return n_; }
  /// p-adic precision N: coefficients live in Z/p^N.
  int N() const { return N_; }
  int degree() const { return degree_; }
  std::uint64_t modulus() const { return q_; }
  /// Order p^n of zeta.
  std::uint64_t root_order() const { return root_order_; }
  /// Nilpotency index of the uniformizer; valuations live in [0, precision()].
  int precision() const { return precision_; }

  bool same_as(const Ring& other) const;
  /// Header line of the textual ring form, e.g. "R O p=2 n=2 N=16".
  std::string header() const;
  static std::shared_ptr<const Ring> parse_header(const std::string& line);

  /// The residue field GF(p) of this ring.
  std::shared_ptr<const Ring> residue_field() const;

  Element zero() const { return Element{}; }
  Element one() const { return from_int(1); }
  Element from_int(std::int64_t v) const;
  Element zeta() const;
  /// zeta^a for any integer a.
  Element zeta_pow(std::int64_t a) const;
  Element uniformizer() const { return uniformizer_; }

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  /// a + b * c, the inner step of every dense kernel.
  Element mul_add(const Element& a, const Element& b, const Element& c) const;
  Element pow(const Element& a, std::uint64_t e) const;

  bool is_zero(const Element& a) const { return a == Element{}; }
  bool is_one(const Element& a) const { return a == one(); }
  /// Image under zeta -> 1 followed by reduction mod p.
  std::uint64_t residue_value(const Element& a) const;
  bool is_unit(const Element& a) const { return residue_value(a) != 0; }
  /// Throws NonUnit when a is not invertible.
  Element inverse(const Element& a) const;

  /// Largest v with a in (uniformizer)^v; precision() for zero.
  int valuation(const Element& a) const;
  /// Some y with uniformizer * y == a. Requires residue_value(a) == 0.
  Element divide_by_uniformizer(const Element& a) const;
  /// Some y with b * y == a. Throws NonUnit if valuation(a) < valuation(b).
  Element divide(const Element& a, const Element& b) const;

  /// Exponent a in [0, p^n) with x == zeta^a exactly.
  std::optional<std::uint64_t> match_root_of_unity(const Element& x) const;

  std::string to_string(const Element& a) const;
  Element parse_element(const std::string& text) const;

 private:
  Ring(Kind kind, int p, int n, int N);

  std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t mod_add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + q_ - b;
  }

  Kind kind_;
  int p_;
  int n_;
  int N_;
  int degree_;
  int precision_;
  std::uint64_t q_;
  std::uint64_t root_order_;
  // Spacing p^{n-1} between the nonzero terms of Phi_{p^n}.
  std::uint64_t step_ = 1;
  bool power_of_two_ = false;
  bool wide_ = false;
  Element uniformizer_;
  // H with p = -(zeta - 1) * H(zeta); used to divide p by the uniformizer.
  Element p_cofactor_;
  std::vector<Element> roots_;
};

using RingPtr = std::shared_ptr<const Ring>;

/// build_ring(p, n, N): the truncated DVR Z[zeta]/(Phi_{p^n}, p^N).
RingPtr build_ring(int p, int n, int N);

bool is_prime(std::int64_t v);

/// A ring element bundled with its ring, for callers that want checked
/// arithmetic. Internal kernels work on bare Elements.
struct RingValue {
  RingPtr ring;
  Element value;

  friend bool operator==(const RingValue& a, const RingValue& b);
};

RingValue operator+(const RingValue& a, const RingValue& b);
RingValue operator-(const RingValue& a, const RingValue& b);
RingValue operator*(const RingValue& a, const RingValue& b);
RingValue operator-(const RingValue& a);
RingValue inverse(const RingValue& a);
/// reduce_residue: ring homomorphism onto GF(p), zeta -> 1.
RingValue reduce_residue(const RingValue& a);

}  // namespace dadelab
