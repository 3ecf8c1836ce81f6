#pragma once

#include <cstdint>
#include <string>

#include "dadelab/harness.hpp"
#include "dadelab/pgroup.hpp"

namespace dadelab::harness::checks {

struct Outcome {
  Status status = Status::kFail;
  std::string details;
};

Outcome d1_regular_determinant(const GroupPtr& P, int N, std::uint64_t seed);
Outcome d2_omega_determinant_cyclic(const GroupPtr& P, int N, std::uint64_t seed);
Outcome d3_omega_determinant_noncyclic(const GroupPtr& P, int N, std::uint64_t seed);
Outcome d4_phi_sign_twist(const GroupPtr& P, int N, std::uint64_t seed);
Outcome d5_determinant_identities(const GroupPtr& P, int N, std::uint64_t seed);
Outcome d6_odd_multiplicativity(const GroupPtr& P, int N, std::uint64_t seed);
Outcome s1_order_four(const GroupPtr& P, int N, std::uint64_t seed);
Outcome s2_order_two(const GroupPtr& P, int N, std::uint64_t seed);
Outcome s3_section(const GroupPtr& P, int N, std::uint64_t seed);
Outcome k1_kernel(const GroupPtr& P, int N, std::uint64_t seed);
Outcome t1_reduction_homomorphism(const GroupPtr& P, int N, std::uint64_t seed);
Outcome o1_oracle(const GroupPtr& P, int N, std::uint64_t seed);

}  // namespace dadelab::harness::checks
