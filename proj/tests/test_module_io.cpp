#include <sstream>

#include "doctest.h"
#include "dadelab/heller.hpp"
#include "dadelab/module_io.hpp"

using namespace dadelab;

namespace {

RPModule round_trip(const RPModule& M) {
  std::stringstream ss;
  write_module(M, ss);
  return read_module(ss);
}

std::string read_error(const std::string& text) {
  std::istringstream is(text);
  try {
    read_module(is);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("module files round trip") {
  auto c2 = catalog::build_group("C2");
  auto k = coefficient_ring(*c2, false, 16);
  auto triv = trivial_module(k, c2);
  std::stringstream ss;
  write_module(triv, ss);
  CHECK(ss.str() == "R k p=2\nG C2\ndim 1\ngen\n1\n");
  CHECK(round_trip(triv) == triv);

  auto c8 = catalog::build_group("C8");
  auto O = coefficient_ring(*c8, true, 16);
  auto om = syzygy(trivial_module(O, c8));
  REQUIRE(om.dim() == 7);
  CHECK(round_trip(om) == om);

  auto q8 = catalog::build_group("Q8");
  auto om_q8 = syzygy(trivial_module(coefficient_ring(*q8, true, 16), q8));
  CHECK(round_trip(om_q8) == om_q8);
  CHECK(round_trip(dual(om_q8)) == dual(om_q8));
}

TEST_CASE("module file errors") {
  // Generator of C2 acting by a 2x2 matrix of order 4 over O.
  const std::string bad_relation = "R O p=2 n=1 N=4\nG C2\ndim 2\ngen\n0;-1\n1;0\n";
  std::istringstream is(bad_relation);
  try {
    read_module(is);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("relation") != std::string::npos);
  }

  CHECK(read_error("R k p=2\nG C2\ndim 2\ngen\n1;0\n0\n").find("line 6") != std::string::npos);
  CHECK(read_error("R k p=2\nG C5\ndim 1\ngen\n1\n").find("line 2") != std::string::npos);
  CHECK(read_error("R k p=2\nG C2\nsize 1\n").find("line 3") != std::string::npos);
  CHECK(read_error("R k p=2\nG C2\ndim 1\ngen\nx\n").find("line 5") != std::string::npos);
  CHECK(read_error("R k p=2\nG C2\ndim 1\n").find("end of file") != std::string::npos);
  CHECK(read_error("R k p=3\nG C2\ndim 1\ngen\n1\n").find("primes") != std::string::npos);
}
