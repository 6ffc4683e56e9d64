#include <cmath>

#include "doctest.h"
#include "rlpc/cost_function.hpp"
#include "rlpc/error.hpp"

using namespace rlpc;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const CodingError& e) {
    return e.kind();
  }
  FAIL("expected a CodingError");
  return ErrorKind::UsageError;
}

}  // namespace

TEST_CASE("identity") {
  const CostFunction f = CostFunction::identity();
  CHECK(f.phi(3.0) == 3.0);
  CHECK(f.phi_at_zero() == 0.0);
  CHECK(f.phi_inverse(2.5) == 2.5);
  CHECK(f == CostFunction{});
  CHECK(f.name() == "identity");
}

TEST_CASE("exponential") {
  const CostFunction f = CostFunction::exponential(1.0);
  CHECK(f.phi(4) == 16.0);
  CHECK(f.phi_at_zero() == 1.0);
  CHECK(f.phi_inverse(16.0) == doctest::Approx(4.0));
  const CostFunction half = CostFunction::exponential(0.5);
  CHECK(half.phi(4) == doctest::Approx(4.0));
  CHECK_NOTHROW(CostFunction::exponential(2.0).validate_for(LengthSet{1, 2, 8, 64}));
  CHECK(kind_of([] { CostFunction::exponential(0.0); }) == ErrorKind::BadParameter);
  CHECK(kind_of([] { CostFunction::exponential(-1.0); }) == ErrorKind::BadParameter);
  CHECK(kind_of([] { CostFunction::exponential(INFINITY); }) == ErrorKind::BadParameter);
}

TEST_CASE("table") {
  const CostFunction f = CostFunction::table({1, 2, 5, 6});
  CHECK(f.phi(3) == 5.0);
  CHECK(f.phi(0) == 0.0);
  CHECK(f.phi(2.5) == 3.5);
  for (unsigned l = 1; l <= 4; ++l) CHECK(f.phi_inverse(f.phi(l)) == doctest::Approx(l));
  CHECK(f.phi_inverse(3.5) == doctest::Approx(2.5));
  CHECK_NOTHROW(f.validate_for(LengthSet{1, 2, 3, 4}));
  CHECK(kind_of([&] { f.validate_for(LengthSet{2, 5}); }) == ErrorKind::BadParameter);

  CHECK(kind_of([] { CostFunction::table({1, 2, 2, 6}); }) == ErrorKind::NotIncreasing);
  CHECK(kind_of([] { CostFunction::table({}); }) == ErrorKind::BadParameter);
  CHECK(kind_of([] { CostFunction::table({0, 1}); }) == ErrorKind::BadParameter);
}

TEST_CASE("parse_cost_function") {
  CHECK(parse_cost_function("identity") == CostFunction::identity());
  CHECK(parse_cost_function("exp:2") == CostFunction::exponential(2.0));
  CHECK(parse_cost_function("table:1,2,5,6") == CostFunction::table({1, 2, 5, 6}));
  CHECK(kind_of([] { parse_cost_function("exp:x"); }) == ErrorKind::BadParameter);
  CHECK(kind_of([] { parse_cost_function("cubic"); }) == ErrorKind::BadParameter);
  CHECK(kind_of([] { parse_cost_function("table:1,1"); }) == ErrorKind::NotIncreasing);
}
