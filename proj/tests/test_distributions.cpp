#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>

#include "doctest.h"
#include "rlpc/distributions.hpp"
#include "rlpc/error.hpp"
#include "test_support.hpp"

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

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path, std::ios::binary) << contents;
  return path;
}

void check_pmf_invariants(const Pmf& pmf) {
  double sum = 0.0;
  std::vector<bool> seen(pmf.size(), false);
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    CHECK(pmf[i] > 0.0);
    if (i > 0) CHECK(pmf[i - 1] >= pmf[i]);
    sum += pmf[i];
    REQUIRE(pmf.perm()[i] < pmf.size());
    CHECK_FALSE(seen[pmf.perm()[i]]);
    seen[pmf.perm()[i]] = true;
  }
  CHECK(std::abs(sum - 1.0) <= 1e-9);
}

}  // namespace

TEST_CASE("make_pmf sorts, normalizes and records the permutation") {
  const std::vector<double> half{0.5, 0.5};
  const Pmf a = make_pmf(half, false);
  CHECK(a.probs() == std::vector<double>{0.5, 0.5});
  CHECK(a.perm() == std::vector<std::size_t>{0, 1});

  const std::vector<double> w{1, 1, 2};
  const Pmf b = make_pmf(w, true);
  CHECK(b.probs() == std::vector<double>{0.5, 0.25, 0.25});
  CHECK(b.perm()[0] == 2);
  // stable: ties keep user order
  CHECK(b.perm()[1] == 0);
  CHECK(b.perm()[2] == 1);
}

TEST_CASE("make_pmf errors") {
  const std::vector<double> low{0.3, 0.3, 0.3};
  CHECK(kind_of([&] { make_pmf(low, false); }) == ErrorKind::NotNormalized);
  const std::vector<double> one{1.0};
  CHECK(kind_of([&] { make_pmf(one, true); }) == ErrorKind::EmptyOrSingleton);
  CHECK(kind_of([&] { make_pmf(std::vector<double>{}, true); }) == ErrorKind::EmptyOrSingleton);
  const std::vector<double> zero{0.5, 0.0, 0.5};
  CHECK(kind_of([&] { make_pmf(zero, true); }) == ErrorKind::NonPositiveWeight);
  const std::vector<double> negative{0.5, -0.1, 0.6};
  CHECK(kind_of([&] { make_pmf(negative, true); }) == ErrorKind::NonPositiveWeight);
  // float noise inside the tolerance is accepted without the flag
  const std::vector<double> noisy{0.5, 0.5 + 5e-10};
  CHECK_NOTHROW(make_pmf(noisy, false));
}

TEST_CASE("zipf_pmf") {
  const Pmf z2 = zipf_pmf(2);
  CHECK(z2[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(z2[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  const Pmf z3 = zipf_pmf(3);
  CHECK(z3[0] == doctest::Approx(6.0 / 11.0).epsilon(1e-15));
  CHECK(z3[1] == doctest::Approx(3.0 / 11.0).epsilon(1e-15));
  CHECK(z3[2] == doctest::Approx(2.0 / 11.0).epsilon(1e-15));
  CHECK(kind_of([] { zipf_pmf(1); }) == ErrorKind::EmptyOrSingleton);

  const Pmf z = zipf_pmf(4096);
  check_pmf_invariants(z);
  for (std::size_t i = 0; i < z.size(); i += 97) CHECK(std::abs(z[0] / z[i] - static_cast<double>(i + 1)) <= 1e-12 * (i + 1));
}

TEST_CASE("benford_pmf matches the printed table to three decimals") {
  const Pmf b = benford_pmf();
  REQUIRE(b.size() == 9);
  const double printed[] = {0.301, 0.176, 0.125, 0.097, 0.079, 0.067, 0.058, 0.051, 0.046};
  for (std::size_t i = 0; i < 9; ++i) CHECK(std::abs(b[i] - printed[i]) < 0.0005 + 1e-12);
  double sum = 0.0;
  for (double p : b.probs()) sum += p;
  CHECK(std::abs(sum - 1.0) < 1e-12);
  check_pmf_invariants(b);
}

TEST_CASE("cdf") {
  const CumulativeTable fb = cdf(benford_pmf());
  CHECK(fb.F[0] == 0.0);
  CHECK(fb.F[2] == doctest::Approx(0.477).epsilon(0.001));
  CHECK(std::abs(fb.F[9] - 1.0) < 1e-9);

  const std::vector<double> u{1, 1, 1, 1};
  const CumulativeTable fu = cdf(make_pmf(u, true));
  CHECK(fu.F == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
}

TEST_CASE("random pmfs satisfy the type invariants") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 40;
    const Pmf pmf = testing::random_pmf(rng, n);
    check_pmf_invariants(pmf);
    const CumulativeTable F = cdf(pmf);
    CHECK(std::is_sorted(F.F.begin(), F.F.end()));
    CHECK(std::abs(F.F.back() - 1.0) < 1e-9);
  }
}

TEST_CASE("pmf_from_file: csv") {
  const Pmf p = pmf_from_file(temp_file("rlpc_two.csv", "a,1\nb,1\n"));
  CHECK(p.probs() == std::vector<double>{0.5, 0.5});
  CHECK(p.labels() == std::vector<std::string>{"a", "b"});
  CHECK(p.label_of_sorted(1) == "b");

  const Pmf q = pmf_from_file(temp_file("rlpc_commas.csv", "x,y,1\r\nz,3\n\n"));
  CHECK(q.label_of_sorted(0) == "z");
  CHECK(q.label_of_sorted(1) == "x,y");

  CHECK(kind_of([] { pmf_from_file(temp_file("rlpc_zero.csv", "a,1\nb,0\n")); }) == ErrorKind::NonPositiveWeight);
  CHECK(kind_of([] { pmf_from_file(temp_file("rlpc_bad.csv", "a,1\nb,x\n")); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { pmf_from_file(temp_file("rlpc_nocomma.csv", "a 1\n")); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { pmf_from_file(temp_file("rlpc_single.csv", "a,1\n")); }) == ErrorKind::EmptyOrSingleton);
  CHECK(kind_of([] { pmf_from_file("/nonexistent/rlpc.csv"); }) == ErrorKind::ParseError);
}

TEST_CASE("pmf_from_file: json") {
  const Pmf p = pmf_from_file(temp_file("rlpc_w.json", R"({"weights": [1, 3], "labels": ["lo", "hi"]})"));
  CHECK(p[0] == 0.75);
  CHECK(p.label_of_sorted(0) == "hi");
  CHECK(kind_of([] { pmf_from_file(temp_file("rlpc_bad.json", R"({"w": [1]})")); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { pmf_from_file(temp_file("rlpc_trunc.json", R"({"weights": [1,)")); }) == ErrorKind::ParseError);
}

TEST_CASE("byte histogram agrees with an independent count") {
  std::mt19937_64 rng(3);
  std::string data(5000, '\0');
  for (char& c : data) c = static_cast<char>('a' + static_cast<int>(rng() % 7) * static_cast<int>(rng() % 3));
  const auto path = temp_file("rlpc_bytes.bin", data);
  const Pmf p = pmf_from_file(path);

  std::map<std::string, double> expected;
  for (unsigned char c : data) expected[std::to_string(c)] += 1.0;
  REQUIRE(p.size() == expected.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    CHECK(p[i] == doctest::Approx(expected.at(p.label_of_sorted(i)) / data.size()).epsilon(1e-12));
  check_pmf_invariants(p);
}
