#include <doctest.h>

#include "helpers.hpp"

using namespace exactmatch;
using testutil::two_block_n2;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("spectrum of the two-block n=2 instance") {
  const Spectrum s = enumerate_spectrum(two_block_n2());
  CHECK(s.counts == std::vector<std::uint64_t>{4, 0, 16, 0, 4});
  CHECK(s.total() == 24);  // 4!
}

TEST_CASE("spectrum at n=1") {
  const Spectrum s = enumerate_spectrum(testutil::from_strings({"RB", "BR"}));
  CHECK(s.counts == std::vector<std::uint64_t>{1, 0, 1});
}

TEST_CASE("circulant n=2 achieves every red count") {
  const Spectrum s = enumerate_spectrum(make_circulant_instance(2));
  for (int k = 0; k <= 4; ++k) CHECK(s.counts[k] > 0);
  CHECK(s.total() == 24);
}

TEST_CASE("spectrum totals (2n)! on random instances") {
  const std::uint64_t factorials[] = {1, 1, 2, 6, 24, 120, 720, 5040, 40320};
  for (int n = 2; n <= 4; ++n)
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const Spectrum s = enumerate_spectrum(testutil::random_instance(n, seed));
      std::uint64_t factorial = factorials[2 * n];
      CHECK(s.total() == factorial);
    }
}

TEST_CASE("the enumeration guard rejects n > 5") {
  try {
    enumerate_spectrum(make_circulant_instance(6));
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TooLarge);
  }
}

TEST_CASE("blue components of the two-block instance") {
  const ComponentReport report = blue_components(two_block_n2());
  REQUIRE(report.components.size() == 2);
  CHECK(report.components[0].left == std::vector<int>{0, 1});
  CHECK(report.components[0].right == std::vector<int>{2, 3});
  CHECK(report.components[1].left == std::vector<int>{2, 3});
  CHECK(report.components[1].right == std::vector<int>{0, 1});
}

TEST_CASE("blue components of connected instances") {
  CHECK(blue_components(make_circulant_instance(3)).components.size() == 1);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const ComponentReport report = blue_components(testutil::random_instance(4, seed));
    std::size_t lefts = 0, rights = 0;
    for (const auto& comp : report.components) {
      lefts += comp.left.size();
      rights += comp.right.size();
    }
    CHECK(lefts == 8);  // components partition all vertices
    CHECK(rights == 8);
  }
}

TEST_CASE("disconnected blue graphs split into two complete n-by-n blocks") {
  for (int n = 2; n <= 5; ++n) {
    const BalancedColoring c = make_disconnected_instance(n, 77 + n);
    const ComponentReport report = blue_components(c);
    REQUIRE(report.components.size() == 2);
    for (const auto& comp : report.components) {
      CHECK(static_cast<int>(comp.left.size()) == n);
      CHECK(static_cast<int>(comp.right.size()) == n);
      for (int i : comp.left)
        for (int j : comp.right) CHECK(c.blue(i, j));
    }
  }
}

TEST_CASE("certificate_from_components rebuilds the canonical certificate") {
  const DisconnectionCertificate cert = certificate_from_components(blue_components(two_block_n2()));
  CHECK(cert == DisconnectionCertificate{{0, 1}, {2, 3}, {2, 3}, {0, 1}});
  CHECK(verify_certificate(two_block_n2(), cert));
}

TEST_CASE("certificate_from_components rejects connected instances") {
  try {
    certificate_from_components(blue_components(make_circulant_instance(2)));
    FAIL("expected NotTwoComponents");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotTwoComponents);
  }
}

TEST_CASE("certificates from randomized disconnected instances verify") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const BalancedColoring c = make_disconnected_instance(3, seed);
    CHECK(verify_certificate(c, certificate_from_components(blue_components(c))));
  }
}

TEST_CASE("odd red counts are achievable exactly on connected blue graphs") {
  std::vector<BalancedColoring> corpus;
  for (int n = 1; n <= 4; ++n) {
    corpus.push_back(make_lemma1_instance(n));
    corpus.push_back(make_circulant_instance(n));
  }
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    corpus.push_back(testutil::random_instance(3, seed));
    corpus.push_back(make_disconnected_instance(3, seed));
  }
  for (const BalancedColoring& c : corpus) {
    const Spectrum s = enumerate_spectrum(c);
    const bool connected = blue_components(c).components.size() == 1;
    for (int k = 1; k <= c.side(); k += 2)
      CHECK((s.counts[k] > 0) == connected);
    for (int k = 0; k <= c.side(); k += 2)
      CHECK(s.counts[k] > 0);  // even counts are always achievable
  }
}

TEST_SUITE_END();
