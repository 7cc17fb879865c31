#include <doctest.h>

#include <atomic>
#include <stdexcept>
#include <vector>

#include "lambertfact/parallel.hpp"

using lambertfact::parallel_for;

TEST_CASE("parallel_for visits every index once") {
  for (unsigned jobs : {0u, 1u, 3u, 8u}) {
    std::vector<std::atomic<int>> hits(500);
    parallel_for(hits.size(), jobs, [&](std::size_t i) { ++hits[i]; });
    for (auto& h : hits) REQUIRE(h.load() == 1);
  }
  parallel_for(0, 4, [](std::size_t) { FAIL("no work expected"); });
}

TEST_CASE("parallel_for rethrows the first failure") {
  CHECK_THROWS_AS(parallel_for(100, 4,
                               [](std::size_t i) {
                                 if (i == 37) throw std::runtime_error("boom");
                               }),
                  std::runtime_error);
}
