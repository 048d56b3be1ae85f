#include <doctest.h>

#include "swarmlab/random.hpp"

using swarmlab::RandomStream;

TEST_CASE("same seed reproduces the exact draw sequence") {
    RandomStream a(42);
    RandomStream b(42);
    for (int i = 0; i < 1000; ++i) {
        CHECK(a.next_unit() == b.next_unit());
    }
}

TEST_CASE("different seeds diverge") {
    RandomStream a(1);
    RandomStream b(2);
    int equal = 0;
    for (int i = 0; i < 100; ++i) {
        if (a.next_unit() == b.next_unit()) ++equal;
    }
    CHECK(equal < 5);
}

TEST_CASE("draws stay in [0, 1)") {
    RandomStream rng(7);
    for (int i = 0; i < 100000; ++i) {
        const double u = rng.next_unit();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("zero-width interval collapses to the endpoint") {
    RandomStream rng(3);
    for (int i = 0; i < 100; ++i) {
        CHECK(rng.next_in(5.0, 5.0) == 5.0);
    }
}

TEST_CASE("uniform draws on [-100, 100] have near-zero mean") {
    RandomStream rng(11);
    double sum = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) sum += rng.next_in(-100.0, 100.0);
    const double mean = sum / n;
    CHECK(std::abs(mean) <= 1.0);
}
