#include <doctest.h>

TEST_SUITE_BEGIN("montecarlo");

TEST_SUITE_END();
