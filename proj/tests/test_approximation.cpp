#include <doctest.h>

TEST_SUITE_BEGIN("approximation");

TEST_SUITE_END();
