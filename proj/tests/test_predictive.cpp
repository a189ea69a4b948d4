#include <doctest.h>

TEST_SUITE_BEGIN("predictive");

TEST_SUITE_END();
