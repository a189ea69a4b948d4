#include <doctest.h>

TEST_SUITE_BEGIN("gibbs_models");

TEST_SUITE_END();
