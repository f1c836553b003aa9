#include <catch2/catch_amalgamated.hpp>
#include "eqs/eqs.hpp"
