#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "ramf/numeric.hpp"

int main(int argc, char** argv) {
    ramf::set_precision(50);
    doctest::Context ctx(argc, argv);
    return ctx.run();
}
