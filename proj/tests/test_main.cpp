#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include "dynheight/numeric.hpp"

int main(int argc, char** argv) {
    dynheight::set_precision_bits(192);
    doctest::Context ctx(argc, argv);
    return ctx.run();
}
