#include "orchard/orchard.hpp"

#include <cstdio>

int main() {
    std::puts("orchard cli placeholder");
    return 0;
}
