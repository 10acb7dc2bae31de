#include <cstdio>

int main() {
    std::puts("euprod: placeholder");
    return 0;
}
