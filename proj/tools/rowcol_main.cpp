#include <cstdio>

int main() {
    std::puts("rowcol cli placeholder");
    return 0;
}
