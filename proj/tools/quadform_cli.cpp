#include <cstdio>
int main() { std::puts("quadform cli placeholder"); }
