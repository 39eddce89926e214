#include <cstdio>
int main() { std::puts("unproj-lab: under construction"); return 0; }
