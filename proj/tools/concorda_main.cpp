#include "concorda/core.hpp"
int main() { return 0; }
