#include <iostream>
int main() { std::cout << "acceptance: pending\n"; return 1; }
