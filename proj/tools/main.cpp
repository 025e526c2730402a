#include <iostream>

int main() {
    std::cout << "entvar\n";
    return 0;
}
