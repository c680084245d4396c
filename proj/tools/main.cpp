#include <cstdio>

int main() {
    std::puts("hyp2: command-line front end not wired up yet");
    return 1;
}
