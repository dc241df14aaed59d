#include <cstdio>

int main() {
  std::puts("qinterp: cli not wired up yet");
  return 2;
}
