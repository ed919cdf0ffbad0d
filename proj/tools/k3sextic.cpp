#include <cstdio>

int main() {
  std::puts("k3sextic: placeholder");
  return 0;
}
