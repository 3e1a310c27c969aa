#include <cmath>

#include "g2coh/g2_core.hpp"

int main() {
  return std::abs(g2coh::g2_from_single_J(1.0) - 0.5) < 1e-12 ? 0 : 1;
}
