#pragma once

#include <string>
#include <vector>

namespace exnet {

struct GoldenItem {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// The worked examples reproduced by `exnet paper-examples`.
std::vector<GoldenItem> run_golden_examples();

}  // namespace exnet
