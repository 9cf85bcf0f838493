#pragma once

#include <map>
#include <string>
#include <vector>

namespace mfring {

struct CheckItem {
  std::string name;
  int level = 0;
  int weight = 0;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<CheckItem> items;

  bool pass() const {
    for (const auto& i : items)
      if (!i.pass) return false;
    return true;
  }
};

}  // namespace mfring
