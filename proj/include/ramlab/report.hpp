/**
 * @file ramlab/report.hpp
 * @brief Named pass/fail results collected by the verification routines.
 */
#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace ramlab {

struct CheckItem {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckItem> items;

  void add(std::string name, bool passed, std::string detail = {}) {
    items.push_back({std::move(name), passed, std::move(detail)});
  }
  void merge(const CheckReport& other, const std::string& prefix = {}) {
    for (const auto& it : other.items) items.push_back({prefix + it.name, it.passed, it.detail});
  }
  bool ok() const {
    return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.passed; });
  }
};

}  // namespace ramlab
