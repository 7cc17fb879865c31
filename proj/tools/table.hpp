#pragma once

#include <string>
#include <vector>

#include <json.hpp>

// Plain string table rendered as CSV, aligned text, or a JSON array of rows.
struct Table {
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }

  std::string csv() const;
  std::string pretty() const;
  nlohmann::json json() const;
};
