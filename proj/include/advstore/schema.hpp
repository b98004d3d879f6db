#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "advstore/value.hpp"

namespace advstore {

struct ColumnSchema {
  std::string name;
  ColumnType type;
};

struct Schema {
  std::vector<ColumnSchema> columns;

  int index_of(std::string_view name) const {
    for (size_t i = 0; i < columns.size(); ++i)
      if (columns[i].name == name) return static_cast<int>(i);
    return -1;
  }

  int require(std::string_view name) const {
    const int idx = index_of(name);
    if (idx < 0) raise(ErrorCode::UnknownColumn, "no column named '" + std::string(name) + "'");
    return idx;
  }
};

}  // namespace advstore
