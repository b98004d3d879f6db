#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace advstore {

/// Dense row-major float32 output of feature materialization.
struct FeatureMatrix {
  uint64_t n_rows = 0;
  uint32_t n_cols = 0;
  std::vector<std::string> column_names;
  std::vector<float> data;  // n_rows * n_cols

  float at(uint64_t r, uint32_t c) const { return data[r * n_cols + c]; }
  float& at(uint64_t r, uint32_t c) { return data[r * n_cols + c]; }

  bool operator==(const FeatureMatrix&) const = default;
};

/// CSV with a header line; values printed with the shortest representation
/// that parses back to the same float32. Returns bytes written.
uint64_t export_csv(const FeatureMatrix& m, const std::filesystem::path& destination);
std::string matrix_to_csv(const FeatureMatrix& m);

/// Bit-exact binary layout: magic "ADVF", version u16=1 LE, n_rows u64 LE,
/// n_cols u32 LE, per column a u16 LE name length + UTF-8 bytes, then the
/// payload as n_rows*n_cols float32 LE row-major (exactly 4*n_rows*n_cols
/// bytes). Returns bytes written.
uint64_t export_binary(const FeatureMatrix& m, const std::filesystem::path& destination);
std::string matrix_to_binary(const FeatureMatrix& m);

FeatureMatrix parse_csv_matrix(const std::string& bytes);
FeatureMatrix parse_binary_matrix(const std::string& bytes);
FeatureMatrix read_csv_matrix(const std::filesystem::path& path);
FeatureMatrix read_binary_matrix(const std::filesystem::path& path);

/// Shortest round-trip float32 text (what export_csv prints per value).
std::string float32_to_text(float x);

}  // namespace advstore
