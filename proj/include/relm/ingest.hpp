#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relm/errors.hpp"

namespace relm::ingest {

enum class Role : uint8_t { Continuous = 0, Discrete = 1, Label = 2, Timestamp = 3 };

std::string_view role_name(Role r);

struct Column {
  std::string name;
  Role role = Role::Continuous;
  std::vector<std::string> categories;  // discrete columns only, ordered, unique

  bool operator==(const Column&) const = default;
};

struct FeatureSchema {
  std::vector<Column> columns;

  /// Enforces: exactly one label column, at most one timestamp column,
  /// discrete category lists non-empty and duplicate-free.
  void validate() const;

  std::size_t label_index() const;
  std::optional<std::size_t> timestamp_index() const;
  std::vector<std::size_t> continuous_indices() const;
  std::vector<std::size_t> discrete_indices() const;

  bool operator==(const FeatureSchema&) const = default;
};

/// Columnar tabular data. Continuous and discrete values are stored per
/// column (in schema order of the columns of that role); discrete cells are
/// indices into the column's category list. Immutable once loaded.
struct Dataset {
  FeatureSchema schema;
  std::vector<std::vector<double>> cont;      // [continuous column][row]
  std::vector<std::vector<uint32_t>> disc;    // [discrete column][row]
  std::vector<int> labels;                    // per row, 0/1
  std::vector<int64_t> periods;               // per row; zeros without a timestamp column

  std::size_t rows() const { return labels.size(); }

  std::vector<double> cont_row(std::size_t i) const;
  std::vector<uint32_t> disc_row(std::size_t i) const;

  /// Rows [begin, end) as a new Dataset with the same schema.
  Dataset slice(std::size_t begin, std::size_t end) const;
};

struct ColumnStats {
  double mean = 0.0;
  double stddev = 1.0;
  bool constant = false;  // stddev was zero and has been replaced by 1

  bool operator==(const ColumnStats&) const = default;
};

/// Per-continuous-column standardization parameters, aligned with
/// schema.continuous_indices().
struct StandardizationStats {
  std::vector<ColumnStats> per_column;

  bool operator==(const StandardizationStats&) const = default;
};

/// Loads a CSV (header row, comma separated, dot decimals) and infers the
/// schema: a column named label/class/target (case-insensitive) or else the
/// last column becomes the label; a column named "period" with integer values
/// becomes the timestamp; all-numeric columns are continuous; everything else
/// is discrete with categories = sorted unique values.
Dataset load_csv(const std::string& path);

/// Loads a CSV against a known schema; header names must match in order.
Dataset load_csv(const std::string& path, const FeatureSchema& schema);

void write_csv(const Dataset& data, const std::string& path);

/// Population mean/stddev per continuous column. Constant columns get
/// stddev 1 and the constant flag.
StandardizationStats fit_standardization(const Dataset& data);

/// Returns a copy with each continuous value mapped to (v - mean) / stddev.
Dataset standardize(const Dataset& data, const StandardizationStats& stats);

/// Splits off `holdout_count` rows. With a timestamp column the
/// chronologically last rows are taken; otherwise a seeded shuffle split.
/// Holdout rows are re-tagged to periods strictly later than any train row.
std::pair<Dataset, Dataset> split_holdout(const Dataset& data, std::size_t holdout_count,
                                          uint64_t seed);

}  // namespace relm::ingest
