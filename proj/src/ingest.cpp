#include "relm/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "relm/rng.hpp"

namespace relm::ingest {
namespace {

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  std::string t(s.substr(b, e - b + 1));
  // strip one pair of surrounding double quotes
  if (t.size() >= 2 && t.front() == '"' && t.back() == '"') t = t.substr(1, t.size() - 2);
  return t;
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(trim(std::string_view(line).substr(start)));
      break;
    }
    out.push_back(trim(std::string_view(line).substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

bool parse_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  const char* b = s.data();
  const char* e = b + s.size();
  auto [p, ec] = std::from_chars(b, e, out);
  return ec == std::errc() && p == e;
}

bool is_label_name(const std::string& name) {
  std::string n = lower(name);
  return n == "label" || n == "class" || n == "target";
}

struct RawTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;  // [row][col]
};

RawTable read_raw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  RawTable t;
  std::string line;
  if (!std::getline(in, line)) throw DataError(path + ": empty file, header row required");
  t.header = split_line(line);
  size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    auto cells = split_line(line);
    if (cells.size() != t.header.size())
      throw DataError(path + ":" + std::to_string(lineno) + ": expected " +
                      std::to_string(t.header.size()) + " fields, got " +
                      std::to_string(cells.size()));
    t.rows.push_back(std::move(cells));
  }
  return t;
}

int parse_label_cell(const std::string& path, size_t lineno, const std::string& name,
                     const std::string& cell) {
  double v;
  if (!parse_double(cell, v) || (v != 0.0 && v != 1.0))
    throw DataError(path + ":" + std::to_string(lineno) + ": label column '" + name +
                    "' has value '" + cell + "', expected 0 or 1");
  return static_cast<int>(v);
}

int64_t parse_period_cell(const std::string& path, size_t lineno, const std::string& name,
                          const std::string& cell) {
  double v;
  if (!parse_double(cell, v) || v != std::floor(v) || v < 0)
    throw DataError(path + ":" + std::to_string(lineno) + ": timestamp column '" + name +
                    "' has value '" + cell + "', expected a non-negative integer");
  return static_cast<int64_t>(v);
}

Dataset build_dataset(const std::string& path, const RawTable& t, const FeatureSchema& schema) {
  schema.validate();
  if (schema.columns.size() != t.header.size())
    throw DataError(path + ": header has " + std::to_string(t.header.size()) +
                    " columns, schema expects " + std::to_string(schema.columns.size()));
  for (size_t c = 0; c < schema.columns.size(); ++c)
    if (schema.columns[c].name != t.header[c])
      throw DataError(path + ": header column " + std::to_string(c + 1) + " is '" + t.header[c] +
                      "', schema expects '" + schema.columns[c].name + "'");

  Dataset d;
  d.schema = schema;
  auto cont_idx = schema.continuous_indices();
  auto disc_idx = schema.discrete_indices();
  d.cont.resize(cont_idx.size());
  d.disc.resize(disc_idx.size());
  for (auto& col : d.cont) col.reserve(t.rows.size());
  for (auto& col : d.disc) col.reserve(t.rows.size());
  d.labels.reserve(t.rows.size());
  d.periods.reserve(t.rows.size());

  // category lookup per discrete column
  std::vector<std::map<std::string, uint32_t>> cat_of(disc_idx.size());
  for (size_t k = 0; k < disc_idx.size(); ++k) {
    const auto& cats = schema.columns[disc_idx[k]].categories;
    for (uint32_t i = 0; i < cats.size(); ++i) cat_of[k][cats[i]] = i;
  }

  int64_t prev_period = -1;
  for (size_t r = 0; r < t.rows.size(); ++r) {
    const size_t lineno = r + 2;  // 1-based, after the header
    size_t ci = 0, di = 0;
    for (size_t c = 0; c < schema.columns.size(); ++c) {
      const auto& col = schema.columns[c];
      const std::string& cell = t.rows[r][c];
      switch (col.role) {
        case Role::Continuous: {
          double v;
          if (!parse_double(cell, v))
            throw DataError(path + ":" + std::to_string(lineno) + ": column '" + col.name +
                            "': cannot parse '" + cell + "' as a number");
          d.cont[ci++].push_back(v);
          break;
        }
        case Role::Discrete: {
          auto it = cat_of[di].find(cell);
          if (it == cat_of[di].end())
            throw DataError(path + ":" + std::to_string(lineno) + ": column '" + col.name +
                            "': unseen category '" + cell + "'");
          d.disc[di++].push_back(it->second);
          break;
        }
        case Role::Label:
          d.labels.push_back(parse_label_cell(path, lineno, col.name, cell));
          break;
        case Role::Timestamp: {
          int64_t p = parse_period_cell(path, lineno, col.name, cell);
          if (p < prev_period)
            throw DataError(path + ":" + std::to_string(lineno) + ": column '" + col.name +
                            "': period " + std::to_string(p) + " decreases from " +
                            std::to_string(prev_period));
          prev_period = p;
          d.periods.push_back(p);
          break;
        }
      }
    }
    if (!schema.timestamp_index()) d.periods.push_back(0);
  }
  return d;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string_view role_name(Role r) {
  switch (r) {
    case Role::Continuous: return "continuous";
    case Role::Discrete: return "discrete";
    case Role::Label: return "label";
    case Role::Timestamp: return "timestamp";
  }
  return "?";
}

void FeatureSchema::validate() const {
  size_t labels = 0, stamps = 0;
  std::set<std::string> names;
  for (const auto& c : columns) {
    if (!names.insert(c.name).second) throw DataError("schema: duplicate column name '" + c.name + "'");
    if (c.role == Role::Label) ++labels;
    if (c.role == Role::Timestamp) ++stamps;
    if (c.role == Role::Discrete) {
      if (c.categories.empty())
        throw DataError("schema: discrete column '" + c.name + "' has no categories");
      std::set<std::string> uniq(c.categories.begin(), c.categories.end());
      if (uniq.size() != c.categories.size())
        throw DataError("schema: discrete column '" + c.name + "' has duplicate categories");
    } else if (!c.categories.empty()) {
      throw DataError("schema: non-discrete column '" + c.name + "' has categories");
    }
  }
  if (labels != 1)
    throw DataError("schema: expected exactly one label column, found " + std::to_string(labels));
  if (stamps > 1) throw DataError("schema: more than one timestamp column");
}

std::size_t FeatureSchema::label_index() const {
  for (size_t i = 0; i < columns.size(); ++i)
    if (columns[i].role == Role::Label) return i;
  throw DataError("schema: no label column");
}

std::optional<std::size_t> FeatureSchema::timestamp_index() const {
  for (size_t i = 0; i < columns.size(); ++i)
    if (columns[i].role == Role::Timestamp) return i;
  return std::nullopt;
}

std::vector<std::size_t> FeatureSchema::continuous_indices() const {
  std::vector<size_t> out;
  for (size_t i = 0; i < columns.size(); ++i)
    if (columns[i].role == Role::Continuous) out.push_back(i);
  return out;
}

std::vector<std::size_t> FeatureSchema::discrete_indices() const {
  std::vector<size_t> out;
  for (size_t i = 0; i < columns.size(); ++i)
    if (columns[i].role == Role::Discrete) out.push_back(i);
  return out;
}

std::vector<double> Dataset::cont_row(std::size_t i) const {
  std::vector<double> out(cont.size());
  for (size_t c = 0; c < cont.size(); ++c) out[c] = cont[c][i];
  return out;
}

std::vector<uint32_t> Dataset::disc_row(std::size_t i) const {
  std::vector<uint32_t> out(disc.size());
  for (size_t c = 0; c < disc.size(); ++c) out[c] = disc[c][i];
  return out;
}

Dataset Dataset::slice(std::size_t begin, std::size_t end) const {
  if (begin > end || end > rows()) throw std::invalid_argument("Dataset::slice: bad range");
  Dataset d;
  d.schema = schema;
  d.cont.resize(cont.size());
  d.disc.resize(disc.size());
  for (size_t c = 0; c < cont.size(); ++c)
    d.cont[c].assign(cont[c].begin() + begin, cont[c].begin() + end);
  for (size_t c = 0; c < disc.size(); ++c)
    d.disc[c].assign(disc[c].begin() + begin, disc[c].begin() + end);
  d.labels.assign(labels.begin() + begin, labels.begin() + end);
  d.periods.assign(periods.begin() + begin, periods.begin() + end);
  return d;
}

Dataset load_csv(const std::string& path) {
  RawTable t = read_raw(path);
  if (t.header.empty()) throw DataError(path + ": no columns");

  const size_t ncols = t.header.size();
  std::vector<bool> numeric(ncols, true);
  std::vector<bool> integral(ncols, true);
  for (const auto& row : t.rows)
    for (size_t c = 0; c < ncols; ++c) {
      double v;
      if (!parse_double(row[c], v)) {
        numeric[c] = false;
        integral[c] = false;
      } else if (v != std::floor(v) || v < 0) {
        integral[c] = false;
      }
    }

  // label: explicit name wins, else the last non-timestamp column
  size_t label_col = ncols;
  for (size_t c = 0; c < ncols; ++c)
    if (is_label_name(t.header[c])) {
      label_col = c;
      break;
    }
  size_t stamp_col = ncols;
  for (size_t c = 0; c < ncols; ++c)
    if (lower(t.header[c]) == "period" && integral[c] && c != label_col) {
      stamp_col = c;
      break;
    }
  if (label_col == ncols) {
    label_col = ncols - 1;
    if (label_col == stamp_col) {
      if (label_col == 0) throw DataError(path + ": no usable label column");
      --label_col;
    }
  }

  FeatureSchema schema;
  schema.columns.resize(ncols);
  for (size_t c = 0; c < ncols; ++c) {
    Column& col = schema.columns[c];
    col.name = t.header[c];
    if (c == label_col) {
      col.role = Role::Label;
    } else if (c == stamp_col) {
      col.role = Role::Timestamp;
    } else if (numeric[c]) {
      col.role = Role::Continuous;
    } else {
      col.role = Role::Discrete;
      std::set<std::string> cats;
      for (const auto& row : t.rows) cats.insert(row[c]);
      col.categories.assign(cats.begin(), cats.end());
    }
  }
  if (t.rows.empty())
    throw DataError(path + ": schema inference needs at least one data row");
  return build_dataset(path, t, schema);
}

Dataset load_csv(const std::string& path, const FeatureSchema& schema) {
  return build_dataset(path, read_raw(path), schema);
}

void write_csv(const Dataset& data, const std::string& path) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw IoError("cannot write '" + tmp + "'");
    const auto& cols = data.schema.columns;
    for (size_t c = 0; c < cols.size(); ++c) out << (c ? "," : "") << cols[c].name;
    out << "\n";
    auto cont_idx = data.schema.continuous_indices();
    auto disc_idx = data.schema.discrete_indices();
    for (size_t r = 0; r < data.rows(); ++r) {
      size_t ci = 0, di = 0;
      for (size_t c = 0; c < cols.size(); ++c) {
        if (c) out << ',';
        switch (cols[c].role) {
          case Role::Continuous: out << format_double(data.cont[ci++][r]); break;
          case Role::Discrete: out << cols[c].categories[data.disc[di++][r]]; break;
          case Role::Label: out << data.labels[r]; break;
          case Role::Timestamp: out << data.periods[r]; break;
        }
      }
      out << "\n";
    }
    if (!out) throw IoError("write failed for '" + tmp + "'");
  }
  std::filesystem::rename(tmp, path);
}

StandardizationStats fit_standardization(const Dataset& data) {
  if (data.rows() == 0) throw DataError("fit_standardization: empty dataset");
  StandardizationStats stats;
  stats.per_column.resize(data.cont.size());
  const double n = static_cast<double>(data.rows());
  for (size_t c = 0; c < data.cont.size(); ++c) {
    const auto& col = data.cont[c];
    double mean = std::accumulate(col.begin(), col.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : col) ss += (v - mean) * (v - mean);
    double sd = std::sqrt(ss / n);  // population convention
    ColumnStats& cs = stats.per_column[c];
    cs.mean = mean;
    if (sd > 0.0) {
      cs.stddev = sd;
    } else {
      cs.stddev = 1.0;
      cs.constant = true;
    }
  }
  return stats;
}

Dataset standardize(const Dataset& data, const StandardizationStats& stats) {
  if (stats.per_column.size() != data.cont.size())
    throw DataError("standardize: stats cover " + std::to_string(stats.per_column.size()) +
                    " columns, dataset has " + std::to_string(data.cont.size()));
  Dataset d = data;
  for (size_t c = 0; c < d.cont.size(); ++c) {
    const auto& cs = stats.per_column[c];
    for (double& v : d.cont[c]) v = (v - cs.mean) / cs.stddev;
  }
  return d;
}

std::pair<Dataset, Dataset> split_holdout(const Dataset& data, std::size_t holdout_count,
                                          uint64_t seed) {
  const size_t n = data.rows();
  if (holdout_count == 0 || holdout_count >= n)
    throw DataError("split_holdout: holdout_count " + std::to_string(holdout_count) +
                    " out of range for " + std::to_string(n) + " rows");

  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (!data.schema.timestamp_index()) {
    Rng rng(seed);
    for (size_t i = n - 1; i > 0; --i) std::swap(order[i], order[rng.below(i + 1)]);
  }
  // first n-holdout entries (by time when a timestamp exists) train, rest hold out
  std::vector<size_t> train_rows(order.begin(), order.end() - holdout_count);
  std::vector<size_t> hold_rows(order.end() - holdout_count, order.end());
  std::sort(train_rows.begin(), train_rows.end());
  std::sort(hold_rows.begin(), hold_rows.end());

  auto gather = [&data](const std::vector<size_t>& rows) {
    Dataset d;
    d.schema = data.schema;
    d.cont.resize(data.cont.size());
    d.disc.resize(data.disc.size());
    for (size_t r : rows) {
      for (size_t c = 0; c < data.cont.size(); ++c) d.cont[c].push_back(data.cont[c][r]);
      for (size_t c = 0; c < data.disc.size(); ++c) d.disc[c].push_back(data.disc[c][r]);
      d.labels.push_back(data.labels[r]);
      d.periods.push_back(data.periods[r]);
    }
    return d;
  };

  Dataset train = gather(train_rows);
  Dataset hold = gather(hold_rows);

  int64_t max_train = 0;
  for (int64_t p : train.periods) max_train = std::max(max_train, p);
  int64_t min_hold = hold.periods.empty() ? 0 : *std::min_element(hold.periods.begin(), hold.periods.end());
  int64_t offset = max_train + 1 - min_hold;
  for (int64_t& p : hold.periods) p += offset;
  return {std::move(train), std::move(hold)};
}

}  // namespace relm::ingest
