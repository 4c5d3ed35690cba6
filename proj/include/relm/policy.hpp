#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "relm/linalg.hpp"

namespace relm::policy {

enum class Activation : uint8_t { Tanh = 0, Sigmoid = 1 };

/// Feed-forward layer stack. layer_sizes runs [input, hidden..., output];
/// activations has one entry per non-input layer.
struct Topology {
  std::vector<std::size_t> layer_sizes;
  std::vector<Activation> activations;

  /// The standard stack: input -> 45 -> 15 -> 6 -> 1, tanh hidden layers and
  /// a sigmoid output head.
  static Topology dense_default(std::size_t input_dim);

  /// input_dim -> hidden... -> 1 with tanh hidden layers and sigmoid head.
  static Topology with_hidden(std::size_t input_dim, std::span<const std::size_t> hidden);

  std::size_t input_dim() const { return layer_sizes.front(); }
  std::size_t output_dim() const { return layer_sizes.back(); }

  /// Total weight + bias count: sum over consecutive pairs of n_i*n_{i+1} + n_{i+1}.
  std::size_t param_count() const;

  void validate() const;

  bool operator==(const Topology&) const = default;
};

/// Location of one layer's parameters inside the flat genome: a row-major
/// (out_dim x in_dim) weight block followed by an out_dim bias block.
struct LayerSlice {
  std::size_t weight_offset = 0;
  std::size_t out_dim = 0;
  std::size_t in_dim = 0;
  std::size_t bias_offset = 0;
};

/// Layer-by-layer genome layout; blocks tile [0, param_count) exactly.
std::vector<LayerSlice> genome_slices(const Topology& t);

/// Reusable forward-pass evaluator. Not thread-safe; give each worker its
/// own instance (construction is cheap).
class Network {
public:
  explicit Network(Topology t);

  const Topology& topology() const { return topo_; }

  /// Output of the final layer's first unit; with a sigmoid head this is a
  /// probability in (0,1).
  double forward(std::span<const double> genome, std::span<const double> state);

private:
  Topology topo_;
  std::vector<LayerSlice> slices_;
  std::vector<double> buf_a_, buf_b_;
};

/// One-shot forward pass.
double forward(std::span<const double> genome, const Topology& t, std::span<const double> state);

/// 1 iff forward(...) >= threshold.
int predict(std::span<const double> genome, const Topology& t, std::span<const double> state,
            double threshold);

/// Forward pass over every row of a state matrix.
std::vector<double> batch_forward(std::span<const double> genome, const Topology& t,
                                  const linalg::Matrix& states);

}  // namespace relm::policy
