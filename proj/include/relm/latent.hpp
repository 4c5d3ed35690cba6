#pragma once

#include <optional>
#include <span>
#include <vector>

#include "relm/ingest.hpp"
#include "relm/linalg.hpp"
#include "relm/rng.hpp"

namespace relm::latent {

/// Principal component projection for the continuous features. Components
/// are stored one per row, orthonormal, ordered by decreasing explained
/// variance, with the sign convention that the largest-magnitude entry of
/// each component is positive.
struct PcaModel {
  std::size_t input_dim = 0;
  std::size_t latent_dim = 0;
  std::vector<double> mean;
  linalg::Matrix components;               // latent_dim x input_dim
  std::vector<double> explained_variance;  // non-increasing

  bool operator==(const PcaModel&) const = default;
};

PcaModel fit_pca(const linalg::Matrix& rows, std::size_t latent_dim);
std::vector<double> pca_project(const PcaModel& model, std::span<const double> x);

/// Width of the concatenated one-hot encoding of all discrete columns.
std::size_t one_hot_width(const ingest::FeatureSchema& schema);

/// One-hot encodes raw discrete values (one per discrete column, in schema
/// order). Throws DataError for a value outside the column's category list.
std::vector<double> one_hot_encode(std::span<const std::string> values,
                                   const ingest::FeatureSchema& schema);

/// Same, from pre-resolved category indices.
std::vector<double> one_hot_encode(std::span<const uint32_t> indices,
                                   const ingest::FeatureSchema& schema);

/// Bernoulli RBM mapping the one-hot discrete block to hidden-unit
/// probabilities. weights is visible_dim x hidden_dim.
struct RbmModel {
  std::size_t visible_dim = 0;
  std::size_t hidden_dim = 0;
  linalg::Matrix weights;
  std::vector<double> visible_bias;
  std::vector<double> hidden_bias;

  bool operator==(const RbmModel&) const = default;
};

/// One sweep of minibatch CD-1 over all rows (batch size 16). Hidden states
/// are sampled in the Gibbs step; probabilities are used everywhere else.
/// Returns the mean per-unit squared reconstruction error seen during the
/// sweep. lr = 0 performs the sweep without changing the model.
double cd1_epoch(RbmModel& model, const linalg::Matrix& rows, double learning_rate, Rng& rng);

/// Trains a fresh RBM with CD-1: weights ~ N(0, 0.01) by seed, biases zero.
RbmModel fit_rbm(const linalg::Matrix& binary_rows, std::size_t hidden_dim, std::size_t epochs,
                 double learning_rate, uint64_t seed);

/// sigmoid(hidden_bias + v^T W), elementwise; entries lie strictly in (0,1).
std::vector<double> rbm_hidden(const RbmModel& model, std::span<const double> v);

/// Mean per-unit squared error between rows and their deterministic
/// reconstruction sigmoid(b_v + W h(v)).
double reconstruction_error(const RbmModel& model, const linalg::Matrix& rows);

/// The fitted encoders for one schema. When muted, raw standardized
/// continuous values and raw one-hot bits pass through unchanged.
struct Encoders {
  std::optional<PcaModel> pca;
  std::optional<RbmModel> rbm;
  bool muted = false;

  bool operator==(const Encoders&) const = default;
};

/// Dimension of the state vector produced by encode_state.
std::size_t state_dim(const Encoders& enc, const ingest::FeatureSchema& schema);

/// Encodes one record: standardized continuous part through PCA, one-hot
/// discrete part through the RBM, concatenated in that order.
std::vector<double> encode_state(std::span<const double> cont_values,
                                 std::span<const uint32_t> disc_indices, const Encoders& enc,
                                 const ingest::StandardizationStats& stats,
                                 const ingest::FeatureSchema& schema);

/// Encodes every row of a dataset; one state per matrix row.
linalg::Matrix encode_dataset(const ingest::Dataset& data, const Encoders& enc,
                              const ingest::StandardizationStats& stats);

}  // namespace relm::latent
