#include "relm/latent.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "relm/kernels.hpp"

namespace relm::latent {
namespace {

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

constexpr std::size_t kRbmBatch = 16;

}  // namespace

PcaModel fit_pca(const linalg::Matrix& rows, std::size_t latent_dim) {
  const std::size_t n = rows.rows();
  const std::size_t d = rows.cols();
  if (n < 2) throw DataError("fit_pca: need at least 2 rows");
  if (latent_dim == 0 || latent_dim > d)
    throw DataError("fit_pca: latent_dim " + std::to_string(latent_dim) +
                    " out of range for input dimension " + std::to_string(d));

  PcaModel m;
  m.input_dim = d;
  m.latent_dim = latent_dim;
  m.mean.assign(d, 0.0);
  for (std::size_t r = 0; r < n; ++r) kern::axpy(m.mean.data(), 1.0, rows.row(r), d);
  kern::scale(m.mean.data(), 1.0 / static_cast<double>(n), d);

  linalg::Matrix cov(d, d);
  std::vector<double> centered(d);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < d; ++c) centered[c] = rows(r, c) - m.mean[c];
    kern::rank1(cov.data(), d, 1.0 / static_cast<double>(n), centered.data());
  }
  linalg::symmetrize(cov);

  linalg::SymEig eig = linalg::sym_eig(cov);  // ascending
  m.components = linalg::Matrix(latent_dim, d);
  m.explained_variance.resize(latent_dim);
  for (std::size_t k = 0; k < latent_dim; ++k) {
    const std::size_t src = d - 1 - k;
    m.explained_variance[k] = std::max(0.0, eig.values[src]);
    const double* v = eig.vectors.row(src);
    // deterministic sign: largest-magnitude entry positive
    std::size_t arg = 0;
    for (std::size_t c = 1; c < d; ++c)
      if (std::abs(v[c]) > std::abs(v[arg])) arg = c;
    const double s = v[arg] < 0.0 ? -1.0 : 1.0;
    for (std::size_t c = 0; c < d; ++c) m.components(k, c) = s * v[c];
  }
  return m;
}

std::vector<double> pca_project(const PcaModel& model, std::span<const double> x) {
  if (x.size() != model.input_dim)
    throw std::invalid_argument("pca_project: expected " + std::to_string(model.input_dim) +
                                " values, got " + std::to_string(x.size()));
  std::vector<double> centered(x.begin(), x.end());
  for (std::size_t c = 0; c < centered.size(); ++c) centered[c] -= model.mean[c];
  std::vector<double> out(model.latent_dim);
  kern::matvec(model.components.data(), model.latent_dim, model.input_dim, centered.data(),
               out.data());
  return out;
}

std::size_t one_hot_width(const ingest::FeatureSchema& schema) {
  std::size_t w = 0;
  for (std::size_t i : schema.discrete_indices()) w += schema.columns[i].categories.size();
  return w;
}

std::vector<double> one_hot_encode(std::span<const std::string> values,
                                   const ingest::FeatureSchema& schema) {
  auto disc = schema.discrete_indices();
  if (values.size() != disc.size())
    throw std::invalid_argument("one_hot_encode: expected " + std::to_string(disc.size()) +
                                " discrete values, got " + std::to_string(values.size()));
  std::vector<uint32_t> idx(values.size());
  for (std::size_t k = 0; k < disc.size(); ++k) {
    const auto& col = schema.columns[disc[k]];
    auto it = std::find(col.categories.begin(), col.categories.end(), values[k]);
    if (it == col.categories.end())
      throw DataError("one_hot_encode: column '" + col.name + "': unseen category '" +
                      values[k] + "'");
    idx[k] = static_cast<uint32_t>(it - col.categories.begin());
  }
  return one_hot_encode(idx, schema);
}

std::vector<double> one_hot_encode(std::span<const uint32_t> indices,
                                   const ingest::FeatureSchema& schema) {
  auto disc = schema.discrete_indices();
  if (indices.size() != disc.size())
    throw std::invalid_argument("one_hot_encode: expected " + std::to_string(disc.size()) +
                                " discrete indices, got " + std::to_string(indices.size()));
  std::vector<double> out(one_hot_width(schema), 0.0);
  std::size_t offset = 0;
  for (std::size_t k = 0; k < disc.size(); ++k) {
    const auto& cats = schema.columns[disc[k]].categories;
    if (indices[k] >= cats.size())
      throw DataError("one_hot_encode: column '" + schema.columns[disc[k]].name +
                      "': category index out of range");
    out[offset + indices[k]] = 1.0;
    offset += cats.size();
  }
  return out;
}

double cd1_epoch(RbmModel& model, const linalg::Matrix& rows, double learning_rate, Rng& rng) {
  const std::size_t n = rows.rows();
  const std::size_t nv = model.visible_dim;
  const std::size_t nh = model.hidden_dim;
  if (rows.cols() != nv) throw std::invalid_argument("cd1_epoch: visible dimension mismatch");

  std::vector<double> h_prob(nh), h_state(nh), v_recon(nv), h_recon(nh);
  linalg::Matrix dw(nv, nh);
  std::vector<double> dvb(nv), dhb(nh);
  double err_sum = 0.0;

  for (std::size_t start = 0; start < n; start += kRbmBatch) {
    const std::size_t end = std::min(n, start + kRbmBatch);
    const double inv_batch = 1.0 / static_cast<double>(end - start);
    std::fill(dw.data(), dw.data() + nv * nh, 0.0);
    std::fill(dvb.begin(), dvb.end(), 0.0);
    std::fill(dhb.begin(), dhb.end(), 0.0);

    for (std::size_t r = start; r < end; ++r) {
      const double* v = rows.row(r);
      // positive phase
      for (std::size_t j = 0; j < nh; ++j) {
        double s = model.hidden_bias[j];
        for (std::size_t i = 0; i < nv; ++i) s += v[i] * model.weights(i, j);
        h_prob[j] = sigmoid(s);
      }
      for (std::size_t j = 0; j < nh; ++j) h_state[j] = rng.uniform() < h_prob[j] ? 1.0 : 0.0;
      // negative phase: one Gibbs reconstruction step
      for (std::size_t i = 0; i < nv; ++i)
        v_recon[i] = sigmoid(model.visible_bias[i] + kern::dot(model.weights.row(i), h_state.data(), nh));
      for (std::size_t j = 0; j < nh; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < nv; ++i) s += v_recon[i] * model.weights(i, j);
        h_recon[j] = sigmoid(model.hidden_bias[j] + s);
      }
      for (std::size_t i = 0; i < nv; ++i) {
        kern::axpy(dw.row(i), v[i], h_prob.data(), nh);
        kern::axpy(dw.row(i), -v_recon[i], h_recon.data(), nh);
        dvb[i] += v[i] - v_recon[i];
        const double e = v[i] - v_recon[i];
        err_sum += e * e;
      }
      for (std::size_t j = 0; j < nh; ++j) dhb[j] += h_prob[j] - h_recon[j];
    }

    const double step = learning_rate * inv_batch;
    kern::axpy(model.weights.data(), step, dw.data(), nv * nh);
    kern::axpy(model.visible_bias.data(), step, dvb.data(), nv);
    kern::axpy(model.hidden_bias.data(), step, dhb.data(), nh);
  }
  return err_sum / (static_cast<double>(n) * static_cast<double>(nv));
}

RbmModel fit_rbm(const linalg::Matrix& binary_rows, std::size_t hidden_dim, std::size_t epochs,
                 double learning_rate, uint64_t seed) {
  if (hidden_dim == 0) throw DataError("fit_rbm: hidden_dim must be >= 1");
  if (epochs == 0) throw DataError("fit_rbm: epochs must be >= 1");
  if (!(learning_rate > 0.0)) throw DataError("fit_rbm: learning rate must be positive");
  for (std::size_t r = 0; r < binary_rows.rows(); ++r)
    for (std::size_t c = 0; c < binary_rows.cols(); ++c) {
      const double v = binary_rows(r, c);
      if (v != 0.0 && v != 1.0)
        throw DataError("fit_rbm: input is not 0/1 at row " + std::to_string(r));
    }

  RbmModel m;
  m.visible_dim = binary_rows.cols();
  m.hidden_dim = hidden_dim;
  m.weights = linalg::Matrix(m.visible_dim, hidden_dim);
  m.visible_bias.assign(m.visible_dim, 0.0);
  m.hidden_bias.assign(hidden_dim, 0.0);

  Rng rng(seed);
  for (std::size_t i = 0; i < m.visible_dim; ++i)
    for (std::size_t j = 0; j < hidden_dim; ++j) m.weights(i, j) = 0.01 * rng.normal();

  for (std::size_t e = 0; e < epochs; ++e) cd1_epoch(m, binary_rows, learning_rate, rng);
  return m;
}

std::vector<double> rbm_hidden(const RbmModel& model, std::span<const double> v) {
  if (v.size() != model.visible_dim)
    throw std::invalid_argument("rbm_hidden: expected " + std::to_string(model.visible_dim) +
                                " values, got " + std::to_string(v.size()));
  std::vector<double> out(model.hidden_dim);
  for (std::size_t j = 0; j < model.hidden_dim; ++j) {
    double s = model.hidden_bias[j];
    for (std::size_t i = 0; i < model.visible_dim; ++i) s += v[i] * model.weights(i, j);
    out[j] = sigmoid(s);
  }
  return out;
}

double reconstruction_error(const RbmModel& model, const linalg::Matrix& rows) {
  if (rows.cols() != model.visible_dim)
    throw std::invalid_argument("reconstruction_error: visible dimension mismatch");
  double err = 0.0;
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    auto h = rbm_hidden(model, std::span<const double>(rows.row(r), rows.cols()));
    for (std::size_t i = 0; i < model.visible_dim; ++i) {
      const double recon =
          sigmoid(model.visible_bias[i] + kern::dot(model.weights.row(i), h.data(), h.size()));
      const double e = rows(r, i) - recon;
      err += e * e;
    }
  }
  return err / (static_cast<double>(rows.rows()) * static_cast<double>(model.visible_dim));
}

std::size_t state_dim(const Encoders& enc, const ingest::FeatureSchema& schema) {
  const std::size_t n_cont = schema.continuous_indices().size();
  const std::size_t n_onehot = one_hot_width(schema);
  std::size_t dim = 0;
  if (n_cont > 0) {
    if (enc.muted || !enc.pca)
      dim += n_cont;
    else
      dim += enc.pca->latent_dim;
  }
  if (n_onehot > 0) {
    if (enc.muted || !enc.rbm)
      dim += n_onehot;
    else
      dim += enc.rbm->hidden_dim;
  }
  return dim;
}

std::vector<double> encode_state(std::span<const double> cont_values,
                                 std::span<const uint32_t> disc_indices, const Encoders& enc,
                                 const ingest::StandardizationStats& stats,
                                 const ingest::FeatureSchema& schema) {
  const auto cont_idx = schema.continuous_indices();
  if (cont_values.size() != cont_idx.size() || stats.per_column.size() != cont_idx.size())
    throw std::invalid_argument("encode_state: continuous dimension mismatch");

  std::vector<double> out;
  if (!cont_idx.empty()) {
    std::vector<double> z(cont_values.size());
    for (std::size_t c = 0; c < z.size(); ++c)
      z[c] = (cont_values[c] - stats.per_column[c].mean) / stats.per_column[c].stddev;
    if (enc.muted) {
      out.insert(out.end(), z.begin(), z.end());
    } else {
      if (!enc.pca) throw DataError("encode_state: continuous columns present but no PCA encoder");
      auto p = pca_project(*enc.pca, z);
      out.insert(out.end(), p.begin(), p.end());
    }
  }
  if (!schema.discrete_indices().empty()) {
    auto bits = one_hot_encode(disc_indices, schema);
    if (enc.muted) {
      out.insert(out.end(), bits.begin(), bits.end());
    } else {
      if (!enc.rbm) throw DataError("encode_state: discrete columns present but no RBM encoder");
      auto h = rbm_hidden(*enc.rbm, bits);
      out.insert(out.end(), h.begin(), h.end());
    }
  }
  return out;
}

linalg::Matrix encode_dataset(const ingest::Dataset& data, const Encoders& enc,
                              const ingest::StandardizationStats& stats) {
  const std::size_t dim = state_dim(enc, data.schema);
  linalg::Matrix states(data.rows(), dim);
  for (std::size_t r = 0; r < data.rows(); ++r) {
    auto cont = data.cont_row(r);
    auto disc = data.disc_row(r);
    auto s = encode_state(cont, disc, enc, stats, data.schema);
    std::copy(s.begin(), s.end(), states.row(r));
  }
  return states;
}

}  // namespace relm::latent
