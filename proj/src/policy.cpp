#include "relm/policy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "relm/kernels.hpp"

namespace relm::policy {

Topology Topology::dense_default(std::size_t input_dim) {
  return Topology{{input_dim, 45, 15, 6, 1},
                  {Activation::Tanh, Activation::Tanh, Activation::Tanh, Activation::Sigmoid}};
}

Topology Topology::with_hidden(std::size_t input_dim, std::span<const std::size_t> hidden) {
  Topology t;
  t.layer_sizes.push_back(input_dim);
  for (std::size_t h : hidden) {
    t.layer_sizes.push_back(h);
    t.activations.push_back(Activation::Tanh);
  }
  t.layer_sizes.push_back(1);
  t.activations.push_back(Activation::Sigmoid);
  return t;
}

std::size_t Topology::param_count() const {
  std::size_t total = 0;
  for (std::size_t i = 0; i + 1 < layer_sizes.size(); ++i)
    total += layer_sizes[i] * layer_sizes[i + 1] + layer_sizes[i + 1];
  return total;
}

void Topology::validate() const {
  if (layer_sizes.size() < 2) throw std::invalid_argument("topology: need at least two layers");
  if (layer_sizes.size() != activations.size() + 1)
    throw std::invalid_argument("topology: layer count must equal activation count + 1");
  for (std::size_t s : layer_sizes)
    if (s == 0) throw std::invalid_argument("topology: layer sizes must be >= 1");
}

std::vector<LayerSlice> genome_slices(const Topology& t) {
  t.validate();
  std::vector<LayerSlice> out;
  std::size_t offset = 0;
  for (std::size_t i = 0; i + 1 < t.layer_sizes.size(); ++i) {
    LayerSlice s;
    s.in_dim = t.layer_sizes[i];
    s.out_dim = t.layer_sizes[i + 1];
    s.weight_offset = offset;
    offset += s.in_dim * s.out_dim;
    s.bias_offset = offset;
    offset += s.out_dim;
    out.push_back(s);
  }
  return out;
}

Network::Network(Topology t) : topo_(std::move(t)), slices_(genome_slices(topo_)) {
  const std::size_t widest = *std::max_element(topo_.layer_sizes.begin(), topo_.layer_sizes.end());
  buf_a_.resize(widest);
  buf_b_.resize(widest);
}

double Network::forward(std::span<const double> genome, std::span<const double> state) {
  if (state.size() != topo_.input_dim())
    throw std::invalid_argument("forward: expected state of dimension " +
                                std::to_string(topo_.input_dim()) + ", got " +
                                std::to_string(state.size()));
  if (genome.size() != topo_.param_count())
    throw std::invalid_argument("forward: expected genome of length " +
                                std::to_string(topo_.param_count()) + ", got " +
                                std::to_string(genome.size()));

  std::copy(state.begin(), state.end(), buf_a_.begin());
  double* in = buf_a_.data();
  double* out = buf_b_.data();
  for (std::size_t l = 0; l < slices_.size(); ++l) {
    const LayerSlice& s = slices_[l];
    kern::matvec(genome.data() + s.weight_offset, s.out_dim, s.in_dim, in, out);
    const double* bias = genome.data() + s.bias_offset;
    switch (topo_.activations[l]) {
      case Activation::Tanh:
        for (std::size_t j = 0; j < s.out_dim; ++j) out[j] = std::tanh(out[j] + bias[j]);
        break;
      case Activation::Sigmoid:
        for (std::size_t j = 0; j < s.out_dim; ++j) out[j] = 1.0 / (1.0 + std::exp(-(out[j] + bias[j])));
        break;
    }
    std::swap(in, out);
  }
  return in[0];  // last swap left the output in `in`
}

double forward(std::span<const double> genome, const Topology& t, std::span<const double> state) {
  Network net(t);
  return net.forward(genome, state);
}

int predict(std::span<const double> genome, const Topology& t, std::span<const double> state,
            double threshold) {
  return forward(genome, t, state) >= threshold ? 1 : 0;
}

std::vector<double> batch_forward(std::span<const double> genome, const Topology& t,
                                  const linalg::Matrix& states) {
  Network net(t);
  std::vector<double> out(states.rows());
  for (std::size_t r = 0; r < states.rows(); ++r)
    out[r] = net.forward(genome, std::span<const double>(states.row(r), states.cols()));
  return out;
}

}  // namespace relm::policy
