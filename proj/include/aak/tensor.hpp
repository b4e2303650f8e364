#ifndef AAK_TENSOR_HPP
#define AAK_TENSOR_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "aak/rng.hpp"

namespace aak::tensor {

// Dense row-major matrix of 64-bit floats. Rank is 1 or 2; rank-1 tensors
// behave as a single row where a matrix is expected.
struct Tensor {
  std::vector<std::int64_t> shape;
  std::vector<double> data;
  bool requires_grad = false;

  Tensor() = default;
  Tensor(std::int64_t rows, std::int64_t cols, double fill = 0.0)
      : shape{rows, cols},
        data(static_cast<std::size_t>(rows * cols), fill) {}

  static Tensor row(std::vector<double> values);

  std::int64_t rows() const { return shape.empty() ? 0 : shape[0]; }
  std::int64_t cols() const {
    return shape.size() < 2 ? (shape.empty() ? 0 : 1) : shape[1];
  }
  std::size_t numel() const { return data.size(); }

  double& at(std::int64_t r, std::int64_t c) {
    return data[static_cast<std::size_t>(r * cols() + c)];
  }
  double at(std::int64_t r, std::int64_t c) const {
    return data[static_cast<std::size_t>(r * cols() + c)];
  }

  std::string shape_str() const;
  bool all_finite() const;
};

// Deterministic initializers (see Rng). `init_orthogonal` QR-decomposes a
// Gaussian draw; when rows < cols the rows are orthonormal instead of the
// columns. `init_he` draws zero-mean Gaussians with variance 2/fan_in.
Tensor init_orthogonal(std::int64_t rows, std::int64_t cols, Rng& rng);
Tensor init_he(std::int64_t fan_in, std::int64_t rows, std::int64_t cols,
               Rng& rng);
Tensor init_uniform(double lo, double hi, std::int64_t rows,
                    std::int64_t cols, Rng& rng);

using NodeId = std::int32_t;

// Reverse-mode differentiation graph. Nodes are appended in evaluation
// order, which is a topological order by construction; backward() walks it
// once in reverse. A graph is confined to one thread for the duration of a
// forward/backward pass.
class Graph {
 public:
  // Leafs. `param` keeps pointers into caller-owned storage: values are read
  // at node creation and gradients are accumulated into *grad (which must
  // match value's shape and outlive the graph).
  NodeId constant(Tensor value);
  NodeId param(const Tensor* value, Tensor* grad);

  NodeId matmul(NodeId a, NodeId b);
  NodeId add(NodeId a, NodeId b);
  NodeId sub(NodeId a, NodeId b);
  NodeId mul_elementwise(NodeId a, NodeId b);
  // |a - b|; the subgradient at a tie is 0.
  NodeId abs_diff(NodeId a, NodeId b);
  // x + b with the bias row broadcast over rows of x.
  NodeId add_bias(NodeId x, NodeId bias);
  NodeId concat(const std::vector<NodeId>& parts, int axis);
  NodeId slice_rows(NodeId x, std::int64_t begin, std::int64_t end);
  NodeId slice_cols(NodeId x, std::int64_t begin, std::int64_t end);
  // Rows of a table gathered by index; duplicate indices accumulate.
  NodeId rows(NodeId table, std::vector<std::int64_t> indices);
  // Mean over the masked entries of one axis; mask entries are 0/1 weights.
  // axis 0 averages rows into (1 x cols), axis 1 averages columns into
  // (rows x 1). An all-zero mask is a contract error.
  NodeId masked_mean(NodeId x, std::vector<double> mask, int axis);
  NodeId elu(NodeId x);
  NodeId sigmoid(NodeId x);
  NodeId tanh(NodeId x);
  NodeId relu(NodeId x);
  // Inverted dropout: at train time kept entries are scaled by 1/keep_prob;
  // with train=false or keep_prob=1 this is the identity.
  NodeId dropout(NodeId x, double keep_prob, Rng& rng, bool train);
  NodeId scale(NodeId x, double factor);
  NodeId add_const(NodeId x, double constant);
  // Row maxima, ties resolved to the lowest column index.
  NodeId reduce_max(NodeId x, int axis);
  NodeId reduce_sum(NodeId x);
  // lambda * sum of squared entries over the given parameter nodes.
  NodeId l2_penalty(const std::vector<NodeId>& params, double lambda);

  const Tensor& value(NodeId id) const { return nodes_[id].value; }
  // Gradient w.r.t. a node, valid after backward().
  const Tensor& grad(NodeId id) const { return nodes_[id].grad; }

  // Seeds d(loss)/d(loss) = 1 and accumulates into every param's external
  // grad tensor. The loss must be scalar (1x1).
  void backward(NodeId loss);

  std::size_t size() const { return nodes_.size(); }

 private:
  enum class Op {
    kConstant, kParam, kMatmul, kAdd, kSub, kMul, kAbsDiff, kAddBias,
    kConcat, kSliceRows, kSliceCols, kRows, kMaskedMean, kElu, kSigmoid,
    kTanh, kRelu, kDropout, kScale, kAddConst, kReduceMax, kReduceSum,
    kL2Penalty,
  };

  struct Node {
    Op op;
    std::vector<NodeId> inputs;
    Tensor value;
    Tensor grad;
    bool needs_grad = false;
    // op-specific payloads
    std::vector<std::int64_t> indices;  // rows / slice bounds / argmax
    std::vector<double> aux;            // mask / dropout mask
    double scalar = 0.0;                // scale factor, constant, lambda
    int axis = 0;
    Tensor* external_grad = nullptr;    // param nodes only
  };

  NodeId push(Node node);
  Node& node(NodeId id) { return nodes_[id]; }

  std::vector<Node> nodes_;
};

}  // namespace aak::tensor

#endif  // AAK_TENSOR_HPP
