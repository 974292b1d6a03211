#pragma once

#include <Eigen/Core>
#include <vector>

namespace agentbd::ad {

using Mat = Eigen::MatrixXd;

struct Var {
  int id = -1;
  bool valid() const { return id >= 0; }
};

// Reverse-mode autodiff over dense matrices. Nodes are appended in forward
// order and therefore already topologically sorted; backward() walks them in
// reverse. Parameter leaves reference external storage (no copy) and tag a
// param_id so gradients can be harvested after backward().
class Tape {
 public:
  Var leaf(const Mat* external, int param_id = -1);
  Var constant(Mat value);

  Var matmul(Var a, Var b);
  Var add(Var a, Var b);
  Var sub(Var a, Var b);
  Var add_rowvec(Var a, Var row);          // broadcast row over a's rows
  Var add_const(Var a, Mat constant);      // e.g. attention masks
  Var mul_rowvec_const(Var a, Mat row);    // broadcast constant row product
  Var scale(Var a, double s);
  Var hadamard(Var a, Var b);
  Var gelu(Var a);
  Var softmax_rows(Var a);
  Var layer_norm_rows(Var a, Var gamma, Var beta, double eps = 1e-5);
  Var gather_rows(Var table, std::vector<int> ids);
  Var concat_rows(const std::vector<Var>& parts);
  Var slice_rows(Var a, int first, int count);
  Var slice_cols(Var a, int first, int count);
  Var concat_cols(const std::vector<Var>& parts);
  Var mean_rows(Var a);                    // 1 x cols
  Var row_sums(Var a);                     // rows x 1
  Var sum_all(Var a);                      // 1 x 1
  Var exp(Var a);
  Var log(Var a);
  Var sqrt(Var a);
  Var transpose(Var a);
  Var l2_normalize_rows(Var a, double degenerate_eps = 1e-8);
  Var div_by_scalar(Var a, Var scalar_1x1);
  // Mean over rows of -log softmax(logits)[r, target_r].
  Var cross_entropy_rows(Var logits, std::vector<int> targets);

  const Mat& value(Var v) const;
  const Mat& grad(Var v) const;

  // Seeds d(root)=1 for a 1x1 root, or an explicit seed matrix, then
  // accumulates gradients into every reachable node.
  void backward(Var root);
  void backward(Var root, const Mat& seed);

  // Adds parameter gradients into `sink` (indexed by param_id).
  void accumulate_param_grads(std::vector<Mat>& sink) const;

  size_t num_nodes() const { return nodes_.size(); }

 private:
  enum class Op {
    kLeaf, kConst, kMatmul, kAdd, kSub, kAddRowVec, kAddConst, kMulRowVecConst,
    kScale, kHadamard, kGelu, kSoftmaxRows, kLayerNormRows, kGatherRows,
    kConcatRows, kSliceRows, kSliceCols, kConcatCols, kMeanRows, kRowSums,
    kSumAll, kExp, kLog, kSqrt, kTranspose, kL2NormalizeRows, kDivByScalar,
    kCrossEntropyRows,
  };

  struct Node {
    Op op;
    int a = -1, b = -1, c = -1;
    Mat value;
    Mat grad;
    const Mat* external = nullptr;
    int param_id = -1;
    double scalar = 0.0;
    Mat payload;                 // const operand / cached stats
    Mat payload2;
    std::vector<int> ints;       // gather ids, CE targets, slice bounds
    std::vector<int> inputs;     // concat inputs
  };

  const Mat& val(int id) const {
    const Node& n = nodes_[static_cast<size_t>(id)];
    return n.external ? *n.external : n.value;
  }
  Mat& grad_buf(int id);
  int push(Node n);

  std::vector<Node> nodes_;
};

}  // namespace agentbd::ad
