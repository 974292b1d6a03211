#include "agentbd/tape.hpp"

#include <cmath>
#include <stdexcept>

namespace agentbd::ad {

namespace {
constexpr double kInvSqrt2 = 0.7071067811865475244;
constexpr double kInvSqrt2Pi = 0.3989422804014326779;
}  // namespace

int Tape::push(Node n) {
  nodes_.push_back(std::move(n));
  return static_cast<int>(nodes_.size()) - 1;
}

Mat& Tape::grad_buf(int id) {
  Node& n = nodes_[static_cast<size_t>(id)];
  if (n.grad.size() == 0) n.grad = Mat::Zero(val(id).rows(), val(id).cols());
  return n.grad;
}

const Mat& Tape::value(Var v) const { return val(v.id); }

const Mat& Tape::grad(Var v) const {
  return nodes_[static_cast<size_t>(v.id)].grad;
}

Var Tape::leaf(const Mat* external, int param_id) {
  Node n;
  n.op = Op::kLeaf;
  n.external = external;
  n.param_id = param_id;
  return Var{push(std::move(n))};
}

Var Tape::constant(Mat value) {
  Node n;
  n.op = Op::kConst;
  n.value = std::move(value);
  return Var{push(std::move(n))};
}

Var Tape::matmul(Var a, Var b) {
  Node n;
  n.op = Op::kMatmul;
  n.a = a.id;
  n.b = b.id;
  n.value = val(a.id) * val(b.id);
  return Var{push(std::move(n))};
}

Var Tape::add(Var a, Var b) {
  Node n;
  n.op = Op::kAdd;
  n.a = a.id;
  n.b = b.id;
  n.value = val(a.id) + val(b.id);
  return Var{push(std::move(n))};
}

Var Tape::sub(Var a, Var b) {
  Node n;
  n.op = Op::kSub;
  n.a = a.id;
  n.b = b.id;
  n.value = val(a.id) - val(b.id);
  return Var{push(std::move(n))};
}

Var Tape::add_rowvec(Var a, Var row) {
  Node n;
  n.op = Op::kAddRowVec;
  n.a = a.id;
  n.b = row.id;
  n.value = val(a.id).rowwise() + val(row.id).row(0);
  return Var{push(std::move(n))};
}

Var Tape::add_const(Var a, Mat constant) {
  Node n;
  n.op = Op::kAddConst;
  n.a = a.id;
  n.value = val(a.id) + constant;
  n.payload = std::move(constant);
  return Var{push(std::move(n))};
}

Var Tape::mul_rowvec_const(Var a, Mat row) {
  Node n;
  n.op = Op::kMulRowVecConst;
  n.a = a.id;
  n.value = val(a.id).array().rowwise() * row.row(0).array();
  n.payload = std::move(row);
  return Var{push(std::move(n))};
}

Var Tape::scale(Var a, double s) {
  Node n;
  n.op = Op::kScale;
  n.a = a.id;
  n.scalar = s;
  n.value = val(a.id) * s;
  return Var{push(std::move(n))};
}

Var Tape::hadamard(Var a, Var b) {
  Node n;
  n.op = Op::kHadamard;
  n.a = a.id;
  n.b = b.id;
  n.value = val(a.id).cwiseProduct(val(b.id));
  return Var{push(std::move(n))};
}

Var Tape::gelu(Var a) {
  Node n;
  n.op = Op::kGelu;
  n.a = a.id;
  const Mat& x = val(a.id);
  n.value = x.unaryExpr([](double v) { return v * 0.5 * (1.0 + std::erf(v * kInvSqrt2)); });
  return Var{push(std::move(n))};
}

Var Tape::softmax_rows(Var a) {
  Node n;
  n.op = Op::kSoftmaxRows;
  n.a = a.id;
  const Mat& x = val(a.id);
  Mat y(x.rows(), x.cols());
  for (Eigen::Index r = 0; r < x.rows(); ++r) {
    const double m = x.row(r).maxCoeff();
    Eigen::ArrayXd e = (x.row(r).array() - m).exp();
    y.row(r) = (e / e.sum()).matrix();
  }
  n.value = std::move(y);
  return Var{push(std::move(n))};
}

Var Tape::layer_norm_rows(Var a, Var gamma, Var beta, double eps) {
  Node n;
  n.op = Op::kLayerNormRows;
  n.a = a.id;
  n.b = gamma.id;
  n.c = beta.id;
  const Mat& x = val(a.id);
  const Eigen::Index d = x.cols();
  Mat xhat(x.rows(), d);
  Mat inv_std(x.rows(), 1);
  for (Eigen::Index r = 0; r < x.rows(); ++r) {
    const double mu = x.row(r).mean();
    const double var = (x.row(r).array() - mu).square().mean();
    const double is = 1.0 / std::sqrt(var + eps);
    inv_std(r, 0) = is;
    xhat.row(r) = ((x.row(r).array() - mu) * is).matrix();
  }
  n.value = (xhat.array().rowwise() * val(gamma.id).row(0).array()).rowwise() +
            val(beta.id).row(0).array();
  n.payload = std::move(xhat);
  n.payload2 = std::move(inv_std);
  return Var{push(std::move(n))};
}

Var Tape::gather_rows(Var table, std::vector<int> ids) {
  Node n;
  n.op = Op::kGatherRows;
  n.a = table.id;
  const Mat& t = val(table.id);
  Mat y(static_cast<Eigen::Index>(ids.size()), t.cols());
  for (size_t i = 0; i < ids.size(); ++i) y.row(static_cast<Eigen::Index>(i)) = t.row(ids[i]);
  n.value = std::move(y);
  n.ints = std::move(ids);
  return Var{push(std::move(n))};
}

Var Tape::concat_rows(const std::vector<Var>& parts) {
  if (parts.empty()) throw std::invalid_argument("concat_rows: empty part list");
  Node n;
  n.op = Op::kConcatRows;
  Eigen::Index rows = 0;
  const Eigen::Index cols = val(parts[0].id).cols();
  for (Var p : parts) rows += val(p.id).rows();
  Mat y(rows, cols);
  Eigen::Index at = 0;
  for (Var p : parts) {
    y.middleRows(at, val(p.id).rows()) = val(p.id);
    at += val(p.id).rows();
    n.inputs.push_back(p.id);
  }
  n.value = std::move(y);
  return Var{push(std::move(n))};
}

Var Tape::slice_rows(Var a, int first, int count) {
  Node n;
  n.op = Op::kSliceRows;
  n.a = a.id;
  n.ints = {first, count};
  n.value = val(a.id).middleRows(first, count);
  return Var{push(std::move(n))};
}

Var Tape::slice_cols(Var a, int first, int count) {
  Node n;
  n.op = Op::kSliceCols;
  n.a = a.id;
  n.ints = {first, count};
  n.value = val(a.id).middleCols(first, count);
  return Var{push(std::move(n))};
}

Var Tape::concat_cols(const std::vector<Var>& parts) {
  if (parts.empty()) throw std::invalid_argument("concat_cols: empty part list");
  Node n;
  n.op = Op::kConcatCols;
  Eigen::Index cols = 0;
  const Eigen::Index rows = val(parts[0].id).rows();
  for (Var p : parts) cols += val(p.id).cols();
  Mat y(rows, cols);
  Eigen::Index at = 0;
  for (Var p : parts) {
    y.middleCols(at, val(p.id).cols()) = val(p.id);
    at += val(p.id).cols();
    n.inputs.push_back(p.id);
  }
  n.value = std::move(y);
  return Var{push(std::move(n))};
}

Var Tape::mean_rows(Var a) {
  Node n;
  n.op = Op::kMeanRows;
  n.a = a.id;
  n.value = val(a.id).colwise().mean();
  return Var{push(std::move(n))};
}

Var Tape::row_sums(Var a) {
  Node n;
  n.op = Op::kRowSums;
  n.a = a.id;
  n.value = val(a.id).rowwise().sum();
  return Var{push(std::move(n))};
}

Var Tape::sum_all(Var a) {
  Node n;
  n.op = Op::kSumAll;
  n.a = a.id;
  n.value = Mat::Constant(1, 1, val(a.id).sum());
  return Var{push(std::move(n))};
}

Var Tape::exp(Var a) {
  Node n;
  n.op = Op::kExp;
  n.a = a.id;
  n.value = val(a.id).array().exp();
  return Var{push(std::move(n))};
}

Var Tape::log(Var a) {
  Node n;
  n.op = Op::kLog;
  n.a = a.id;
  n.value = val(a.id).array().log();
  return Var{push(std::move(n))};
}

Var Tape::sqrt(Var a) {
  Node n;
  n.op = Op::kSqrt;
  n.a = a.id;
  n.value = val(a.id).array().sqrt();
  return Var{push(std::move(n))};
}

Var Tape::transpose(Var a) {
  Node n;
  n.op = Op::kTranspose;
  n.a = a.id;
  n.value = val(a.id).transpose();
  return Var{push(std::move(n))};
}

Var Tape::l2_normalize_rows(Var a, double degenerate_eps) {
  Node n;
  n.op = Op::kL2NormalizeRows;
  n.a = a.id;
  const Mat& x = val(a.id);
  Mat norms(x.rows(), 1);
  Mat y(x.rows(), x.cols());
  for (Eigen::Index r = 0; r < x.rows(); ++r) {
    const double nm = x.row(r).norm();
    norms(r, 0) = nm;
    if (nm < degenerate_eps)
      y.row(r).setZero();
    else
      y.row(r) = x.row(r) / nm;
  }
  n.scalar = degenerate_eps;
  n.payload = std::move(norms);
  n.value = std::move(y);
  return Var{push(std::move(n))};
}

Var Tape::div_by_scalar(Var a, Var scalar_1x1) {
  if (val(scalar_1x1.id).rows() != 1 || val(scalar_1x1.id).cols() != 1)
    throw std::invalid_argument("div_by_scalar: divisor must be 1x1");
  Node n;
  n.op = Op::kDivByScalar;
  n.a = a.id;
  n.b = scalar_1x1.id;
  n.value = val(a.id) / val(scalar_1x1.id)(0, 0);
  return Var{push(std::move(n))};
}

Var Tape::cross_entropy_rows(Var logits, std::vector<int> targets) {
  const Mat& x = val(logits.id);
  if (static_cast<Eigen::Index>(targets.size()) != x.rows())
    throw std::invalid_argument("cross_entropy_rows: target count != logit rows");
  Node n;
  n.op = Op::kCrossEntropyRows;
  n.a = logits.id;
  Mat probs(x.rows(), x.cols());
  double total = 0;
  for (Eigen::Index r = 0; r < x.rows(); ++r) {
    const double m = x.row(r).maxCoeff();
    Eigen::ArrayXd e = (x.row(r).array() - m).exp();
    const double z = e.sum();
    probs.row(r) = (e / z).matrix();
    total += -(x(r, targets[static_cast<size_t>(r)]) - m - std::log(z));
  }
  n.value = Mat::Constant(1, 1, total / static_cast<double>(x.rows()));
  n.payload = std::move(probs);
  n.ints = std::move(targets);
  return Var{push(std::move(n))};
}

void Tape::backward(Var root) {
  const Mat& v = val(root.id);
  if (v.rows() != 1 || v.cols() != 1)
    throw std::invalid_argument("backward: root must be 1x1; pass an explicit seed otherwise");
  backward(root, Mat::Constant(1, 1, 1.0));
}

void Tape::backward(Var root, const Mat& seed) {
  grad_buf(root.id) += seed;
  for (int id = root.id; id >= 0; --id) {
    Node& n = nodes_[static_cast<size_t>(id)];
    if (n.grad.size() == 0) continue;  // not reachable from root
    const Mat& g = n.grad;
    switch (n.op) {
      case Op::kLeaf:
      case Op::kConst:
        break;
      case Op::kMatmul:
        grad_buf(n.a) += g * val(n.b).transpose();
        grad_buf(n.b) += val(n.a).transpose() * g;
        break;
      case Op::kAdd:
        grad_buf(n.a) += g;
        grad_buf(n.b) += g;
        break;
      case Op::kSub:
        grad_buf(n.a) += g;
        grad_buf(n.b) -= g;
        break;
      case Op::kAddRowVec:
        grad_buf(n.a) += g;
        grad_buf(n.b) += g.colwise().sum();
        break;
      case Op::kAddConst:
        grad_buf(n.a) += g;
        break;
      case Op::kMulRowVecConst:
        grad_buf(n.a) += (g.array().rowwise() * n.payload.row(0).array()).matrix();
        break;
      case Op::kScale:
        grad_buf(n.a) += g * n.scalar;
        break;
      case Op::kHadamard:
        grad_buf(n.a) += g.cwiseProduct(val(n.b));
        grad_buf(n.b) += g.cwiseProduct(val(n.a));
        break;
      case Op::kGelu: {
        const Mat& x = val(n.a);
        grad_buf(n.a) += g.cwiseProduct(x.unaryExpr([](double v) {
          const double cdf = 0.5 * (1.0 + std::erf(v * kInvSqrt2));
          const double pdf = kInvSqrt2Pi * std::exp(-0.5 * v * v);
          return cdf + v * pdf;
        }));
        break;
      }
      case Op::kSoftmaxRows: {
        const Mat& y = n.value;
        Mat& ga = grad_buf(n.a);
        for (Eigen::Index r = 0; r < y.rows(); ++r) {
          const double dot = g.row(r).dot(y.row(r));
          ga.row(r) += (y.row(r).array() * (g.row(r).array() - dot)).matrix();
        }
        break;
      }
      case Op::kLayerNormRows: {
        const Mat& xhat = n.payload;
        const Mat& inv_std = n.payload2;
        const Mat& gamma = val(n.b);
        grad_buf(n.c) += g.colwise().sum();
        grad_buf(n.b) += g.cwiseProduct(xhat).colwise().sum();
        Mat dxhat = g.array().rowwise() * gamma.row(0).array();
        Mat& ga = grad_buf(n.a);
        for (Eigen::Index r = 0; r < xhat.rows(); ++r) {
          const double mean_dx = dxhat.row(r).mean();
          const double mean_dx_xhat = dxhat.row(r).cwiseProduct(xhat.row(r)).mean();
          ga.row(r) += ((dxhat.row(r).array() - mean_dx - xhat.row(r).array() * mean_dx_xhat) *
                        inv_std(r, 0))
                           .matrix();
        }
        break;
      }
      case Op::kGatherRows: {
        Mat& ga = grad_buf(n.a);
        for (size_t i = 0; i < n.ints.size(); ++i)
          ga.row(n.ints[i]) += g.row(static_cast<Eigen::Index>(i));
        break;
      }
      case Op::kConcatRows: {
        Eigen::Index at = 0;
        for (int input : n.inputs) {
          const Eigen::Index rows = val(input).rows();
          grad_buf(input) += g.middleRows(at, rows);
          at += rows;
        }
        break;
      }
      case Op::kSliceRows:
        grad_buf(n.a).middleRows(n.ints[0], n.ints[1]) += g;
        break;
      case Op::kSliceCols:
        grad_buf(n.a).middleCols(n.ints[0], n.ints[1]) += g;
        break;
      case Op::kConcatCols: {
        Eigen::Index at = 0;
        for (int input : n.inputs) {
          const Eigen::Index cols = val(input).cols();
          grad_buf(input) += g.middleCols(at, cols);
          at += cols;
        }
        break;
      }
      case Op::kMeanRows:
        grad_buf(n.a) += Mat::Ones(val(n.a).rows(), 1) * g /
                         static_cast<double>(val(n.a).rows());
        break;
      case Op::kRowSums:
        grad_buf(n.a) += g * Mat::Ones(1, val(n.a).cols());
        break;
      case Op::kSumAll:
        grad_buf(n.a).array() += g(0, 0);
        break;
      case Op::kExp:
        grad_buf(n.a) += g.cwiseProduct(n.value);
        break;
      case Op::kLog:
        grad_buf(n.a) += g.cwiseQuotient(val(n.a));
        break;
      case Op::kSqrt:
        grad_buf(n.a) += (g.array() * 0.5 / n.value.array()).matrix();
        break;
      case Op::kTranspose:
        grad_buf(n.a) += g.transpose();
        break;
      case Op::kL2NormalizeRows: {
        const Mat& y = n.value;
        const Mat& norms = n.payload;
        Mat& ga = grad_buf(n.a);
        for (Eigen::Index r = 0; r < y.rows(); ++r) {
          if (norms(r, 0) < n.scalar) continue;  // degenerate rows: zero grad
          const double dot = g.row(r).dot(y.row(r));
          ga.row(r) += (g.row(r) - dot * y.row(r)) / norms(r, 0);
        }
        break;
      }
      case Op::kDivByScalar: {
        const double s = val(n.b)(0, 0);
        grad_buf(n.a) += g / s;
        grad_buf(n.b)(0, 0) += -(g.cwiseProduct(val(n.a))).sum() / (s * s);
        break;
      }
      case Op::kCrossEntropyRows: {
        const Mat& probs = n.payload;
        Mat delta = probs;
        for (Eigen::Index r = 0; r < delta.rows(); ++r)
          delta(r, n.ints[static_cast<size_t>(r)]) -= 1.0;
        grad_buf(n.a) += delta * (g(0, 0) / static_cast<double>(delta.rows()));
        break;
      }
    }
  }
}

void Tape::accumulate_param_grads(std::vector<Mat>& sink) const {
  for (const Node& n : nodes_) {
    if (n.param_id < 0 || n.grad.size() == 0) continue;
    Mat& dst = sink[static_cast<size_t>(n.param_id)];
    if (dst.size() == 0)
      dst = n.grad;
    else
      dst += n.grad;
  }
}

}  // namespace agentbd::ad
