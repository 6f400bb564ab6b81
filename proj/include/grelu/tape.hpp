#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "grelu/mat.hpp"
#include "grelu/sparse.hpp"

namespace grelu {

/// Handle to a value recorded on a Tape. Default-constructed handles are not
/// attached to any tape.
struct Tensor {
    int id = -1;
    bool valid() const { return id >= 0; }
};

/// Named learnable tensor living outside the tape; forward passes bind it to
/// a fresh leaf each epoch and export_grads() copies the gradient back.
struct Param {
    std::string name;
    Mat value;
    Mat grad;
    bool decay = false;  // participates in L2 weight decay
};

/// Reverse-mode differentiation tape over dense 2-D tensors. Rebuilt every
/// forward pass (define-by-run); nodes are stored in topological order by
/// construction. A tape is confined to a single thread.
class Tape {
 public:
    Tape() = default;
    Tape(const Tape&) = delete;
    Tape& operator=(const Tape&) = delete;

    Tensor leaf(Mat value, bool requires_grad = false);
    Tensor constant(Mat value) { return leaf(std::move(value), false); }
    Tensor bind(Param& p);  // leaf(p.value, true) remembered for export_grads

    // ---- recorded operations ----
    Tensor add(Tensor a, Tensor b);
    Tensor scale(Tensor a, double s);
    Tensor add_rowvec(Tensor a, Tensor b);              // b is 1 x cols(a)
    Tensor mul_elem(Tensor a, Tensor b);
    Tensor mul_mask(Tensor a, Mat mask);                // dropout-style constant mask
    Tensor matmul(Tensor a, Tensor b);
    Tensor spmm(const SparseMatrix& s, Tensor b);       // s must outlive the tape
    Tensor transpose(Tensor a);
    Tensor concat_cols(Tensor a, Tensor b);
    Tensor slice_cols(Tensor a, int start, int len);
    Tensor slice_rows(Tensor a, int start, int len);
    Tensor reshape(Tensor a, int rows, int cols);
    Tensor row_mean(Tensor a);
    Tensor tanh_elem(Tensor a);
    Tensor softmax_rows(Tensor a);
    // Softmax over a single column [N x 1]. With scale_by_n the denominator is
    // divided by N, so a uniform input maps to exactly 1.0 per entry.
    Tensor softmax_col(Tensor a, bool scale_by_n);
    Tensor elu_elem(Tensor a, double alpha);
    // y[n][c] = max_k (alpha_k[n][c] * x[n][c] + beta_k[n][c]); each alpha/beta
    // is 1x1, 1xC or NxC (broadcast over the missing axes). Ties pick the
    // smallest k, and the backward pass routes gradient only through the
    // winning segment.
    Tensor kmax_affine(Tensor x, const std::vector<Tensor>& alphas,
                       const std::vector<Tensor>& betas);
    Tensor nll_loss(Tensor logits, const std::vector<int>& labels,
                    const std::vector<int>& mask);
    Tensor sum_all(Tensor a);

    // ---- backward ----
    void backward(Tensor loss);   // loss must be 1x1; callable once per tape
    void export_grads();          // copy gradients into bound Params

    const Mat& value(Tensor t) const;
    const Mat& grad(Tensor t) const;  // zero matrix if no gradient reached t

    // Smallest |top1 - top2| margin seen across all kmax_affine elements in
    // this tape; +inf when no kmax was recorded. Used to reject finite
    // difference probes near activation kinks.
    double min_kink_margin() const { return min_kink_margin_; }

 private:
    struct Node {
        Mat value;
        Mat grad;
        bool requires_grad = false;
        bool reached = false;
        std::function<void(Tape&)> backprop;  // null for leaves/constants
    };

    int push(Mat value, bool requires_grad, std::function<void(Tape&)> backprop);
    Node& node(Tensor t);
    const Node& node(Tensor t) const;
    void accumulate(int id, const Mat& g);
    // adds g (shaped like the consumer view) into a broadcast operand
    void accumulate_broadcast(int id, const Mat& g);

    std::vector<Node> nodes_;
    std::vector<std::pair<Param*, int>> bindings_;
    bool backward_done_ = false;
    double min_kink_margin_ = std::numeric_limits<double>::infinity();
};

}  // namespace grelu
