#pragma once

#include "relift/common.hpp"
#include "relift/rng.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace relift::nn {

// Dense row-major tensor of 64-bit floats; rank 1 and 2 cover every model.
struct Tensor {
    std::vector<std::size_t> shape;
    std::vector<double> data;

    Tensor() = default;
    static Tensor zeros(std::vector<std::size_t> shape);
    static Tensor vec(std::vector<double> values);
    static Tensor uniform(std::vector<std::size_t> shape, Rng& rng, double lo, double hi);

    std::size_t numel() const;
    std::size_t rank() const { return shape.size(); }
    std::size_t rows() const;
    std::size_t cols() const;
    double& at(std::size_t r, std::size_t c);
    double at(std::size_t r, std::size_t c) const;

    bool operator==(const Tensor& o) const { return shape == o.shape && data == o.data; }
};

std::string shape_str(const Tensor& t);
void require_same_shape(const char* op, const Tensor& a, const Tensor& b);

class Tape;

// Handle to a value recorded on a tape.
struct TRef {
    Tape* tape = nullptr;
    std::size_t idx = 0;
};

// Reverse-mode tape: values recorded in forward order, backward runs the
// recorded closures in exact reverse order. A non-recording tape computes
// values only.
class Tape {
  public:
    explicit Tape(bool recording = true) : recording_(recording) {}

    bool recording() const { return recording_; }
    std::size_t size() const { return slots_.size(); }

    TRef input(Tensor value);
    const Tensor& val(TRef r) const;
    Tensor& grad(TRef r);
    void backward(TRef scalar);

    // Used by op implementations; closures must capture tape + indices, never
    // slot addresses (the slot vector reallocates).
    TRef emit(Tensor value);
    void set_back(TRef r, std::function<void()> fn);

  private:
    struct Slot {
        Tensor val;
        Tensor grad;
        std::function<void()> back;
    };
    std::vector<Slot> slots_;
    bool recording_;
};

TRef add(TRef a, TRef b);
TRef scale(TRef a, double c);
TRef concat(TRef a, TRef b);
TRef matmul(TRef a, TRef b);
TRef matvec(TRef m, TRef x);
TRef matvec_t(TRef m, TRef x);
TRef stack_cols(const std::vector<TRef>& cols);
TRef tanh(TRef x);
TRef sigmoid(TRef x);
TRef softmax(TRef x);
TRef embedding(TRef table, std::size_t row);

// Inverted-scaling dropout over a fixed 0/1 keep mask.
TRef dropout(TRef x, double p, const Tensor& keep_mask);
// Training-mode dropout draws the mask; eval mode is the identity.
TRef dropout(TRef x, double p, Rng& rng, bool train);

TRef weighted_sum(TRef x, const Tensor& w);
TRef cross_entropy(TRef logits, std::size_t target);
// logits_cols is [V,T]; loss is the weighted mean of per-column cross
// entropies, so zero-weight positions contribute nothing.
TRef masked_cross_entropy(TRef logits_cols, const std::vector<std::size_t>& targets,
                          const std::vector<double>& weights);

// LSTM over fused gate rows [i; f; g; o]: wx [4d,n], wh [4d,d], b [4d].
struct LstmRefs {
    TRef wx, wh, b;
};
std::pair<TRef, TRef> lstm_cell(const LstmRefs& p, TRef x, TRef h, TRef c);

// N-ary Tree-LSTM with four fixed child slots; absent children are zero
// states. Gates i,g,o see the concatenated child vector H [4d]; one forget
// gate per child position also sees all of H.
// wx [3d,n], u [3d,4d], b [3d]; wfx [4d,n], uf [4d,4d], bf [4d].
struct NaryRefs {
    TRef wx, u, b, wfx, uf, bf;
};
std::pair<TRef, TRef> nary_tree_lstm(const NaryRefs& p,
                                     const std::vector<std::pair<TRef, TRef>>& children, TRef x);

struct GruRefs {
    TRef wz, uz, bz, wr, ur, br, wn, un, bn;
};
TRef gru_cell(const GruRefs& p, TRef x, TRef h);

}  // namespace relift::nn
