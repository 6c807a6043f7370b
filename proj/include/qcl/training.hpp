#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcl/ansatz.hpp"
#include "qcl/datasets.hpp"

namespace qcl {

// Contrastive temperature; chosen empirically in simulation.
inline constexpr double kDefaultTemperature = 0.2;

// Named angle vectors for the three circuit blocks. phi may be empty for
// encoder-only parameter sets.
struct ParameterSet {
  std::vector<double> gamma;  // 4
  std::vector<double> theta;  // 24
  std::vector<double> phi;    // 18 or empty

  bool operator==(const ParameterSet&) const = default;
};

// Uniform angles on [-pi, pi), drawn gamma first, then theta, then phi.
ParameterSet random_parameters(Rng& rng, bool include_phi);

// Symmetric matrix of pairwise state overlaps over the 2N images of a
// contrastive set. The diagonal is fixed at 1 and ignored by the loss.
class OverlapMatrix {
public:
  explicit OverlapMatrix(int size);

  int size() const { return size_; }
  void set(int i, int j, double value);
  double get(int i, int j) const { return values_[index(i, j)]; }

private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(size_) +
           static_cast<std::size_t>(j);
  }
  int size_;
  std::vector<double> values_;
};

// Self-supervised loss over a full pairwise overlap matrix: for each of the
// n base images, -log of exp(s(i, n+i)/tau) over the sum of exp(s(i, j)/tau)
// for every j other than i and its augmented partner. Overlaps are clamped
// into [0, 1] before use. Requires tau > 0 and at least two base images.
double contrastive_loss(const OverlapMatrix& overlaps, double tau);

// Mean binary cross-entropy with probabilities clamped to
// [1e-9, 1 - 1e-9].
double bce_loss(std::span<const double> scores, std::span<const int> labels);

// SPSA gain sequences: a_k = a / (k + 1 + A)^alpha and
// c_k = c / (k + 1)^gamma_exp, with k counting steps from zero.
struct SpsaConfig {
  double a = 0.2;
  double c = 0.1;
  double big_a = 10.0;
  double alpha = 0.602;
  double gamma_exp = 0.101;
  int max_iters = 100;
  std::uint64_t seed = 0;
};

// Optional convergence rule: stop when the mean |loss delta| over the last
// `window` iterations drops below `tol`. A zero window runs to max_iters.
struct StopRule {
  int window = 0;
  double tol = 0.0;
};

struct TrainState {
  std::vector<double> params;
  std::vector<double> lr_scale;  // per-parameter update scale; empty = all 1
  int iter = 0;
  std::vector<double> loss_history;  // one entry per step: mean of the two probes
};

using Objective = std::function<double(std::span<const double>)>;

// One SPSA step: a single Rademacher direction probed at +/- c_k, gradient
// estimate (L+ - L-) / (2 c_k) * delta, update scaled by a_k and lr_scale.
// Non-finite losses abort with a NumericError naming the iteration.
void spsa_step(TrainState& state, const Objective& objective, const SpsaConfig& config,
               Rng& rng);

// Runs up to config.max_iters steps on a stream seeded from config.seed,
// honoring the stop rule if one is given.
void spsa_run(TrainState& state, const Objective& objective, const SpsaConfig& config,
              const StopRule& stop = {});

// Pairwise overlap circuits for a contrastive set, built once and bound per
// evaluation. shots == 0 evaluates exact probabilities; otherwise each
// overlap is estimated from `shots` draws on `rng`.
class OverlapEvaluator {
public:
  explicit OverlapEvaluator(const ContrastiveSet& set);

  OverlapMatrix evaluate(std::span<const double> gamma, std::span<const double> theta,
                         int shots = 0, Rng* rng = nullptr) const;

private:
  struct PairEntry {
    int i;
    int j;
    Circuit circuit;
    SlotBinder binder;
  };
  int total_;
  std::vector<PairEntry> pairs_;
};

// Classifier score circuits for a fixed image list.
class ClassifierEvaluator {
public:
  explicit ClassifierEvaluator(std::span<const LabeledImage> images);

  const std::vector<int>& labels() const { return labels_; }

  void scores(const ParameterSet& params, int shots, Rng* rng,
              std::vector<double>& out) const;

private:
  struct Entry {
    Circuit circuit;
    SlotBinder binder;
  };
  std::vector<Entry> entries_;
  std::vector<int> labels_;
};

struct EncoderTrainConfig {
  double tau = kDefaultTemperature;
  int shots = 200;  // phase 2 sampling; 0 = exact
  SpsaConfig spsa;  // gains and per-phase iteration cap
  StopRule stop{20, 1e-3};
  std::uint64_t seed = 1;
};

struct EncoderTrainResult {
  ParameterSet params;         // gamma from phase 1, theta from phase 2
  ParameterSet phase1_params;  // the co-optimized phase-1 gamma and theta
  std::vector<double> phase1_loss;
  std::vector<double> phase2_loss;
};

// Two-phase contrastive pretraining. Phase 1 co-optimizes gamma and theta
// on the first set with exact overlaps and keeps only gamma. Phase 2 holds
// gamma fixed, reinitializes theta and refines it alone on the second set
// with shot-sampled overlaps.
EncoderTrainResult pretrain_encoder(const ContrastiveSet& phase1_set,
                                    const ContrastiveSet& phase2_set,
                                    const EncoderTrainConfig& config);

enum class Regime { kPretrained, kRandom };

std::string_view regime_name(Regime regime);
Regime regime_from_name(std::string_view name);

struct ClassifierTrainConfig {
  Regime regime = Regime::kPretrained;
  int shots = 200;  // 0 = exact
  int max_steps = 100;
  double theta_lr_scale = 0.05;  // pretrained regime only
  SpsaConfig spsa;               // gain constants; seed and iters set here
  std::uint64_t seed = 1;
};

struct ClassifierTrainResult {
  ParameterSet params;
  std::vector<double> loss_history;
};

// Supervised fine-tuning with SPSA over the binary cross-entropy of the
// training scores. In the pretrained regime, gamma stays frozen at its
// initial value, theta updates at theta_lr_scale and phi at full rate; in
// the random regime all three groups train at full rate. `init` must carry
// all three groups (for the pretrained regime, gamma and theta come from
// the encoder and phi from a fresh random draw).
ClassifierTrainResult train_classifier(std::span<const LabeledImage> train,
                                       const ParameterSet& init,
                                       const ClassifierTrainConfig& config);

struct Prediction {
  double score;
  int label;
};

// Classifier score for one image; label 1 when the score exceeds the
// threshold, 0 otherwise (ties resolve to 0). shots == 0 scores exactly.
Prediction predict(const BinaryImage& image, const ParameterSet& params,
                   double threshold = 0.5, int shots = 0, Rng* rng = nullptr);

// JSON checkpoints, resumable and versioned ("qcl-checkpoint-v1", slot
// layout "v1"). Encoder checkpoints carry both phase loss histories and the
// images each phase trained on; classifier checkpoints carry one history.
struct Checkpoint {
  std::string stage;  // "encoder" or "classifier"
  ParameterSet params;
  int iterations = 0;
  std::vector<double> phase1_loss;
  std::vector<double> phase2_loss;
  std::vector<double> loss_history;
  std::uint64_t seed = 0;
  std::vector<std::uint16_t> phase1_images;
  std::vector<std::uint16_t> phase2_images;
  std::vector<std::uint16_t> test_images;
};

std::string checkpoint_to_json(const Checkpoint& checkpoint);
Checkpoint checkpoint_from_json(const std::string& json_text);

}  // namespace qcl
