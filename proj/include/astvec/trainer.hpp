#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "astvec/coder.hpp"
#include "astvec/sampling.hpp"

namespace astvec {

/// Everything needed to continue a run: parameters, momentum buffer, the
/// stream that drives shuffling and corruption, and the loss history so far.
struct Checkpoint {
  Hyperparams hyper;
  std::uint64_t vocabulary = vocabulary_fingerprint();
  std::size_t epoch = 0;  ///< epochs completed
  std::string rng_state;
  ModelParams params;
  ModelParams velocity;
  std::vector<double> mean_hinge;  ///< one entry per completed epoch
  std::vector<double> objective;

  friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

struct TrainReport {
  std::vector<double> mean_hinge;
  std::vector<double> objective;
  std::size_t epochs_run = 0;
  double wall_seconds = 0.0;
  std::uint64_t seed = 0;
  bool converged = false;
};

/// True iff the relative change |prev − cur| / prev stayed below 1e-4 for
/// each of the last three epochs.
bool has_converged(std::span<const double> history);

/// Fresh state at epoch 0: parameters drawn from the seed, zero velocity.
Checkpoint start_training(const Hyperparams& hyper);

/// Runs epochs until `until_epoch` (capped by hyper.epochs) or convergence.
/// Returns the number of epochs run by this call. Each epoch shuffles the
/// samples (if enabled) and, per sample, draws one negative, takes the pair
/// gradient and applies g <- eps g + grad, theta <- theta - alpha g.
/// Throws NumericError naming epoch and sample on a non-finite loss or
/// parameter.
std::size_t continue_training(Checkpoint& state, std::span<const TrainingSample> samples,
                              std::size_t until_epoch);

struct TrainResult {
  ModelParams params;
  TrainReport report;
  Checkpoint checkpoint;
};

/// start_training + continue_training up to hyper.epochs.
TrainResult train(std::span<const TrainingSample> samples, const Hyperparams& hyper);

/// "epoch,mean_hinge,objective" with 1-based epochs.
std::string loss_csv(const Checkpoint& state);

/// Little-endian binary container; see checkpoint.cpp for the layout.
void save_checkpoint(const Checkpoint& cp, const std::filesystem::path& path);
Checkpoint load_checkpoint(const std::filesystem::path& path);

std::string encode_checkpoint(const Checkpoint& cp);
Checkpoint decode_checkpoint(std::string_view bytes);

}  // namespace astvec
