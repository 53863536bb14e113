#pragma once

#include <cstdint>
#include <vector>

#include "fedgame/fit.hpp"
#include "fedgame/types.hpp"

namespace fedgame {

/// Labeled points, row-major features.
struct Dataset {
    int dim = 0;
    std::vector<double> x;  // size() == labels.size() * dim
    std::vector<int> labels;

    std::size_t size() const { return labels.size(); }
    const double* row(std::size_t i) const { return x.data() + i * dim; }
};

/// A synthetic C-class Gaussian-blob classification task. Deterministic
/// given the seed: class centers, client datasets, and the clean held-out
/// test set all derive from it.
struct SyntheticTask {
    int num_classes = 2;
    int input_dim = 2;
    double center_scale = 2.0;        // class centers ~ N(0, center_scale^2 I)
    double spread = 1.0;              // within-class standard deviation
    int test_size = 1000;
    std::vector<double> class_centers;  // num_classes x input_dim
    Dataset test;                       // clean labels, never flipped
    std::uint64_t seed = 0;
};

SyntheticTask make_task(int num_classes, int input_dim, double center_scale, double spread,
                        int test_size, std::uint64_t seed);

/// Draws a balanced dataset of `count` points from the task distribution.
Dataset sample_dataset(const SyntheticTask& task, int count, std::uint64_t seed);

/// A participating client: its local dataset, the subset size it trains on,
/// and the label-flip rate applied to that subset.
struct SimClient {
    Dataset data;
    int contribution = 0;  // s_n, in [0, data.size()]
    double epsilon = 0.0;
};

/// Federated training hyper-parameters. Deterministic replay given seed.
struct SimConfig {
    int rounds = 30;
    int local_epochs = 5;
    int batch_size = 64;
    double local_lr = 0.1;
    double global_lr = 1.0;
    std::uint64_t seed = 0;

    void validate() const;
};

/// Multinomial softmax classifier with folded bias; weights are
/// num_classes x (dim + 1), zero-initialized.
struct SoftmaxModel {
    int num_classes = 0;
    int dim = 0;
    std::vector<double> w;

    static SoftmaxModel zeros(int num_classes, int dim);
    int predict(const double* features) const;
    double test_accuracy(const Dataset& data) const;
};

/// Each label is independently replaced, with probability epsilon, by a
/// uniformly random different class. Throws ContractError for a one-class
/// task with epsilon > 0.
Dataset flip_labels(const Dataset& data, double epsilon, int num_classes, std::uint64_t seed);

/// `epochs` passes of seeded-shuffle mini-batch SGD on the cross-entropy
/// loss, starting from `model`. Pure: returns the trained copy.
SoftmaxModel local_train(const SoftmaxModel& model, const Dataset& data, int epochs,
                         int batch_size, double lr, std::uint64_t seed);

/// Weighted average of model parameters; weights must sum to 1.
SoftmaxModel aggregate(const std::vector<SoftmaxModel>& models, const std::vector<double>& weights);

/// Federated averaging over the clients' flipped training subsets.
/// Aggregation weights are s_n / sum(s). Returns the clean-test accuracy
/// after every round (index 0 = after round 1). All-zero contributions give
/// the untrained model's accuracy each round.
std::vector<double> train_fedavg(const SyntheticTask& task, const std::vector<SimClient>& clients,
                                 const SimConfig& config);

/// One grid point of the sample-generation sweep.
struct SimGridPoint {
    StrategyProfile s;
    std::vector<double> eps;
};

struct SimRunRecord {
    int point = 0;
    int repeat = 0;
    std::vector<double> trajectory;
};

/// Runs train_fedavg at every grid point, `repeats` times with split seeds,
/// and emits one AccuracySample per point with the final-round accuracy
/// averaged over repeats. `client_data` points are drawn per client;
/// contributions use a per-seed random subset. Per-run trajectories are
/// appended to `records` when non-null.
std::vector<AccuracySample> generate_samples(const SyntheticTask& task,
                                             const std::vector<SimGridPoint>& grid,
                                             int client_data, const SimConfig& config, int repeats,
                                             std::vector<SimRunRecord>* records = nullptr);

}  // namespace fedgame
