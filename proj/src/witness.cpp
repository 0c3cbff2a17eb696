#include "polyrecon/witness.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "polyrecon/errors.hpp"

namespace polyrecon {
namespace {

constexpr std::size_t kMaxNearMissSamples = 16;

std::string at_vertex(int i) { return " at vertex " + std::to_string(i); }

// Runs one witness test and keeps the statistics.
class WitnessJudge {
 public:
  WitnessJudge(const ReconstructOptions& options, ReconstructStats& stats)
      : options_(options), stats_(stats) {}

  bool operator()(const FBState& state, int i, int j, int l) {
    const WitnessAngles angles = witness_sum(state, i, j, l);
    ++stats_.witness_evaluations;
    const double deviation = std::abs(angles.sum() - kPi);
    const bool accepted = deviation <= kWitnessTolerance;
    if (accepted) {
      stats_.max_accepted_deviation = std::max(stats_.max_accepted_deviation, deviation);
    } else {
      stats_.min_rejected_deviation = std::min(stats_.min_rejected_deviation, deviation);
    }
    if (!accepted && deviation <= kNearMissBound) {
      ++stats_.near_misses;
      if (stats_.near_miss_samples.size() < kMaxNearMissSamples) {
        stats_.near_miss_samples.push_back({i, j, l, angles, accepted});
      }
    }
    if (options_.observer) options_.observer(WitnessCheck{i, j, l, angles, accepted});
    return accepted;
  }

 private:
  const ReconstructOptions& options_;
  ReconstructStats& stats_;
};

VisibilityGraph boundary_graph(int n) {
  VisibilityGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, wrap_index(i + 1, n));
  return g;
}

int last_separation(const FBState& state, const ReconstructOptions& options) {
  if (options.last_separation <= 0) return state.reach();
  return std::min(options.last_separation, state.reach());
}

}  // namespace

std::string_view to_string(Algorithm a) {
  return a == Algorithm::Original ? "original" : "improved";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  if (name == "original") return Algorithm::Original;
  if (name == "improved") return Algorithm::Improved;
  return std::nullopt;
}

FBState::FBState(const AngleData& data) : n_(data.size()), reach_((data.size() + 1) / 2) {
  if (n_ < 3) {
    throw InconsistentInput("angle data describes " + std::to_string(n_) +
                            " vertices, need at least 3");
  }
  degree_.resize(static_cast<std::size_t>(n_));
  tables_.resize(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    const VertexAngles& v = data.vertices[static_cast<std::size_t>(i)];
    if (v.degree < 2 || v.degree > n_ - 1) {
      throw InconsistentInput("degree " + std::to_string(v.degree) + at_vertex(i) +
                              " outside [2, n-1]");
    }
    degree_[i] = v.degree;
    try {
      tables_[i] = PrefixTable(v.gaps, static_cast<std::size_t>(v.degree));
    } catch (const InvalidAngleSequence& e) {
      throw InconsistentInput(e.what() + at_vertex(i));
    }
  }

  const std::size_t cells = static_cast<std::size_t>(n_) * static_cast<std::size_t>(reach_);
  forward_.assign(cells, 0);
  backward_.assign(cells, 0);
  forward_count_.assign(static_cast<std::size_t>(n_), 1);
  backward_count_.assign(static_cast<std::size_t>(n_), 1);
  last_forward_.resize(static_cast<std::size_t>(n_));
  first_backward_.resize(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    forward_[slot(i, 1)] = 1;
    backward_[slot(i, 1)] = degree_[i];
    last_forward_[i] = wrap(i + 1);
    first_backward_[i] = wrap(i - 1);
  }
}

bool FBState::record_visible(int i, int j) {
  const int d = wrap(static_cast<long long>(j) - i);
  if (d == 0 || d > reach_) {
    throw PreconditionViolated("pair (" + std::to_string(i) + ", " + std::to_string(j) +
                               ") is not within the examined separation");
  }
  if (forward_[slot(i, d)] != 0) return false;
  const int forward = forward_count_[i] + 1;
  const int backward = degree_[j] - backward_count_[j];
  if (forward > degree_[i]) {
    throw InconsistentInput("more visible vertices identified than the degree" + at_vertex(i));
  }
  if (backward < 1) {
    throw InconsistentInput("more visible vertices identified than the degree" + at_vertex(j));
  }
  forward_[slot(i, d)] = forward;
  backward_[slot(j, d)] = backward;
  ++forward_count_[i];
  ++backward_count_[j];
  last_forward_[i] = j;
  first_backward_[j] = i;
  return true;
}

FBState init_state(const AngleData& data) { return FBState(data); }

WitnessAngles witness_sum(const FBState& state, int i, int j, int l) {
  const int n = state.vertex_count();
  if (i < 0 || j < 0 || l < 0 || i >= n || j >= n || l >= n) {
    throw InvalidIndex("witness triple outside [0, n)");
  }
  const int span = state.wrap(static_cast<long long>(j) - i);
  const int offset = state.wrap(static_cast<long long>(l) - i);
  if (offset < 1 || offset >= span) {
    throw PreconditionViolated("candidate " + std::to_string(l) + " is not strictly between " +
                               std::to_string(i) + " and " + std::to_string(j));
  }
  const int rank_i_l = state.forward_rank(i, l);
  const int rank_j_l = state.backward_rank(j, l);
  const int rank_l_j = state.forward_rank(l, j);
  const int rank_l_i = state.backward_rank(l, i);
  if (rank_i_l == 0 || rank_j_l == 0 || rank_l_j == 0 || rank_l_i == 0) {
    throw PreconditionViolated("candidate " + std::to_string(l) +
                               " is not identified as visible to both ends");
  }

  const int first_unknown = state.forward_count(i) + 1;
  if (first_unknown > state.degree(i) || rank_i_l >= first_unknown) {
    throw InconsistentInput("forward ranks exhausted" + at_vertex(i));
  }
  const int last_unknown = state.degree(j) - state.backward_count(j);
  if (last_unknown < 1 || last_unknown >= rank_j_l) {
    throw InconsistentInput("backward ranks exhausted" + at_vertex(j));
  }
  if (rank_l_j >= rank_l_i) {
    throw InconsistentInput("forward and backward ranks cross" + at_vertex(l));
  }

  return {
      state.angles(i).span_unchecked(static_cast<std::size_t>(rank_i_l),
                                     static_cast<std::size_t>(first_unknown)),
      state.angles(j).span_unchecked(static_cast<std::size_t>(last_unknown),
                                     static_cast<std::size_t>(rank_j_l)),
      state.angles(l).span_unchecked(static_cast<std::size_t>(rank_l_j),
                                     static_cast<std::size_t>(rank_l_i)),
  };
}

double WitnessCheck::deviation() const noexcept { return std::abs(angles.sum() - kPi); }

Reconstruction reconstruct_original(const AngleData& data, const ReconstructOptions& options) {
  Reconstruction out{boundary_graph(data.size()), FBState(data), {}};
  FBState& state = out.state;
  WitnessJudge judge(options, out.stats);
  const int n = state.vertex_count();
  const int last = last_separation(state, options);

  for (int k = 2; k <= last; ++k) {
    for (int i = 0; i < n; ++i) {
      const int j = state.wrap(i + k);
      for (int step = 1; step < k; ++step) {
        const int l = state.wrap(i + step);
        ++out.stats.candidate_checks;
        if (state.forward_rank(i, l) == 0 || state.backward_rank(j, l) == 0) continue;
        if (judge(state, i, j, l)) {
          if (state.record_visible(i, j)) out.graph.add_edge(i, j);
          break;
        }
      }
    }
  }
  return out;
}

Reconstruction reconstruct_improved(const AngleData& data, const ReconstructOptions& options) {
  Reconstruction out{boundary_graph(data.size()), FBState(data), {}};
  FBState& state = out.state;
  WitnessJudge judge(options, out.stats);
  const int n = state.vertex_count();
  const int last = last_separation(state, options);

  for (int k = 2; k <= last; ++k) {
    for (int i = 0; i < n; ++i) {
      const int j = state.wrap(i + k);
      ++out.stats.candidate_checks;
      const int candidate = state.last_forward(i);
      if (state.backward_rank(j, candidate) == 0) continue;
      if (judge(state, i, j, candidate)) {
        if (state.record_visible(i, j)) out.graph.add_edge(i, j);
      }
    }
  }
  return out;
}

Reconstruction reconstruct(const AngleData& data, Algorithm algorithm,
                           const ReconstructOptions& options) {
  return algorithm == Algorithm::Original ? reconstruct_original(data, options)
                                          : reconstruct_improved(data, options);
}

double angle_sum_tolerance(int n) { return 1e-9 * n; }

}  // namespace polyrecon
