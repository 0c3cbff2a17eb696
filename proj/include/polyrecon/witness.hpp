#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polyrecon/geom.hpp"
#include "polyrecon/model.hpp"

namespace polyrecon {

/// Sums within this distance of pi certify a triangle witness.
inline constexpr double kWitnessTolerance = kAngleTolerance;

/// Rejected sums closer to pi than this are reported as near misses.
inline constexpr double kNearMissBound = 10.0 * kWitnessTolerance;

enum class Algorithm { Original, Improved };

std::string_view to_string(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view name);

/// Bookkeeping shared by both triangle-witness drivers.
///
/// For each vertex i, the forward table holds the CCW visibility rank of the
/// vertices identified so far on ch(v_{i+1}, v_{i+k}) and the backward table
/// the ranks on ch(v_{i-k}, v_{i-1}); zero means "not identified". Ranks are
/// only ever recorded for targets within ceil(n/2) steps, so each table keeps
/// just that many slots, addressed by boundary distance.
class FBState {
 public:
  /// Throws InconsistentInput for structurally invalid data (n < 3, a degree
  /// outside [2, n-1], or an unusable angle sequence).
  explicit FBState(const AngleData& data);

  [[nodiscard]] int vertex_count() const noexcept { return n_; }
  /// ceil(n/2): the largest boundary separation examined.
  [[nodiscard]] int reach() const noexcept { return reach_; }
  [[nodiscard]] int wrap(long long i) const noexcept { return wrap_index(i, n_); }

  [[nodiscard]] int degree(int i) const { return degree_[i]; }
  [[nodiscard]] const PrefixTable& angles(int i) const { return tables_[i]; }

  /// F[i][target]; 0 when not identified or out of range.
  [[nodiscard]] int forward_rank(int i, int target) const noexcept {
    const int d = wrap(static_cast<long long>(target) - i);
    return d == 0 || d > reach_ ? 0 : forward_[slot(i, d)];
  }
  /// B[i][target]; 0 when not identified or out of range.
  [[nodiscard]] int backward_rank(int i, int target) const noexcept {
    const int d = wrap(static_cast<long long>(i) - target);
    return d == 0 || d > reach_ ? 0 : backward_[slot(i, d)];
  }

  /// L_i: number of identified forward entries.
  [[nodiscard]] int forward_count(int i) const { return forward_count_[i]; }
  /// I_i: last vertex recorded in F[i].
  [[nodiscard]] int last_forward(int i) const { return last_forward_[i]; }
  /// L'_i: number of identified backward entries.
  [[nodiscard]] int backward_count(int i) const { return backward_count_[i]; }
  /// I'_i: first (in CCW order) vertex recorded in B[i].
  [[nodiscard]] int first_backward(int i) const { return first_backward_[i]; }

  /// Records that v_i sees v_j with j = i + k: F[i][j] = L_i + 1 and
  /// B[j][i] = deg(v_j) - L'_j, then advances the counters. Returns false
  /// (and changes nothing) when F[i][j] is already set. Throws
  /// InconsistentInput when either rank would leave [1, deg].
  bool record_visible(int i, int j);

 private:
  [[nodiscard]] std::size_t slot(int i, int distance) const noexcept {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(reach_) +
           static_cast<std::size_t>(distance - 1);
  }

  int n_ = 0;
  int reach_ = 0;
  std::vector<int> degree_;
  std::vector<PrefixTable> tables_;
  std::vector<std::int32_t> forward_;
  std::vector<std::int32_t> backward_;
  std::vector<int> forward_count_;
  std::vector<int> last_forward_;
  std::vector<int> backward_count_;
  std::vector<int> first_backward_;
};

/// Initial state: boundary neighbours recorded in both tables.
FBState init_state(const AngleData& data);

/// The three angles of the witness test for the pair (v_i, v_j) and a
/// candidate v_l strictly between them:
///   up_i  = angle at v_i from v_l to the first unidentified visible vertex,
///   up_j  = angle at v_j from the last unidentified visible vertex to v_l,
///   at_l  = angle at v_l from v_j to v_i.
struct WitnessAngles {
  double up_i = 0.0;
  double up_j = 0.0;
  double at_l = 0.0;

  [[nodiscard]] double sum() const noexcept { return up_i + up_j + at_l; }
};

/// Throws PreconditionViolated when v_l is not identified as visible to both
/// ends, and InconsistentInput when a derived rank falls outside its table.
WitnessAngles witness_sum(const FBState& state, int i, int j, int l);

/// One evaluated witness test.
struct WitnessCheck {
  int i = 0;
  int j = 0;
  int l = 0;
  WitnessAngles angles;
  bool accepted = false;

  [[nodiscard]] double deviation() const noexcept;  // |sum - pi|
};

struct ReconstructStats {
  /// Candidate vertices examined (one per pair for the improved driver).
  std::uint64_t candidate_checks = 0;
  /// Candidates visible to both ends, i.e. sums actually evaluated.
  std::uint64_t witness_evaluations = 0;
  double max_accepted_deviation = 0.0;
  double min_rejected_deviation = std::numeric_limits<double>::infinity();
  /// Rejections with deviation in (kWitnessTolerance, kNearMissBound].
  std::uint64_t near_misses = 0;
  /// The first few near misses, for diagnostics.
  std::vector<WitnessCheck> near_miss_samples;
};

struct ReconstructOptions {
  /// Stop after this separation (0 = run to ceil(n/2)).
  int last_separation = 0;
  /// Called for every evaluated witness test.
  std::function<void(const WitnessCheck&)> observer;
};

struct Reconstruction {
  VisibilityGraph graph;
  FBState state;
  ReconstructStats stats;
};

/// Triangle-witness algorithm that scans every candidate on the chain.
Reconstruction reconstruct_original(const AngleData& data, const ReconstructOptions& options = {});

/// Improved algorithm: only the last identified visible vertex of v_i is a
/// candidate, so each pair costs O(1).
Reconstruction reconstruct_improved(const AngleData& data, const ReconstructOptions& options = {});

Reconstruction reconstruct(const AngleData& data, Algorithm algorithm,
                           const ReconstructOptions& options = {});

/// Outcome of the consistency check.
struct ConsistencyReport {
  bool consistent = true;
  std::string stage;   // "structure", "reconstruction", "tables", "round-trip"
  std::string detail;
  int vertex = -1;     // offending vertex, when one is known

  [[nodiscard]] std::string summary() const;
};

/// Structural checks on the data, a reconstruction, a check that the final
/// tables rank every vertex's fan exactly, and an embed/re-measure round trip
/// compared angle by angle within kRoundTripAngleTolerance.
ConsistencyReport detect_inconsistency(const AngleData& data);

inline constexpr double kRoundTripAngleTolerance = 1e-6;

/// Absolute tolerance for the (n-2)pi angle-sum identity.
double angle_sum_tolerance(int n);

}  // namespace polyrecon
