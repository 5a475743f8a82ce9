// Copyright 2026 The VECC Simulator Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VECC_MODEL_HPP_
#define VECC_MODEL_HPP_

#include <cstdint>

// Domain types and the local / offload overhead model. Every quantity is in
// SI units: bits, cycles, seconds, joules, watts, hertz.
namespace vecc {

/// Bandwidth of one LTE resource block: 12 subcarriers x 15 kHz.
inline constexpr double kResourceBlockHz = 180'000.0;

/// A computation task: input size, required work, and completion deadline.
class ComputeTask {
 public:
  /// Throws std::invalid_argument unless input_bits >= 0,
  /// compute_units >= 0 and deadline_s > 0.
  ComputeTask(double input_bits, double compute_units, double deadline_s);

  double input_bits() const { return input_bits_; }
  double compute_units() const { return compute_units_; }
  double deadline_s() const { return deadline_s_; }

 private:
  double input_bits_;
  double compute_units_;
  double deadline_s_;
};

/// Onboard and edge execution speeds plus the onboard energy cost per cycle.
class ComputeProfile {
 public:
  ComputeProfile(double local_speed, double energy_per_unit, double edge_speed);

  double local_speed() const { return local_speed_; }
  double energy_per_unit() const { return energy_per_unit_; }
  double edge_speed() const { return edge_speed_; }

 private:
  double local_speed_;
  double energy_per_unit_;
  double edge_speed_;
};

/// Time / energy preference. The two weights always sum to one.
class Weights {
 public:
  /// Accepts weights in [0, 1] whose sum is 1 to within 1e-12.
  Weights(double time_weight, double energy_weight);

  static Weights from_time_weight(double time_weight) {
    return Weights(time_weight, 1.0 - time_weight);
  }

  double time_weight() const { return time_weight_; }
  double energy_weight() const { return energy_weight_; }

 private:
  double time_weight_;
  double energy_weight_;
};

/// Uplink radio parameters of one user.
class RadioLink {
 public:
  RadioLink(double tx_power_w, double channel_gain, double noise_power_w,
            int carriers, double rb_bandwidth_hz = kResourceBlockHz,
            double tail_energy_j = 0.0);

  double tx_power() const { return tx_power_; }
  double channel_gain() const { return channel_gain_; }
  double noise_power() const { return noise_power_; }
  int carriers() const { return carriers_; }
  double rb_bandwidth() const { return rb_bandwidth_; }
  double tail_energy() const { return tail_energy_; }

  double snr() const { return tx_power_ * channel_gain_ / noise_power_; }
  /// log2(1 + snr), the spectral efficiency in bit/s/Hz.
  double spectral_efficiency() const;
  /// Rate contributed by one resource block across all carriers.
  double rate_per_rb() const;

 private:
  double tx_power_;
  double channel_gain_;
  double noise_power_;
  int carriers_;
  double rb_bandwidth_;
  double tail_energy_;
};

struct OverheadBreakdown {
  double time_s = 0.0;
  double energy_j = 0.0;
  /// time_weight * time_s + energy_weight * energy_j. Seconds and joules
  /// are added without normalisation.
  double weighted = 0.0;
};

/// Everything needed to evaluate one vehicle's offloading decision.
struct UserParams {
  ComputeTask task;
  ComputeProfile profile;
  RadioLink link;
  Weights weights;
};

OverheadBreakdown local_overhead(const ComputeTask& task,
                                 const ComputeProfile& profile,
                                 const Weights& w);

/// sigma * rb_count * 180 kHz * log2(1 + snr), in bit/s. Zero for no RBs.
double uplink_rate(const RadioLink& link, std::int64_t rb_count);

/// Offload overhead at rb_count resource blocks. Throws
/// std::invalid_argument when rb_count < 1.
OverheadBreakdown offload_overhead(const ComputeTask& task,
                                   const ComputeProfile& profile,
                                   const RadioLink& link, const Weights& w,
                                   std::int64_t rb_count);

/// Offload overhead for a real-valued RB count. Used for the unrounded
/// equilibrium point and by numeric root finding.
OverheadBreakdown offload_overhead_continuous(const ComputeTask& task,
                                              const ComputeProfile& profile,
                                              const RadioLink& link,
                                              const Weights& w,
                                              double rb_count);

inline OverheadBreakdown local_overhead(const UserParams& u) {
  return local_overhead(u.task, u.profile, u.weights);
}
inline OverheadBreakdown offload_overhead(const UserParams& u,
                                          std::int64_t rb_count) {
  return offload_overhead(u.task, u.profile, u.link, u.weights, rb_count);
}

}  // namespace vecc

#endif  // VECC_MODEL_HPP_
