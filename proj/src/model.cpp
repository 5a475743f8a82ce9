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

#include "vecc/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace vecc {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

bool finite_non_negative(double v) { return std::isfinite(v) && v >= 0.0; }
bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }

OverheadBreakdown weigh(double time_s, double energy_j, const Weights& w) {
  return {time_s, energy_j,
          w.time_weight() * time_s + w.energy_weight() * energy_j};
}

}  // namespace

ComputeTask::ComputeTask(double input_bits, double compute_units,
                         double deadline_s)
    : input_bits_(input_bits),
      compute_units_(compute_units),
      deadline_s_(deadline_s) {
  require(finite_non_negative(input_bits), "task input_bits must be >= 0");
  require(finite_non_negative(compute_units), "task compute_units must be >= 0");
  require(finite_positive(deadline_s), "task deadline must be > 0");
}

ComputeProfile::ComputeProfile(double local_speed, double energy_per_unit,
                               double edge_speed)
    : local_speed_(local_speed),
      energy_per_unit_(energy_per_unit),
      edge_speed_(edge_speed) {
  require(finite_positive(local_speed), "local_speed must be > 0");
  require(finite_non_negative(energy_per_unit), "energy_per_unit must be >= 0");
  require(finite_positive(edge_speed), "edge_speed must be > 0");
}

Weights::Weights(double time_weight, double energy_weight)
    : time_weight_(time_weight), energy_weight_(energy_weight) {
  require(time_weight >= 0.0 && time_weight <= 1.0, "time_weight outside [0, 1]");
  require(energy_weight >= 0.0 && energy_weight <= 1.0,
          "energy_weight outside [0, 1]");
  require(std::abs(time_weight + energy_weight - 1.0) <= 1e-12,
          "time_weight + energy_weight must equal 1");
}

RadioLink::RadioLink(double tx_power_w, double channel_gain,
                     double noise_power_w, int carriers, double rb_bandwidth_hz,
                     double tail_energy_j)
    : tx_power_(tx_power_w),
      channel_gain_(channel_gain),
      noise_power_(noise_power_w),
      carriers_(carriers),
      rb_bandwidth_(rb_bandwidth_hz),
      tail_energy_(tail_energy_j) {
  require(finite_positive(tx_power_w), "tx_power must be > 0");
  require(finite_positive(channel_gain), "channel_gain must be > 0");
  require(finite_positive(noise_power_w), "noise_power must be > 0");
  require(carriers >= 1, "carriers must be >= 1");
  require(finite_positive(rb_bandwidth_hz), "rb_bandwidth must be > 0");
  require(finite_non_negative(tail_energy_j), "tail_energy must be >= 0");
  require(finite_positive(snr()), "snr must be > 0");
}

double RadioLink::spectral_efficiency() const {
  return std::log1p(snr()) / std::numbers::ln2;
}

double RadioLink::rate_per_rb() const {
  return carriers_ * rb_bandwidth_ * spectral_efficiency();
}

OverheadBreakdown local_overhead(const ComputeTask& task,
                                 const ComputeProfile& profile,
                                 const Weights& w) {
  const double time_s = task.compute_units() / profile.local_speed();
  const double energy_j = profile.energy_per_unit() * task.compute_units();
  return weigh(time_s, energy_j, w);
}

double uplink_rate(const RadioLink& link, std::int64_t rb_count) {
  if (rb_count < 0) throw std::invalid_argument("rb_count must be >= 0");
  if (rb_count == 0) return 0.0;
  return static_cast<double>(rb_count) * link.rate_per_rb();
}

OverheadBreakdown offload_overhead_continuous(const ComputeTask& task,
                                              const ComputeProfile& profile,
                                              const RadioLink& link,
                                              const Weights& w,
                                              double rb_count) {
  if (!(rb_count > 0.0)) {
    throw std::invalid_argument("offload overhead needs a positive RB count");
  }
  const double rate = rb_count * link.rate_per_rb();
  const double transmit_s = task.input_bits() / rate;
  const double execute_s = task.compute_units() / profile.edge_speed();
  const double energy_j =
      task.input_bits() * link.tx_power() / rate + link.tail_energy();
  return weigh(transmit_s + execute_s, energy_j, w);
}

OverheadBreakdown offload_overhead(const ComputeTask& task,
                                   const ComputeProfile& profile,
                                   const RadioLink& link, const Weights& w,
                                   std::int64_t rb_count) {
  if (rb_count < 1) {
    throw std::invalid_argument(
        "offload overhead is undefined for fewer than one resource block");
  }
  return offload_overhead_continuous(task, profile, link, w,
                                     static_cast<double>(rb_count));
}

}  // namespace vecc
