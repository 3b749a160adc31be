#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <span>

#include "rualloc/params.hpp"

namespace rualloc {

/// Linear SINR needed to carry `bits` over one RU under the Shannon-threshold
/// decoding model: 2^(bits/q) - 1.
inline double snr_threshold(double bits, const SystemParams& p) {
  assert(bits >= 0);
  return std::exp2(bits / p.symbols_per_ru()) - 1.0;
}

/// Mean SNR of a device at distance d on a channel with interference factor
/// lambda: Gamma_T * d^-alpha / Lambda_c.
inline double mean_snr(double distance_m, double interf_factor, const SystemParams& p) {
  assert(distance_m > 0 && interf_factor >= 1.0);
  return p.transmit_snr * std::pow(distance_m, -p.pathloss_exp) / interf_factor;
}

/// Probability that `bits` on a single RU are decoded, under exponential
/// fading: exp(-threshold / mean SNR).
inline double decode_prob(double bits, double distance_m, double interf_factor,
                          const SystemParams& p) {
  return std::exp(-snr_threshold(bits, p) / mean_snr(distance_m, interf_factor, p));
}

/// Minimum RU count for a device to deliver the packet on one channel with
/// reliability rho, splitting bits equally. Closed form with a one-step guard
/// against the exact-boundary case where the ceiling lands on equality.
inline int min_rus(double distance_m, double interf_factor, const SystemParams& p) {
  const double snr = mean_snr(distance_m, interf_factor, p);
  const double denom = std::log2(1.0 - std::log(p.reliability) * snr);
  assert(denom > 0);
  const double raw = p.packet_bits / p.symbols_per_ru() / denom;
  int r = std::max(1, static_cast<int>(std::ceil(raw)));
  while (!(decode_prob(p.packet_bits / r, distance_m, interf_factor, p) > p.reliability)) ++r;
  return r;
}

/// Packet success when all RUs sit on one channel: fading and interference are
/// identical across them, so only the largest per-RU load matters.
inline double same_channel_packet_prob(std::span<const double> bits_per_ru, double distance_m,
                                       double interf_factor, const SystemParams& p) {
  assert(!bits_per_ru.empty());
  const double worst = *std::max_element(bits_per_ru.begin(), bits_per_ru.end());
  return decode_prob(worst, distance_m, interf_factor, p);
}

}  // namespace rualloc
