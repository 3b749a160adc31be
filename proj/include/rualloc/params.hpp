#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace rualloc {

/// Physical and protocol constants of the uplink system. Defaults match the
/// reference deployment: 15 kHz subcarriers, 180 kHz channels, 0.144 ms slots,
/// 100-bit packets, 70-slot cycles with a 35-slot latency budget.
struct SystemParams {
  double subcarrier_spacing_hz = 15e3;
  double slot_duration_s = 0.144e-3;
  double channel_bandwidth_hz = 180e3;
  double transmit_snr = 1e10;      // linear; 100 dB
  double pathloss_exp = 3.0;
  double max_interference = 4.0;   // Y_M: interferers add up to Y_M * N0 noise
  double packet_bits = 100.0;
  int cycle_slots = 70;            // T
  int delay_slots = 35;            // Delta
  double reliability = 0.99999;    // rho
  int pairing_limit = 15;          // M_T: max issue-time distance for pairing
  double area_radius_m = 50.0;

  /// Symbol budget of one RU: q = B * tau.
  double symbols_per_ru() const { return channel_bandwidth_hz * slot_duration_s; }

  void set_transmit_snr_db(double db) { transmit_snr = std::pow(10.0, db / 10.0); }
  double transmit_snr_db() const { return 10.0 * std::log10(transmit_snr); }

  void validate() const {
    if (!(symbols_per_ru() > 0)) throw std::invalid_argument("symbols per RU must be positive");
    if (!(reliability > 0 && reliability < 1)) throw std::invalid_argument("reliability must lie in (0,1)");
    if (delay_slots < 1 || delay_slots > cycle_slots)
      throw std::invalid_argument("delay budget must lie in [1, cycle_slots]");
    if (pairing_limit < 0 || pairing_limit > delay_slots)
      throw std::invalid_argument("pairing limit must lie in [0, delay_slots]");
    if (!(transmit_snr > 0)) throw std::invalid_argument("transmit SNR must be positive");
    if (max_interference < 0) throw std::invalid_argument("max interference must be non-negative");
    if (!(packet_bits >= 1)) throw std::invalid_argument("packet size must be at least one bit");
    if (!(area_radius_m > 0)) throw std::invalid_argument("area radius must be positive");
  }
};

/// A transmitter: id, distance from the access point, and the slot (1..T) at
/// which its packet is issued in every cycle.
struct Device {
  int id = 0;
  double distance_m = 0.0;
  int issue_slot = 1;
  int delay_slots = 0;  // per-device delay budget; 0 means "use SystemParams"

  int delay_budget(const SystemParams& p) const {
    return delay_slots > 0 ? delay_slots : p.delay_slots;
  }
};

/// A frequency channel with its external-interference factor
/// Lambda_c = 1 + Y_c, Y_c in [0, Y_M].
struct Channel {
  int id = 0;
  double interference_factor = 1.0;
};

inline void validate_device(const Device& d, const SystemParams& p) {
  if (!(d.distance_m > 0)) throw std::invalid_argument("device distance must be positive");
  if (d.issue_slot < 1 || d.issue_slot > p.cycle_slots)
    throw std::invalid_argument("issue slot out of cycle range");
}

inline void validate_channel(const Channel& c, const SystemParams& p) {
  if (c.interference_factor < 1.0 || c.interference_factor > 1.0 + p.max_interference)
    throw std::invalid_argument("interference factor out of [1, 1+Y_M]");
}

}  // namespace rualloc
