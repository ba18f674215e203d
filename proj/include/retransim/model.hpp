#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace retransim {

/// Propagation state of a single link.
enum class LinkState { Los, Nlos };

/// LOS-probability model. Umi is the ITU-R UMi form; the single-slope
/// reductions pin the link state and are mainly useful for closed-form checks.
enum class LosModel { Umi, AlwaysNlos, AlwaysLos };

/// Dual-slope LOS/NLOS path-loss parameters.
struct PathLossParams {
    double alpha_los = 2.09;   ///< LOS exponent
    double alpha_nlos = 3.75;  ///< NLOS exponent (>= alpha_los)
    double phi_los = 1.0;      ///< LOS intercept
    double phi_nlos = 1.0;     ///< NLOS intercept
    double d0 = 6.0;           ///< near-field distance [m]
    double d1 = 12.0;          ///< far-field distance [m]
    LosModel los_model = LosModel::Umi;

    void validate() const;
    double alpha(LinkState s) const { return s == LinkState::Los ? alpha_los : alpha_nlos; }
    double phi(LinkState s) const { return s == LinkState::Los ? phi_los : phi_nlos; }
};

/// Full parameter tuple of the bipolar network.
/// Transmit power and the equal per-stream split cancel in every SIR
/// (interference-limited regime) and are deliberately absent.
struct SystemParams {
    double lambda_density = 1e-3;  ///< transmitters per m^2
    double activity = 0.6;         ///< transmission probability p in (0,1]
    double link_distance = 10.0;   ///< transmitter-receiver separation r [m]
    int streams = 4;               ///< multiplexing gain S
    int tx_antennas = 16;
    int rx_antennas = 16;
    int block_length = 1;          ///< B-IR block length T
    double rate_threshold = 2.0;   ///< decoding threshold [nat/sec/Hz]
    PathLossParams path_loss;

    /// per-stream diversity order S' = N^r - S + 1
    int diversity_order() const { return rx_antennas - streams + 1; }
    void validate() const;
};

/// LOS probability at distance x; Umi form min{D0/x,1}(1-e^{-x/D1})+e^{-x/D1},
/// continuous, equal to 1 on [0, D0].
double los_probability(double x, const PathLossParams& plp);

/// phi * x^{-alpha} for the given state. Rejects x = 0 (singular).
double path_loss_gain(double x, LinkState state, const PathLossParams& plp);

/// Bernoulli draw of the link state with success probability los_probability(x).
template <class Rng>
LinkState sample_link_state(double x, const PathLossParams& plp, Rng& rng)
{
    const double pl = los_probability(x, plp);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    return u01(rng) < pl ? LinkState::Los : LinkState::Nlos;
}

}  // namespace retransim
