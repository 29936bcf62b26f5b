#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "merid/localization.hpp"
#include "merid/protocol.hpp"

namespace merid {

struct GridSpec {
    double x0;       // coordinate of bin 0, m
    double dx;       // step, m
    std::size_t n;   // bins, power of two
};

/// Sampled state on a uniform axis: complex amplitudes psi(x) or, after
/// probability(), a real density. Momentum grids carry ascending p.
struct PatternGrid {
    double x0 = 0.0;
    double dx = 0.0;
    double t = 0.0;
    bool momentum_space = false;
    bool is_probability = false;
    std::vector<std::complex<double>> amp;

    std::size_t size() const { return amp.size(); }
    double axis(std::size_t i) const { return x0 + dx * static_cast<double>(i); }
    double span() const { return dx * static_cast<double>(amp.size()); }
    /// Total probability (sum of |psi|^2 dx, or of the density itself).
    double norm() const;
    /// |psi|^2 (or the stored density).
    std::vector<double> values() const;
    double mean() const;
    double variance() const;
};

/// Grid big enough to resolve the slits and fringes and to hold the
/// envelope through the whole t2 flight (step <= min(sigma_d, x_f)/8,
/// span >= 8x the final envelope).
GridSpec recommend_grid(double sigma, double d, double chi, double phi_total, double mass,
                        double t2);

/// Post-measurement superposition: two Gaussians of width sigma_d at +-d/2
/// under the exp(-x^2/4 sigma^2) envelope with the quadratic phase
/// phi_total (x/sigma)^2, normalized on the grid.
PatternGrid double_slit_state(double sigma, double d, double chi, double phi_total,
                              const GridSpec& grid);

/// Unitary transform to the momentum representation, p = 2 pi hbar j / (N dx).
PatternGrid momentum_distribution(const PatternGrid& g);

/// Exact free flight exp(-i p^2 t / 2 m hbar) in the transform domain.
/// Throws DomainError when the envelope would outgrow the grid.
PatternGrid free_propagate(const PatternGrid& g, double t, double mass);

/// Element-wise |psi|^2.
PatternGrid probability(const PatternGrid& g);

/// Decoheres a position density: its transform is multiplied by the
/// solution-kernel factor F(p, 0, t). Norm is preserved (F(0)=1).
PatternGrid apply_localization_to_pattern(const PatternGrid& density,
                                          const CompositeModel& models, double t, double mass);
PatternGrid apply_localization_to_pattern(const PatternGrid& density,
                                          const LocalizationModel& model, double t, double mass);

/// Slit -> free flight -> decoherence for the whole plan.
PatternGrid simulate_pattern(const ProtocolPlan& plan, const SphereSpec& sphere,
                             const TrapSpec& trap, const CompositeModel& models,
                             double phi_total = 0.0);

/// Fringe contrast: twice the Fourier amplitude of the density at spatial
/// period x_f over its DC component; ~1 for a full-contrast pattern in the
/// deep-overlap regime. nullopt when no fringe component is measurable.
std::optional<double> extract_visibility(const PatternGrid& density, double x_f_hint);

/// Positions of local maxima above `rel_threshold` times the global peak.
std::vector<double> detect_peaks(const PatternGrid& density, double rel_threshold = 0.05);

}  // namespace merid
