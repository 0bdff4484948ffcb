#ifndef PSCBSC_CHANNEL_HPP
#define PSCBSC_CHANNEL_HPP

#include <vector>

#include "pscbsc/gf2.hpp"

namespace pscbsc {

// p = (1 - cos(theta))/2, the BSC error rate dual to PSC(theta).
double dual_parameter(double theta);

// theta = acos(1 - 2p), inverse of dual_parameter on [0, 1/2].
double theta_from_p(double p);

// Optimal single-use two-state discrimination error, (1 - sin(theta))/2.
double helstrom_error(double theta);

// Per-bit channel parameters: PSC angles theta_i in [0, pi/2] and their
// dual BSC error rates p_i = (1 - cos(theta_i))/2.
class ChannelVector {
  public:
    static ChannelVector from_thetas(std::vector<double> thetas);
    static ChannelVector from_ps(std::vector<double> ps);
    static ChannelVector uniform_theta(double theta, int n);
    static ChannelVector uniform_p(double p, int n);

    int n() const { return static_cast<int>(thetas_.size()); }
    double theta(int i) const { return thetas_[static_cast<std::size_t>(i)]; }
    double p(int i) const { return ps_[static_cast<std::size_t>(i)]; }
    double cos_theta(int i) const { return 1.0 - 2.0 * ps_[static_cast<std::size_t>(i)]; }
    const std::vector<double>& thetas() const { return thetas_; }
    const std::vector<double>& ps() const { return ps_; }

    bool uniform() const;       // all p_i equal
    ChannelVector with_p(int i, double p) const;

  private:
    ChannelVector(std::vector<double> thetas, std::vector<double> ps);
    std::vector<double> thetas_;
    std::vector<double> ps_;
};

// Overlap between the all-zeros output state and the state for message g:
// product of cos(theta_i) over the support of c_g = g * G_code.
double overlap(const CodePair& pair, const ChannelVector& ch, Word g);

// Probability that the BSC error pattern equals e.
double bsc_prob(const ChannelVector& ch, Word e);

// All 2^n error pattern probabilities, indexed by the bit mapping.
std::vector<double> error_prob_table(const ChannelVector& ch);

}  // namespace pscbsc

#endif
