#include "pscbsc/channel.hpp"

#include <cmath>
#include <numbers>

namespace pscbsc {

namespace {
constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kAngleSlack = 1e-12;
}  // namespace

double dual_parameter(double theta) {
    if (!(theta >= -kAngleSlack && theta <= kHalfPi + kAngleSlack))
        throw OutOfRange("theta must lie in [0, pi/2]");
    return (1.0 - std::cos(theta)) / 2.0;
}

double theta_from_p(double p) {
    if (!(p >= 0.0 && p <= 0.5)) throw OutOfRange("p must lie in [0, 1/2]");
    return std::acos(1.0 - 2.0 * p);
}

double helstrom_error(double theta) {
    if (!(theta >= -kAngleSlack && theta <= kHalfPi + kAngleSlack))
        throw OutOfRange("theta must lie in [0, pi/2]");
    return (1.0 - std::sin(theta)) / 2.0;
}

ChannelVector::ChannelVector(std::vector<double> thetas, std::vector<double> ps)
    : thetas_(std::move(thetas)), ps_(std::move(ps)) {}

ChannelVector ChannelVector::from_thetas(std::vector<double> thetas) {
    std::vector<double> ps(thetas.size());
    for (std::size_t i = 0; i < thetas.size(); ++i) ps[i] = dual_parameter(thetas[i]);
    return ChannelVector(std::move(thetas), std::move(ps));
}

ChannelVector ChannelVector::from_ps(std::vector<double> ps) {
    std::vector<double> thetas(ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i) thetas[i] = theta_from_p(ps[i]);
    return ChannelVector(std::move(thetas), std::move(ps));
}

ChannelVector ChannelVector::uniform_theta(double theta, int n) {
    return from_thetas(std::vector<double>(static_cast<std::size_t>(n), theta));
}

ChannelVector ChannelVector::uniform_p(double p, int n) {
    return from_ps(std::vector<double>(static_cast<std::size_t>(n), p));
}

bool ChannelVector::uniform() const {
    for (std::size_t i = 1; i < ps_.size(); ++i)
        if (ps_[i] != ps_[0]) return false;
    return true;
}

ChannelVector ChannelVector::with_p(int i, double p) const {
    std::vector<double> ps = ps_;
    ps[static_cast<std::size_t>(i)] = p;
    return from_ps(std::move(ps));
}

double overlap(const CodePair& pair, const ChannelVector& ch, Word g) {
    if (ch.n() != pair.n()) throw DimensionMismatch("channel length differs from n");
    if (pair.k() < 64 && (g >> pair.k()))
        throw DimensionMismatch("message has bits beyond k");
    const Word c = mul_vec(g, pair.gen_code());
    double prod = 1.0;
    for (int i = 0; i < pair.n(); ++i)
        if ((c >> i) & 1u) prod *= ch.cos_theta(i);
    return prod;
}

double bsc_prob(const ChannelVector& ch, Word e) {
    if (ch.n() < 64 && (e >> ch.n()))
        throw DimensionMismatch("error pattern has bits beyond n");
    double prod = 1.0;
    for (int i = 0; i < ch.n(); ++i)
        prod *= ((e >> i) & 1u) ? ch.p(i) : 1.0 - ch.p(i);
    return prod;
}

std::vector<double> error_prob_table(const ChannelVector& ch) {
    std::vector<double> t{1.0};
    t.reserve(std::size_t{1} << ch.n());
    for (int i = 0; i < ch.n(); ++i) {
        const std::size_t half = t.size();
        t.resize(half * 2);
        for (std::size_t e = 0; e < half; ++e) {
            t[half + e] = t[e] * ch.p(i);
            t[e] *= 1.0 - ch.p(i);
        }
    }
    return t;
}

}  // namespace pscbsc
