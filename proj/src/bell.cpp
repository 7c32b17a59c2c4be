#include "ncprob/bell.hpp"

#include <cmath>
#include <stdexcept>

namespace ncprob {

SpinObservable spin_observable(double theta, double phi)
{
    SpinObservable s;
    s.theta = theta;
    s.phi = phi;
    double n1 = std::sin(theta) * std::cos(phi);
    double n2 = std::sin(theta) * std::sin(phi);
    double n3 = std::cos(theta);
    s.matrix = {{{CScalar(n3), CScalar(n1, -n2)},
                 {CScalar(n1, n2), CScalar(-n3)}}};
    CScalar e = std::exp(CScalar(0, -phi));
    double c = std::cos(theta / 2), sn = std::sin(theta / 2);
    s.psi = {c * e, CScalar(sn)};
    s.omega = {sn * e, CScalar(-c)};
    return s;
}

Ket ket_plus() { return {CScalar(1), CScalar(0)}; }

CScalar inner(const Ket &a, const Ket &b)
{
    return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
}

Ket apply_matrix(const Mat2 &m, const Ket &k)
{
    return {m[0][0] * k[0] + m[0][1] * k[1], m[1][0] * k[0] + m[1][1] * k[1]};
}

namespace {

void walk(const Ket &state, double p, const std::vector<double> &thetas,
          std::size_t i, std::string &outcome,
          std::map<std::string, double> &out)
{
    if (i == thetas.size()) {
        out[outcome] = p;
        return;
    }
    SpinObservable s = spin_observable(thetas[i], 0.0);
    double pp = std::norm(inner(s.psi, state));
    outcome.push_back('+');
    walk(s.psi, p * pp, thetas, i + 1, outcome, out);
    outcome.back() = '-';
    walk(s.omega, p * (1.0 - pp), thetas, i + 1, outcome, out);
    outcome.pop_back();
}

} // namespace

std::map<std::string, double> sequential_probs(const Ket &start,
                                               const std::vector<double> &thetas)
{
    double n = std::norm(start[0]) + std::norm(start[1]);
    if (std::abs(n - 1.0) > kBellTolerance)
        throw std::invalid_argument("start state is not unit-norm");
    std::map<std::string, double> out;
    std::string outcome;
    walk(start, 1.0, thetas, 0, outcome, out);
    return out;
}

double total_probability_defect(double theta1, double theta2, double theta3)
{
    auto with = sequential_probs(ket_plus(), {theta1, theta2, theta3});
    auto without = sequential_probs(ket_plus(), {theta1, theta3});
    return (with["+++"] + with["+-+"]) - without["++"];
}

std::array<std::array<double, 2>, 2> bell_joint(double theta1, double theta2)
{
    double s2 = std::sin((theta1 - theta2) / 2);
    double c2 = std::cos((theta1 - theta2) / 2);
    double same = 0.5 * s2 * s2;
    double diff = 0.5 * c2 * c2;
    return {{{same, diff}, {diff, same}}};
}

double bell_correlation(double theta1, double theta2)
{
    return -std::cos(theta1 - theta2);
}

namespace {

double sin2_half(double x)
{
    double s = std::sin(x / 2);
    return s * s;
}

} // namespace

double bell_factor(const BellAngles &a)
{
    return sin2_half(a.theta1p - a.theta2p) + sin2_half(a.theta1 - a.theta2p) +
           sin2_half(a.theta1p - a.theta2) - sin2_half(a.theta1 - a.theta2);
}

ClassicalBound classical_bound()
{
    ClassicalBound out;
    out.minimum = 4;
    for (unsigned bits = 0; bits < 16; ++bits) {
        int ar = (bits & 1) ? 1 : -1;
        int an = (bits & 2) ? 1 : -1;
        int br = (bits & 4) ? 1 : -1;
        int bn = (bits & 8) ? 1 : -1;
        int v = (an == bn) + (ar == bn) + (an == br) - (ar == br);
        out.values[bits] = v;
        if (v < out.minimum) {
            out.minimum = v;
            out.argmin.clear();
        }
        if (v == out.minimum)
            out.argmin.push_back({ar, an, br, bn});
    }
    return out;
}

namespace {

// counter-based splitmix64 stream keyed by (seed, trial)
struct TrialRng {
    std::uint64_t state;

    TrialRng(std::uint64_t seed, std::uint64_t trial)
        : state(seed ^ (trial * 0x9E3779B97F4A7C15ull +
                        0xD1B54A32D192ED03ull))
    {
    }

    std::uint64_t next()
    {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    double uniform() { return (next() >> 11) * 0x1.0p-53; }
};

} // namespace

GameRecord simulate_game(const BellAngles &a, std::uint64_t trials,
                         std::uint64_t seed)
{
    if (trials < 1)
        throw std::invalid_argument("trials must be >= 1");
    const double alice[2] = {a.theta1, a.theta1p};
    const double bob[2] = {a.theta2, a.theta2p};
    GameRecord rec;
    rec.trials = trials;
    for (std::uint64_t t = 0; t < trials; ++t) {
        TrialRng rng(seed, t);
        std::uint64_t cards = rng.next();
        unsigned ca = cards & 1;
        unsigned cb = (cards >> 1) & 1;
        auto table = bell_joint(alice[ca], bob[cb]);
        double u = rng.uniform();
        // outcomes in the fixed order (+,+),(+,-),(-,+),(-,-)
        bool agree;
        if (u < table[0][0])
            agree = true;
        else if (u < table[0][0] + table[0][1])
            agree = false;
        else if (u < table[0][0] + table[0][1] + table[1][0])
            agree = false;
        else
            agree = true;
        ++rec.plays[ca][cb];
        if (agree)
            ++rec.agreements[ca][cb];
    }
    double p[2][2];
    double var = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            double n = static_cast<double>(rec.plays[i][j]);
            p[i][j] = n == 0 ? 0.0 : static_cast<double>(rec.agreements[i][j]) / n;
            if (n > 0)
                var += p[i][j] * (1.0 - p[i][j]) / n;
        }
    rec.empirical_factor = p[1][1] + p[0][1] + p[1][0] - p[0][0];
    rec.standard_error = std::sqrt(var);
    return rec;
}

} // namespace ncprob
