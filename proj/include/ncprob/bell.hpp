#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ncprob {

using CScalar = std::complex<double>;
using Ket = std::array<CScalar, 2>;
using Mat2 = std::array<std::array<CScalar, 2>, 2>;

inline constexpr double kBellTolerance = 1e-12;

// Spin measurement along the direction (theta, phi) in spherical coordinates,
// with its +1/-1 eigenvectors.
struct SpinObservable {
    double theta;
    double phi;
    Mat2 matrix;
    Ket psi;   // eigenvalue +1
    Ket omega; // eigenvalue -1
};

SpinObservable spin_observable(double theta, double phi);

Ket ket_plus(); // the |+1> basis state

CScalar inner(const Ket &a, const Ket &b); // conjugate-linear in a
Ket apply_matrix(const Mat2 &m, const Ket &k);

// Probabilities of every +/- outcome sequence for successive measurements of
// sigma_{theta,0}, with projection of the state after each one. Keys are
// strings like "+-+".
std::map<std::string, double> sequential_probs(const Ket &start,
                                               const std::vector<double> &thetas);

// [P(+,+,+) + P(+,-,+)] - P(+,.,+): the middle measurement is summed out on
// the left and omitted on the right. Nonzero in general.
double total_probability_defect(double theta1, double theta2, double theta3);

struct BellAngles {
    double theta1;
    double theta1p;
    double theta2;
    double theta2p;
};

// Joint outcome table for the singlet pair measured along theta1 and theta2;
// index 0 is outcome +1, index 1 is outcome -1.
std::array<std::array<double, 2>, 2> bell_joint(double theta1, double theta2);

// E(A.B) = -cos(theta1 - theta2)
double bell_correlation(double theta1, double theta2);

// sin^2((t1'-t2')/2) + sin^2((t1-t2')/2) + sin^2((t1'-t2)/2)
//   - sin^2((t1-t2)/2); can be negative, classically it cannot.
double bell_factor(const BellAngles &a);

// Deterministic local strategy: answers (A_R, A_N, B_R, B_N), each +/-1.
struct ClassicalBound {
    int minimum; // over the 16 deterministic strategies, always 0
    std::vector<std::array<int, 4>> argmin;
    std::array<int, 16> values; // indexed by the 4 answer bits
};

ClassicalBound classical_bound();

struct GameRecord {
    std::uint64_t trials = 0;
    // indexed by [alice card][bob card], card 0 = R (unprimed angle)
    std::array<std::array<std::uint64_t, 2>, 2> plays{};
    std::array<std::array<std::uint64_t, 2>, 2> agreements{};
    double empirical_factor = 0.0;
    double standard_error = 0.0;

    bool operator==(const GameRecord &) const = default;
};

// Monte-Carlo Bell game: per trial the referee draws two fair cards, the
// outcomes follow bell_joint at the selected angles. Randomness is keyed by
// (seed, trial), so the record is bit-reproducible and order-independent.
GameRecord simulate_game(const BellAngles &a, std::uint64_t trials,
                         std::uint64_t seed);

} // namespace ncprob
