#pragma once

#include <string>

#include "rr/numeric.hpp"

namespace rr {

// Aggregated transfer matrix for level sequences avoiding the full forbidden
// window set over q levels. States group levels by their role inside a
// window, which compresses the q^2 pair states down to q + 1 while keeping
// the spectral radius, and with it the per-cell growth rate.
Matrix level_adjacency(unsigned q);

// Aggregated 6-state transfer matrix for 4-ary words avoiding the ten
// forbidden windows; its spectral radius is the per-symbol growth rate.
Matrix symbol_adjacency();

// Characteristic polynomial of an integer matrix, leading coefficient first,
// computed exactly. Entries must be within 1e-9 of integers.
std::vector<BigInt> characteristic_polynomial(const Matrix& a);

// Asymptotic per-cell capacities, in message bits per log2(q) written bits.
struct CapacityRecord {
    double levels = 0.0;        // ideal code over the full forbidden set
    double binary_2d = 0.0;     // two-dimensional page coding bound
    double binary_1d = 0.0;     // one page coded against both-ends-0 windows
    double quaternary_1d = 0.0; // two pages coded as 4-ary symbols
    double gap_percent = 0.0;   // (levels - binary_1d) / levels * 100
};
CapacityRecord capacities(unsigned q);

// Constructive figures at codeword length m: normalized rate, adder-count
// proxy for complexity, and write latency in bit-times.
double rate_2d(unsigned q);
double rate_binary_1d(unsigned q, unsigned m);
double rate_quaternary_1d(unsigned q, unsigned m);
double efficiency_2d();
double efficiency_binary_1d(unsigned q, unsigned m);
double efficiency_quaternary_1d(unsigned q, unsigned m);
double write_latency(unsigned q, unsigned m);

struct MinLengthResult {
    bool achievable = false;
    unsigned m = 0;
    unsigned message_bits = 0;
    double rate = 0.0;
    double efficiency = 0.0;
    double latency = 0.0;
};

// Smallest codeword length whose normalized rate reaches the target, or
// achievable = false when the target exceeds the asymptotic limit.
MinLengthResult min_binary_length_for_rate(unsigned q, double target);
MinLengthResult min_quaternary_length_for_rate(unsigned q, double target);

// Per-symbol probabilities of the entropy-maximizing stationary process on
// the pair-state graph of a window constraint.
std::vector<double> maxentropic_symbol_probabilities(const Matrix& pair_matrix,
                                                     unsigned alphabet);
std::vector<double> binary_symbol_probabilities();     // {P(0), P(1)}
std::vector<double> quaternary_symbol_probabilities(); // {P(0), P(1), P(a), P(a^2)}

// Stationary per-level probabilities when the coded page(s) follow the
// maxentropic law and all uncoded pages are uniform.
std::vector<double> level_probabilities_binary(unsigned q);
std::vector<double> level_probabilities_quaternary(unsigned q);
std::vector<double> level_probabilities_uncoded(unsigned q);

// Reference tables: 1 = asymptotic capacities, 2 = rates and complexity at
// fixed lengths, 3 = shortest lengths meeting rate targets.
std::string render_table(int which);

} // namespace rr
