#ifndef ZDQFT_ENGINE_HPP
#define ZDQFT_ENGINE_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "zdqft/bipoly.hpp"
#include "zdqft/model.hpp"

namespace zdqft {

/// Raised when a model's pairing sum cannot be bounded: some truncated
/// coefficient would be an infinite (divergent) sum of diagrams, which exact
/// arithmetic cannot represent.
class FinitenessError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// The partition function Z (or its logarithm) truncated to the rectangle
/// eps degree <= eps_order, g degree <= g_order. Every stored coefficient is
/// an exact, finite rational.
struct PartitionSeries {
    BiPoly table;
    unsigned eps_order = 0;
    unsigned g_order = 0;

    Rational coeff(unsigned eps_deg, unsigned g_deg) const {
        if (eps_deg > eps_order || g_deg > g_order)
            throw std::out_of_range("PartitionSeries: coefficient outside truncation rectangle");
        return table.coeff(eps_deg, g_deg);
    }

    friend bool operator==(const PartitionSeries& a, const PartitionSeries& b) {
        return a.table == b.table && a.eps_order == b.eps_order && a.g_order == b.g_order;
    }
};

/// Largest pairing index K whose terms can still land inside the truncation
/// rectangle; every k > K contributes only beyond it. g_order = nullopt means
/// the g axis is not truncated and provides no bound. Throws FinitenessError
/// when no axis bounds K (the genuinely divergent case).
unsigned legs_bound(const ModelSpec& model, unsigned eps_order,
                    std::optional<unsigned> g_order);

unsigned pairing_bound(const ModelSpec& model, unsigned eps_order, unsigned g_order);

/// Z = exp(sum_m L_m/m! d^m/dx^m) exp(sum_n V_n x^n/n!) at x = 0, evaluated
/// as the pairing sum_k k! a_k b_k of the two exponentials' coefficients,
/// truncated to (eps_order, g_order).
PartitionSeries partition_function(const ModelSpec& model, unsigned eps_order, unsigned g_order);

/// ln Z, the connected-diagram generating function. (The physics free energy
/// is -ln Z; the positive sign keeps connected counts positive.)
PartitionSeries free_energy(const PartitionSeries& z);

/// Inverse of free_energy: exponential of a series with zero constant term.
PartitionSeries exp_series(const PartitionSeries& c);

/// S(n,k) read off the partitions model as n! [eps^n g^k] Z.
std::vector<std::vector<Integer>> stirling_coefficients(unsigned n_max);

}  // namespace zdqft

#endif
