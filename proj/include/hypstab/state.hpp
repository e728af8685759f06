#pragma once

#include <cstdint>
#include <vector>

#include "hypstab/grid.hpp"
#include "hypstab/model.hpp"

namespace hypstab {

// Cell averages of the characteristic variables at one time level.
// Indices 1..J are interior cells; 0 and J+1 are ghost values that are only
// meaningful after a boundary closure.
struct StateField {
    std::vector<double> u_plus;
    std::vector<double> u_minus;
    std::int64_t step = 0;

    StateField() = default;
    explicit StateField(int num_cells)
        : u_plus(static_cast<std::size_t>(num_cells) + 2, 0.0),
          u_minus(static_cast<std::size_t>(num_cells) + 2, 0.0) {}

    int num_cells() const { return static_cast<int>(u_plus.size()) - 2; }
};

enum class InitialData {
    ModelDefault,  // wave: constant; euler / saint-venant: their reference profiles
    Constant,      // wave only: U+ = -0.5, U- = 0.5
    Perturbed,     // wave only: constant plus (1/4pi) sin(2 pi x)
};

const char* to_string(InitialData v);

// Fills interior cells with the model's initial profile evaluated at the cell
// centres; ghost values are left at zero (unset until a boundary closure).
// With center_data the interior spatial mean of each component is subtracted.
StateField initial_data(const Model& model, const Discretization& d,
                        InitialData variant = InitialData::ModelDefault,
                        bool center_data = false);

}  // namespace hypstab
