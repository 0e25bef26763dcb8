#pragma once

#include <cstddef>
#include <stdexcept>

#include "toric/diagram.hpp"
#include "toric/laurent.hpp"

namespace toric {

inline constexpr std::size_t default_homfly_budget = 2'000'000;

/// Thrown when the skein recursion visits more than its node budget.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(std::size_t nodes)
        : std::runtime_error("HOMFLY-PT node budget exceeded after " + std::to_string(nodes) + " nodes"),
          nodes_(nodes) {}
    std::size_t nodes() const { return nodes_; }

private:
    std::size_t nodes_;
};

/// HOMFLY-PT polynomial in (v, z), normalised by P(unknot) = 1 and
///   v^-1 P(L+) - v P(L-) = z P(L0).
/// Budget counts distinct connected diagrams expanded by the skein tree.
LaurentPoly2 homfly(const LinkDiagram& d, std::size_t budget = default_homfly_budget);

/// (v^-1 - v) / z, the factor contributed by each extra split unknot.
LaurentPoly2 homfly_unlink_factor();

/// Alexander polynomial of a knot diagram, symmetric with value 1 at t = 1.
LaurentPoly1 alexander(const LinkDiagram& d);

/// Alexander polynomial of the (p, q)-torus knot from
///   (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)).
LaurentPoly1 alexander_torus(int p, int q);

/// Half the signed count of crossings between the two components.
int linking_number(const LinkDiagram& d);

}  // namespace toric
