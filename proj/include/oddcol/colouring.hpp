#ifndef ODDCOL_COLOURING_HPP
#define ODDCOL_COLOURING_HPP

#include "oddcol/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace oddcol
{

using Colour = int;
inline constexpr Colour unassigned = 0;

/// Vertex colouring with palette [1, k]; 0 marks an uncoloured vertex.
struct Colouring {
    int k = 0;
    std::vector<Colour> colour;

    Colouring() = default;
    Colouring(int n, int palette) : k(palette), colour(n, unassigned) {}

    int order() const { return static_cast<int>(colour.size()); }
    bool assigned(Vertex v) const { return colour[v] != unassigned; }

    bool total() const
    {
        return std::none_of(colour.begin(), colour.end(), [](Colour c) { return c == unassigned; });
    }

    /// Number of distinct colours actually used.
    int used() const
    {
        std::vector<char> seen(k + 1, 0);
        int count = 0;
        for (Colour c : colour)
            if (c != unassigned && !seen[c]) {
                seen[c] = 1;
                ++count;
            }
        return count;
    }

    /// Throws std::invalid_argument if a colour lies outside [0, k].
    void check_range() const
    {
        for (Colour c : colour)
            if (c < 0 || c > k)
                throw std::invalid_argument("colour outside palette");
    }

    bool operator==(const Colouring &) const = default;
};

} // namespace oddcol

#endif // ODDCOL_COLOURING_HPP
