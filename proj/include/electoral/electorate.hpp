#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "point.hpp"
#include "rng.hpp"

namespace electoral {

// One axis-aligned Gaussian cluster of a mixture electorate.
struct MixtureComponent {
    double weight = 0.0;
    Point2 mean;
    Point2 std;  // per-axis standard deviation
};

struct Electorate {
    std::vector<Point2> voters;
    std::vector<int> component_of;  // mixture component behind each voter
    std::uint64_t seed = 0;
};

inline void validate_components(const std::vector<MixtureComponent>& components) {
    if (components.empty())
        throw std::invalid_argument("electorate: no mixture components");
    double total = 0.0;
    for (const MixtureComponent& c : components) {
        if (!(c.weight > 0.0))
            throw std::invalid_argument("electorate: component weight must be positive");
        if (!(c.std.x1 > 0.0) || !(c.std.x2 > 0.0))
            throw std::invalid_argument("electorate: component std must be positive");
        total += c.weight;
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw std::invalid_argument("electorate: component weights must sum to 1");
}

// Samples n voters from the mixture.  The stream order per voter is fixed:
// one uniform selects the component, then Box-Muller pairs propose (x1, x2)
// until the point lands inside the unit square.  Rejection keeps boundary
// mass from piling up; after 1000 failed proposals the last one is clamped.
inline Electorate sample_electorate(const std::vector<MixtureComponent>& components, int n,
                                    std::uint64_t seed) {
    validate_components(components);
    if (n < 1) throw std::invalid_argument("sample_electorate: n must be >= 1");

    Electorate out;
    out.seed = seed;
    out.voters.reserve(n);
    out.component_of.reserve(n);

    Rng rng(seed);
    for (int i = 0; i < n; ++i) {
        double u = rng.uniform();
        std::size_t ci = 0;
        double cum = 0.0;
        for (; ci + 1 < components.size(); ++ci) {
            cum += components[ci].weight;
            if (u < cum) break;
        }
        const MixtureComponent& c = components[ci];

        Point2 v;
        bool inside = false;
        for (int attempt = 0; attempt < 1000 && !inside; ++attempt) {
            auto [z1, z2] = rng.gaussian_pair();
            v = {c.mean.x1 + c.std.x1 * z1, c.mean.x2 + c.std.x2 * z2};
            inside = in_unit_square(v);
        }
        if (!inside) {
            v.x1 = std::clamp(v.x1, 0.0, 1.0);
            v.x2 = std::clamp(v.x2, 0.0, 1.0);
        }
        out.voters.push_back(v);
        out.component_of.push_back(static_cast<int>(ci));
    }
    return out;
}

}  // namespace electoral
