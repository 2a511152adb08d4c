#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mouldlab/operad.hpp"
#include "mouldlab/series.hpp"
#include "mouldlab/trees.hpp"

namespace mouldlab {

// Chord between polygon vertices a < b. Vertices are 0..n; (0, n) is the
// base and (i-1, i) is side i.
struct Diagonal {
    int a, b;
    auto operator<=>(const Diagonal &) const = default;
};

bool crosses(const Diagonal &d, const Diagonal &e);

// Non-crossing plant on the (n+1)-gon: denominator and numerator chords.
// The chord lists are kept sorted, which is the canonical form.
class Plant {
public:
    Plant(int n, std::vector<Diagonal> denominators, std::vector<Diagonal> numerators = {});
    static Plant parse_json(std::string_view text);

    int degree() const { return n_; }
    const std::vector<Diagonal> &denominators() const { return den_; }
    const std::vector<Diagonal> &numerators() const { return num_; }
    bool has_denominator(int a, int b) const;
    bool has_numerator(int a, int b) const;
    bool is_based() const { return has_denominator(0, n_); }
    bool is_tree() const { return num_.empty(); }

    std::string to_json() const;
    auto operator<=>(const Plant &) const = default;

private:
    int n_;
    std::vector<Diagonal> den_, num_;
};

enum class PlantKind { I, II, III };

// Bounded faces of the denominator graph, each as its increasing vertex cycle.
std::vector<std::vector<int>> bounded_faces(const Plant &p);
bool is_valid_plant(const Plant &p);
// Empty when valid, otherwise the first violated condition.
std::string plant_defect(const Plant &p);
PlantKind plant_kind(const Plant &p);

// Unit plant (degree 1) and the three degree-2 generators.
Plant unit_plant();
Plant left_plant();  // psi = 1/(u1 u12)
Plant right_plant(); // psi = 1/(u12 u2)
Plant assoc_plant(); // psi = 1/(u1 u2)

// Generated recursively from the three kinds, deduplicated, sorted.
std::vector<Plant> enumerate_plants(int n, bool based_only = false);
// Every role assignment of every chord, filtered by is_valid_plant.
std::vector<Plant> enumerate_plants_brute_force(int n, bool based_only = false);

MouldComponent psi_plant(const Plant &p);

Plant graft(const Plant &f, const Plant &g, int i);

std::vector<int> peeling_points(const Plant &p);
std::vector<int> border_leaves(const Plant &p);

enum class Generator { Left, Right, Assoc };
Plant generator_plant(Generator g);
std::string generator_name(Generator g);

struct Decomposition {
    Plant rest;
    Generator delta;
    int index;
};
// P = graft(rest, delta, index) at the leftmost peeling point.
Decomposition decompose(const Plant &p);
// Same, peeling at a chosen peeling point v.
Decomposition decompose_at(const Plant &p, int v);

// Polygon rotation realizing the push: psi(push) = sign * psi(rotated).
struct RotatedPlant {
    Plant plant;
    int sign;
};
RotatedPlant rotate_plant(const Plant &p);

struct PlantSeries {
    PowerSeries all;   // P
    PowerSeries based; // Q
};
// Solves P = Q/(1-Q), Q = sum_{k>=3} (k+1)(k-2)/2 Q^k + x(1+P)^2.
PlantSeries plant_counts_series(unsigned order);

struct ConjectureEntry {
    Plant tree;
    Expansion expansion;
    bool multiplicity_free;
    bool is_interval;
};
// Every plant without numerators of degree n, expanded in the tree basis.
std::vector<ConjectureEntry> tamari_interval_conjecture_check(int n);

// sum over binary trees of psi(T) == 1/(u1...un)
bool hille_identity_check(int n);

} // namespace mouldlab
