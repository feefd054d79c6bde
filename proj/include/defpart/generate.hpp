#ifndef DEFPART_GENERATE_HPP
#define DEFPART_GENERATE_HPP

#include <cstdint>
#include <random>
#include <string>

#include "defpart/graph.hpp"

namespace defpart {

/// Seeded generator with explicit output mappings so results do not
/// depend on the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t next() { return eng_(); }
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    int next_below(int n) { return n > 0 ? static_cast<int>(next() % static_cast<std::uint64_t>(n)) : 0; }

private:
    std::mt19937_64 eng_;
};

Graph path_graph(int n);
Graph cycle_graph(int n);      // n >= 3
Graph complete_graph(int n);
Graph petersen_graph();

Graph gnp(int n, double p, std::uint64_t seed);

/// Configuration-model rejection sampling; GenerationFailed when n*r is
/// odd, r >= n, or the attempt cap is hit.
Graph random_regular(int n, int r, std::uint64_t seed);

/// gnp followed by one pass over triples (u < v < w) in lexicographic
/// order, deleting edge (v, w) from each triangle met. Deletions never
/// create triangles, so one pass leaves the graph triangle-free.
Graph triangle_free_gnp(int n, double p, std::uint64_t seed);

/// Parses generator specs of the CLI form: gnp:n,p  cycle:n  path:n
/// complete:n  petersen  regular:n,r  trifree:n,p
Graph generate_from_spec(const std::string& spec, std::uint64_t seed);

}  // namespace defpart

#endif
