// Smallest odd-m example: n=3, k=1, m=1. The origin of the line V_Y lands
// exactly on the projected point Z_2, a 0-cell shared by the two segments
// S(1,2) and S(2,3); deduplication counts it once and the crossing number
// matches the closed form.

#include "ampli/ampli.hpp"

#include <iostream>

int main() {
    using namespace ampli;
    PositiveZ z = sample_vandermonde_z(3, 1, 1, {Rational(1), Rational(2), Rational(3)});
    GrassmannC c = sample_positive_c(1, 3, {Rational(1)});
    TwistorContext ctx = make_context(std::move(z), std::move(c));

    for (int i = 1; i <= 3; ++i)
        std::cout << "<Y," << i << "> = " << rational_to_string(twistor(ctx, {i})) << "\n";

    CrossingResult result = crossing_number(ctx);
    std::cout << "crossing count = " << result.count << " (formula "
              << crossing_formula(1, 1) << ")\n";
    std::cout << "degenerate hit: " << (result.degenerate ? "yes" : "no") << "\n";
    for (const IndexList& cell : result.cells_hit) {
        std::cout << "cell {";
        for (size_t i = 0; i < cell.size(); ++i) std::cout << (i ? " " : "") << cell[i];
        std::cout << "}\n";
    }
    return 0;
}
