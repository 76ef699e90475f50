// Switches a small hypergraph to its stable form and prints the trajectory.
#include <iostream>

#include "kncover/core.hpp"
#include "kncover/io.hpp"
#include "kncover/switching.hpp"

int main() {
    using namespace kncover;
    Hypergraph h(6, std::vector<std::vector<int>>{{0, 1, 2}, {1, 3, 4}, {2, 3, 5}});
    std::cout << "start:\n" << format_hypergraph(h);
    StabilizeResult st = stabilize(h);
    std::cout << "stable after " << st.steps << " steps:\n" << format_hypergraph(st.result);
    std::cout << "f:";
    for (const auto& f : st.f_trace) std::cout << " " << f.str();
    std::cout << "\nstable: " << (is_stable(st.result) ? "yes" : "no") << "\n";
    return 0;
}
