// Encodes integer samples of y = x^2 as a QU string, decodes them back and
// emits an svg drawing on standard output.
#include <iostream>

#include "qu/qu.hpp"

int main() {
    qu::LatticeSample samples;
    for (long long x = 0; x <= 4; ++x) samples.points.push_back({x, x * x});

    const qu::QuString graph = qu::encode_samples(samples);
    std::cerr << "graph   : " << qu::print(graph) << '\n';
    std::cerr << "decoded :";
    for (const auto& p : qu::decode_to_points(graph).points)
        std::cerr << " (" << p.x << "," << p.y << ")";
    std::cerr << '\n';

    std::cout << qu::render_svg(qu::to_shape(graph), {.cell = 16, .margin = 8});
    return 0;
}
