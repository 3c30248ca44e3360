// Turns a straight run of nine unit moves into two unit squares separated
// by a one-unit gap, then prints the string and its ascii rendering.
#include <iostream>

#include "qu/qu.hpp"

int main() {
    const qu::QuString line = qu::parse(".1+{9}");
    const qu::TransformPattern squares = qu::TransformPattern::from_text("2+1-2-1+1+o1+2+1-2-");
    const qu::QuString shape = qu::shape_transform(line, squares);

    std::cout << "line    : " << qu::print(line) << '\n';
    std::cout << "squares : " << qu::print(shape) << "\n\n";
    std::cout << qu::render_ascii(qu::to_shape(shape));
    return 0;
}
