// Places one module next to two existing ones and prints the contour and the
// chosen center.
#include <iostream>
#include <vector>

#include "rcplace/rcplace.hpp"

int main() {
    using namespace rcplace;
    const ChipConfig chip{16, 12};
    const std::vector<PlacedModule> modules{PlacedModule::at_units(5, 5, 3, 3), PlacedModule::at_units(10, 0, 6, 4)};

    PlacementRequest req;
    req.w = 4;
    req.h = 2;
    for (const PlacedModule& m : modules) req.demands.push_back({m.center_x(), m.center_y(), 2});
    req.demands.push_back({Half::units(0), Half{chip.height}, 1});

    const ExpandedScene scene = to_internal(chip, modules, req);
    const Contour contour = find_contour_segments(scene);
    std::cout << "contour segments (doubled coordinates):\n";
    for (const Segment& s : contour.vertical) std::cout << "  V " << s.from << " - " << s.to << "\n";
    for (const Segment& s : contour.horizontal) std::cout << "  H " << s.from << " - " << s.to << "\n";

    const PlacementResult res = place(chip, modules, req);
    if (res.placed())
        std::cout << "center (" << res.x << ", " << res.y << "), cost " << res.cost << ", " << res.candidates
                  << " candidates\n";
    else
        std::cout << "rejected\n";
}
