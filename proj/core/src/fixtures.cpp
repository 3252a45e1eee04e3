#include <stdexcept>

#include "fano/tu.hpp"

namespace fano {

IntMatrix fixture(const std::string& name) {
    if (name == "R10") {
        return IntMatrix{{1, 0, 0, 0, 0},
                         {0, 1, 0, 0, 0},
                         {0, 0, 1, 0, 0},
                         {0, 0, 0, 1, 0},
                         {0, 0, 0, 0, 1},
                         {-1, 1, 0, 0, 1},
                         {1, -1, 1, 0, 0},
                         {0, 1, -1, 1, 0},
                         {0, 0, 1, -1, 1},
                         {1, 0, 0, 1, -1}};
    }
    if (name == "K33dual") {
        return IntMatrix{{0, 1, -1, -1},
                         {0, -1, 1, 0},
                         {-1, 0, 1, 0},
                         {-1, 1, 0, 1},
                         {1, 0, 0, 0},
                         {0, 1, 0, 0},
                         {0, 0, 1, 0},
                         {0, 0, 0, 1}};
    }
    if (name == "K5dual") {
        return IntMatrix{{0, 0, 1, 0, -1, 1},
                         {0, 1, 0, -1, 0, -1},
                         {-1, 0, 0, 1, 1, 0},
                         {1, -1, -1, 0, 0, 0},
                         {1, 0, 0, 0, 0, 0},
                         {0, 1, 0, 0, 0, 0},
                         {0, 0, 1, 0, 0, 0},
                         {0, 0, 0, 1, 0, 0},
                         {0, 0, 0, 0, 1, 0},
                         {0, 0, 0, 0, 0, 1}};
    }
    if (name == "example1") {
        return IntMatrix{{-1, 1, 0, 1},
                         {1, 0, 1, -1},
                         {0, -1, 0, 0},
                         {1, -1, 0, 0},
                         {0, 0, 1, -1},
                         {0, 0, -1, 0}};
    }
    if (name == "example2") {
        // Unique 4-dimensional USFP that is not an SFPdG; its row matroid is
        // M*(K3,3).
        return IntMatrix{{0, 1, -1, 1},
                         {0, 0, -1, 0},
                         {1, -1, 1, 0},
                         {0, 1, 0, 1},
                         {0, 0, 0, -1},
                         {-1, 0, 0, 0},
                         {-1, 1, 0, 0},
                         {0, -1, 0, 0},
                         {1, -1, 1, -1}};
    }
    if (name == "example3") {
        return IntMatrix{{-1, -1, 0, 0, 0, 0},
                         {-1, 0, -1, 0, 0, 1},
                         {0, -1, 0, -1, -1, -1},
                         {0, 0, -1, -1, 0, 0},
                         {0, 0, 0, 0, 0, 1},
                         {0, 0, 0, 0, 1, 0},
                         {0, 0, 0, 1, 0, 0},
                         {0, 0, 1, 0, 0, 0},
                         {0, 1, 0, 0, 0, 0},
                         {1, 0, 0, 0, 0, 0},
                         {1, 1, 1, 1, 1, 0}};
    }
    throw std::invalid_argument("fixture: unknown name: " + name);
}

}  // namespace fano
