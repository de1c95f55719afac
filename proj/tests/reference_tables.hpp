#pragma once

#include <map>
#include <sstream>
#include <string>

#include "gorenstein/resolution.hpp"

namespace gor::testing_reference {

// The sixteen tables in the usual text layout: label, then rows 0..4 with
// columns i = 0..4 and "." for zero.
inline const char* kTables = R"(
CGKK 1
1 . . . .
. 6 8 3 .
. . . . .
. 3 8 6 .
. . . . 1
CGKK 2
1 . . . .
. 5 5 . .
. 1 . 1 .
. . 5 5 .
. . . . 1
CGKK 3
1 . . . .
. 4 . . .
. . 6 . .
. . . 4 .
. . . . 1
CGKK 4
1 . . . .
. 3 . . .
. 4 12 4 .
. . . 3 .
. . . . 1
CGKK 5,6
1 . . . .
. 3 2 . .
. 6 12 6 .
. . 2 3 .
. . . . 1
CGKK 7,8
1 . . . .
. 2 . . .
. 8 18 8 .
. . . 2 .
. . . . 1
CGKK 9,10
1 . . . .
. 1 . . .
. 12 24 12 .
. . . 1 .
. . . . 1
CGKK 11
1 . . . .
. . . . .
. 16 30 16 .
. . . . .
. . . . 1
Type 2.1
1 . . . .
. 2 1 . .
. 9 18 9 .
. . 1 2 .
. . . . 1
Type 2.2
1 . . . .
. 3 1 . .
. 5 12 5 .
. . 1 3 .
. . . . 1
Type 2.3
1 . . . .
. 4 3 . .
. 3 6 3 .
. . 3 4 .
. . . . 1
Type 2.4
1 . . . .
. 4 2 . .
. 2 6 2 .
. . 2 4 .
. . . . 1
Type 2.5
1 . . . .
. 3 3 1 .
. 7 14 7 .
. 1 3 3 .
. . . . 1
Type 2.6
1 . . . .
. 4 4 1 .
. 4 8 4 .
. 1 4 4 .
. . . . 1
Type 2.7
1 . . . .
. 5 5 1 .
. 1 2 1 .
. 1 5 5 .
. . . . 1
Type 2.8
1 . . . .
. 5 6 2 .
. 2 4 2 .
. 2 6 5 .
. . . . 1
)";

inline std::map<std::string, BettiTable> reference_tables() {
    std::map<std::string, BettiTable> out;
    std::istringstream in(kTables);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::string label = line;
        BettiTable T(4);
        for (int r = 0; r < 5; ++r) {
            std::getline(in, line);
            std::istringstream row(line);
            std::string cell;
            for (int i = 0; i < 5; ++i) {
                row >> cell;
                if (cell != ".") T.set(i, i + r, std::stoll(cell));
            }
        }
        out[label] = T;
    }
    return out;
}

}  // namespace gor::testing_reference
