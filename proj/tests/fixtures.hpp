#pragma once

#include "cyclemax/permanent.hpp"

#include <array>
#include <string_view>

namespace fixture {

// A + I for C5(2), Gamma_2 labelling, two vertices per part.
inline constexpr std::array<std::string_view, 10> c5_2_rows{
    "1000111100",
    "0100111100",
    "0010001111",
    "0001001111",
    "1100100011",
    "1100010011",
    "1111001000",
    "1111000100",
    "0011110010",
    "0011110001",
};

inline cyclemax::DenseMatrix01 c5_2_matrix()
{
    cyclemax::DenseMatrix01 a(10);
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j)
            a(i, j) = c5_2_rows[i][j] == '1';
    return a;
}

}
