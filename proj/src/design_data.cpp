#include "gramsey/construct.hpp"

namespace gramsey {
namespace detail {

// Perfect K4 packing of K_25, developed from a two-block difference family
// over Z5 x Z5 (base blocks {00,01,10,22} and {00,02,13,32}).
const std::vector<std::array<Vertex, 4>>& design25_blocks() {
    static const std::vector<std::array<Vertex, 4>> blocks = {
        {0, 1, 5, 12},    {0, 2, 8, 17},    {0, 3, 6, 15},    {0, 4, 9, 11},
        {0, 7, 20, 21},   {0, 10, 13, 16},  {0, 14, 22, 24},  {0, 18, 19, 23},
        {1, 2, 6, 13},    {1, 3, 9, 18},    {1, 4, 7, 16},    {1, 8, 21, 22},
        {1, 10, 20, 23},  {1, 11, 14, 17},  {1, 15, 19, 24},  {2, 3, 7, 14},
        {2, 4, 5, 19},    {2, 9, 22, 23},   {2, 10, 12, 18},  {2, 11, 21, 24},
        {2, 15, 16, 20},  {3, 4, 8, 10},    {3, 5, 23, 24},   {3, 11, 13, 19},
        {3, 12, 20, 22},  {3, 16, 17, 21},  {4, 6, 20, 24},   {4, 12, 14, 15},
        {4, 13, 21, 23},  {4, 17, 18, 22},  {5, 6, 10, 17},   {5, 7, 13, 22},
        {5, 8, 11, 20},   {5, 9, 14, 16},   {5, 15, 18, 21},  {6, 7, 11, 18},
        {6, 8, 14, 23},   {6, 9, 12, 21},   {6, 16, 19, 22},  {7, 8, 12, 19},
        {7, 9, 10, 24},   {7, 15, 17, 23},  {8, 9, 13, 15},   {8, 16, 18, 24},
        {9, 17, 19, 20},  {10, 11, 15, 22}, {10, 14, 19, 21}, {11, 12, 16, 23},
        {12, 13, 17, 24}, {13, 14, 18, 20},
    };
    return blocks;
}

// Perfect K4 packing of K_28, one-rotational over Z3^3 with a fixed point 27:
// short orbit {27,x,x+9,x+18} plus two full-orbit base blocks.
const std::vector<std::array<Vertex, 4>>& design28_blocks() {
    static const std::vector<std::array<Vertex, 4>> blocks = {
        {0, 1, 3, 13},    {0, 2, 5, 12},    {0, 4, 11, 25},   {0, 6, 7, 10},
        {0, 8, 16, 21},   {0, 9, 18, 27},   {0, 14, 15, 22},  {0, 17, 19, 23},
        {0, 20, 24, 26},  {1, 2, 4, 14},    {1, 5, 9, 26},    {1, 6, 17, 22},
        {1, 7, 8, 11},    {1, 10, 19, 27},  {1, 12, 16, 23},  {1, 15, 20, 21},
        {1, 18, 24, 25},  {2, 3, 10, 24},   {2, 6, 8, 9},     {2, 7, 15, 23},
        {2, 11, 20, 27},  {2, 13, 17, 21},  {2, 16, 18, 22},  {2, 19, 25, 26},
        {3, 4, 6, 16},    {3, 5, 8, 15},    {3, 7, 14, 19},   {3, 9, 17, 25},
        {3, 11, 22, 26},  {3, 12, 21, 27},  {3, 18, 20, 23},  {4, 5, 7, 17},
        {4, 8, 12, 20},   {4, 9, 23, 24},   {4, 10, 15, 26},  {4, 13, 22, 27},
        {4, 18, 19, 21},  {5, 6, 13, 18},   {5, 10, 21, 25},  {5, 11, 16, 24},
        {5, 14, 23, 27},  {5, 19, 20, 22},  {6, 11, 12, 19},  {6, 14, 20, 25},
        {6, 15, 24, 27},  {6, 21, 23, 26},  {7, 9, 13, 20},   {7, 12, 18, 26},
        {7, 16, 25, 27},  {7, 21, 22, 24},  {8, 10, 14, 18},  {8, 13, 19, 24},
        {8, 17, 26, 27},  {8, 22, 23, 25},  {9, 10, 12, 22},  {9, 11, 14, 21},
        {9, 15, 16, 19},  {10, 11, 13, 23}, {10, 16, 17, 20}, {11, 15, 17, 18},
        {12, 13, 15, 25}, {12, 14, 17, 24}, {13, 14, 16, 26},
    };
    return blocks;
}

}  // namespace detail
}  // namespace gramsey
