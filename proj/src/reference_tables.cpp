// Published cell values for the 19-level reference histogram, transcribed
// at three decimals. Generated from the printed tables; do not edit by hand.

#include "metdp/worked_example.hpp"

namespace metdp {

const std::vector<ReferenceCell>& reference_scores() {
    static const std::vector<ReferenceCell> cells = {
        {0, 1, 0.000, -1},
        {0, 2, 0.000, -1},
        {0, 3, 0.256, -1},
        {0, 4, 0.404, -1},
        {0, 5, 0.448, -1},
        {0, 6, 0.585, -1},
        {0, 7, 0.806, -1},
        {0, 8, 1.080, -1},
        {0, 9, 1.218, -1},
        {0, 10, 1.308, -1},
        {0, 11, 1.345, -1},
        {0, 12, 1.433, -1},
        {0, 13, 1.607, -1},
        {0, 14, 1.831, -1},
        {0, 15, 2.099, -1},
        {0, 16, 2.255, -1},
        {0, 17, 2.309, -1},
        {0, 18, 2.341, -1},
        {1, 2, 0.000, -1},
        {1, 3, 0.256, -1},
        {1, 4, 0.404, -1},
        {1, 5, 0.448, -1},
        {1, 6, 0.585, -1},
        {1, 7, 0.806, -1},
        {1, 8, 1.080, -1},
        {1, 9, 1.218, -1},
        {1, 10, 1.308, -1},
        {1, 11, 1.345, -1},
        {1, 12, 1.433, -1},
        {1, 13, 1.607, -1},
        {1, 14, 1.831, -1},
        {1, 15, 2.099, -1},
        {1, 16, 2.255, -1},
        {1, 17, 2.309, -1},
        {1, 18, 2.341, -1},
        {2, 3, 0.256, -1},
        {2, 4, 0.404, -1},
        {2, 5, 0.448, -1},
        {2, 6, 0.585, -1},
        {2, 7, 0.806, -1},
        {2, 8, 1.080, -1},
        {2, 9, 1.218, -1},
        {2, 10, 1.308, -1},
        {2, 11, 1.345, -1},
        {2, 12, 1.433, -1},
        {2, 13, 1.607, -1},
        {2, 14, 1.831, -1},
        {2, 15, 2.099, -1},
        {2, 16, 2.255, -1},
        {2, 17, 2.309, -1},
        {2, 18, 2.341, -1},
        {3, 4, 0.256, -1},
        {3, 5, 0.319, -1},
        {3, 6, 0.481, -1},
        {3, 7, 0.699, -1},
        {3, 8, 0.954, -1},
        {3, 9, 1.083, -1},
        {3, 10, 1.169, -1},
        {3, 11, 1.205, -1},
        {3, 12, 1.292, -1},
        {3, 13, 1.463, -1},
        {3, 14, 1.681, -1},
        {3, 15, 1.940, -1},
        {3, 16, 2.090, -1},
        {3, 17, 2.143, -1},
        {3, 18, 2.174, -1},
        {4, 5, 0.173, -1},
        {4, 6, 0.340, -1},
        {4, 7, 0.516, -1},
        {4, 8, 0.732, -1},
        {4, 9, 0.844, -1},
        {4, 10, 0.924, -1},
        {4, 11, 0.959, -1},
        {4, 12, 1.047, -1},
        {4, 13, 1.216, -1},
        {4, 14, 1.426, -1},
        {4, 15, 1.672, -1},
        {4, 16, 1.814, -1},
        {4, 17, 1.865, -1},
        {4, 18, 1.896, -1},
        {5, 6, 0.139, -1},
        {5, 7, 0.271, -1},
        {5, 8, 0.437, -1},
        {5, 9, 0.539, -1},
        {5, 10, 0.626, -1},
        {5, 11, 0.671, -1},
        {5, 12, 0.781, -1},
        {5, 13, 0.971, -1},
        {5, 14, 1.186, -1},
        {5, 15, 1.426, -1},
        {5, 16, 1.562, -1},
        {5, 17, 1.613, -1},
        {5, 18, 1.644, -1},
        {6, 7, 0.201, -1},
        {6, 8, 0.363, -1},
        {6, 9, 0.472, -1},
        {6, 10, 0.568, -1},
        {6, 11, 0.617, -1},
        {6, 12, 0.737, -1},
        {6, 13, 0.933, -1},
        {6, 14, 1.150, -1},
        {6, 15, 1.389, -1},
        {6, 16, 1.525, -1},
        {6, 17, 1.575, -1},
        {6, 18, 1.607, -1},
        {7, 8, 0.249, -1},
        {7, 9, 0.378, -1},
        {7, 10, 0.490, -1},
        {7, 11, 0.545, -1},
        {7, 12, 0.676, -1},
        {7, 13, 0.877, -1},
        {7, 14, 1.093, -1},
        {7, 15, 1.328, -1},
        {7, 16, 1.462, -1},
        {7, 17, 1.512, -1},
        {7, 18, 1.544, -1},
        {8, 9, 0.258, -1},
        {8, 10, 0.391, -1},
        {8, 11, 0.454, -1},
        {8, 12, 0.591, -1},
        {8, 13, 0.788, -1},
        {8, 14, 0.996, -1},
        {8, 15, 1.222, -1},
        {8, 16, 1.351, -1},
        {8, 17, 1.400, -1},
        {8, 18, 1.431, -1},
        {9, 10, 0.230, -1},
        {9, 11, 0.296, -1},
        {9, 12, 0.423, -1},
        {9, 13, 0.595, -1},
        {9, 14, 0.780, -1},
        {9, 15, 0.981, -1},
        {9, 16, 1.097, -1},
        {9, 17, 1.143, -1},
        {9, 18, 1.175, -1},
        {10, 11, 0.158, -1},
        {10, 12, 0.273, -1},
        {10, 13, 0.424, -1},
        {10, 14, 0.589, -1},
        {10, 15, 0.765, -1},
        {10, 16, 0.870, -1},
        {10, 17, 0.918, -1},
        {10, 18, 0.954, -1},
        {11, 12, 0.139, -1},
        {11, 13, 0.271, -1},
        {11, 14, 0.418, -1},
        {11, 15, 0.577, -1},
        {11, 16, 0.683, -1},
        {11, 17, 0.738, -1},
        {11, 18, 0.783, -1},
        {12, 13, 0.201, -1},
        {12, 14, 0.350, -1},
        {12, 15, 0.509, -1},
        {12, 16, 0.620, -1},
        {12, 17, 0.680, -1},
        {12, 18, 0.729, -1},
        {13, 14, 0.248, -1},
        {13, 15, 0.411, -1},
        {13, 16, 0.530, -1},
        {13, 17, 0.597, -1},
        {13, 18, 0.653, -1},
        {14, 15, 0.259, -1},
        {14, 16, 0.401, -1},
        {14, 17, 0.482, -1},
        {14, 18, 0.549, -1},
        {15, 16, 0.259, -1},
        {15, 17, 0.363, -1},
        {15, 18, 0.442, -1},
        {16, 17, 0.213, -1},
        {16, 18, 0.296, -1},
        {17, 18, 0.139, -1},
    };
    return cells;
}

const std::vector<ReferenceCell>& reference_overlapping_mem() {
    static const std::vector<ReferenceCell> cells = {
        {0, 1, kReferenceInf, 1},
        {0, 2, kReferenceInf, 2},
        {0, 3, 0.256, 3},
        {0, 4, 0.404, 4},
        {0, 5, 0.448, 5},
        {0, 6, 0.585, 6},
        {0, 7, 0.719, 5},
        {0, 8, 0.885, 5},
        {0, 9, 0.987, 5},
        {0, 10, 1.074, 5},
        {0, 11, 1.119, 5},
        {0, 12, 1.229, 5},
        {0, 13, 1.390, 5},
        {0, 14, 1.537, 5},
        {0, 15, 1.696, 5},
        {0, 16, 1.802, 5},
        {0, 17, 1.857, 5},
        {0, 18, 1.901, 5},
        {1, 2, kReferenceInf, 2},
        {1, 3, 0.256, 3},
        {1, 4, 0.404, 4},
        {1, 5, 0.448, 5},
        {1, 6, 0.585, 6},
        {1, 7, 0.719, 5},
        {1, 8, 0.885, 5},
        {1, 9, 0.987, 5},
        {1, 10, 1.074, 5},
        {1, 11, 1.119, 5},
        {1, 12, 1.229, 5},
        {1, 13, 1.390, 5},
        {1, 14, 1.537, 5},
        {1, 15, 1.696, 5},
        {1, 16, 1.802, 5},
        {1, 17, 1.857, 5},
        {1, 18, 1.901, 5},
        {2, 3, 0.256, 3},
        {2, 4, 0.404, 4},
        {2, 5, 0.448, 5},
        {2, 6, 0.585, 6},
        {2, 7, 0.719, 5},
        {2, 8, 0.885, 5},
        {2, 9, 0.987, 5},
        {2, 10, 1.074, 5},
        {2, 11, 1.119, 5},
        {2, 12, 1.229, 5},
        {2, 13, 1.390, 5},
        {2, 14, 1.537, 5},
        {2, 15, 1.696, 5},
        {2, 16, 1.802, 5},
        {2, 17, 1.857, 5},
        {2, 18, 1.901, 5},
        {3, 4, 0.256, 4},
        {3, 5, 0.319, 5},
        {3, 6, 0.458, 5},
        {3, 7, 0.590, 5},
        {3, 8, 0.755, 5},
        {3, 9, 0.857, 5},
        {3, 10, 0.945, 5},
        {3, 11, 0.989, 5},
        {3, 12, 1.100, 5},
        {3, 13, 1.260, 5},
        {3, 14, 1.407, 5},
        {3, 15, 1.566, 5},
        {3, 16, 1.672, 5},
        {3, 17, 1.727, 5},
        {3, 18, 1.772, 5},
        {4, 5, 0.173, 5},
        {4, 6, 0.312, 5},
        {4, 7, 0.444, 5},
        {4, 8, 0.610, 5},
        {4, 9, 0.712, 5},
        {4, 10, 0.800, 5},
        {4, 11, 0.844, 5},
        {4, 12, 0.954, 5},
        {4, 13, 1.115, 5},
        {4, 14, 1.262, 5},
        {4, 15, 1.421, 5},
        {4, 16, 1.527, 5},
        {4, 17, 1.582, 5},
        {4, 18, 1.627, 5},
        {5, 6, 0.139, 6},
        {5, 7, 0.271, 7},
        {5, 8, 0.437, 8},
        {5, 9, 0.539, 9},
        {5, 10, 0.626, 10},
        {5, 11, 0.671, 11},
        {5, 12, 0.781, 12},
        {5, 13, 0.942, 11},
        {5, 14, 1.089, 11},
        {5, 15, 1.247, 11},
        {5, 16, 1.354, 11},
        {5, 17, 1.409, 11},
        {5, 18, 1.453, 11},
        {6, 7, 0.201, 7},
        {6, 8, 0.363, 8},
        {6, 9, 0.472, 9},
        {6, 10, 0.568, 10},
        {6, 11, 0.617, 11},
        {6, 12, 0.737, 12},
        {6, 13, 0.888, 11},
        {6, 14, 1.035, 11},
        {6, 15, 1.194, 11},
        {6, 16, 1.300, 11},
        {6, 17, 1.355, 11},
        {6, 18, 1.400, 11},
        {7, 8, 0.249, 8},
        {7, 9, 0.378, 9},
        {7, 10, 0.490, 10},
        {7, 11, 0.545, 11},
        {7, 12, 0.676, 12},
        {7, 13, 0.816, 11},
        {7, 14, 0.963, 11},
        {7, 15, 1.122, 11},
        {7, 16, 1.228, 11},
        {7, 17, 1.283, 11},
        {7, 18, 1.328, 11},
        {8, 9, 0.258, 9},
        {8, 10, 0.391, 10},
        {8, 11, 0.454, 11},
        {8, 12, 0.591, 12},
        {8, 13, 0.725, 11},
        {8, 14, 0.872, 11},
        {8, 15, 1.031, 11},
        {8, 16, 1.137, 11},
        {8, 17, 1.192, 11},
        {8, 18, 1.236, 11},
        {9, 10, 0.230, 10},
        {9, 11, 0.296, 11},
        {9, 12, 0.423, 12},
        {9, 13, 0.568, 11},
        {9, 14, 0.715, 11},
        {9, 15, 0.873, 11},
        {9, 16, 0.979, 11},
        {9, 17, 1.035, 11},
        {9, 18, 1.079, 11},
        {10, 11, 0.158, 11},
        {10, 12, 0.273, 12},
        {10, 13, 0.424, 13},
        {10, 14, 0.576, 11},
        {10, 15, 0.735, 11},
        {10, 16, 0.841, 11},
        {10, 17, 0.896, 11},
        {10, 18, 0.941, 11},
        {11, 12, 0.139, 12},
        {11, 13, 0.271, 13},
        {11, 14, 0.418, 14},
        {11, 15, 0.577, 15},
        {11, 16, 0.683, 16},
        {11, 17, 0.738, 17},
        {11, 18, 0.783, 18},
        {12, 13, 0.201, 13},
        {12, 14, 0.350, 14},
        {12, 15, 0.509, 15},
        {12, 16, 0.620, 16},
        {12, 17, 0.680, 17},
        {12, 18, 0.729, 18},
        {13, 14, 0.248, 14},
        {13, 15, 0.411, 15},
        {13, 16, 0.530, 16},
        {13, 17, 0.597, 17},
        {13, 18, 0.653, 18},
        {14, 15, 0.259, 15},
        {14, 16, 0.401, 16},
        {14, 17, 0.482, 17},
        {14, 18, 0.549, 18},
        {15, 16, 0.259, 16},
        {15, 17, 0.363, 17},
        {15, 18, 0.442, 18},
        {16, 17, 0.213, 17},
        {16, 18, 0.296, 18},
        {17, 18, 0.139, 18},
    };
    return cells;
}

const std::vector<ReferenceCell>& reference_disjoint_mem() {
    static const std::vector<ReferenceCell> cells = {
        {0, 1, kReferenceInf, 1},
        {0, 2, kReferenceInf, 2},
        {0, 3, 0.256, 3},
        {0, 4, 0.404, 4},
        {0, 5, 0.429, 4},
        {0, 6, 0.543, 5},
        {0, 7, 0.631, 4},
        {0, 8, 0.791, 5},
        {0, 9, 0.888, 4},
        {0, 10, 0.998, 4},
        {0, 11, 1.046, 4},
        {0, 12, 1.137, 4},
        {0, 13, 1.247, 4},
        {0, 14, 1.385, 4},
        {0, 15, 1.507, 4},
        {0, 16, 1.644, 4},
        {0, 17, 1.720, 4},
        {0, 18, 1.775, 4},
        {1, 2, kReferenceInf, 2},
        {1, 3, 0.256, 3},
        {1, 4, 0.404, 4},
        {1, 5, 0.429, 4},
        {1, 6, 0.543, 5},
        {1, 7, 0.631, 4},
        {1, 8, 0.791, 5},
        {1, 9, 0.888, 4},
        {1, 10, 0.998, 4},
        {1, 11, 1.046, 4},
        {1, 12, 1.137, 4},
        {1, 13, 1.247, 4},
        {1, 14, 1.385, 4},
        {1, 15, 1.507, 4},
        {1, 16, 1.644, 4},
        {1, 17, 1.720, 4},
        {1, 18, 1.775, 4},
        {2, 3, 0.256, 3},
        {2, 4, 0.404, 4},
        {2, 5, 0.429, 4},
        {2, 6, 0.543, 5},
        {2, 7, 0.631, 4},
        {2, 8, 0.791, 5},
        {2, 9, 0.888, 4},
        {2, 10, 0.998, 4},
        {2, 11, 1.046, 4},
        {2, 12, 1.137, 4},
        {2, 13, 1.247, 4},
        {2, 14, 1.385, 4},
        {2, 15, 1.507, 4},
        {2, 16, 1.644, 4},
        {2, 17, 1.720, 4},
        {2, 18, 1.775, 4},
        {3, 4, 0.256, 4},
        {3, 5, 0.319, 5},
        {3, 6, 0.395, 5},
        {3, 7, 0.520, 6},
        {3, 8, 0.644, 5},
        {3, 9, 0.773, 5},
        {3, 10, 0.873, 5},
        {3, 11, 0.927, 5},
        {3, 12, 1.012, 5},
        {3, 13, 1.128, 5},
        {3, 14, 1.260, 5},
        {3, 15, 1.387, 5},
        {3, 16, 1.520, 5},
        {3, 17, 1.600, 5},
        {3, 18, 1.655, 5},
        {4, 5, 0.173, 5},
        {4, 6, 0.340, 6},
        {4, 7, 0.374, 6},
        {4, 8, 0.536, 6},
        {4, 9, 0.632, 6},
        {4, 10, 0.742, 6},
        {4, 11, 0.790, 6},
        {4, 12, 0.881, 6},
        {4, 13, 0.991, 6},
        {4, 14, 1.129, 6},
        {4, 15, 1.250, 6},
        {4, 16, 1.388, 6},
        {4, 17, 1.464, 6},
        {4, 18, 1.519, 6},
        {5, 6, 0.139, 6},
        {5, 7, 0.271, 7},
        {5, 8, 0.388, 7},
        {5, 9, 0.517, 7},
        {5, 10, 0.617, 7},
        {5, 11, 0.671, 11},
        {5, 12, 0.756, 7},
        {5, 13, 0.872, 12},
        {5, 14, 1.004, 7},
        {5, 15, 1.131, 12},
        {5, 16, 1.264, 7},
        {5, 17, 1.344, 12},
        {5, 18, 1.399, 12},
        {6, 7, 0.201, 7},
        {6, 8, 0.363, 8},
        {6, 9, 0.459, 8},
        {6, 10, 0.568, 10},
        {6, 11, 0.617, 8},
        {6, 12, 0.707, 11},
        {6, 13, 0.818, 8},
        {6, 14, 0.955, 11},
        {6, 15, 1.077, 8},
        {6, 16, 1.215, 11},
        {6, 17, 1.290, 8},
        {6, 18, 1.345, 8},
        {7, 8, 0.249, 8},
        {7, 9, 0.378, 9},
        {7, 10, 0.478, 9},
        {7, 11, 0.536, 10},
        {7, 12, 0.617, 9},
        {7, 13, 0.737, 10},
        {7, 14, 0.865, 9},
        {7, 15, 0.996, 10},
        {7, 16, 1.125, 9},
        {7, 17, 1.210, 10},
        {7, 18, 1.261, 9},
        {8, 9, 0.258, 9},
        {8, 10, 0.391, 10},
        {8, 11, 0.415, 10},
        {8, 12, 0.530, 11},
        {8, 13, 0.617, 10},
        {8, 14, 0.766, 10},
        {8, 15, 0.876, 10},
        {8, 16, 1.018, 10},
        {8, 17, 1.089, 10},
        {8, 18, 1.144, 10},
        {9, 10, 0.230, 10},
        {9, 11, 0.296, 11},
        {9, 12, 0.369, 11},
        {9, 13, 0.498, 12},
        {9, 14, 0.617, 11},
        {9, 15, 0.757, 12},
        {9, 16, 0.876, 11},
        {9, 17, 0.966, 11},
        {9, 18, 1.012, 11},
        {10, 11, 0.158, 11},
        {10, 12, 0.273, 12},
        {10, 13, 0.359, 12},
        {10, 14, 0.508, 12},
        {10, 15, 0.618, 12},
        {10, 16, 0.760, 12},
        {10, 17, 0.832, 12},
        {10, 18, 0.887, 12},
        {11, 12, 0.139, 12},
        {11, 13, 0.271, 13},
        {11, 14, 0.387, 13},
        {11, 15, 0.531, 14},
        {11, 16, 0.646, 13},
        {11, 17, 0.737, 13},
        {11, 18, 0.783, 18},
        {12, 13, 0.201, 13},
        {12, 14, 0.350, 14},
        {12, 15, 0.461, 14},
        {12, 16, 0.602, 14},
        {12, 17, 0.674, 14},
        {12, 18, 0.729, 18},
        {13, 14, 0.248, 14},
        {13, 15, 0.411, 15},
        {13, 16, 0.507, 15},
        {13, 17, 0.597, 17},
        {13, 18, 0.646, 15},
        {14, 15, 0.259, 15},
        {14, 16, 0.401, 16},
        {14, 17, 0.473, 16},
        {14, 18, 0.540, 17},
        {15, 16, 0.259, 16},
        {15, 17, 0.363, 17},
        {15, 18, 0.398, 17},
        {16, 17, 0.213, 17},
        {16, 18, 0.296, 18},
        {17, 18, 0.139, 18},
    };
    return cells;
}

}  // namespace metdp
