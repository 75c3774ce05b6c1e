#include "golden.hpp"

namespace golden {

const std::vector<FirstLRow>& first_l_table() {
    static const std::vector<FirstLRow> rows = {
        {3, 7, 2, 3, {}},
        {5, 11, 2, 2, {}},
        {7, 29, 2, 2, {}},
        {11, 23, 3, 5, {2}},
        {13, 53, 2, 2, {}},
        {17, 103, 3, 5, {}},
        {19, 191, 4, 19, {}},
        {23, 47, 2, 5, {}},
        {29, 59, 2, 2, {2}},
        {31, 311, 7, 17, {}},
        {37, 149, 2, 2, {}},
        {41, 83, 6, 2, {}},
        {43, 173, 9, 2, {26}},
        {47, 283, 2, 3, {}},
        {53, 107, 2, 2, {10, 34}},
        {59, 709, 3, 2, {}},
        {61, 367, 2, 6, {}},
        {67, 269, 4, 2, {}},
        {71, 569, 2, 3, {}},
        {73, 293, 5, 2, {}},
        {79, 317, 2, 2, {}},
        {83, 167, 3, 5, {}},
        {89, 179, 3, 2, {}},
        {97, 389, 5, 2, {26}},
        {101, 607, 2, 3, {10}},
        {103, 619, 5, 3, {}},
        {107, 643, 2, 11, {}},
        {109, 1091, 6, 2, {14, 86}},
        {113, 227, 3, 2, {}},
        {127, 509, 3, 2, {}},
        {131, 263, 2, 5, {16}},
        {137, 823, 3, 3, {78}},
        {139, 557, 2, 2, {}},
        {149, 1193, 2, 3, {}},
        {151, 907, 6, 2, {}},
        {157, 1571, 5, 2, {94}},
        {163, 653, 2, 2, {42}},
        {167, 2339, 5, 2, {122}},
        {173, 347, 2, 2, {}},
        {179, 359, 2, 7, {138}},
        {181, 1087, 2, 3, {114, 164}},
        {191, 383, 19, 5, {}},
        {193, 773, 5, 2, {108, 172}},
        {197, 3547, 2, 2, {62}},
        {199, 797, 3, 2, {}},
    };
    return rows;
}

const std::vector<MinimalRow>& minimal_l_table() {
    static const std::vector<MinimalRow> rows = {
        {11, 67, 2},
        {29, 233, 2},
        {43, 431, 2},
        {53, 743, 2},
        {97, 971, 2},
        {101, 809, 2},
        {109, 2399, 2},
        {131, 1049, 3},
        {137, 1097, 2},
        {157, 7537, 5},
        {163, 5869, 3},
        {167, 7349, 3},
        {179, 1433, 2},
        {181, 1811, 2},
        {193, 1931, 2},
        {197, 4729, 2},
        {211, 10973, 4},
        {223, 6691, 2},
        {227, 5903, 2},
        {229, 5039, 2},
        {233, 1399, 2},
        {251, 4519, 2},
        {277, 4987, 3},
        {337, 6067, 3},
        {349, 8377, 2},
        {367, 3671, 2},
        {383, 16087, 4},
        {389, 14783, 2},
        {397, 6353, 2},
        {401, 10427, 4},
        {409, 4091, 2},
        {419, 839, 1},
        {421, 4211, 1},
        {431, 863, 1},
        {433, 5197, 2},
        {439, 4391, 1},
        {443, 887, 1},
        {449, 3593, 1},
        {457, 21023, 3},
        {461, 9221, 2},
        {463, 5557, 1},
        {467, 2803, 1},
        {479, 3833, 1},
        {487, 1949, 1},
        {491, 983, 1},
        {499, 1997, 1},
        {503, 3019, 1},
        {509, 4073, 2},
        {521, 16673, 1},
        {523, 6277, 2},
        {541, 9739, 1},
        {547, 5471, 1},
        {557, 24509, 3},
        {563, 7883, 1},
        {569, 6829, 1},
        {571, 5711, 1},
        {577, 3463, 2},
        {587, 8219, 1},
        {593, 1187, 1},
        {599, 4793, 1},
        {601, 25243, 5},
        {607, 20639, 3},
        {613, 6131, 1},
        {617, 30851, 3},
        {619, 17333, 3},
        {631, 6311, 1},
        {641, 1283, 1},
        {643, 10289, 2},
        {647, 9059, 1},
        {653, 1307, 1},
        {659, 1319, 1},
        {661, 14543, 3},
        {673, 2693, 1},
        {677, 5417, 1},
        {683, 4099, 2},
    };
    return rows;
}

const std::vector<ScanRow>& p37_scan_table() {
    static const std::vector<ScanRow> rows = {
        {149, 2, {}, false},
        {223, 3, {}, false},
        {593, 3, {}, false},
        {1259, 2, {}, false},
        {1481, 3, {30}, false},
        {1777, 5, {}, false},
        {1999, 3, {}, false},
        {2221, 2, {}, false},
        {2591, 7, {34}, false},
        {2887, 5, {}, false},
        {3109, 6, {}, false},
        {3257, 3, {}, false},
        {3331, 3, {22}, false},
        {3701, 2, {}, false},
        {3923, 2, {}, false},
        {4219, 2, {16, 18}, false},
        {4441, 21, {}, false},
        {4663, 3, {}, false},
        {5107, 2, {}, false},
        {5477, 2, {}, false},
        {6143, 5, {28}, false},
        {6217, 5, {}, false},
        {6661, 6, {}, false},
        {6883, 2, {}, false},
        {742073, 3, {12}, false},
        {742369, 7, {}, false},
        {742591, 3, {}, false},
        {743849, 3, {}, false},
        {743923, 3, {16}, false},
        {744071, 22, {}, false},
        {744811, 10, {}, false},
        {744959, 13, {10}, false},
        {745033, 10, {16}, false},
        {745181, 2, {}, false},
        {745477, 2, {}, false},
        {745699, 2, {}, false},
        {746069, 2, {}, false},
        {746957, 2, {}, false},
        {747401, 3, {}, false},
        {747919, 3, {}, false},
        {748807, 6, {22}, false},
        {749843, 2, {34}, false},
        {750287, 5, {}, false},
        {750509, 2, {14, 22}, false},
        {751027, 3, {}, false},
        {751841, 3, {14, 16, 24}, false},
        {752137, 10, {8}, false},
        {752359, 3, {18}, false},
        {752581, 2, {16}, false},
        {752803, 2, {22, 32}, false},
        {753617, 3, {}, false},
        {753691, 11, {16}, false},
        {753839, 7, {4, 22}, false},
        {754283, 2, {}, false},
        {755171, 6, {}, false},
        {755393, 3, {22}, false},
        {756281, 3, {2}, false},
        {756799, 15, {18}, false},
        {757243, 2, {}, false},
        {757909, 2, {16}, false},
        {758279, 7, {}, false},
        {758501, 2, {18}, false},
        {759019, 2, {}, false},
        {759167, 5, {12}, false},
        {759463, 3, {}, false},
        {759833, 3, {4}, false},
        {760129, 11, {}, false},
        {760499, 2, {}, false},
        {762053, 2, {}, false},
        {762571, 10, {}, false},
        {763237, 2, {}, false},
        {764051, 2, {}, false},
        {764273, 3, {}, false},
        {764717, 2, {2}, false},
        {765383, 5, {}, false},
        {765827, 2, {34}, false},
        {766049, 3, {22}, false},
        {766937, 3, {34}, false},
        {767381, 2, {18}, false},
        {767603, 5, {34}, false},
        {767677, 5, {}, false},
        {768343, 11, {18}, false},
        {768491, 10, {}, false},
        {768787, 2, {20}, false},
        {769231, 11, {24}, false},
        {769453, 2, {30}, false},
        {772339, 3, {}, false},
        {773153, 3, {14}, false},
        {774337, 5, {28}, false},
        {774929, 3, {18}, false},
        {775669, 10, {18}, false},
        {776483, 2, {}, false},
        {776557, 2, {20}, false},
        {777001, 31, {18, 28}, false},
        {778111, 11, {}, false},
        {778333, 2, {28}, false},
        {778777, 5, {}, false},
        {779221, 2, {}, false},
        {779591, 7, {}, false},
        {779887, 10, {18}, false},
        {780257, 3, {8}, false},
        {780553, 10, {}, false},
        {781367, 5, {34}, false},
        {781589, 2, {32}, true},
        {782107, 2, {}, false},
        {782329, 13, {18}, false},
        {782921, 3, {20}, false},
        {783143, 5, {}, false},
        {783661, 2, {}, false},
        {784327, 3, {}, false},
        {784697, 3, {}, false},
        {784919, 7, {}, false},
        {785363, 2, {}, false},
        {786251, 2, {}, false},
        {786547, 2, {}, false},
        {787139, 2, {20}, false},
        {787361, 6, {}, false},
        {787879, 6, {10, 18, 20}, false},
        {788027, 2, {34}, false},
        {789137, 3, {24}, false},
        {790099, 2, {}, false},
        {791209, 7, {}, false},
        {791431, 12, {}, false},
        {791801, 3, {}, false},
        {792023, 5, {32}, true},
        {792689, 3, {}, false},
        {793207, 5, {}, false},
        {795427, 2, {}, false},
        {795649, 22, {2, 32}, true},
        {795797, 2, {}, false},
        {795871, 3, {}, false},
        {796759, 3, {}, false},
        {796981, 7, {}, false},
        {797647, 3, {}, false},
        {797869, 10, {}, false},
        {798461, 2, {}, false},
        {798757, 2, {}, false},
        {800089, 7, {20}, false},
    };
    return rows;
}

const std::vector<SymbolRow>& p37_symbol_table() {
    static const std::vector<SymbolRow> rows = {
        {149, 259, 102, false},
        {223, 259, 132, false},
        {6883, 259, 6850, false},
        {7253, 259, 4947, false},
        {32783, 259, 1, true},
    };
    return rows;
}

const std::vector<RankRow>& rank_table() {
    static const std::vector<RankRow> rows = {
        {7, 3, 113},
        {11, 7, 397},
        {13, 9, 599},
        {17, 13, 1259},
    };
    return rows;
}

const std::vector<TraceRow>& trace_table() {
    static const std::vector<TraceRow> rows = {
        {7, 29, 7, "x^7 + x^6 + 2*x^5 + 5*x + 1"},
        {7, 43, 1, "x^7 + x^6 + 3*x^5 + 3*x^3 + 6*x^2"},
        {7, 71, 7, "x^7 + x^6 + 5*x^5 + 3*x^4 + 2*x^3 + 6*x^2 + 4"},
        {7, 4943, 7, "x^7 + x^6 + 3*x^5 + x^4 + x^3 + 3*x + 5"},
        {7, 4957, 7, "x^7 + x^6 + 4*x^5 + 2*x^4 + 5*x^3 + 3*x^2 + 2*x + 1"},
        {7, 4999, 7, "x^7 + x^6 + 4*x^3 + 5*x^2 + 2*x + 6"},
        {5, 5591, 5, "x^5 + x^4 + 4*x^3 + x^2 + 4*x + 2"},
        {5, 6211, 1, "x^5 + x^4 + x^3 + x^2 + x"},
        {5, 6271, 1, "x^5 + x^4 + 2*x^3 + 4*x^2 + 3*x + 4"},
    };
    return rows;
}

const DensityRow& p37_density() {
    static const DensityRow row = {
        3900, 1824, 1869389,
        {106, 114, 108, 114, 100, 112, 115, 101, 117, 113, 116, 93, 104, 97, 108, 103, 103},
    };
    return row;
}

}  // namespace golden
